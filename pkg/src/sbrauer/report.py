"""Verification reports shared by the group and valuation checkers."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking one claim over its quantified domain.

    ``counterexamples`` holds replayable one-line descriptions (window
    notation for element claims); an empty tuple means the claim held on
    every instance checked.
    """

    claim: str
    n: int
    checked: int
    counterexamples: tuple[str, ...] = ()
    duration: float = 0.0
    mode: str = "exhaustive"

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def summary_line(self) -> str:
        return (
            f"claim={self.claim} n={self.n} "
            f"checked={self.checked} failures={len(self.counterexamples)}"
        )

    def lines(self) -> list[str]:
        return [self.summary_line(), *self.counterexamples]
