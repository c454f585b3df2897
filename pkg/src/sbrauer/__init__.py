"""Signed Brauer diagrams, signed permutations, and their even subgroup
inside the permutations of twice as many points.

The layers, bottom to top: ``perm`` (plain permutations), ``diagram``
(signed perfect matchings with loop-counting composition), ``hyperoct``
(the group of vertical diagrams and its embedding), ``groups``
(enumeration and the verifiable-claim registry), ``bsgs`` (Schreier-Sims
order/membership oracle), ``arith`` (2-adic valuation results), ``cli``.
"""

from .diagram import ScaledDiagram, Sign, SignedDiagram
from .hyperoct import SignedPermutation
from .perm import CycleDecomposition, Parity, Permutation
from .report import VerificationReport

__version__ = "0.1.0"

__all__ = [
    "CycleDecomposition",
    "Parity",
    "Permutation",
    "ScaledDiagram",
    "Sign",
    "SignedDiagram",
    "SignedPermutation",
    "VerificationReport",
    "__version__",
]
