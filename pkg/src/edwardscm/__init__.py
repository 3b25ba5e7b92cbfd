"""Montgomery, twisted Edwards and complete Edwards forms of elliptic
curves over prime fields, with 2-isogeny descent and CM classification."""

from .curves import (
    MontgomeryCurve,
    TwistedEdwardsCurve,
    WeierstrassCurve,
    montgomery_to_twisted_edwards,
    montgomery_to_weierstrass,
)
from .field import PrimeField
from .forms import edwards_from_kubert, kubert_from_type_one, montgomery_from_type_one
from .isogeny import descend_to_complete_edwards, velu_2_isogeny
from .torsion import TorsionType, classify_two_torsion

__version__ = "0.1.0"

__all__ = [
    "MontgomeryCurve",
    "PrimeField",
    "TorsionType",
    "TwistedEdwardsCurve",
    "WeierstrassCurve",
    "classify_two_torsion",
    "descend_to_complete_edwards",
    "edwards_from_kubert",
    "kubert_from_type_one",
    "montgomery_from_type_one",
    "montgomery_to_twisted_edwards",
    "montgomery_to_weierstrass",
    "velu_2_isogeny",
]
