"""
polygroth: double Grothendieck polynomials by divided differences and by
flagged set-valued tableaux.
"""

from .core import GrothendieckVerifier
from .grothendieck import (
    VerificationReport,
    groth_by_induction,
    groth_divided,
    grassmannian_formula,
    tableau_formula,
    verify_theorem,
)
from .permcomb import Permutation, SkewShape
from .polyring import Polynomial

__version__ = "0.1.0"
__all__ = [
    "GrothendieckVerifier",
    "Permutation",
    "Polynomial",
    "SkewShape",
    "VerificationReport",
    "groth_by_induction",
    "groth_divided",
    "grassmannian_formula",
    "tableau_formula",
    "verify_theorem",
]
