"""Exact verification of reducedness for schemes of nilpotent matrices and
of invariant subspaces, with the supporting commutative algebra."""

from .fieldpoly import GF, QQ, FieldSpec, PolyRing, Polynomial, RingMatrix
from .groebner import GroebnerBasis, GroebnerTimeout, Ideal, groebner_basis, ideal_equal
from .orbits import Partition

__all__ = [
    "FieldSpec", "GF", "QQ", "PolyRing", "Polynomial", "RingMatrix",
    "Ideal", "GroebnerBasis", "GroebnerTimeout", "groebner_basis", "ideal_equal",
    "Partition",
]
__version__ = "0.1.0"
