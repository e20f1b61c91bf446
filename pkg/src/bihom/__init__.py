"""Exact computations for Hom-, BiHom-, type-B1 and colour Leibniz algebras."""

from .linalg import Matrix, Subspace
from .model import Algebra, Bicharacter, CheckReport, Cochain, Grading, GradingGroup, InputError, Representation

__all__ = [
    "Algebra", "Bicharacter", "CheckReport", "Cochain", "Grading", "GradingGroup",
    "InputError", "Matrix", "Representation", "Subspace",
]
__version__ = "0.1.0"
