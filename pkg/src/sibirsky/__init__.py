"""Exact computation of Sibirsky ideals and time-reversibility tests for
planar polynomial ODE families."""

from .groebner import Budget, BudgetExceeded, IdealBasis, groebner_basis
from .poly import MonomialOrder, Polynomial, VariableTable
from .reversibility import (
    CUBIC,
    QUADRATIC,
    QUARTIC,
    CoefficientPoint,
    OrderConfig,
    SystemFamily,
    Verdict,
    hilbert_basis,
    is_time_reversible,
    sibirsky_ideal,
)
from .scalars import GaussianRational

__version__ = "0.1.0"

__all__ = [
    "Budget", "BudgetExceeded", "IdealBasis", "groebner_basis",
    "MonomialOrder", "Polynomial", "VariableTable",
    "CUBIC", "QUADRATIC", "QUARTIC", "CoefficientPoint", "OrderConfig",
    "SystemFamily", "Verdict", "hilbert_basis", "is_time_reversible", "sibirsky_ideal",
    "GaussianRational",
]
