"""Time-reversibility of planar polynomial families: Sibirsky ideals and Hilbert bases."""

from .family import (
    CUBIC,
    QUADRATIC,
    QUARTIC,
    FamilyError,
    SystemFamily,
    ab_ring,
    involute,
    monoid_member,
    monomial_of,
    nu_of,
    zeta,
)
from .hilbert import hilbert_oracle, minimal_elements
from .ideal import (
    OrderConfig,
    SibirskyResult,
    build_H,
    compute_sibirsky,
    hilbert_basis,
    involution_closed,
    normalize_generators,
    sibirsky_ideal,
)
from .points import (
    CoefficientPoint,
    GammaRelation,
    ReversibilityResult,
    Verdict,
    act,
    complexify_quadratic,
    construct_reversible,
    gamma_relations,
    is_time_reversible,
    monomial_value,
    unit_point,
)

__all__ = [
    "CUBIC", "QUADRATIC", "QUARTIC", "FamilyError", "SystemFamily", "ab_ring",
    "involute", "monoid_member", "monomial_of", "nu_of", "zeta",
    "hilbert_oracle", "minimal_elements",
    "OrderConfig", "SibirskyResult", "build_H", "compute_sibirsky", "hilbert_basis",
    "involution_closed", "normalize_generators", "sibirsky_ideal",
    "CoefficientPoint", "GammaRelation", "ReversibilityResult", "Verdict", "act",
    "complexify_quadratic", "construct_reversible", "gamma_relations",
    "is_time_reversible", "monomial_value", "unit_point",
]
