"""Concrete coefficient points: construction, reversibility verdicts, group action."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from ..poly import Polynomial
from ..scalars import GaussianRational, as_gaussian, gauss_pow
from .family import SystemFamily
from .ideal import OrderConfig, sibirsky_ideal


@dataclass(frozen=True)
class CoefficientPoint:
    """``(a_1, ..., a_l, b_l, ..., b_1)`` with Gaussian-rational entries."""

    values: tuple[GaussianRational, ...]

    def __init__(self, values: Iterable):
        object.__setattr__(self, "values", tuple(as_gaussian(v) for v in values))

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self):
        return iter(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def a(self, k: int) -> GaussianRational:
        """Coefficient ``a_{p_k q_k}`` (0-based ``k``)."""
        return self.values[k]

    def b(self, k: int) -> GaussianRational:
        """Coefficient ``b_{q_k p_k}`` (0-based ``k``)."""
        return self.values[-1 - k]

    def assignment(self, S: SystemFamily) -> dict[str, GaussianRational]:
        check_dimension(S, self)
        return dict(zip(S.point_names, self.values))

    @classmethod
    def from_blocks(cls, a: Sequence, b: Sequence) -> CoefficientPoint:
        """Build from ``a`` and ``b`` both listed in pair order."""
        return cls(list(a) + list(b)[::-1])

    def __str__(self) -> str:
        return "(" + ", ".join(str(v) for v in self.values) + ")"


def check_dimension(S: SystemFamily, pt) -> None:
    if len(pt) != 2 * S.ell:
        raise ValueError(f"point has {len(pt)} coordinates, family needs {2 * S.ell}")


def construct_reversible(S: SystemFamily, t: Sequence, gamma) -> CoefficientPoint:
    """The point ``a_k = t_k``, ``b_k = gamma^(p_k - q_k) t_k``."""
    gamma = as_gaussian(gamma)
    if gamma.is_zero():
        raise ValueError("gamma must be nonzero")
    if len(t) != S.ell:
        raise ValueError(f"need {S.ell} parameters t, got {len(t)}")
    t = [as_gaussian(x) for x in t]
    b = [gauss_pow(gamma, p - q) * tk for (p, q), tk in zip(S.pairs, t)]
    return CoefficientPoint.from_blocks(t, b)


class Verdict(str, enum.Enum):
    REVERSIBLE = "reversible"
    ON_VARIETY_NOT_REVERSIBLE = "on_variety_not_reversible"
    OFF_VARIETY = "off_variety"


@dataclass(frozen=True)
class ReversibilityResult:
    verdict: Verdict
    generator: Polynomial | None = None   # witness for OFF_VARIETY
    value: GaussianRational | None = None  # its value at the point
    index: int | None = None               # 1-based pair index for ON_VARIETY_NOT_REVERSIBLE

    @property
    def reversible(self) -> bool:
        return self.verdict is Verdict.REVERSIBLE


def is_time_reversible(S: SystemFamily, pt, gens: Sequence[Polynomial] | None = None,
                       config: OrderConfig | None = None) -> ReversibilityResult:
    """Decide reversibility from the Sibirsky generators and the zero pattern.

    A point is reversible iff every generator vanishes and no pair has
    exactly one of ``a_k``, ``b_k`` equal to zero.
    """
    pt = pt if isinstance(pt, CoefficientPoint) else CoefficientPoint(pt)
    check_dimension(S, pt)
    if gens is None:
        gens = sibirsky_ideal(S, config)
    env = pt.assignment(S)
    for g in gens:
        v = g.evaluate(env)
        if not v.is_zero():
            return ReversibilityResult(Verdict.OFF_VARIETY, generator=g, value=v)
    for k in range(S.ell):
        a, b = pt.a(k), pt.b(k)
        if (a * b).is_zero() and not (a + b).is_zero():
            return ReversibilityResult(Verdict.ON_VARIETY_NOT_REVERSIBLE, index=k + 1)
    return ReversibilityResult(Verdict.REVERSIBLE)


@dataclass(frozen=True)
class GammaRelation:
    """``gamma^exponent == value``; ``value`` is None when unconstrained."""

    exponent: int
    value: GaussianRational | None
    consistent: bool
    unconstrained: bool = False

    def __str__(self) -> str:
        if self.unconstrained:
            return "gamma arbitrary (unconstrained)"
        lhs = "gamma" if self.exponent == 1 else f"gamma^{self.exponent}"
        return f"{lhs} = {self.value}"


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def gamma_relations(S: SystemFamily, pt, gens: Sequence[Polynomial] | None = None,
                    config: OrderConfig | None = None) -> GammaRelation:
    """Minimal relation ``gamma^d = c`` satisfied by every admissible symmetry parameter.

    Each pair with ``a_k != 0`` and ``p_k != q_k`` gives
    ``gamma^(p_k - q_k) = b_k / a_k``; these combine through an extended
    gcd into a single power relation.
    """
    pt = pt if isinstance(pt, CoefficientPoint) else CoefficientPoint(pt)
    res = is_time_reversible(S, pt, gens, config)
    if not res.reversible:
        raise ValueError(f"point is not time-reversible ({res.verdict.value})")
    constraints: list[tuple[int, GaussianRational]] = []
    for k, (p, q) in enumerate(S.pairs):
        a = pt.a(k)
        if a.is_zero() or p == q:
            continue
        constraints.append((p - q, pt.b(k) / a))
    if not constraints:
        return GammaRelation(1, None, True, unconstrained=True)
    d, c = constraints[0]
    if d < 0:
        d, c = -d, 1 / c
    for e, v in constraints[1:]:
        g, x, y = _ext_gcd(d, e)
        c = gauss_pow(c, x) * gauss_pow(v, y)
        d = g
    consistent = all(gauss_pow(c, e // d) == v for e, v in constraints)
    return GammaRelation(d, c, consistent)


def act(S: SystemFamily, pt, eta) -> CoefficientPoint:
    """Coefficients after ``x -> eta x, y -> y / eta``."""
    eta = as_gaussian(eta)
    if eta.is_zero():
        raise ValueError("eta must be nonzero")
    pt = pt if isinstance(pt, CoefficientPoint) else CoefficientPoint(pt)
    check_dimension(S, pt)
    a = [pt.a(k) * gauss_pow(eta, q - p) for k, (p, q) in enumerate(S.pairs)]
    b = [pt.b(k) * gauss_pow(eta, p - q) for k, (p, q) in enumerate(S.pairs)]
    return CoefficientPoint.from_blocks(a, b)


def complexify_quadratic(a1, a2, a3, b1, b2, b3) -> CoefficientPoint:
    """Complex quadratic-family point of ``u' = -v + a1 u^2 + a2 uv + a3 v^2``,
    ``v' = u + b1 u^2 + b2 uv + b3 v^2`` under ``x = u + iv``, ``y = conj(x)``.

    The result is ordered ``(a10, a01, a-1,2, b2,-1, b10, b01)`` with
    ``b_qp = conj(a_pq)``.
    """
    a1, a2, a3, b1, b2, b3 = (Fraction(v) for v in (a1, a2, a3, b1, b2, b3))
    a10 = GaussianRational((a1 + b2 - a3) / 4, (b1 - a2 - b3) / 4)
    a01 = GaussianRational((a1 + a3) / 2, (b1 + b3) / 2)
    am12 = GaussianRational((a1 - a3 - b2) / 4, (b1 + a2 - b3) / 4)
    a = [a10, a01, am12]
    return CoefficientPoint.from_blocks(a, [z.conjugate() for z in a])


def unit_point(S: SystemFamily, i: int) -> CoefficientPoint:
    """Point with a single coordinate (0-based ``i``) equal to 1."""
    vals = [0] * (2 * S.ell)
    vals[i] = 1
    return CoefficientPoint(vals)


def monomial_value(nu: Sequence[int], pt) -> GaussianRational:
    """``[nu]`` evaluated at ``pt``: the product of ``pt_i ** nu_i``."""
    out = GaussianRational(1)
    for x, e in zip(pt, nu):
        if e:
            out = out * gauss_pow(x, e)
    return out


__all__ = [
    "CoefficientPoint",
    "GammaRelation",
    "ReversibilityResult",
    "Verdict",
    "act",
    "check_dimension",
    "complexify_quadratic",
    "construct_reversible",
    "gamma_relations",
    "is_time_reversible",
    "monomial_value",
    "unit_point",
]
