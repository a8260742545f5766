"""System families, their weight vector and the monomial map."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from ..poly import Polynomial, VariableTable


class FamilyError(ValueError):
    """A support set violating the family invariants."""


def _index_text(i: int, j: int) -> str:
    if 0 <= i <= 9 and 0 <= j <= 9:
        return f"{i}{j}"
    return f"{i},{j}"


@dataclass(frozen=True)
class SystemFamily:
    """Ordered support set ``((p_1, q_1), ..., (p_l, q_l))``.

    Pair ``(p, q)`` contributes ``a_pq x^(p+1) y^q`` to the first equation
    and ``b_qp x^q y^(p+1)`` to the second.
    """

    pairs: tuple[tuple[int, int], ...]

    def __init__(self, pairs: Iterable[Sequence[int]]):
        norm = []
        for pair in pairs:
            if len(pair) != 2:
                raise FamilyError(f"pair {pair!r} does not have two entries")
            p, q = pair
            if isinstance(p, bool) or isinstance(q, bool) or int(p) != p or int(q) != q:
                raise FamilyError(f"pair {pair!r} must hold integers")
            norm.append((int(p), int(q)))
        object.__setattr__(self, "pairs", tuple(norm))
        self.validate()

    def validate(self) -> None:
        if not self.pairs:
            raise FamilyError("a family needs at least one pair")
        for p, q in self.pairs:
            if p < -1:
                raise FamilyError(f"pair ({p},{q}): p must be >= -1")
            if q < 0:
                raise FamilyError(f"pair ({p},{q}): q must be >= 0")
            if p + q < 0:
                raise FamilyError(f"pair ({p},{q}): p + q must be >= 0")
        if len(set(self.pairs)) != len(self.pairs):
            raise FamilyError(f"duplicate pairs in {list(self.pairs)}")

    @property
    def ell(self) -> int:
        return len(self.pairs)

    def __len__(self) -> int:
        return len(self.pairs)

    def a_name(self, k: int) -> str:
        p, q = self.pairs[k]
        return "a" + _index_text(p, q)

    def b_name(self, k: int) -> str:
        p, q = self.pairs[k]
        return "b" + _index_text(q, p)

    @property
    def a_names(self) -> list[str]:
        return [self.a_name(k) for k in range(self.ell)]

    @property
    def b_names(self) -> list[str]:
        """``b`` names in pair order (``b_{q_1 p_1}`` first)."""
        return [self.b_name(k) for k in range(self.ell)]

    @property
    def point_names(self) -> list[str]:
        """Coordinate names of a coefficient point: a-block, then reversed b-block."""
        return self.a_names + self.b_names[::-1]

    def default_ab_order(self) -> list[str]:
        return self.a_names + self.b_names

    def __str__(self) -> str:
        return "{" + ", ".join(f"({p},{q})" for p, q in self.pairs) + "}"


QUADRATIC = SystemFamily([(1, 0), (0, 1), (-1, 2)])
CUBIC = SystemFamily([(2, 0), (1, 1), (0, 2)])
QUARTIC = SystemFamily([(3, 0), (2, 1), (1, 2), (0, 3)])


def zeta(S: SystemFamily) -> tuple[int, ...]:
    """Torus weight vector ``(p_1-q_1, ..., p_l-q_l, q_l-p_l, ..., q_1-p_1)``."""
    head = [p - q for p, q in S.pairs]
    return tuple(head + [-z for z in reversed(head)])


def _check_length(v: Sequence, S: SystemFamily) -> None:
    if len(v) != 2 * S.ell:
        raise ValueError(f"expected a vector of length {2 * S.ell}, got {len(v)}")


def monoid_member(nu: Sequence[int], S: SystemFamily) -> bool:
    """``zeta . nu == 0``; equivalently ``[nu]`` is invariant under the torus action."""
    _check_length(nu, S)
    if any(x < 0 for x in nu):
        raise ValueError("monoid vectors have nonnegative entries")
    return sum(z * x for z, x in zip(zeta(S), nu)) == 0


def involute(x: Sequence) -> tuple:
    return tuple(reversed(tuple(x)))


def ab_ring(S: SystemFamily, ab_order: Sequence[str] | None = None) -> VariableTable:
    names = list(ab_order) if ab_order is not None else S.default_ab_order()
    if sorted(names) != sorted(S.default_ab_order()):
        raise FamilyError(
            f"variable order {names} is not a permutation of {S.default_ab_order()}"
        )
    return VariableTable(names)


def monomial_of(nu: Sequence[int], S: SystemFamily,
                ring: VariableTable | None = None) -> Polynomial:
    """The monomial ``[nu]``: ``a_k`` gets ``nu_k``, ``b_k`` gets ``nu_{2l+1-k}``."""
    _check_length(nu, S)
    ring = ring or ab_ring(S)
    expo = [0] * len(ring)
    for name, x in zip(S.point_names, nu):
        expo[ring.index(name)] = x
    return Polynomial.monomial(ring, expo)


def nu_of(expo: Sequence[int], S: SystemFamily, ring: VariableTable) -> tuple[int, ...]:
    """Inverse of :func:`monomial_of` on an exponent vector of ``ring``."""
    return tuple(expo[ring.index(name)] for name in S.point_names)
