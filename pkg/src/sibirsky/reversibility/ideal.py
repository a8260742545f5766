"""The parametric ideal H and the Sibirsky ideal obtained from it by elimination."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Sequence

from ..groebner import Budget, IdealBasis, eliminate, groebner_basis
from ..poly import LEX, MonomialOrder, Polynomial, VariableTable
from .family import SystemFamily, ab_ring, involute, nu_of

ORDER_KINDS = ("lex", "block_grevlex")


@dataclass(frozen=True)
class OrderConfig:
    """How to order the ambient ring for elimination.

    ``kind="lex"`` is pure lex ``w > gamma > t_1 > ... > t_l > a,b block``;
    ``"block_grevlex"`` uses grevlex inside both blocks.  ``ab_order``
    permutes the a,b variables (default: a's in pair order, then b's in
    pair order).
    """

    kind: str = "lex"
    ab_order: tuple[str, ...] | None = None
    budget: Budget = field(default_factory=Budget, compare=False, hash=False)

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            raise ValueError(f"order kind must be one of {ORDER_KINDS}, got {self.kind!r}")
        if self.ab_order is not None:
            object.__setattr__(self, "ab_order", tuple(self.ab_order))

    def eliminated_names(self, S: SystemFamily) -> list[str]:
        return ["w", "gamma"] + [f"t{k + 1}" for k in range(S.ell)]

    def ring(self, S: SystemFamily) -> VariableTable:
        ab = ab_ring(S, self.ab_order)
        return VariableTable(self.eliminated_names(S) + list(ab.names))

    def order(self, S: SystemFamily) -> MonomialOrder:
        if self.kind == "lex":
            return LEX
        return MonomialOrder.block(S.ell + 2, "grevlex", "grevlex")

    def ab_monomial_order(self) -> MonomialOrder:
        return LEX if self.kind == "lex" else MonomialOrder.grevlex()


def _gamma_weights(p: int, q: int) -> tuple[int, int]:
    """Exponents of gamma multiplying ``b`` and ``t`` in the k-th generator."""
    if p - q <= 0:
        return q - p, 0
    return 0, p - q


def build_H(S: SystemFamily, config: OrderConfig | None = None
            ) -> tuple[list[Polynomial], VariableTable]:
    """Generators of the ideal whose a,b-elimination gives the Sibirsky ideal.

    ``1 - w*prod(gt_k)``, ``a_k - t_k`` and ``gt_k*b_k - gtt_k*t_k`` where
    one of ``gt_k``, ``gtt_k`` is ``gamma^|p_k - q_k|`` and the other is 1.
    """
    config = config or OrderConfig()
    ring = config.ring(S)
    order = config.order(S)
    var = lambda name, e=1: Polynomial.var(ring, name, e, order)  # noqa: E731
    one = Polynomial.constant(ring, 1, order)

    total_gamma = 0
    rest = []
    for k, (p, q) in enumerate(S.pairs):
        gb, gt = _gamma_weights(p, q)
        total_gamma += gb
        t = var(f"t{k + 1}")
        rest.append(var(S.a_name(k)) - t)
        rest.append(var("gamma", gb) * var(S.b_name(k)) - var("gamma", gt) * t)
    head = one - var("w") * var("gamma", total_gamma)
    return [head] + rest, ring


@dataclass(frozen=True)
class SibirskyResult:
    family: SystemFamily
    config: OrderConfig
    ring: VariableTable             # the a,b subring
    order: MonomialOrder            # order on the a,b subring
    generators: tuple[Polynomial, ...]
    H_basis: IdealBasis
    seconds: float

    def binomial_pairs(self) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
        """``(nu, nu_hat)`` for each generator, leading term first."""
        out = []
        for g in self.generators:
            (_, e1), (_, e2) = g.terms(self.order)
            out.append((nu_of(e1, self.family, self.ring), nu_of(e2, self.family, self.ring)))
        return out


def _restrict(f: Polynomial, ring: VariableTable, n_drop: int,
              order: MonomialOrder) -> Polynomial:
    return Polynomial(ring, {e[n_drop:]: c for e, c in f.as_dict().items()}, order)


def normalize_generators(gens: Sequence[Polynomial], order: MonomialOrder) -> list[Polynomial]:
    """Integer content cleared, leading coefficient +1, sorted by (degree, order)."""
    out = [g.with_order(order).primitive() for g in gens if not g.is_zero()]
    return sorted(out, key=lambda g: (g.total_degree(), order.key(g.leading_term().expo)))


def compute_sibirsky(S: SystemFamily, config: OrderConfig | None = None) -> SibirskyResult:
    """Run the elimination pipeline for ``S`` and keep the full record."""
    config = config or OrderConfig()
    return _compute_cached(S, config, config.budget)


@lru_cache(maxsize=64)
def _compute_cached(S: SystemFamily, config: OrderConfig, budget: Budget) -> SibirskyResult:
    t0 = time.monotonic()
    H, ring = build_H(S, config)
    order = config.order(S)
    G = groebner_basis(H, order, budget)
    n_drop = S.ell + 2
    kept = eliminate(G, ring.names[n_drop:])
    sub = VariableTable(ring.names[n_drop:])
    sub_order = config.ab_monomial_order()
    gens = normalize_generators([_restrict(g, sub, n_drop, sub_order) for g in kept], sub_order)
    return SibirskyResult(S, config, sub, sub_order, tuple(gens), G, time.monotonic() - t0)


def sibirsky_ideal(S: SystemFamily, config: OrderConfig | None = None) -> list[Polynomial]:
    """Binomial generators ``[nu] - [nu_hat]`` of the Sibirsky ideal of ``S``.

    Raises :class:`~sibirsky.groebner.BudgetExceeded` when ``config.budget``
    is overrun.
    """
    return list(compute_sibirsky(S, config).generators)


def hilbert_basis(S: SystemFamily, config: OrderConfig | None = None) -> list[tuple[int, ...]]:
    """Hilbert basis of the monoid from the generator exponents plus ``e_i + e_(2l+1-i)``.

    Returned sorted and without duplicates.
    """
    res = compute_sibirsky(S, config)
    n = 2 * S.ell
    vecs: set[tuple[int, ...]] = set()
    for nu, nu_hat in res.binomial_pairs():
        vecs.add(nu)
        vecs.add(nu_hat)
    for i in range(S.ell):
        e = [0] * n
        e[i] = 1
        e[n - 1 - i] = 1
        vecs.add(tuple(e))
    return sorted(vecs)


def involution_closed(gens: Sequence[Polynomial], S: SystemFamily, ring: VariableTable) -> bool:
    """Each generator is mapped to its negative by swapping ``nu`` and ``nu_hat``."""
    for g in gens:
        terms = g.terms()
        if len(terms) != 2:
            return False
        (c1, e1), (c2, e2) = terms
        if c1 != -c2:
            return False
        if involute(nu_of(e1, S, ring)) != nu_of(e2, S, ring):
            return False
    return True
