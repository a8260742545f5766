"""Buchberger's algorithm with Gebauer-Moeller pair pruning.

Internally polynomials are dicts ``{exponent: int}`` kept primitive
(integer content cleared after every reduction), which avoids rational
arithmetic in the inner loop.  Everything that crosses the public API is
a :class:`~sibirsky.poly.Polynomial`.
"""

from __future__ import annotations

import logging
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .poly import Exponent, MonomialOrder, Polynomial, VariableTable

log = logging.getLogger(__name__)

__all__ = [
    "Budget",
    "BudgetExceeded",
    "GroebnerStats",
    "IdealBasis",
    "normal_form",
    "s_polynomial",
    "groebner_basis",
    "eliminate",
    "ideal_member",
    "ideal_equal",
    "is_groebner",
    "is_reduced_basis",
]

IntPoly = dict  # Exponent -> int


class BudgetExceeded(RuntimeError):
    """Raised when a computation overruns its :class:`Budget`.

    ``diagnostics`` describes the partial state at the moment of abort.
    """

    def __init__(self, reason: str, diagnostics: dict):
        super().__init__(f"budget exceeded: {reason}")
        self.reason = reason
        self.diagnostics = diagnostics


@dataclass(frozen=True)
class Budget:
    """Resource ceilings; ``None`` disables a limit."""

    seconds: float | None = None
    max_degree: int | None = None
    max_generators: int | None = None


@dataclass
class GroebnerStats:
    pairs_total: int = 0
    pairs_reduced: int = 0
    zero_reductions: int = 0
    max_degree: int = 0
    basis_size: int = 0
    seconds: float = 0.0


@dataclass(frozen=True)
class IdealBasis:
    generators: tuple[Polynomial, ...]
    order: MonomialOrder
    ring: VariableTable
    reduced: bool = False
    stats: GroebnerStats | None = field(default=None, compare=False)

    def __iter__(self):
        return iter(self.generators)

    def __len__(self) -> int:
        return len(self.generators)

    def is_unit(self) -> bool:
        return any(len(g) == 1 and g.total_degree() == 0 for g in self.generators)


# ---------------------------------------------------------------------
# integer-polynomial helpers
# ---------------------------------------------------------------------
def _divides(a: Exponent, b: Exponent) -> bool:
    return all(x <= y for x, y in zip(a, b))


def _lcm(a: Exponent, b: Exponent) -> Exponent:
    return tuple(x if x > y else y for x, y in zip(a, b))


def _coprime(a: Exponent, b: Exponent) -> bool:
    return all(not (x and y) for x, y in zip(a, b))


def _to_int_poly(f: Polynomial) -> tuple[IntPoly, Fraction]:
    """Integer multiple of ``f``: returns ``(p, s)`` with ``p == s * f``."""
    d = f.as_dict()
    den = 1
    for c in d.values():
        den = den * c.denominator // math.gcd(den, c.denominator)
    return {e: int(c * den) for e, c in d.items()}, Fraction(den)


def _primitive(p: IntPoly, key) -> IntPoly:
    if not p:
        return p
    g = 0
    for c in p.values():
        g = math.gcd(g, c)
        if g == 1:
            break
    lead = p[max(p, key=key)]
    if lead < 0:
        g = -g
    if g == 1:
        return p
    return {e: c // g for e, c in p.items()}


class _Gen:
    """Basis element: primitive integer polynomial with positive leading coefficient."""

    __slots__ = ("poly", "lm", "lc", "sugar", "tail")

    def __init__(self, poly: IntPoly, key, sugar: int):
        self.poly = poly
        self.lm = max(poly, key=key)
        self.lc = poly[self.lm]
        self.tail = [(e, c) for e, c in poly.items() if e != self.lm]
        self.sugar = sugar


def _reduce(p: IntPoly, basis: Sequence[_Gen], key, full: bool = True) -> tuple[IntPoly, int]:
    """Fraction-free division of ``p`` by ``basis``.

    Returns ``(r, s)`` where ``s*p - r`` lies in the ideal and no term of
    ``r`` (or only its leading term, if ``full`` is false) is divisible by
    a leading monomial of ``basis``.
    """
    p = dict(p)
    rem: IntPoly = {}
    scale = 1
    while p:
        m = max(p, key=key)
        c = p[m]
        for g in basis:
            lm = g.lm
            if _divides(lm, m):
                q = tuple(x - y for x, y in zip(m, lm))
                d = math.gcd(c, g.lc)
                a = g.lc // d
                b = c // d
                if a != 1:
                    for e in p:
                        p[e] *= a
                    for e in rem:
                        rem[e] *= a
                    scale *= a
                del p[m]
                for e, gc in g.tail:
                    t = tuple(x + y for x, y in zip(e, q))
                    v = p.get(t, 0) - b * gc
                    if v:
                        p[t] = v
                    else:
                        p.pop(t, None)
                break
        else:
            if not full:
                rem[m] = c
                del p[m]
                for e, v in p.items():
                    rem[e] = v
                return rem, scale
            rem[m] = c
            del p[m]
    return rem, scale


def _spoly(f: _Gen, g: _Gen) -> IntPoly:
    lcm = _lcm(f.lm, g.lm)
    qf = tuple(x - y for x, y in zip(lcm, f.lm))
    qg = tuple(x - y for x, y in zip(lcm, g.lm))
    d = math.gcd(f.lc, g.lc)
    cf, cg = g.lc // d, f.lc // d
    out: IntPoly = {}
    for e, c in f.tail:
        t = tuple(x + y for x, y in zip(e, qf))
        out[t] = out.get(t, 0) + cf * c
    for e, c in g.tail:
        t = tuple(x + y for x, y in zip(e, qg))
        v = out.get(t, 0) - cg * c
        if v:
            out[t] = v
        else:
            out.pop(t, None)
    return {e: c for e, c in out.items() if c}


# ---------------------------------------------------------------------
# public single-step operations
# ---------------------------------------------------------------------
def _check_ring(polys: Iterable[Polynomial], ring: VariableTable) -> None:
    for f in polys:
        if f.ring != ring:
            raise ValueError("polynomials live in different rings")


def _gens_of(G) -> tuple[list[Polynomial], MonomialOrder | None]:
    if isinstance(G, IdealBasis):
        return list(G.generators), G.order
    return list(G), None


def normal_form(f: Polynomial, G, order: MonomialOrder | None = None) -> Polynomial:
    """Fully reduced remainder of ``f`` on division by ``G``.

    ``G`` is an :class:`IdealBasis` or a plain sequence of polynomials;
    ``f - result`` always lies in the ideal generated by ``G``.
    """
    gens, gorder = _gens_of(G)
    order = order or gorder or f.order
    _check_ring(gens, f.ring)
    if f.is_zero():
        return f.with_order(order)
    key = order.key
    basis = []
    for g in gens:
        if g.is_zero():
            continue
        ip, _ = _to_int_poly(g)
        basis.append(_Gen(_primitive(ip, key), key, 0))
    p, s0 = _to_int_poly(f)
    r, s = _reduce(p, basis, key)
    return Polynomial(f.ring, r, order).scale(1 / (s0 * s))


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder | None = None) -> Polynomial:
    """``(L/LT(f))*f - (L/LT(g))*g`` with ``L`` the lcm of the leading monomials."""
    order = order or f.order
    if f.is_zero() or g.is_zero():
        raise ValueError("S-polynomial of a zero polynomial")
    if f.ring != g.ring:
        raise ValueError("polynomials live in different rings")
    cf, ef = f.leading_term(order)
    cg, eg = g.leading_term(order)
    lcm = _lcm(ef, eg)
    left = f.mul_monomial(tuple(x - y for x, y in zip(lcm, ef)), 1 / cf)
    right = g.mul_monomial(tuple(x - y for x, y in zip(lcm, eg)), 1 / cg)
    return (left - right).with_order(order)


# ---------------------------------------------------------------------
# Buchberger
# ---------------------------------------------------------------------
class _Engine:
    def __init__(self, order: MonomialOrder, budget: Budget | None):
        self.key = order.key
        self.budget = budget or Budget()
        self.gens: list[_Gen] = []
        self.active: list[int] = []  # indices usable as reducers
        self.pairs: dict[tuple[int, int], tuple] = {}
        self.stats = GroebnerStats()
        self.t0 = time.monotonic()

    def diagnostics(self) -> dict:
        return {
            "basis_size": len(self.active),
            "generators_created": len(self.gens),
            "pending_pairs": len(self.pairs),
            "pairs_reduced": self.stats.pairs_reduced,
            "max_degree": self.stats.max_degree,
            "elapsed_seconds": round(time.monotonic() - self.t0, 3),
        }

    def check_budget(self) -> None:
        b = self.budget
        if b.seconds is not None and time.monotonic() - self.t0 > b.seconds:
            raise BudgetExceeded(f"wall clock above {b.seconds} s", self.diagnostics())
        if b.max_degree is not None and self.stats.max_degree > b.max_degree:
            raise BudgetExceeded(f"degree above {b.max_degree}", self.diagnostics())
        if b.max_generators is not None and len(self.gens) > b.max_generators:
            raise BudgetExceeded(f"more than {b.max_generators} generators", self.diagnostics())

    def pair_key(self, i: int, j: int) -> tuple:
        gi, gj = self.gens[i], self.gens[j]
        lcm = _lcm(gi.lm, gj.lm)
        deg = sum(lcm)
        sugar = max(gi.sugar + deg - sum(gi.lm), gj.sugar + deg - sum(gj.lm))
        return (deg, sugar, self.key(lcm), i, j)

    def insert(self, poly: IntPoly, sugar: int) -> None:
        """Add a new generator and update pairs (Gebauer-Moeller)."""
        h = len(self.gens)
        gh = _Gen(poly, self.key, sugar)
        self.gens.append(gh)
        self.stats.max_degree = max(self.stats.max_degree, max(sum(e) for e in poly))
        lm_h = gh.lm

        candidates = [(g, _lcm(lm_h, self.gens[g].lm)) for g in self.active]
        kept: list[tuple[int, Exponent]] = []
        # chain criterion among the new pairs
        for idx, (g1, lcm1) in enumerate(candidates):
            if _coprime(lm_h, self.gens[g1].lm):
                kept.append((g1, lcm1))
                continue
            others = candidates[idx + 1:]
            if any(_divides(l2, lcm1) for _, l2 in others) or any(
                _divides(l2, lcm1) for _, l2 in kept
            ):
                continue
            kept.append((g1, lcm1))
        # product criterion
        new_pairs = [(g, l) for g, l in kept if not _coprime(lm_h, self.gens[g].lm)]

        # chain criterion on old pairs
        for (i, j) in list(self.pairs):
            lij = _lcm(self.gens[i].lm, self.gens[j].lm)
            if (
                _divides(lm_h, lij)
                and _lcm(self.gens[i].lm, lm_h) != lij
                and _lcm(self.gens[j].lm, lm_h) != lij
            ):
                del self.pairs[(i, j)]

        for g, _ in new_pairs:
            i, j = (g, h) if g < h else (h, g)
            self.pairs[(i, j)] = self.pair_key(i, j)
            self.stats.pairs_total += 1

        self.active = [g for g in self.active if not _divides(lm_h, self.gens[g].lm)]
        self.active.append(h)

    def run(self, inputs: list[IntPoly]) -> None:
        key = self.key
        for p in inputs:
            self.check_budget()
            basis = [self.gens[i] for i in self.active]
            r, _ = _reduce(p, basis, key)
            if r:
                self.insert(_primitive(r, key), max(sum(e) for e in p))
        while self.pairs:
            self.check_budget()
            ij = min(self.pairs, key=self.pairs.__getitem__)
            sugar = self.pairs.pop(ij)[1]
            s = _spoly(self.gens[ij[0]], self.gens[ij[1]])
            self.stats.pairs_reduced += 1
            basis = [self.gens[i] for i in self.active]
            r, _ = _reduce(s, basis, key) if s else ({}, 1)
            if not r:
                self.stats.zero_reductions += 1
                continue
            self.insert(_primitive(r, key), sugar)

    def reduced_basis(self) -> list[IntPoly]:
        key = self.key
        gens = [self.gens[i] for i in self.active]
        # minimal basis: drop generators whose leading monomial is divisible by another's
        gens.sort(key=lambda g: key(g.lm))
        minimal: list[_Gen] = []
        for g in gens:
            if not any(_divides(m.lm, g.lm) for m in minimal):
                minimal.append(g)
        out = []
        for idx, g in enumerate(minimal):
            others = minimal[:idx] + minimal[idx + 1:]
            r, _ = _reduce(g.poly, others, key)
            out.append(_primitive(r, key))
        return out


def _sort_basis(polys: list[Polynomial], order: MonomialOrder) -> list[Polynomial]:
    return sorted(polys, key=lambda g: order.key(g.leading_term(order).expo))


def groebner_basis(
    F: Sequence[Polynomial],
    order: MonomialOrder,
    budget: Budget | None = None,
) -> IdealBasis:
    """Reduced Groebner basis of the ideal generated by ``F``.

    Generators come back monic and sorted ascending by leading monomial.
    ``<0>`` yields an empty basis and the unit ideal yields ``[1]``.
    """
    F = list(F)
    if not F:
        raise ValueError("groebner_basis needs at least one generator")
    ring = F[0].ring
    _check_ring(F, ring)
    key = order.key
    inputs = []
    for f in F:
        if f.is_zero():
            continue
        ip, _ = _to_int_poly(f)
        inputs.append(_primitive(ip, key))
    # deterministic processing order, independent of input permutation
    inputs.sort(key=lambda p: (max(sum(e) for e in p), key(max(p, key=key)),
                               sorted(p.items())))
    eng = _Engine(order, budget)
    if inputs:
        eng.run(inputs)
        raw = eng.reduced_basis()
    else:
        raw = []
    polys = [Polynomial(ring, p, order).monic() for p in raw]
    polys = _sort_basis(polys, order)
    eng.stats.basis_size = len(polys)
    eng.stats.seconds = time.monotonic() - eng.t0
    log.debug("groebner: %s", eng.stats)
    return IdealBasis(tuple(polys), order, ring, reduced=True, stats=eng.stats)


def is_groebner(G) -> bool:
    """Buchberger certificate: every pairwise S-polynomial reduces to zero."""
    gens, order = _gens_of(G)
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        return True
    order = order or gens[0].order
    key = order.key
    basis = []
    for g in gens:
        ip, _ = _to_int_poly(g)
        basis.append(_Gen(_primitive(ip, key), key, 0))
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            s = _spoly(basis[i], basis[j])
            if s and _reduce(s, basis, key)[0]:
                return False
    return True


def is_reduced_basis(G: IdealBasis) -> bool:
    """Monic generators, pairwise distinct, no term divisible by another's leading monomial."""
    order = G.order
    lms = []
    for g in G.generators:
        c, e = g.leading_term(order)
        if c != 1:
            return False
        lms.append(e)
    if len(set(G.generators)) != len(G.generators):
        return False
    for i, g in enumerate(G.generators):
        for e in g.as_dict():
            for j, lm in enumerate(lms):
                if i != j and _divides(lm, e):
                    return False
    return True


def eliminate(G: IdealBasis, keep: Iterable[str]) -> list[Polynomial]:
    """Generators of ``<G>`` intersected with the subring on ``keep``.

    ``G`` must be a Groebner basis under an order eliminating exactly the
    variables outside ``keep``, and those variables must come first in the
    ring.
    """
    keep = set(keep)
    ring = G.ring
    unknown = keep - set(ring.names)
    if unknown:
        raise ValueError(f"unknown variables {sorted(unknown)}")
    dropped = [i for i, n in enumerate(ring.names) if n not in keep]
    n_elim = len(dropped)
    if dropped != list(range(n_elim)):
        raise ValueError("eliminated variables must precede the kept ones in the ring")
    if not G.order.eliminates(n_elim):
        raise ValueError(
            f"order {G.order} is not an elimination order for the first {n_elim} variables"
        )
    return [g for g in G.generators if g.support() <= keep]


def ideal_member(f: Polynomial, G: IdealBasis) -> bool:
    if not isinstance(G, IdealBasis) or not G.reduced:
        raise ValueError("ideal_member needs a reduced Groebner basis")
    return normal_form(f, G).is_zero()


def ideal_equal(F1: Sequence[Polynomial], F2: Sequence[Polynomial],
                order: MonomialOrder, budget: Budget | None = None) -> bool:
    """Equality of ideals: each side reduces to zero modulo the other's basis."""
    F1 = [f for f in F1 if not f.is_zero()]
    F2 = [f for f in F2 if not f.is_zero()]
    if not F1 or not F2:
        return not F1 and not F2
    G1 = groebner_basis(F1, order, budget)
    G2 = groebner_basis(F2, order, budget)
    return all(ideal_member(f, G2) for f in F1) and all(ideal_member(f, G1) for f in F2)
