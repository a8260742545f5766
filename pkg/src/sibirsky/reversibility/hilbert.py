"""Brute-force Hilbert basis of ``{nu >= 0 : zeta . nu = 0}`` up to a norm bound.

Independent of the Groebner route; used to cross-check it.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


def _vectors_up_to(n: int, bound: int) -> Iterator[tuple[int, ...]]:
    """All ``nu`` in N^n with ``1 <= |nu|_1 <= bound``."""

    def rec(prefix: list[int], left: int, slots: int):
        if slots == 0:
            yield tuple(prefix)
            return
        for x in range(left + 1):
            prefix.append(x)
            yield from rec(prefix, left - x, slots - 1)
            prefix.pop()

    for v in rec([], bound, n):
        if any(v):
            yield v


def _dominated(u: Sequence[int], v: Sequence[int]) -> bool:
    """``u <= v`` componentwise and ``u != v``."""
    return u != v and all(a <= b for a, b in zip(u, v))


def minimal_elements(vectors: Iterable[Sequence[int]]) -> set[tuple[int, ...]]:
    vs = {tuple(v) for v in vectors if any(v)}
    return {v for v in vs if not any(_dominated(u, v) for u in vs)}


def hilbert_oracle(zeta: Sequence[int], bound: int) -> set[tuple[int, ...]]:
    """Minimal nonzero solutions of ``zeta . nu = 0`` with ``|nu|_1 <= bound``."""
    if bound < 1:
        raise ValueError("bound must be >= 1")
    sols = [v for v in _vectors_up_to(len(zeta), bound)
            if sum(z * x for z, x in zip(zeta, v)) == 0]
    # solutions sorted by norm: a vector is minimal iff no smaller-norm minimal one divides it
    sols.sort(key=sum)
    minimal: list[tuple[int, ...]] = []
    for v in sols:
        if not any(_dominated(m, v) for m in minimal):
            minimal.append(v)
    return set(minimal)
