"""Sparse multivariate polynomials over Q with pluggable monomial orders.

A :class:`Polynomial` is an immutable map from dense exponent tuples to
nonzero :class:`~fractions.Fraction` coefficients, tied to a
:class:`VariableTable`.  Term order only matters when terms are listed,
printed or reduced, so each polynomial carries a reference order that
can be swapped with :meth:`Polynomial.with_order`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, NamedTuple, Sequence

from .scalars import GaussianRational, as_gaussian, format_rational, parse_rational

Exponent = tuple[int, ...]


class VariableTable:
    """Ordered variable names; index order is variable precedence."""

    __slots__ = ("names", "_index")

    def __init__(self, names: Iterable[str]):
        self.names = tuple(names)
        self._index = {n: i for i, n in enumerate(self.names)}
        if len(self._index) != len(self.names):
            raise ValueError(f"duplicate variable names in {self.names}")
        for n in self.names:
            if not n or any(ch in n for ch in " *^+/") or n[0].isdigit() or n[0] == "-":
                raise ValueError(f"illegal variable name {n!r}")

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise KeyError(f"unknown variable {name!r}") from None

    def __contains__(self, name) -> bool:
        return name in self._index

    def __len__(self) -> int:
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __eq__(self, other) -> bool:
        return isinstance(other, VariableTable) and self.names == other.names

    def __hash__(self) -> int:
        return hash(self.names)

    def __repr__(self) -> str:
        return f"VariableTable({list(self.names)!r})"


def _lex_key(e: Exponent) -> tuple:
    return e


def _grevlex_key(e: Exponent) -> tuple:
    return (sum(e), tuple(-x for x in reversed(e)))


_INNER_KEYS: dict[str, Callable[[Exponent], tuple]] = {
    "lex": _lex_key,
    "grevlex": _grevlex_key,
}


@dataclass(frozen=True)
class MonomialOrder:
    """Total, multiplicative, global order on exponent vectors.

    ``kind`` is ``"lex"``, ``"grevlex"`` or ``"block_elim"``.  A block
    order compares the first ``split`` variables with ``inner[0]`` and
    breaks ties on the remaining ones with ``inner[1]``, so any monomial
    touching the first block beats every monomial free of it.
    """

    kind: str = "lex"
    split: int = 0
    inner: tuple[str, str] = ("lex", "lex")
    key: Callable[[Exponent], tuple] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.kind in _INNER_KEYS:
            object.__setattr__(self, "key", _INNER_KEYS[self.kind])
            return
        if self.kind != "block_elim":
            raise ValueError(f"unknown monomial order {self.kind!r}")
        if self.split < 0:
            raise ValueError("block split must be nonnegative")
        first, second = (_INNER_KEYS[k] for k in self.inner)
        s = self.split

        def block_key(e: Exponent) -> tuple:
            return (first(e[:s]), second(e[s:]))

        object.__setattr__(self, "key", block_key)

    @classmethod
    def lex(cls) -> MonomialOrder:
        return cls("lex")

    @classmethod
    def grevlex(cls) -> MonomialOrder:
        return cls("grevlex")

    @classmethod
    def block(cls, split: int, first: str = "lex", second: str = "lex") -> MonomialOrder:
        return cls("block_elim", split, (first, second))

    def eliminates(self, n_eliminated: int) -> bool:
        """True if this is an elimination order for the first ``n_eliminated`` variables."""
        if self.kind == "lex" or n_eliminated == 0:
            return True
        if self.kind == "block_elim":
            return self.split == n_eliminated
        return False

    def cmp(self, u: Exponent, v: Exponent) -> int:
        return cmp_monomials(u, v, self)


LEX = MonomialOrder.lex()
GREVLEX = MonomialOrder.grevlex()


def cmp_monomials(u: Sequence[int], v: Sequence[int], order: MonomialOrder) -> int:
    """Return -1, 0 or 1 as ``u`` is below, equal to or above ``v``."""
    if len(u) != len(v):
        raise ValueError(f"exponent length mismatch: {len(u)} vs {len(v)}")
    ku, kv = order.key(tuple(u)), order.key(tuple(v))
    return (ku > kv) - (ku < kv)


class Term(NamedTuple):
    coeff: Fraction
    expo: Exponent


def _canon(terms: Mapping[Exponent, object]) -> dict[Exponent, Fraction]:
    return {e: Fraction(c) for e, c in terms.items() if c != 0}


class Polynomial:
    """Immutable sparse polynomial with rational coefficients."""

    __slots__ = ("ring", "order", "_terms", "_hash")

    def __init__(
        self,
        ring: VariableTable,
        terms: Mapping[Exponent, object] | None = None,
        order: MonomialOrder = LEX,
    ):
        self.ring = ring
        self.order = order
        self._terms = _canon(terms or {})
        n = len(ring)
        for e in self._terms:
            if len(e) != n or any(x < 0 for x in e):
                raise ValueError(f"bad exponent vector {e} for {n} variables")
        self._hash = None

    # -- construction -------------------------------------------------
    @classmethod
    def zero(cls, ring: VariableTable, order: MonomialOrder = LEX) -> Polynomial:
        return cls(ring, {}, order)

    @classmethod
    def constant(cls, ring: VariableTable, c, order: MonomialOrder = LEX) -> Polynomial:
        return cls(ring, {(0,) * len(ring): c}, order)

    @classmethod
    def var(cls, ring: VariableTable, name: str, power: int = 1,
            order: MonomialOrder = LEX) -> Polynomial:
        e = [0] * len(ring)
        e[ring.index(name)] = power
        return cls(ring, {tuple(e): 1}, order)

    @classmethod
    def monomial(cls, ring: VariableTable, expo: Sequence[int], coeff=1,
                 order: MonomialOrder = LEX) -> Polynomial:
        return cls(ring, {tuple(expo): coeff}, order)

    @classmethod
    def parse(cls, text: str, ring: VariableTable, order: MonomialOrder = LEX) -> Polynomial:
        return parse_polynomial(text, ring, order)

    @classmethod
    def from_struct(cls, data, ring: VariableTable, order: MonomialOrder = LEX) -> Polynomial:
        """Inverse of :meth:`to_struct`: ``[[coeff, [exponents]], ...]``."""
        acc: dict[Exponent, Fraction] = {}
        for coeff, expo in data:
            c = parse_rational(coeff) if isinstance(coeff, str) else Fraction(coeff)
            e = tuple(int(x) for x in expo)
            acc[e] = acc.get(e, Fraction(0)) + c
        return cls(ring, acc, order)

    # -- inspection ---------------------------------------------------
    @property
    def nvars(self) -> int:
        return len(self.ring)

    def as_dict(self) -> dict[Exponent, Fraction]:
        return dict(self._terms)

    def terms(self, order: MonomialOrder | None = None) -> list[Term]:
        """Terms sorted strictly descending under ``order`` (default: own order)."""
        key = (order or self.order).key
        return [Term(self._terms[e], e) for e in sorted(self._terms, key=key, reverse=True)]

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=-1)

    def support(self) -> set[str]:
        """Names of variables that occur with positive exponent."""
        used = [False] * self.nvars
        for e in self._terms:
            for i, x in enumerate(e):
                if x:
                    used[i] = True
        return {n for n, u in zip(self.ring.names, used) if u}

    def coefficient(self, expo: Sequence[int]) -> Fraction:
        return self._terms.get(tuple(expo), Fraction(0))

    def with_order(self, order: MonomialOrder) -> Polynomial:
        if order == self.order:
            return self
        p = Polynomial.__new__(Polynomial)
        p.ring, p.order, p._terms, p._hash = self.ring, order, self._terms, self._hash
        return p

    def content(self) -> Fraction:
        """Positive rational ``c`` such that ``self / c`` has coprime integer coefficients."""
        if not self._terms:
            return Fraction(0)
        num = 0
        den = 1
        for c in self._terms.values():
            num = math.gcd(num, c.numerator)
            den = den * c.denominator // math.gcd(den, c.denominator)
        return Fraction(num, den)

    def primitive(self) -> Polynomial:
        """Integer coefficients, content 1, leading coefficient positive."""
        if not self._terms:
            return self
        c = self.content()
        if self.leading_term().coeff < 0:
            c = -c
        return self.scale(1 / c)

    def monic(self) -> Polynomial:
        if not self._terms:
            return self
        return self.scale(1 / self.leading_term().coeff)

    # -- arithmetic ---------------------------------------------------
    def _check(self, other: Polynomial) -> None:
        if self.ring != other.ring:
            raise ValueError("polynomials live in different rings")

    def _lift(self, other) -> Polynomial | None:
        if isinstance(other, Polynomial):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.ring, other, self.order)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        acc = dict(self._terms)
        for e, c in o._terms.items():
            acc[e] = acc.get(e, 0) + c
        return Polynomial(self.ring, acc, self.order)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {e: -c for e, c in self._terms.items()}, self.order)

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        acc: dict[Exponent, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in o._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = acc.get(e, 0) + c1 * c2
        return Polynomial(self.ring, acc, self.order)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.constant(self.ring, 1, self.order)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def scale(self, c) -> Polynomial:
        c = Fraction(c)
        return Polynomial(self.ring, {e: v * c for e, v in self._terms.items()}, self.order)

    def mul_monomial(self, expo: Sequence[int], coeff=1) -> Polynomial:
        coeff = Fraction(coeff)
        return Polynomial(
            self.ring,
            {tuple(a + b for a, b in zip(e, expo)): c * coeff for e, c in self._terms.items()},
            self.order,
        )

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.ring == other.ring and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == Polynomial.constant(self.ring, other)
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    # -- order-dependent views ---------------------------------------
    def leading_term(self, order: MonomialOrder | None = None) -> Term:
        if not self._terms:
            raise ValueError("zero polynomial has no leading term")
        key = (order or self.order).key
        e = max(self._terms, key=key)
        return Term(self._terms[e], e)

    def evaluate(self, point: Mapping[str, object]) -> GaussianRational:
        """Exact value at ``point`` (variable name -> number or Gaussian literal)."""
        values: list[GaussianRational | None] = [None] * self.nvars
        for name, v in point.items():
            if name in self.ring:
                values[self.ring.index(name)] = as_gaussian(v)
        total = GaussianRational(0)
        for e, c in self._terms.items():
            t = GaussianRational(c)
            for i, x in enumerate(e):
                if x:
                    if values[i] is None:
                        raise KeyError(f"variable {self.ring.names[i]!r} is not bound")
                    t = t * values[i] ** x
            total = total + t
        return total

    # -- I/O ----------------------------------------------------------
    def to_struct(self, order: MonomialOrder | None = None) -> list:
        return [[format_rational(t.coeff), list(t.expo)] for t in self.terms(order)]

    def to_text(self, order: MonomialOrder | None = None) -> str:
        return format_polynomial(self, order)

    def __str__(self) -> str:
        return format_polynomial(self)

    def __repr__(self) -> str:
        return f"Polynomial({format_polynomial(self)!r})"


def poly_arith(f: Polynomial, g: Polynomial, op: str) -> Polynomial:
    if op == "add":
        return f + g
    if op == "sub":
        return f - g
    if op == "mul":
        return f * g
    raise ValueError(f"unknown operation {op!r}")


def leading_term(f: Polynomial, order: MonomialOrder) -> Term:
    return f.leading_term(order)


def evaluate(f: Polynomial, point: Mapping[str, object]) -> GaussianRational:
    return f.evaluate(point)


def is_binomial(f: Polynomial, order: MonomialOrder | None = None):
    """Two terms -> the pair; one term -> a 1-tuple (monomial); otherwise None."""
    if len(f) in (1, 2):
        return tuple(f.terms(order))
    return None


# ---------------------------------------------------------------------
# text form
# ---------------------------------------------------------------------
def _format_monomial(names: Sequence[str], expo: Exponent) -> str:
    parts = []
    for n, x in zip(names, expo):
        if x == 1:
            parts.append(n)
        elif x > 1:
            parts.append(f"{n}^{x}")
    return "*".join(parts)


def format_polynomial(f: Polynomial, order: MonomialOrder | None = None) -> str:
    if f.is_zero():
        return "0"
    out = []
    for i, (c, e) in enumerate(f.terms(order)):
        mono = _format_monomial(f.ring.names, e)
        mag = abs(c)
        if not mono:
            body = format_rational(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{format_rational(mag)}*{mono}"
        if i == 0:
            out.append(("-" if c < 0 else "") + body)
        else:
            out.append(("- " if c < 0 else "+ ") + body)
    return " ".join(out)


class PolynomialSyntaxError(ValueError):
    pass


def parse_polynomial(text: str, ring: VariableTable,
                     order: MonomialOrder = LEX) -> Polynomial:
    """Parse ``"c*x^e*y - z + 1/2"`` over ``ring``.

    Variable names may contain ``-`` and ``,`` (e.g. ``b2,-1``), so names
    are matched greedily against the ring before anything is read as a
    sign.
    """
    s = text.replace(" ", "").replace("\t", "").replace("\n", "")
    names = sorted(ring.names, key=len, reverse=True)
    n = len(ring)
    pos = 0
    acc: dict[Exponent, Fraction] = {}

    def error(msg: str):
        raise PolynomialSyntaxError(f"{msg} at offset {pos} in {text!r}")

    def read_int() -> int:
        nonlocal pos
        start = pos
        while pos < len(s) and s[pos].isdigit():
            pos += 1
        if start == pos:
            error("expected integer")
        return int(s[start:pos])

    if not s:
        error("empty polynomial")
    first = True
    while pos < len(s):
        sign = 1
        if s[pos] in "+-":
            sign = -1 if s[pos] == "-" else 1
            pos += 1
        elif not first:
            error("expected '+' or '-'")
        first = False
        coeff = Fraction(sign)
        expo = [0] * n
        while True:
            if pos < len(s) and s[pos].isdigit():
                num = read_int()
                den = 1
                if pos < len(s) and s[pos] == "/":
                    pos += 1
                    den = read_int()
                    if den == 0:
                        error("zero denominator")
                coeff *= Fraction(num, den)
            else:
                for name in names:
                    if s.startswith(name, pos):
                        pos += len(name)
                        power = 1
                        if pos < len(s) and s[pos] == "^":
                            pos += 1
                            power = read_int()
                        expo[ring.index(name)] += power
                        break
                else:
                    error("expected coefficient or variable")
            if pos < len(s) and s[pos] == "*":
                pos += 1
                continue
            break
        e = tuple(expo)
        acc[e] = acc.get(e, Fraction(0)) + coeff
    return Polynomial(ring, acc, order)
