"""Exact rational and Gaussian-rational arithmetic.

Rationals are :class:`fractions.Fraction` (Python ints are already
arbitrary precision).  Gaussian rationals, elements of Q(i), are the
small immutable :class:`GaussianRational` value type below.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

__all__ = [
    "GaussianRational",
    "rat_normalize",
    "parse_rational",
    "format_rational",
    "gauss_arith",
    "gauss_pow",
    "as_gaussian",
    "parse_gaussian",
    "format_gaussian",
    "I",
]

Scalar = Union[int, Fraction, "GaussianRational"]


def rat_normalize(num: int, den: int) -> Fraction:
    """Return ``num/den`` in lowest terms with a positive denominator."""
    if den == 0:
        raise ZeroDivisionError("rational with zero denominator")
    return Fraction(num, den)


_RAT_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"``."""
    m = _RAT_RE.match(text)
    if not m:
        raise ValueError(f"malformed rational literal: {text!r}")
    den = int(m.group(2)) if m.group(2) is not None else 1
    return rat_normalize(int(m.group(1)), den)


def format_rational(r: Fraction) -> str:
    if r.denominator == 1:
        return str(r.numerator)
    return f"{r.numerator}/{r.denominator}"


@dataclass(frozen=True)
class GaussianRational:
    """An element ``re + im*i`` of Q(i)."""

    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        # accept ints / Fractions, store canonical Fractions
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im", Fraction(self.im))

    @classmethod
    def parse(cls, text: str) -> GaussianRational:
        return parse_gaussian(text)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def __bool__(self):
        return not self.is_zero()

    def conjugate(self) -> GaussianRational:
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def __add__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in Q(i)")
        return self * GaussianRational(o.re / n, -o.im / n)

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def __pow__(self, e: int):
        return gauss_pow(self, e)

    def __eq__(self, other):
        o = _coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __str__(self):
        return format_gaussian(self)

    def __repr__(self):
        return f"GaussianRational({format_gaussian(self)!r})"


I = GaussianRational(0, 1)


def _coerce(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, _RationalABC)):
        return GaussianRational(Fraction(x), Fraction(0))
    return NotImplemented


def as_gaussian(x) -> GaussianRational:
    """Convert an int, Fraction, literal string or GaussianRational."""
    if isinstance(x, str):
        return parse_gaussian(x)
    g = _coerce(x)
    if g is NotImplemented:
        raise TypeError(f"cannot convert {type(x).__name__} to GaussianRational")
    return g


def gauss_arith(a, b, op: str) -> GaussianRational:
    a, b = as_gaussian(a), as_gaussian(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def gauss_pow(a, e: int) -> GaussianRational:
    """Exact ``a**e``; negative exponents invert first."""
    a = as_gaussian(a)
    if e < 0:
        if a.is_zero():
            raise ZeroDivisionError("0 raised to a negative power")
        a = GaussianRational(1) / a
        e = -e
    result = GaussianRational(1)
    base = a
    while e:
        if e & 1:
            result = result * base
        e >>= 1
        if e:
            base = base * base
    return result


def parse_gaussian(text: str) -> GaussianRational:
    """Parse literals such as ``"1/2"``, ``"-i"``, ``"3/4*i"``, ``"1/2-3/4*i"``."""
    s = text.replace(" ", "")
    if not s.endswith("i"):
        return GaussianRational(parse_rational(s))
    body = s[:-1]
    if body.endswith("*"):
        body = body[:-1]
        if not body or body[-1] in "+-":
            raise ValueError(f"malformed Gaussian-rational literal: {text!r}")
    cut = max(body.rfind("+"), body.rfind("-"))
    real_txt, im_txt = (body[:cut], body[cut:]) if cut > 0 else ("", body)
    if im_txt in ("", "+", "-"):
        im_txt += "1"
    try:
        re_part = parse_rational(real_txt) if real_txt else Fraction(0)
        im_part = parse_rational(im_txt)
    except ValueError:
        raise ValueError(f"malformed Gaussian-rational literal: {text!r}") from None
    return GaussianRational(re_part, im_part)


def format_gaussian(z: GaussianRational) -> str:
    if z.im == 0:
        return format_rational(z.re)
    mag = abs(z.im)
    im_txt = "i" if mag == 1 else f"{format_rational(mag)}*i"
    if z.re == 0:
        return ("-" if z.im < 0 else "") + im_txt
    return f"{format_rational(z.re)}{'-' if z.im < 0 else '+'}{im_txt}"
