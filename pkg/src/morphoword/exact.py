"""Rationals and quadratic surds ``(a + b*sqrt(d))/c`` with exact floor.

No floating point is used anywhere in this module.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Union

from .errors import ParseError


def _square_part(d: int) -> tuple[int, int]:
    """Split ``d = k*k * r`` with ``r`` square-free; returns ``(k, r)``."""
    k, r = 1, d
    f = 2
    while f * f <= r:
        while r % (f * f) == 0:
            r //= f * f
            k *= f
        f += 1
    return k, r


class Surd:
    """Normalized ``(a + b*sqrt(d))/c``: b != 0, d > 1 square-free, c > 0, gcd(a, b, c) = 1."""

    __slots__ = ("a", "b", "d", "c")

    def __init__(self, a: int, b: int, d: int, c: int = 1):
        if c == 0:
            raise ZeroDivisionError("surd denominator is zero")
        if d < 2:
            raise ValueError("radicand must be at least 2")
        k, r = _square_part(d)
        b *= k
        if r == 1 or b == 0:
            raise ValueError("degenerate surd is rational; use make_surd")
        if c < 0:
            a, b, c = -a, -b, -c
        g = math.gcd(math.gcd(a, b), c)
        self.a, self.b, self.d, self.c = a // g, b // g, r, c // g

    def __repr__(self):
        return f"Surd({self.a}, {self.b}, {self.d}, {self.c})"

    def __str__(self):
        return format_exact(self)

    def __eq__(self, other):
        if isinstance(other, Surd):
            return (self.a, self.b, self.d, self.c) == (other.a, other.b, other.d, other.c)
        if isinstance(other, (int, Fraction)):
            return False
        return NotImplemented

    def __hash__(self):
        return hash((self.a, self.b, self.d, self.c))

    def _parts(self):
        return Fraction(self.a, self.c), Fraction(self.b, self.c)

    def __add__(self, other):
        return _combine(self, other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        return _combine(self, other, -1)

    def __rsub__(self, other):
        return _combine(-self, other, 1)

    def __neg__(self):
        return Surd(-self.a, -self.b, self.d, self.c)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Fraction(other)
            return make_surd(self.a * other.numerator, self.b * other.numerator, self.d,
                             self.c * other.denominator)
        return NotImplemented

    __rmul__ = __mul__

    def __floor__(self):
        return exact_floor(self)

    def _cmp(self, other) -> int:
        return sign(self - other)

    def __lt__(self, other):
        return self._cmp(other) < 0

    def __le__(self, other):
        return self._cmp(other) <= 0

    def __gt__(self, other):
        return self._cmp(other) > 0

    def __ge__(self, other):
        return self._cmp(other) >= 0


ExactNumber = Union[Fraction, Surd]


def make_surd(a: int, b: int, d: int, c: int = 1) -> ExactNumber:
    """``(a + b*sqrt(d))/c`` as a :class:`Surd`, or a Fraction when rational."""
    if c == 0:
        raise ZeroDivisionError("denominator is zero")
    if d < 0:
        raise ValueError("negative radicand")
    k, r = _square_part(d) if d > 0 else (0, 1)
    if b == 0 or d == 0 or r == 1:
        return Fraction(a + b * k, c)
    return Surd(a, b, d, c)


def _as_parts(x, d):
    if isinstance(x, Surd):
        return x._parts()
    return Fraction(x), Fraction(0)


def _combine(x: Surd, y, s: int):
    if isinstance(y, Surd):
        if y.d != x.d:
            raise ValueError(f"cannot combine surds with radicands {x.d} and {y.d}")
    elif not isinstance(y, (int, Fraction)):
        return NotImplemented
    p, q = x._parts()
    r, t = _as_parts(y, x.d)
    return from_parts(p + s * r, q + s * t, x.d)


def from_parts(rational: Fraction, irrational: Fraction, d: int) -> ExactNumber:
    """``rational + irrational*sqrt(d)``."""
    den = rational.denominator * irrational.denominator // math.gcd(
        rational.denominator, irrational.denominator
    )
    return make_surd(
        int(rational * den), int(irrational * den), d, den
    )


def _floor_parts(a: int, b: int, d: int, c: int) -> int:
    """``floor((a + b*sqrt(d))/c)`` for ``c > 0`` and non-square ``d``."""
    root = math.isqrt(b * b * d)
    # b*sqrt(d) is irrational, so its floor is isqrt(b^2 d) or -(that + 1)
    floor_b = root if b >= 0 else -root - 1
    return (a + floor_b) // c


def exact_floor(x) -> int:
    if isinstance(x, Surd):
        return _floor_parts(x.a, x.b, x.d, x.c)
    x = Fraction(x)
    return x.numerator // x.denominator


def sign(x) -> int:
    if isinstance(x, Surd):
        a, bb = x.a, x.b
        if a >= 0 and bb > 0:
            return 1
        if a <= 0 and bb < 0:
            return -1
        # opposite signs: compare a^2 with b^2 d
        lhs, rhs = a * a, bb * bb * x.d
        return (1 if a > 0 else -1) if lhs > rhs else (1 if bb > 0 else -1)
    x = Fraction(x)
    return (x > 0) - (x < 0)


def is_rational(x) -> bool:
    return not isinstance(x, Surd)


def radicand(*xs) -> int | None:
    """Common radicand of the surds among ``xs`` (None if all rational)."""
    ds = {x.d for x in xs if isinstance(x, Surd)}
    if len(ds) > 1:
        raise ValueError(f"mixed radicands {sorted(ds)} are not supported")
    return ds.pop() if ds else None


def integer_parts(x, d: int | None) -> tuple[int, int, int]:
    """``(A, B, C)`` with ``x = (A + B*sqrt(d))/C`` and ``C > 0``."""
    if isinstance(x, Surd):
        return x.a, x.b, x.c
    x = Fraction(x)
    return x.numerator, 0, x.denominator


_SURD_RE = re.compile(
    r"""^\(\s*([+-]?\s*\d+)\s*([+-])\s*(\d+)\s*\*\s*sqrt\(\s*(\d+)\s*\)\s*\)
        \s*(?:/\s*(\d+))?$""",
    re.VERBOSE,
)
_RAT_RE = re.compile(r"^([+-]?\d+)\s*(?:/\s*([+-]?\d+))?$")


def parse_exact(text: str) -> ExactNumber:
    """Parse ``p``, ``p/q`` or ``(a+b*sqrt(d))/c``."""
    s = text.strip()
    m = _RAT_RE.match(s)
    if m:
        q = int(m.group(2)) if m.group(2) else 1
        if q == 0:
            raise ParseError(f"zero denominator in {text!r}")
        return Fraction(int(m.group(1)), q)
    m = _SURD_RE.match(s)
    if m:
        a = int(m.group(1).replace(" ", ""))
        b = int(m.group(3)) * (-1 if m.group(2) == "-" else 1)
        d = int(m.group(4))
        c = int(m.group(5)) if m.group(5) else 1
        if c == 0:
            raise ParseError(f"zero denominator in {text!r}")
        return make_surd(a, b, d, c)
    raise ParseError(f"not an exact number literal: {text!r} (use p, p/q or (a+b*sqrt(d))/c)")


def format_exact(x) -> str:
    if isinstance(x, Surd):
        op = "-" if x.b < 0 else "+"
        return f"({x.a}{op}{abs(x.b)}*sqrt({x.d}))/{x.c}"
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
