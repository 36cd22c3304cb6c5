"""Lower mechanical words ``s(n) = floor((n+1)a + b) - floor(n a + b)``."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import (
    ExactNumber,
    Surd,
    _floor_parts,
    exact_floor,
    format_exact,
    integer_parts,
    radicand,
)
from .streams import InfiniteWord, PeriodicityReport, detect_periodicity
from .words import Alphabet


@dataclass(frozen=True)
class MechanicalWordSpec:
    alpha: ExactNumber
    beta: ExactNumber

    def __str__(self):
        return f"alpha={format_exact(self.alpha)} beta={format_exact(self.beta)}"


class _AffineFloor:
    """Evaluates ``floor(n*alpha + beta)`` with integer arithmetic only."""

    def __init__(self, alpha, beta):
        d = radicand(alpha, beta)
        a1, b1, c1 = integer_parts(alpha, d)
        a2, b2, c2 = integer_parts(beta, d)
        self.d = d
        self._coef = (a1 * c2, a2 * c1, b1 * c2, b2 * c1, c1 * c2)

    def __call__(self, n: int) -> int:
        pa, qa, pb, qb, c = self._coef
        a = n * pa + qa
        b = n * pb + qb
        if b == 0 or self.d is None:
            return a // c
        return _floor_parts(a, b, self.d, c)


def lower_mechanical_letter(alpha, beta, n: int) -> int:
    fl = _AffineFloor(alpha, beta)
    return fl(n + 1) - fl(n)


def letter_values(alpha) -> tuple[int, ...]:
    """The at most two letter values a mechanical word of slope ``alpha`` can take."""
    lo = exact_floor(alpha)
    if not isinstance(alpha, Surd) and Fraction(alpha).denominator == 1:
        return (lo,)
    return (lo, lo + 1)


class MechanicalWord(InfiniteWord):
    """Lower mechanical word; letter ids index :func:`letter_values`, names are the values."""

    def __init__(self, alpha, beta):
        self.spec = MechanicalWordSpec(alpha, beta)
        self.values = letter_values(alpha)
        super().__init__(Alphabet(str(v) for v in self.values))
        self._floor = _AffineFloor(alpha, beta)
        self._last = self._floor(0)

    @property
    def alpha(self):
        return self.spec.alpha

    @property
    def beta(self):
        return self.spec.beta

    def _produce(self, n):
        memo = self._memo
        low = self.values[0]
        fl = self._floor
        prev = self._last
        for i in range(len(memo), n):
            nxt = fl(i + 1)
            memo.append(nxt - prev - low)
            prev = nxt
        self._last = prev

    def value_at(self, i: int) -> int:
        return self.values[self.at(i)]

    def values_prefix(self, n: int) -> list[int]:
        return [self.values[x] for x in self.take_letters(n)]


def lower_mechanical_word(alpha, beta) -> MechanicalWord:
    return MechanicalWord(alpha, beta)


def rational_periodicity_check(alpha, beta, window: int | None = None) -> PeriodicityReport:
    """Periodicity scan for a rational slope ``p/q``; the period divides ``q``."""
    if isinstance(alpha, Surd):
        raise TypeError("rational_periodicity_check needs a rational slope")
    q = Fraction(alpha).denominator
    window = max(4 * q, 2) if window is None else window
    if window < 4 * q:
        raise ValueError(f"window must be at least 4q = {4 * q}")
    return detect_periodicity(lower_mechanical_word(alpha, beta), q, window)


def aperiodicity_evidence(alpha, beta, max_period: int = 50, window: int = 500) -> PeriodicityReport:
    """Scan an irrational-slope word for short periods; expected to find none.

    This is evidence on a finite prefix, not a proof.
    """
    if not isinstance(alpha, Surd):
        raise TypeError("aperiodicity_evidence needs an irrational (surd) slope")
    return detect_periodicity(lower_mechanical_word(alpha, beta), max_period, window)
