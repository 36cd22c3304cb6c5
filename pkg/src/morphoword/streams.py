"""Lazily forced, memoized infinite words."""
from __future__ import annotations

import threading
from dataclasses import dataclass
from typing import Callable, Iterator

from .errors import AlphabetMismatchError, FuelExhaustedError, NotProlongableError
from .languages import LanguageSample, purely_morphic_language_upto
from .morphisms import Morphism, is_prolongable
from .words import Alphabet, Word, factor_tuples

DEFAULT_FUEL = 10**6


class InfiniteWord:
    """Infinite sequence of letter ids backed by a growable prefix buffer.

    Subclasses implement ``_produce(n)``, which must extend ``self._memo`` to
    at least ``n`` letters.  Forced letters never change.
    """

    def __init__(self, alphabet: Alphabet):
        self.alphabet = alphabet
        self._memo: list[int] = []
        self._lock = threading.RLock()

    def _produce(self, n: int) -> None:
        raise NotImplementedError

    def _force(self, n: int) -> None:
        if len(self._memo) < n:
            with self._lock:
                if len(self._memo) < n:
                    self._produce(n)

    @property
    def forced(self) -> int:
        """Number of letters forced so far."""
        return len(self._memo)

    def at(self, i: int) -> int:
        if i < 0:
            raise IndexError("infinite words are indexed from 0")
        self._force(i + 1)
        return self._memo[i]

    def take_letters(self, n: int) -> tuple:
        if n < 0:
            raise ValueError("prefix length must be non-negative")
        self._force(n)
        return tuple(self._memo[:n])

    def take(self, n: int) -> Word:
        return Word._trusted(self.take_letters(n), self.alphabet)

    def drop(self, n: int) -> InfiniteWord:
        return Drop(self, n)

    def __getitem__(self, index):
        if isinstance(index, slice):
            start, stop, step = index.start or 0, index.stop, index.step or 1
            if stop is None:
                raise ValueError("slices of infinite words need a stop")
            self._force(stop)
            return Word._trusted(tuple(self._memo[start:stop:step]), self.alphabet)
        return self.at(index)

    def __iter__(self) -> Iterator[int]:
        i = 0
        while True:
            yield self.at(i)
            i += 1

    def dump(self, n: int) -> str:
        """Prefix dump: compact string, or one name per line for long names."""
        letters = self.take_letters(n)
        if self.alphabet.compact:
            return "".join(self.alphabet.names[x] for x in letters)
        return "\n".join(self.alphabet.names[x] for x in letters)


class FromFunction(InfiniteWord):
    def __init__(self, g: Callable[[int], int], alphabet: Alphabet):
        super().__init__(alphabet)
        self.g = g

    def _produce(self, n):
        k = len(self.alphabet)
        for i in range(len(self._memo), n):
            x = self.g(i)
            if not 0 <= x < k:
                raise ValueError(f"generator returned letter id {x!r} at index {i}")
            self._memo.append(x)


class Cycle(InfiniteWord):
    def __init__(self, u: Word):
        if not u.letters:
            raise ValueError("cycle of the empty word is undefined")
        super().__init__(u.alphabet)
        self.repetend = u

    def _produce(self, n):
        u = self.repetend.letters
        m = len(u)
        self._memo.extend(u[i % m] for i in range(len(self._memo), n))


class Prepend(InfiniteWord):
    def __init__(self, p: Word, tail: InfiniteWord):
        if p.alphabet != tail.alphabet:
            raise AlphabetMismatchError("prefix and tail alphabets differ")
        super().__init__(tail.alphabet)
        self.prefix = p
        self.tail = tail

    def _produce(self, n):
        p = self.prefix.letters
        if len(self._memo) < len(p):
            self._memo.extend(p[len(self._memo) :])
        if n > len(self._memo):
            start = len(self._memo) - len(p)
            self._memo.extend(self.tail.take_letters(n - len(p))[start:])


class Drop(InfiniteWord):
    def __init__(self, base: InfiniteWord, offset: int):
        if offset < 0:
            raise ValueError("offset must be non-negative")
        super().__init__(base.alphabet)
        self.base = base
        self.offset = offset

    def _produce(self, n):
        self._memo.extend(self.base.take_letters(self.offset + n)[self.offset + len(self._memo) :])


class MorphImage(InfiniteWord):
    """``f(u0) f(u1) f(u2) ...`` with empty images skipped.

    ``fuel`` bounds how many consecutive source letters with empty image may
    be scanned before forcing gives up with :class:`FuelExhaustedError`.
    """

    def __init__(self, f: Morphism, source: InfiniteWord, fuel: int = DEFAULT_FUEL):
        if source.alphabet != f.source:
            raise AlphabetMismatchError("stream is not over the morphism source alphabet")
        if fuel < 1:
            raise ValueError("fuel must be positive")
        super().__init__(f.target)
        self.morphism = f
        self.source = source
        self.fuel = fuel
        self._pos = 0

    def _produce(self, n):
        images = self.morphism.images
        memo = self._memo
        empty_run = 0
        while len(memo) < n:
            img = images[self.source.at(self._pos)]
            self._pos += 1
            if img:
                memo.extend(img)
                empty_run = 0
            else:
                empty_run += 1
                if empty_run >= self.fuel:
                    raise FuelExhaustedError(self.fuel, len(memo))


class FixedPoint(InfiniteWord):
    """The fixed point of ``f`` starting with a prolongable letter ``a``."""

    def __init__(self, f: Morphism, a: int | str):
        if not f.is_endomorphism:
            raise NotProlongableError("fixed points need an endomorphism")
        a = f.source.resolve(a)
        if not is_prolongable(f, a):
            raise NotProlongableError(
                f"{f.rules_text()} is not prolongable on {f.source.names[a]!r}"
            )
        super().__init__(f.source)
        self.morphism = f
        self.letter = a
        self._memo.extend(f.images[a])
        self._pos = 1  # memo == f(u[:_pos])

    def _produce(self, n):
        images = self.morphism.images
        memo = self._memo
        while len(memo) < n:
            # |f(u[:j])| > j holds for prolongable letters
            memo.extend(images[memo[self._pos]])
            self._pos += 1


def from_function(g: Callable[[int], int], alphabet: Alphabet) -> FromFunction:
    return FromFunction(g, alphabet)


def cycle(u: Word) -> Cycle:
    return Cycle(u)


def prepend(p: Word, uu: InfiniteWord) -> InfiniteWord:
    return Prepend(p, uu)


def morph_image(f: Morphism, uu: InfiniteWord, fuel: int = DEFAULT_FUEL) -> MorphImage:
    return MorphImage(f, uu, fuel)


def fixed_point(f: Morphism, a: int | str) -> FixedPoint:
    return FixedPoint(f, a)


def is_prefix_of_stream(p: Word, uu: InfiniteWord) -> bool:
    if p.alphabet != uu.alphabet:
        raise AlphabetMismatchError("word and stream alphabets differ")
    return uu.take_letters(len(p)) == p.letters


def occurs_in_prefix(w: Word, uu: InfiniteWord, window: int) -> bool:
    """True iff ``w`` occurs in the first ``window`` letters; True proves sfactor."""
    if window < len(w):
        raise ValueError("window must be at least |w|")
    if w.alphabet != uu.alphabet:
        raise AlphabetMismatchError("word and stream alphabets differ")
    prefix = uu.take_letters(window)
    m = len(w)
    t = w.letters
    return any(prefix[i : i + m] == t for i in range(window - m + 1))


def default_window(uu: InfiniteWord, n: int) -> int:
    if isinstance(uu, Cycle):
        return 2 * len(uu.repetend) + n
    return max(1000, n)


def word_language_upto(uu: InfiniteWord, n: int, window: int | None = None) -> LanguageSample:
    """Factors of length <= n seen in the first ``window`` letters.

    Complete for cycles once the window spans two periods plus ``n``, and for
    fixed points of non-erasing morphisms when the window sample matches the
    purely morphic language of the first letter.
    """
    if n < 0:
        raise ValueError("length bound must be non-negative")
    window = default_window(uu, n) if window is None else window
    if window < n:
        raise ValueError("window must be at least n")
    found = factor_tuples(uu.take_letters(window), n)
    words = frozenset(Word._trusted(t, uu.alphabet) for t in found)
    complete = False
    if isinstance(uu, Cycle):
        complete = window >= 2 * len(uu.repetend) + n
    elif isinstance(uu, FixedPoint) and not uu.morphism.is_erasing:
        first = Word._trusted((uu.letter,), uu.alphabet)
        complete = purely_morphic_language_upto(uu.morphism, first, n).words == words
    return LanguageSample(words, n, complete)


def factor_complexity(uu: InfiniteWord, n: int, window: int | None = None) -> int:
    """Number of distinct length-n factors in the window (a lower bound unless complete)."""
    return complexity_row(uu, n, window)[1]


def complexity_row(uu: InfiniteWord, n: int, window: int | None = None) -> tuple[int, int, bool]:
    """``(n, p(n), complete)`` for one length."""
    sample = word_language_upto(uu, n, window)
    return n, sum(1 for w in sample.words if len(w) == n), sample.complete


def complexity_table(uu: InfiniteWord, max_n: int, window: int | None = None):
    return [complexity_row(uu, n, window) for n in range(max_n + 1)]


@dataclass(frozen=True)
class PeriodicityReport:
    status: str  # "PurelyPeriodic" | "EventuallyPeriodic" | "NoPeriodFound"
    period: int | None = None
    preperiod: int = 0
    max_period: int | None = None
    window: int | None = None

    @property
    def periodic(self) -> bool:
        return self.status != "NoPeriodFound"

    def __str__(self):
        if self.status == "PurelyPeriodic":
            return f"PurelyPeriodic({self.period})"
        if self.status == "EventuallyPeriodic":
            return f"EventuallyPeriodic({self.preperiod}, {self.period})"
        return f"NoPeriodFound(max_period={self.max_period}, window={self.window})"

    def as_dict(self):
        return {
            "status": self.status,
            "period": self.period,
            "preperiod": self.preperiod,
            "max_period": self.max_period,
            "window": self.window,
        }


def _min_preperiod(x: tuple, p: int) -> int:
    i = len(x) - p - 1
    while i >= 0 and x[i] == x[i + p]:
        i -= 1
    return i + 1


def detect_periodicity(
    uu: InfiniteWord, max_period: int, window: int, max_preperiod: int | None = None
) -> PeriodicityReport:
    """Smallest period ``<= max_period`` (then smallest preperiod) on the window.

    A candidate counts only if its periodic tail spans at least two periods
    and starts no later than ``max_preperiod`` (default: half the window).
    """
    if max_period < 1:
        raise ValueError("max_period must be positive")
    if window < 2 * max_period:
        raise ValueError("window must be at least 2 * max_period")
    if max_preperiod is None:
        max_preperiod = window // 2
    x = uu.take_letters(window)
    for p in range(1, max_period + 1):
        pre = _min_preperiod(x, p)
        if pre <= max_preperiod and window - pre >= 2 * p:
            if pre == 0:
                return PeriodicityReport("PurelyPeriodic", p, 0, max_period, window)
            return PeriodicityReport("EventuallyPeriodic", p, pre, max_period, window)
    return PeriodicityReport("NoPeriodFound", None, 0, max_period, window)
