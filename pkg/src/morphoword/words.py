"""Finite words over interned alphabets.

Letters are stored as dense integer ids ``0..len(alphabet)-1``; the alphabet
keeps the name table.  Words are immutable and hashable.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Sequence

from .errors import AlphabetMismatchError, ParseError


class Alphabet:
    """Ordered finite set of letter names."""

    __slots__ = ("names", "_index")

    def __init__(self, names: Iterable[str]):
        names = tuple(str(n) for n in names)
        if not names:
            raise ValueError("alphabet must be non-empty")
        index = {name: i for i, name in enumerate(names)}
        if len(index) != len(names):
            raise ValueError(f"duplicate letter names in {names!r}")
        for name in names:
            if not name or any(ch.isspace() for ch in name):
                raise ValueError(f"invalid letter name {name!r}")
        self.names = names
        self._index = index

    @classmethod
    def range(cls, k: int) -> Alphabet:
        """Alphabet ``0, 1, ..., k-1``."""
        return cls(str(i) for i in range(k))

    def __len__(self):
        return len(self.names)

    def __iter__(self):
        return iter(self.names)

    def __contains__(self, name):
        return name in self._index

    def __eq__(self, other):
        if not isinstance(other, Alphabet):
            return NotImplemented
        return self is other or self.names == other.names

    def __hash__(self):
        return hash(self.names)

    def __repr__(self):
        return f"Alphabet({list(self.names)!r})"

    @property
    def compact(self) -> bool:
        """True when every name is a single character."""
        return all(len(n) == 1 for n in self.names)

    def id(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise ParseError(f"letter {name!r} is not in {self!r}") from None

    def name(self, letter: int) -> str:
        return self.names[letter]

    def resolve(self, letter: int | str) -> int:
        """Letter id from either an id or a name."""
        if isinstance(letter, str):
            return self.id(letter)
        if not 0 <= letter < len(self.names):
            raise ValueError(f"letter id {letter} out of range for {self!r}")
        return letter

    def word(self, letters: str | Iterable[int | str] = ()) -> Word:
        """Build a word from a string or a sequence of ids/names.

        Strings are split on whitespace when they contain any, otherwise
        read one character per letter (compact alphabets only).
        """
        if isinstance(letters, str):
            letters = tokenize(letters, self)
        return Word(tuple(self.resolve(x) for x in letters), self)

    def render(self, letters: Sequence[int]) -> str:
        if self.compact:
            return "".join(self.names[i] for i in letters)
        return " ".join(self.names[i] for i in letters)


def tokenize(text: str, alphabet: Alphabet | None = None) -> list[str]:
    text = text.strip()
    if not text or text in ("eps", "ε"):
        return []
    if any(ch.isspace() for ch in text):
        return text.split()
    if alphabet is not None and not alphabet.compact and text in alphabet:
        return [text]
    return list(text)


class Word:
    """Immutable finite word over an :class:`Alphabet`."""

    __slots__ = ("letters", "alphabet", "_hash")

    def __init__(self, letters: Iterable[int], alphabet: Alphabet):
        letters = tuple(letters)
        k = len(alphabet)
        for x in letters:
            if not (isinstance(x, int) and 0 <= x < k):
                raise ValueError(f"letter id {x!r} out of range for {alphabet!r}")
        self.letters = letters
        self.alphabet = alphabet
        self._hash = None

    @classmethod
    def _trusted(cls, letters: tuple, alphabet: Alphabet) -> Word:
        w = cls.__new__(cls)
        w.letters = letters
        w.alphabet = alphabet
        w._hash = None
        return w

    def __len__(self):
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return Word._trusted(self.letters[index], self.alphabet)
        return self.letters[index]

    def __add__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return concat(self, other)

    def __mul__(self, k: int):
        return Word._trusted(self.letters * k, self.alphabet)

    def __eq__(self, other):
        if not isinstance(other, Word):
            return NotImplemented
        return self.letters == other.letters and self.alphabet == other.alphabet

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.letters, self.alphabet.names))
        return self._hash

    def __lt__(self, other):
        # shortlex, the order used for every listing
        return (len(self.letters), self.letters) < (len(other.letters), other.letters)

    def __str__(self):
        return self.alphabet.render(self.letters)

    def __repr__(self):
        return f"Word({str(self)!r})"

    @property
    def names(self) -> list[str]:
        return [self.alphabet.names[i] for i in self.letters]


def _same_alphabet(u: Word, v: Word):
    if u.alphabet != v.alphabet:
        raise AlphabetMismatchError(f"{u.alphabet!r} != {v.alphabet!r}")


def concat(u: Word, v: Word) -> Word:
    _same_alphabet(u, v)
    return Word._trusted(u.letters + v.letters, u.alphabet)


def is_prefix(p: Word, w: Word) -> bool:
    _same_alphabet(p, w)
    return w.letters[: len(p.letters)] == p.letters


def _occurs(f: tuple, w: tuple) -> bool:
    m = len(f)
    if m == 0:
        return True
    return any(w[i : i + m] == f for i in range(len(w) - m + 1))


def is_factor(f: Word, w: Word) -> bool:
    _same_alphabet(f, w)
    return _occurs(f.letters, w.letters)


def factor_tuples(letters: Sequence[int], n: int) -> set[tuple]:
    """All factors of length at most ``n`` as raw letter tuples, ε included."""
    letters = tuple(letters)
    out = {()}
    size = len(letters)
    for length in range(1, min(n, size) + 1):
        for i in range(size - length + 1):
            out.add(letters[i : i + length])
    return out


def factors_upto(w: Word, n: int) -> set[Word]:
    if n < 0:
        raise ValueError("length bound must be non-negative")
    return {Word._trusted(t, w.alphabet) for t in factor_tuples(w.letters, n)}


def border_array(letters: Sequence) -> list[int]:
    """Failure function: ``b[i]`` is the longest proper border of ``letters[:i+1]``."""
    b = [0] * len(letters)
    k = 0
    for i in range(1, len(letters)):
        while k and letters[i] != letters[k]:
            k = b[k - 1]
        if letters[i] == letters[k]:
            k += 1
        b[i] = k
    return b


def smallest_period(letters: Sequence) -> int:
    if not letters:
        return 0
    return len(letters) - border_array(letters)[-1]


def primitive_root(w: Word) -> tuple[Word, int]:
    """Return ``(root, k)`` with ``root ** k == w`` and ``k`` maximal."""
    if not w.letters:
        raise ValueError("primitive root is undefined on the empty word")
    n = len(w.letters)
    p = smallest_period(w.letters)
    if n % p:
        p = n
    return Word._trusted(w.letters[:p], w.alphabet), n // p


def conjugates(w: Word) -> list[Word]:
    """The ``|w|`` rotations of ``w`` in rotation order, duplicates kept."""
    if not w.letters:
        raise ValueError("conjugates of the empty word are undefined")
    t = w.letters
    return [Word._trusted(t[i:] + t[:i], w.alphabet) for i in range(len(t))]
