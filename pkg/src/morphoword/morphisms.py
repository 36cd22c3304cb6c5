"""Morphisms between free monoids and D0L growth classification."""
from __future__ import annotations

import enum
from collections import Counter
from functools import cached_property
from typing import Mapping, Sequence

import numpy as np

from .errors import AlphabetMismatchError, ParseError
from .words import Alphabet, Word, tokenize


class LetterClass(enum.Enum):
    MORTAL = "Mortal"
    BOUNDED = "BoundedImmortal"
    GROWING = "Growing"

    def __str__(self):
        return self.value

    @property
    def bounded(self) -> bool:
        return self is not LetterClass.GROWING


class Morphism:
    """Letter-to-word map from ``source`` to words over ``target``.

    ``images[i]`` is the image of the letter with id ``i`` as a tuple of
    target ids (the core of the morphism).
    """

    def __init__(self, source: Alphabet, target: Alphabet, images: Sequence):
        if len(images) != len(source):
            raise ValueError(
                f"morphism needs {len(source)} images, got {len(images)}"
            )
        resolved = []
        for img in images:
            if isinstance(img, Word):
                if img.alphabet != target:
                    raise AlphabetMismatchError("image is not over the target alphabet")
                resolved.append(img.letters)
            else:
                resolved.append(target.word(img).letters)
        self.source = source
        self.target = target
        self.images: tuple[tuple[int, ...], ...] = tuple(resolved)

    @classmethod
    def from_dict(
        cls,
        rules: Mapping[str, str | Sequence[str]],
        alphabet: Alphabet | None = None,
        target: Alphabet | None = None,
    ) -> Morphism:
        """Build from ``{"a": "ab", "b": "b"}``; endomorphism unless ``target`` given."""
        if alphabet is None:
            alphabet = Alphabet(rules)
        target = alphabet if target is None else target
        missing = [x for x in alphabet if x not in rules]
        if missing:
            raise ParseError(f"no image given for {missing}")
        return cls(alphabet, target, [rules[x] for x in alphabet])

    @classmethod
    def identity(cls, alphabet: Alphabet) -> Morphism:
        return cls(alphabet, alphabet, [(i,) for i in range(len(alphabet))])

    @classmethod
    def parse(cls, text: str) -> Morphism:
        """Parse the rule format ``name -> token token ...``.

        Rules are separated by newlines or ``;``; ``#`` starts a comment and
        ``eps`` denotes the empty image.  The alphabet is every name that
        appears, in order of first appearance.
        """
        order: dict[str, None] = {}
        rules: dict[str, list[str]] = {}
        for raw in text.replace(";", "\n").splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "->" not in line:
                raise ParseError(f"expected 'name -> tokens', got {raw.strip()!r}")
            lhs, rhs = (part.strip() for part in line.split("->", 1))
            if not lhs or len(lhs.split()) != 1:
                raise ParseError(f"left-hand side must be one letter name: {raw.strip()!r}")
            if lhs == "eps":
                raise ParseError("'eps' is reserved for the empty image")
            if lhs in rules:
                raise ParseError(f"duplicate rule for {lhs!r}")
            tokens = rhs.split()
            if tokens == ["eps"]:
                tokens = []
            elif "eps" in tokens:
                raise ParseError(f"'eps' must stand alone: {raw.strip()!r}")
            order.setdefault(lhs)
            for t in tokens:
                order.setdefault(t)
            rules[lhs] = tokens
        if not order:
            raise ParseError("no rules given")
        missing = [x for x in order if x not in rules]
        if missing:
            raise ParseError(f"no rule for letter(s) {missing}")
        alphabet = Alphabet(order)
        return cls(alphabet, alphabet, [rules[x] for x in alphabet])

    def __eq__(self, other):
        if not isinstance(other, Morphism):
            return NotImplemented
        return (
            self.source == other.source
            and self.target == other.target
            and self.images == other.images
        )

    def __hash__(self):
        return hash((self.source, self.target, self.images))

    def __repr__(self):
        return f"Morphism({self.rules_text()!r})"

    def __call__(self, w: Word) -> Word:
        return apply(self, w)

    def rules_text(self, sep: str = "; ") -> str:
        parts = []
        for name, img in zip(self.source.names, self.images):
            rhs = " ".join(self.target.names[i] for i in img) if img else "eps"
            parts.append(f"{name} -> {rhs}")
        return sep.join(parts)

    @property
    def is_endomorphism(self) -> bool:
        return self.source == self.target

    @property
    def is_erasing(self) -> bool:
        return any(not img for img in self.images)

    @property
    def max_image_length(self) -> int:
        return max(len(img) for img in self.images)

    def image(self, letter: int | str) -> Word:
        return Word._trusted(self.images[self.source.resolve(letter)], self.target)

    def apply_letters(self, letters: Sequence[int]) -> tuple:
        images = self.images
        out: list[int] = []
        for x in letters:
            out.extend(images[x])
        return tuple(out)

    @cached_property
    def classes(self) -> tuple[LetterClass, ...]:
        return tuple(classify_letters(self))


def apply(f: Morphism, w: Word) -> Word:
    if w.alphabet != f.source:
        raise AlphabetMismatchError(f"word over {w.alphabet!r}, morphism source {f.source!r}")
    return Word._trusted(f.apply_letters(w.letters), f.target)


def compose(f: Morphism, g: Morphism) -> Morphism:
    """``f ∘ g``: apply ``g`` first."""
    if g.target != f.source:
        raise AlphabetMismatchError("compose(f, g) needs g.target == f.source")
    return Morphism(g.source, f.target, [f.apply_letters(img) for img in g.images])


def power(f: Morphism, k: int) -> Morphism:
    if k < 0:
        raise ValueError("power exponent must be non-negative")
    _require_endomorphism(f)
    result = Morphism.identity(f.source)
    for _ in range(k):
        result = compose(f, result)
    return result


def incidence_matrix(f: Morphism) -> np.ndarray:
    """``M[b, a]`` counts occurrences of ``b`` in ``f(a)``."""
    m = np.zeros((len(f.target), len(f.source)), dtype=np.int64)
    for a, img in enumerate(f.images):
        for b in img:
            m[b, a] += 1
    return m


def _require_endomorphism(f: Morphism):
    if not f.is_endomorphism:
        raise AlphabetMismatchError("operation needs an endomorphism")


def mortal_letters(f: Morphism) -> list[bool]:
    _require_endomorphism(f)
    mortal = [False] * len(f.source)
    changed = True
    while changed:
        changed = False
        for a, img in enumerate(f.images):
            if not mortal[a] and all(mortal[c] for c in img):
                mortal[a] = changed = True
    return mortal


def _reachability(succ: Mapping[int, Sequence[int]]) -> dict[int, set[int]]:
    """Reflexive-transitive closure of a successor relation."""
    reach = {}
    for v in succ:
        seen = {v}
        stack = [v]
        while stack:
            for w in succ[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        reach[v] = seen
    return reach


def classify_letters(f: Morphism) -> list[LetterClass]:
    """Mortal / bounded-immortal / growing class of each letter, indexed by id.

    Growth is read off the occurrence graph restricted to immortal letters:
    a letter grows iff it reaches a strongly connected component that has an
    internal edge and a vertex emitting at least two immortal letters.
    """
    mortal = mortal_letters(f)
    immortal = [a for a in range(len(mortal)) if not mortal[a]]
    out = {b: Counter(c for c in f.images[b] if not mortal[c]) for b in immortal}
    reach = _reachability({b: list(out[b]) for b in immortal})

    pumping = set()
    for v in immortal:
        component = {w for w in reach[v] if v in reach[w]}
        has_edge = len(component) > 1 or v in out[v]
        if has_edge and any(sum(out[w].values()) >= 2 for w in component):
            pumping.add(v)

    classes = []
    for a in range(len(mortal)):
        if mortal[a]:
            classes.append(LetterClass.MORTAL)
        elif reach[a] & pumping:
            classes.append(LetterClass.GROWING)
        else:
            classes.append(LetterClass.BOUNDED)
    return classes


def is_prolongable(f: Morphism, a: int | str) -> bool:
    """``f(a) = a s`` with ``s`` non-empty and ``|f^k(a)|`` unbounded."""
    if not f.is_endomorphism:
        return False
    a = f.source.resolve(a)
    img = f.images[a]
    return len(img) >= 2 and img[0] == a and f.classes[a] is LetterClass.GROWING


def occurrence_successors(f: Morphism) -> dict[int, set[int]]:
    return {a: set(img) for a, img in enumerate(f.images)}
