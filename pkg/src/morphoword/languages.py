"""Factorial languages, purely morphic and morphic languages, pushy systems.

Every language object here is a window: the words of length at most ``n``.
A sample is ``complete`` only when the enumeration provably reaches every
element of the language within that window.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from ._limits import check_cells, max_cells
from .errors import AlphabetMismatchError
from .morphisms import (
    LetterClass,
    Morphism,
    _reachability,
    _require_endomorphism,
    occurrence_successors,
    power,
)
from .words import Word, factor_tuples


@dataclass(frozen=True)
class LanguageSample:
    words: frozenset
    length_bound: int
    complete: bool
    depth: int | None = None  # iteration depth used by non-certified fallbacks

    def __contains__(self, w):
        return w in self.words

    def __len__(self):
        return len(self.words)

    def __iter__(self):
        return iter(sorted(self.words))

    def of_length(self, k: int) -> list[Word]:
        return sorted(w for w in self.words if len(w) == k)


def is_factorial(words: Iterable[Word]) -> bool:
    words = set(words)
    for w in words:
        for t in factor_tuples(w.letters, len(w)):
            if Word._trusted(t, w.alphabet) not in words:
                return False
    return True


def factor_closure(words: Iterable[Word]) -> set[Word]:
    out = set()
    for w in words:
        out.update(Word._trusted(t, w.alphabet) for t in factor_tuples(w.letters, len(w)))
    return out


def default_depth(f: Morphism) -> int:
    return max(8, 2 * len(f.source))


def _windowed_fixpoint(f: Morphism, seeds: set[tuple], n: int) -> set[tuple]:
    # Smallest set containing seeds, closed under v -> Fac_{<=n}(f(v)).
    seen = set(seeds)
    stack = list(seeds)
    while stack:
        v = stack.pop()
        for x in factor_tuples(f.apply_letters(v), n):
            if x not in seen:
                seen.add(x)
                stack.append(x)
    return seen


def _iterates(f: Morphism, letters: tuple, depth: int, limit: int):
    """Yield ``f^k(letters)`` for ``k = 0..depth`` under the size cap."""
    w = letters
    yield w
    for _ in range(depth):
        check_cells(len(w) * max(f.max_image_length, 1), limit)
        w = f.apply_letters(w)
        yield w


def purely_morphic_language_upto(
    f: Morphism,
    axiom: Word,
    n: int,
    depth: int | None = None,
    cell_limit: int | None = None,
) -> LanguageSample:
    """Words of length <= n in the factor closure of ``{f^k(axiom)}``.

    Exact (``complete=True``) for non-erasing ``f``.  Erasing morphisms fall
    back to unrolling ``depth`` iterations, which only gives a lower
    approximation.
    """
    _require_endomorphism(f)
    if axiom.alphabet != f.source:
        raise AlphabetMismatchError("axiom is not over the morphism alphabet")
    if n < 0:
        raise ValueError("length bound must be non-negative")
    alphabet = f.source
    if not f.is_erasing:
        found = _windowed_fixpoint(f, factor_tuples(axiom.letters, n), n)
        return LanguageSample(
            frozenset(Word._trusted(t, alphabet) for t in found), n, True
        )
    depth = default_depth(f) if depth is None else depth
    limit = max_cells() if cell_limit is None else cell_limit
    found = set()
    for w in _iterates(f, axiom.letters, depth, limit):
        found |= factor_tuples(w, n)
    return LanguageSample(
        frozenset(Word._trusted(t, alphabet) for t in found), n, False, depth
    )


def morphic_language_upto(
    f: Morphism,
    h: Morphism,
    axiom: Word,
    n: int,
    depth: int | None = None,
    cell_limit: int | None = None,
) -> LanguageSample:
    """Window of the factor closure of ``h`` applied to the purely morphic language."""
    _require_endomorphism(f)
    if h.source != f.source:
        raise AlphabetMismatchError("outer morphism must act on the inner alphabet")
    if n < 0:
        raise ValueError("length bound must be non-negative")
    target = h.target
    if not f.is_erasing and not h.is_erasing:
        inner = purely_morphic_language_upto(f, axiom, n)
        found = set()
        for v in inner.words:
            found |= factor_tuples(h.apply_letters(v.letters), n)
        return LanguageSample(frozenset(Word._trusted(t, target) for t in found), n, True)
    if axiom.alphabet != f.source:
        raise AlphabetMismatchError("axiom is not over the morphism alphabet")
    depth = default_depth(f) if depth is None else depth
    limit = max_cells() if cell_limit is None else cell_limit
    found = set()
    for w in _iterates(f, axiom.letters, depth, limit):
        found |= factor_tuples(h.apply_letters(w), n)
    return LanguageSample(frozenset(Word._trusted(t, target) for t in found), n, False, depth)


def is_bounded_word(f: Morphism, w: Word) -> bool:
    """Whether the purely morphic language generated by ``w`` is finite."""
    _require_endomorphism(f)
    classes = f.classes
    return all(classes[x].bounded for x in w.letters)


def reachable_letters(f: Morphism, axiom: Word) -> set[int]:
    """Letters occurring in some ``f^k(axiom)``."""
    reach = _reachability(occurrence_successors(f))
    out = set()
    for x in axiom.letters:
        out |= reach[x]
    return out


def _extremal_graph(f: Morphism, growing: set[int], leftmost: bool):
    """Map each growing letter to its outermost growing letter in ``f(g)``.

    Returns ``{g: (successor, label_has_immortal_letter)}`` where the label is
    the bounded block between the image border and that successor.
    """
    classes = f.classes
    graph = {}
    for g in growing:
        img = f.images[g]
        positions = range(len(img)) if leftmost else range(len(img) - 1, -1, -1)
        for i in positions:
            if img[i] in growing:
                label = img[:i] if leftmost else img[i + 1 :]
                immortal = any(classes[x] is LetterClass.BOUNDED for x in label)
                graph[g] = (img[i], immortal)
                break
    return graph


def _pumps(graph, start: int) -> bool:
    # Walk the functional graph to its cycle; pump iff a cycle edge carries
    # an immortal bounded label.
    order = {}
    path = []
    v = start
    while v not in order:
        order[v] = len(path)
        path.append(v)
        v = graph[v][0]
    return any(graph[u][1] for u in path[order[v] :])


def is_pushy(f: Morphism, axiom: Word) -> bool:
    """Whether the purely morphic language of ``axiom`` has infinitely many bounded words."""
    _require_endomorphism(f)
    classes = f.classes
    growing = {a for a, c in enumerate(classes) if c is LetterClass.GROWING}
    starts = growing & reachable_letters(f, axiom)
    if not starts:
        return False
    for leftmost in (True, False):
        graph = _extremal_graph(f, growing, leftmost)
        if any(_pumps(graph, g) for g in sorted(starts)):
            return True
    return False


class PowerCheck(NamedTuple):
    base: bool
    powered: bool

    @property
    def agree(self) -> bool:
        return self.base == self.powered


def pushy_power_check(f: Morphism, axiom: Word, p: int, strict: bool = False) -> PowerCheck:
    """Pushiness under ``f`` and under ``f^(p+1)``; the two always coincide.

    With ``strict=True`` a disagreement raises :class:`VerificationError`
    carrying a counterexample report.
    """
    if p < 0:
        raise ValueError("p must be non-negative")
    result = PowerCheck(is_pushy(f, axiom), is_pushy(power(f, p + 1), axiom))
    if strict and not result.agree:
        from .errors import VerificationError
        from .oracle import CounterexampleReport

        raise VerificationError(
            CounterexampleReport(
                check="pushy_power",
                morphism=f.rules_text(),
                axiom=str(axiom),
                verdicts={"pushy(f)": result.base, f"pushy(f^{p + 1})": result.powered},
                witness={"p": p},
            )
        )
    return result
