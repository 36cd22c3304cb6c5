"""Brute-force oracles for differential testing of the symbolic algorithms.

These unroll definitions directly and are deliberately naive.  Every verdict
is either conclusive with a replayable witness, or inconclusive with the
bounds that were searched.
"""
from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from decimal import Decimal, Inexact, localcontext
from fractions import Fraction
from typing import Any, Iterator

from ._limits import check_cells, max_cells
from .errors import MorphowordError, VerificationError
from .exact import Surd
from .morphisms import Morphism, classify_letters
from .words import Alphabet, Word, factor_tuples


@dataclass(frozen=True)
class TriState:
    conclusive: bool
    value: Any = None
    witness: Any = None
    bounds: dict = field(default_factory=dict)

    def __str__(self):
        if self.conclusive:
            return f"Conclusive({self.value})"
        return f"Inconclusive({self.bounds})"


def Conclusive(value, witness=None, **bounds) -> TriState:
    return TriState(True, value, witness, bounds)


def Inconclusive(**bounds) -> TriState:
    return TriState(False, None, None, bounds)


@dataclass
class CounterexampleReport:
    check: str
    morphism: str
    axiom: str
    verdicts: dict
    witness: Any = None

    def as_dict(self):
        return {
            "check": self.check,
            "morphism": self.morphism,
            "axiom": self.axiom,
            "verdicts": self.verdicts,
            "witness": _jsonable(self.witness),
        }

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), sort_keys=True)

    def to_text(self) -> str:
        verdicts = ", ".join(f"{k}={v}" for k, v in self.verdicts.items())
        return (
            f"counterexample [{self.check}] morphism: {self.morphism} | "
            f"axiom: {self.axiom!r} | {verdicts} | witness: {_jsonable(self.witness)}"
        )


def _jsonable(x):
    if isinstance(x, Word):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        return [_jsonable(v) for v in x]
    return x


class OracleError(MorphowordError):
    pass


def _iterate(f: Morphism, letters: tuple, limit: int):
    check_cells(len(letters) * max(f.max_image_length, 1), limit)
    out = []
    for x in letters:
        out.extend(f.images[x])
    return tuple(out)


def brute_force_factors(
    f: Morphism, axiom: Word, depth: int, maxlen: int, cell_limit: int | None = None
) -> set[Word]:
    """Union of the length-<=maxlen factors of ``f^k(axiom)`` for ``k <= depth``."""
    if depth < 0 or maxlen < 0:
        raise ValueError("depth and maxlen must be non-negative")
    limit = max_cells() if cell_limit is None else cell_limit
    w = axiom.letters
    found = factor_tuples(w, maxlen)
    for _ in range(depth):
        w = _iterate(f, w, limit)
        found |= factor_tuples(w, maxlen)
    return {Word._trusted(t, f.target) for t in found}


def stable_factor_set(
    f: Morphism,
    axiom: Word,
    maxlen: int,
    stable_rounds: int = 3,
    max_depth: int = 64,
    cell_limit: int = 2_000_000,
) -> TriState:
    """Cumulative factor set, conclusive once unchanged for ``stable_rounds`` depths."""
    w = axiom.letters
    found = factor_tuples(w, maxlen)
    steady = 0
    for k in range(1, max_depth + 1):
        if len(w) * max(f.max_image_length, 1) > cell_limit:
            return Inconclusive(depth=k - 1, cell_limit=cell_limit)
        w = _iterate(f, w, cell_limit)
        size = len(found)
        found |= factor_tuples(w, maxlen)
        steady = steady + 1 if len(found) == size else 0
        if steady >= stable_rounds:
            words = frozenset(Word._trusted(t, f.target) for t in found)
            return Conclusive(words, witness=k, depth=k)
    return Inconclusive(depth=max_depth)


def _immortal_by_support(f: Morphism) -> list[bool]:
    # a letter is mortal iff the letter support of f^|A|(a) is empty
    n = len(f.source)
    result = []
    for a in range(n):
        support = {a}
        for _ in range(n):
            support = {c for b in support for c in f.images[b]}
        result.append(bool(support))
    return result


def brute_force_bounded(f: Morphism, a: int | str, iters: int = 64, len_cap: int = 100_000) -> TriState:
    """Decide whether ``{f^k(a)}`` is finite by iterating.

    ``True`` is witnessed by ``f^j(a) == f^k(a)``.  ``False`` is witnessed by
    ``j < k`` whose immortal-letter count vectors satisfy ``v_j <= v_k``
    with ``v_j != v_k``; immortal counts then grow without bound because
    mortal letters never produce immortal ones.
    """
    if iters < 1 or len_cap < 1:
        raise ValueError("iters and len_cap must be positive")
    a = f.source.resolve(a)
    immortal = _immortal_by_support(f)
    keep = [i for i in range(len(immortal)) if immortal[i]]
    seen: dict[tuple, int] = {}
    vectors: list[tuple] = []
    w = (a,)
    for k in range(iters + 1):
        if w in seen:
            return Conclusive(True, witness=(seen[w], k), iters=iters)
        seen[w] = k
        v = tuple(w.count(i) for i in keep)
        for j, u in enumerate(vectors):
            if u != v and all(x <= y for x, y in zip(u, v)):
                return Conclusive(False, witness=(j, k), iters=iters)
        vectors.append(v)
        if k == iters or len(w) > len_cap:
            break
        w = f.apply_letters(w)
    return Inconclusive(iters=iters, len_cap=len_cap)


def certified_bounded_letters(f: Morphism, iters: int = 64, len_cap: int = 100_000) -> list[bool]:
    """Letter boundedness from :func:`classify_letters`, cross-checked by brute force."""
    classes = classify_letters(f)
    for a, cls in enumerate(classes):
        verdict = brute_force_bounded(f, a, iters, len_cap)
        if verdict.conclusive and verdict.value != cls.bounded:
            raise VerificationError(
                CounterexampleReport(
                    check="classify_letters",
                    morphism=f.rules_text(),
                    axiom=f.source.names[a],
                    verdicts={"classify": str(cls), "oracle_bounded": verdict.value},
                    witness=verdict.witness,
                )
            )
    return [cls.bounded for cls in classes]


def _bounded_runs(w: tuple, bounded: list[bool]) -> Iterator[tuple]:
    start = None
    for i, x in enumerate(w):
        if bounded[x]:
            if start is None:
                start = i
        elif start is not None:
            yield w[start:i]
            start = None
    if start is not None:
        yield w[start:]


def default_len_target(f: Morphism, axiom: Word) -> int:
    return 2 * f.max_image_length * len(f.source) + len(axiom) + 2


def brute_force_pushy(
    f: Morphism,
    axiom: Word,
    depth: int = 40,
    len_target: int | None = None,
    stable_rounds: int | None = None,
    cell_limit: int = 2_000_000,
) -> TriState:
    """Look for long bounded factors in ``f^k(axiom)``.

    ``True`` once a bounded factor of length ``>= len_target`` appears;
    ``False`` once the set of bounded factors is unchanged for
    ``stable_rounds`` consecutive depths while staying below the target.
    The default patience grows with the alphabet because bounded runs may
    sit still for a few iterations before they start to pump.
    """
    if depth < 1:
        raise ValueError("depth must be positive")
    if stable_rounds is None:
        stable_rounds = max(3, 2 * len(f.source) + 1)
    if len_target is None:
        len_target = default_len_target(f, axiom)
    bounded = certified_bounded_letters(f)
    found: set[tuple] = set()
    runs_seen: set[tuple] = set()
    steady = 0
    w = axiom.letters
    for k in range(depth + 1):
        size = len(found)
        for run in set(_bounded_runs(w, bounded)):
            if len(run) >= len_target:
                return Conclusive(True, witness=Word._trusted(run, f.source), depth=k)
            if run not in runs_seen:
                runs_seen.add(run)
                found |= factor_tuples(run, len(run))
        if k:
            steady = steady + 1 if len(found) == size else 0
            if steady >= stable_rounds:
                witness = sorted(Word._trusted(t, f.source) for t in found)
                return Conclusive(False, witness=witness, depth=k)
        if len(w) * max(f.max_image_length, 1) > cell_limit:
            return Inconclusive(depth=k, cell_limit=cell_limit, len_target=len_target)
        w = f.apply_letters(w)
    return Inconclusive(depth=depth, len_target=len_target)


def decimal_floor_oracle(x, digits: int = 50) -> int:
    """Floor via decimal expansion; refuses to answer too close to an integer."""
    if digits < 20:
        raise ValueError("digits must be at least 20")
    if isinstance(x, Surd):
        a, b, d, c = x.a, x.b, x.d, x.c
    else:
        x = Fraction(x)
        a, b, d, c = x.numerator, 0, 0, x.denominator
    magnitude = len(str(abs(a))) + len(str(abs(b) * (d + 1))) + len(str(c))
    with localcontext() as ctx:
        ctx.prec = digits + magnitude + 10
        ctx.traps[Inexact] = False
        ctx.clear_flags()
        value = (Decimal(a) + Decimal(b) * Decimal(d).sqrt()) / Decimal(c)
        exact = not ctx.flags[Inexact]
        fl = int(value.to_integral_value(rounding="ROUND_FLOOR"))
        if not exact:
            margin = Decimal(10) ** (-digits + 2)
            frac = value - fl
            if frac < margin or 1 - frac < margin:
                raise OracleError(f"{x} is within 1e-{digits - 2} of an integer; use more digits")
    return fl


def all_words(alphabet: Alphabet, max_len: int, min_len: int = 0) -> Iterator[Word]:
    k = len(alphabet)
    for length in range(min_len, max_len + 1):
        for t in itertools.product(range(k), repeat=length):
            yield Word._trusted(t, alphabet)


def canonical_words(k: int, length: int) -> Iterator[tuple]:
    """Words over ``k`` letters up to renaming (first occurrences in order)."""
    def extend(prefix, used):
        if len(prefix) == length:
            yield tuple(prefix)
            return
        for x in range(min(used + 1, k)):
            yield from extend(prefix + [x], max(used, x + 1))
    yield from extend([], 0)


def enumerate_endomorphisms(
    alphabet: Alphabet, max_len: int, non_erasing: bool = False
) -> Iterator[Morphism]:
    """Every endomorphism whose images have length ``<= max_len``."""
    images = [w.letters for w in all_words(alphabet, max_len, 1 if non_erasing else 0)]
    for combo in itertools.product(images, repeat=len(alphabet)):
        yield Morphism(alphabet, alphabet, combo)


def sample_endomorphisms(
    alphabet: Alphabet, max_len: int, count: int, seed: int = 0
) -> list[Morphism]:
    rng = random.Random(seed)
    images = [w.letters for w in all_words(alphabet, max_len)]
    return [
        Morphism(alphabet, alphabet, [rng.choice(images) for _ in alphabet])
        for _ in range(count)
    ]
