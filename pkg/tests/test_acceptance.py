"""Acceptance gate; each test prints one PASS/FAIL line (run with ``-s`` to see them)."""
import random
import time
from fractions import Fraction
from functools import lru_cache

import pytest

from morphoword import (
    Alphabet,
    Morphism,
    aperiodicity_evidence,
    classify_letters,
    cycle,
    exact_floor,
    factor_complexity,
    fixed_point,
    is_prolongable,
    is_pushy,
    lower_mechanical_word,
    make_surd,
    morph_image,
    power,
    primitive_root,
    purely_morphic_language_upto,
    word_language_upto,
)
from morphoword.exact import Surd
from morphoword.oracle import (
    OracleError,
    all_words,
    brute_force_bounded,
    brute_force_pushy,
    canonical_words,
    decimal_floor_oracle,
    enumerate_endomorphisms,
    sample_endomorphisms,
    stable_factor_set,
)
from morphoword.sturmian import rational_periodicity_check

pytestmark = pytest.mark.acceptance

TM = Morphism.parse("0 -> 0 1; 1 -> 1 0")
FIB = Morphism.parse("0 -> 0 1; 1 -> 0")


def report(name, ok, detail):
    print(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")
    assert ok, detail


@lru_cache(maxsize=None)
def morphism_space():
    """(f, axioms): every 2-letter map with images <= 3, plus 500 sampled 3-letter maps with images <= 2."""
    ab, abc = Alphabet("ab"), Alphabet("abc")
    two = [(f, list(all_words(ab, 2))) for f in enumerate_endomorphisms(ab, 3)]
    three = [(f, list(all_words(abc, 2))) for f in sample_endomorphisms(abc, 2, 500, seed=1)]
    return two + three


def test_periodic_factor_complexity():
    start = time.perf_counter()
    checked, bad = 0, []
    for k in (1, 2, 3):
        alphabet = Alphabet("abc"[:k])
        for length in range(1, 9):
            for t in canonical_words(k, length):
                if max(t) != k - 1:
                    continue  # counted under the smaller alphabet
                w = alphabet.word([alphabet.names[x] for x in t])
                r = len(primitive_root(w)[0])
                uu = cycle(w)
                for n in range(13):
                    p = factor_complexity(uu, n)
                    checked += 1
                    if p > r or (n >= r and p != r):
                        bad.append((str(w), n, p, r))
    elapsed = time.perf_counter() - start
    report(
        "pperiodic_fac_comp",
        not bad and elapsed < 60,
        f"{checked} (w, n) pairs, {len(bad)} violations, {elapsed:.1f}s (limit 60s)",
    )


def test_pushy_invariant_under_powers():
    start = time.perf_counter()
    checked, bad = 0, []
    for f, axioms in morphism_space():
        powers = [power(f, p + 1) for p in range(3)]
        for w in axioms:
            base = is_pushy(f, w)
            for p, g in enumerate(powers):
                checked += 1
                if is_pushy(g, w) != base:
                    bad.append((f.rules_text(), str(w), p))
    elapsed = time.perf_counter() - start
    report(
        "pushy_strong_shift",
        not bad and elapsed < 300,
        f"{checked} checks, {len(bad)} mismatches, {elapsed:.1f}s (limit 300s)",
    )


def test_bounded_letters_invariant_under_powers():
    checked, bad = 0, []
    for f, _ in morphism_space():
        base = [c.bounded for c in classify_letters(f)]
        for p in range(3):
            checked += 1
            if [c.bounded for c in classify_letters(power(f, p + 1))] != base:
                bad.append((f.rules_text(), p))
    report("bounded_pow_bounded", not bad, f"{checked} checks, {len(bad)} mismatches")


def test_oracle_agreement():
    stats = {"classify": [0, 0, 0], "pushy": [0, 0, 0], "language": [0, 0, 0]}
    bad = []

    def tally(key, verdict, ours, context):
        if not verdict.conclusive:
            stats[key][2] += 1
        elif verdict.value == ours:
            stats[key][0] += 1
        else:
            stats[key][1] += 1
            bad.append((key, *context))

    for f, axioms in morphism_space():
        for a, cls in enumerate(classify_letters(f)):
            tally("classify", brute_force_bounded(f, a), cls.bounded, (f.rules_text(), a))
        for w in axioms:
            tally("pushy", brute_force_pushy(f, w), is_pushy(f, w), (f.rules_text(), str(w)))
            if f.is_erasing:
                continue
            for n in range(6):
                ours = purely_morphic_language_upto(f, w, n).words
                tally("language", stable_factor_set(f, w, n), ours, (f.rules_text(), str(w), n))
    detail = "; ".join(f"{k} agree={a} disagree={d} inconclusive={i}" for k, (a, d, i) in stats.items())
    report("oracle_agreement", not bad, detail + (f"; first={bad[0]}" if bad else ""))


def _ratchet_window(f, a, max_n=6, limit=10**4):
    uu = fixed_point(f, a)
    first = f.source.word([f.source.names[a]])
    targets = {n: purely_morphic_language_upto(f, first, n).words for n in range(max_n + 1)}
    window = 16
    while True:
        if all(word_language_upto(uu, n, window).words == targets[n] for n in targets):
            return window
        if window >= limit:
            return None
        window = min(2 * window, limit)


def test_window_language_reaches_purely_morphic():
    ab = Alphabet("ab")
    cases = [(TM, 0), (FIB, 0)]
    cases += [
        (f, a)
        for f in enumerate_endomorphisms(ab, 3, non_erasing=True)
        for a in range(2)
        if is_prolongable(f, a)
    ]
    windows = [_ratchet_window(f, a) for f, a in cases]
    failed = [cases[i] for i, w in enumerate(windows) if w is None]
    worst = max(w for w in windows if w is not None)
    report(
        "wlan_pmor",
        not failed,
        f"{len(cases)} fixed points, {len(failed)} never matched by N=10^4, worst N={worst}",
    )


@pytest.mark.parametrize("name, f", [("TM", TM), ("Fib", FIB)])
def test_fixed_point_equation(name, f):
    k = 10**4
    uu = fixed_point(f, "0")
    ok = morph_image(f, uu).take(k) == uu.take(k)
    report(f"fixed_point_equation[{name}]", ok, f"first {k} letters of f(u) and u")


def test_rational_slopes_are_periodic():
    start = time.perf_counter()
    checked, bad = 0, []
    for q in range(1, 31):
        for p in range(-q, 2 * q + 1):
            alpha = Fraction(p, q)
            if alpha.denominator != q:
                continue
            for beta in (Fraction(0), Fraction(1, 3), Fraction(1, 2)):
                r = rational_periodicity_check(alpha, beta)
                checked += 1
                if r.status != "PurelyPeriodic" or q % r.period:
                    bad.append((str(alpha), str(beta), str(r)))
    elapsed = time.perf_counter() - start
    report(
        "lmw_rat_per",
        not bad and elapsed < 60,
        f"{checked} (alpha, beta) pairs with alpha in [-1, 2], {len(bad)} failures, {elapsed:.1f}s (limit 60s)",
    )


def test_irrational_slopes_show_no_period():
    slopes = {
        "(3-sqrt5)/2": make_surd(3, -1, 5, 2),
        "sqrt2-1": make_surd(-1, 1, 2),
        "(2-sqrt2)/2": make_surd(2, -1, 2, 2),
    }
    bad = []
    for name, alpha in slopes.items():
        for beta in (Fraction(0), alpha, Fraction(1, 7)):
            r = aperiodicity_evidence(alpha, beta, max_period=50, window=500)
            if r.periodic:
                bad.append((name, str(beta), str(r)))
    report("lmw_per_rat", not bad, f"9 (alpha, beta) pairs, {len(bad)} with a period <= 50 in 500 letters")


def test_mechanical_word_is_fibonacci():
    alpha = make_surd(3, -1, 5, 2)
    mech = lower_mechanical_word(alpha, alpha)
    fib = fixed_point(FIB, "0")
    same = [str(v) for v in mech.values_prefix(200)] == [FIB.source.names[x] for x in fib.take_letters(200)]
    complexities = [factor_complexity(mech, n, 1000) for n in range(11)]
    ok = same and complexities == [n + 1 for n in range(11)]
    report("sturmian_fibonacci", ok, f"prefix 200 equal={same}, p(0..10)={complexities}")


def _random_surd(rng):
    while True:
        d = rng.randint(2, 1000)
        if exact_floor(make_surd(0, 1, d)) ** 2 != d:
            break
    b = 0
    while b == 0:
        b = rng.randint(-10**6, 10**6)
    return make_surd(rng.randint(-10**6, 10**6), b, d, rng.randint(1, 1000))


def test_exact_floor_matches_decimal():
    rng = random.Random(20261016)
    bad, retried = [], 0
    for _ in range(1000):
        x = _random_surd(rng)
        try:
            expected = decimal_floor_oracle(x, 50)
        except OracleError:
            retried += 1
            expected = decimal_floor_oracle(x, 400)
        if exact_floor(x) != expected:
            bad.append(repr(x))
    report("exact_floor_vs_decimal", not bad, f"1000 surds, {len(bad)} mismatches, {retried} needed extra digits")


def test_telescoping_sums():
    rng = random.Random(7)
    bad = []
    for i in range(1000):
        if i % 2:
            x = _random_surd(rng)
            alpha = x * Fraction(1, 10**3)
            beta = Fraction(rng.randint(-10**3, 10**3), rng.randint(1, 100))
            if isinstance(alpha, Surd) and rng.random() < 0.5:
                beta = beta + alpha  # intercept sharing the slope's radicand
        else:
            alpha = Fraction(rng.randint(-10**4, 10**4), rng.randint(1, 10**3))
            beta = Fraction(rng.randint(-10**4, 10**4), rng.randint(1, 10**3))
        n = rng.randint(0, 1000)
        vals = lower_mechanical_word(alpha, beta).values_prefix(n)
        if sum(vals) != exact_floor(n * alpha + beta) - exact_floor(beta):
            bad.append((str(alpha), str(beta), n))
    report("telescoping", not bad, f"1000 (alpha, beta, n) triples, {len(bad)} mismatches")
