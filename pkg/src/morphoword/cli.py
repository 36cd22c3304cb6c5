"""Command-line front end.

Exit codes: 0 ok, 1 usage or parse error, 2 math-level error (not
prolongable, fuel exhausted, enumeration cap), 3 verification mismatch.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from .errors import MathError, MorphowordError, ParseError, VerificationError
from .exact import Surd, parse_exact
from .languages import (
    is_pushy,
    morphic_language_upto,
    purely_morphic_language_upto,
    pushy_power_check,
)
from .morphisms import Morphism, classify_letters
from .oracle import (
    CounterexampleReport,
    brute_force_bounded,
    brute_force_pushy,
    stable_factor_set,
)
from .streams import (
    complexity_table,
    cycle,
    detect_periodicity,
    fixed_point,
)
from .sturmian import aperiodicity_evidence, lower_mechanical_word, rational_periodicity_check
from .words import Alphabet, tokenize

EXIT_OK, EXIT_USAGE, EXIT_MATH, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(MorphowordError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read_rules(arg: str) -> str:
    if os.path.isfile(arg):
        with open(arg, encoding="utf-8") as fh:
            return fh.read()
    if "->" in arg:
        return arg
    raise ParseError(f"{arg!r} is neither a morphism file nor an inline rule list")


def load_morphism(arg: str) -> Morphism:
    """Morphism from a file path or an inline ``a->a b; b->b`` string."""
    return Morphism.parse(_read_rules(arg))


def _positive(text):
    value = int(text)
    if value <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _non_negative(text):
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("must be non-negative")
    return value


def _source(args):
    """Infinite word selected by --morphism/--fix, --cycle or --alpha/--beta."""
    chosen = [
        name
        for name, present in (
            ("--fix", args.fix is not None),
            ("--cycle", args.cycle is not None),
            ("--alpha", args.alpha is not None),
        )
        if present
    ]
    if len(chosen) != 1:
        raise UsageError("choose exactly one source: --morphism with --fix, --cycle, or --alpha/--beta")
    if args.fix is not None:
        if args.morphism is None:
            raise UsageError("--fix needs --morphism")
        return fixed_point(load_morphism(args.morphism), args.fix)
    if args.cycle is not None:
        names = tokenize(args.cycle)
        if not names:
            raise UsageError("--cycle needs a non-empty word")
        alphabet = Alphabet(dict.fromkeys(names))
        return cycle(alphabet.word(names))
    alpha = parse_exact(args.alpha)
    beta = parse_exact(args.beta) if args.beta is not None else Fraction(0)
    return lower_mechanical_word(alpha, beta)


def _emit(fmt, text_lines, header, rows, payload):
    if fmt == "json":
        return json.dumps(payload, sort_keys=True)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        return buf.getvalue().rstrip("\n")
    return "\n".join(text_lines)


def _flag(value: bool) -> str:
    return "true" if value else "false"


def cmd_gen(args):
    uu = _source(args)
    letters = [uu.alphabet.names[x] for x in uu.take_letters(args.length)]
    return _emit(
        args.format,
        [uu.dump(args.length)],
        ["index", "letter"],
        list(enumerate(letters)),
        {"length": args.length, "letters": letters},
    )


def cmd_complexity(args):
    uu = _source(args)
    rows = complexity_table(uu, args.max_n, args.window)
    return _emit(
        args.format,
        [f"{n},{p},{_flag(c)}" for n, p, c in rows],
        ["n", "p(n)", "complete"],
        [(n, p, _flag(c)) for n, p, c in rows],
        [{"n": n, "p": p, "complete": c} for n, p, c in rows],
    )


def cmd_classify(args):
    f = load_morphism(args.morphism)
    classes = classify_letters(f)
    names = f.source.names
    if args.verify:
        for a, cls in enumerate(classes):
            verdict = brute_force_bounded(f, a)
            if verdict.conclusive and verdict.value != cls.bounded:
                raise VerificationError(
                    CounterexampleReport(
                        "classify_letters", f.rules_text(), names[a],
                        {"classify": str(cls), "oracle_bounded": verdict.value},
                        verdict.witness,
                    )
                )
    return _emit(
        args.format,
        [f"{n}:{c}" for n, c in zip(names, classes)],
        ["letter", "class"],
        [(n, str(c)) for n, c in zip(names, classes)],
        {n: str(c) for n, c in zip(names, classes)},
    )


def cmd_pushy(args):
    f = load_morphism(args.morphism)
    axiom = f.source.word(args.axiom)
    verdicts = {"pushy": is_pushy(f, axiom)}
    lines = [f"pushy={_flag(verdicts['pushy'])}"]
    if args.power is not None:
        check = pushy_power_check(f, axiom, args.power)
        key = f"pushy(f^{args.power + 1})"
        verdicts[key] = check.powered
        lines.append(f"{key}={_flag(check.powered)}")
        if not check.agree:
            raise VerificationError(
                CounterexampleReport("pushy_power", f.rules_text(), args.axiom, dict(verdicts), {"p": args.power})
            )
    if args.verify:
        oracle = brute_force_pushy(f, axiom)
        lines.append(f"oracle={oracle}")
        verdicts["oracle"] = oracle.value if oracle.conclusive else None
        if oracle.conclusive and oracle.value != verdicts["pushy"]:
            raise VerificationError(
                CounterexampleReport("is_pushy", f.rules_text(), args.axiom, dict(verdicts), oracle.witness)
            )
    return _emit(
        args.format,
        lines,
        ["check", "value"],
        [(k, "" if v is None else _flag(v)) for k, v in verdicts.items()],
        verdicts,
    )


def cmd_language(args):
    f = load_morphism(args.morphism)
    axiom = f.source.word(args.axiom)
    if args.outer is not None:
        h = load_morphism_outer(args.outer, f)
        sample = morphic_language_upto(f, h, axiom, args.length, args.depth)
    else:
        sample = purely_morphic_language_upto(f, axiom, args.length, args.depth)
    words = [str(w) if len(w) else "eps" for w in sorted(sample.words)]
    if args.verify and args.outer is None and sample.complete:
        oracle = stable_factor_set(f, axiom, args.length)
        if oracle.conclusive and oracle.value != sample.words:
            raise VerificationError(
                CounterexampleReport(
                    "purely_morphic_language", f.rules_text(), args.axiom,
                    {"sample_size": len(sample.words), "oracle_size": len(oracle.value)},
                    sorted(oracle.value.symmetric_difference(sample.words)),
                )
            )
    header = f"complete={_flag(sample.complete)} length_bound={sample.length_bound}"
    if sample.depth is not None:
        header += f" depth={sample.depth}"
    return _emit(
        args.format,
        [header, *words],
        ["word", "length", "complete"],
        [(w, 0 if w == "eps" else len(v), _flag(sample.complete)) for w, v in zip(words, sorted(sample.words))],
        {"complete": sample.complete, "length_bound": sample.length_bound, "depth": sample.depth, "words": words},
    )


def load_morphism_outer(arg: str, inner: Morphism) -> Morphism:
    """Outer morphism: rules for every inner letter, images over any names."""
    text = _read_rules(arg)
    rules = {}
    for raw in text.replace(";", "\n").splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "->" not in line:
            raise ParseError(f"expected 'name -> tokens', got {raw.strip()!r}")
        lhs, rhs = (part.strip() for part in line.split("->", 1))
        tokens = rhs.split()
        rules[lhs] = [] if tokens == ["eps"] else tokens
    missing = [x for x in inner.source if x not in rules]
    if missing:
        raise ParseError(f"outer morphism has no rule for {missing}")
    target_names = dict.fromkeys(t for x in inner.source for t in rules[x])
    target = Alphabet(target_names) if target_names else Alphabet(["_"])
    return Morphism(inner.source, target, [rules[x] for x in inner.source])


def cmd_period(args):
    if args.alpha is not None and args.fix is None and args.cycle is None:
        alpha = parse_exact(args.alpha)
        beta = parse_exact(args.beta) if args.beta is not None else Fraction(0)
        if isinstance(alpha, Surd):
            report = aperiodicity_evidence(alpha, beta, args.max_period, args.window)
        else:
            q = Fraction(alpha).denominator
            window = max(args.window, 4 * q)
            report = rational_periodicity_check(alpha, beta, window)
    else:
        report = detect_periodicity(_source(args), args.max_period, args.window)
    d = report.as_dict()
    return _emit(args.format, [str(report)], list(d), [list(d.values())], d)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "csv", "json"], default="text")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--morphism", help="rule file or inline 'a->a b; b->b'")
    source.add_argument("--fix", metavar="LETTER", help="fixed point of --morphism from LETTER")
    source.add_argument("--cycle", metavar="WORD", help="periodic word WORD WORD ...")
    source.add_argument("--alpha", help="slope of a lower mechanical word")
    source.add_argument("--beta", help="intercept of a lower mechanical word (default 0)")

    parser = _Parser(prog="morphoword", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", parents=[common, source], help="print a prefix")
    p.add_argument("--length", type=_non_negative, required=True)
    p.set_defaults(run=cmd_gen)

    p = sub.add_parser("complexity", parents=[common, source], help="factor complexity table")
    p.add_argument("--max-n", type=_non_negative, default=10)
    p.add_argument("--window", type=_positive, default=None)
    p.set_defaults(run=cmd_complexity)

    p = sub.add_parser("classify", parents=[common], help="mortal/bounded/growing letters")
    p.add_argument("--morphism", required=True)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(run=cmd_classify)

    p = sub.add_parser("pushy", parents=[common], help="pushy verdict")
    p.add_argument("--morphism", required=True)
    p.add_argument("--axiom", required=True)
    p.add_argument("--power", type=_non_negative, default=None, help="also check f^(p+1)")
    p.add_argument("--verify", action="store_true")
    p.set_defaults(run=cmd_pushy)

    p = sub.add_parser("language", parents=[common], help="(purely) morphic language window")
    p.add_argument("--morphism", required=True)
    p.add_argument("--axiom", required=True)
    p.add_argument("--length", type=_non_negative, required=True)
    p.add_argument("--outer", help="outer morphism h for the morphic language")
    p.add_argument("--depth", type=_non_negative, default=None)
    p.add_argument("--verify", action="store_true")
    p.set_defaults(run=cmd_language)

    p = sub.add_parser("period", parents=[common, source], help="periodicity report")
    p.add_argument("--max-period", type=_positive, default=50)
    p.add_argument("--window", type=_positive, default=500)
    p.set_defaults(run=cmd_period)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out = args.run(args)
    except VerificationError as exc:
        report = exc.report
        print(report.to_json() if args.format == "json" else report.to_text(), file=sys.stderr)
        return EXIT_VERIFY
    except MathError as exc:
        print(f"morphoword: {exc}", file=sys.stderr)
        return EXIT_MATH
    except (MorphowordError, ValueError, OSError) as exc:
        print(f"morphoword: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
