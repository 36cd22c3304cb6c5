import json
from pathlib import Path

import pytest

from morphoword import cli
from morphoword.cli import main

DATA = Path(__file__).parent / "data"
TM = str(DATA / "tm.mor")
FIB = str(DATA / "fib.mor")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out.strip(), err


def test_gen_fixed_point(capsys):
    assert run(capsys, "gen", "--morphism", TM, "--fix", "0", "--length", "8")[:2] == (0, "01101001")
    assert run(capsys, "gen", "--morphism", "a->a b; b->a", "--fix", "a", "--length", "6")[1] == "abaaba"


def test_gen_other_sources(capsys):
    assert run(capsys, "gen", "--alpha", "1/2", "--length", "6")[1] == "010101"
    assert run(capsys, "gen", "--cycle", "ab", "--length", "5")[1] == "ababa"
    assert run(capsys, "gen", "--alpha", "(3-1*sqrt(5))/2", "--beta", "(3-1*sqrt(5))/2", "--length", "8")[1] == "01001010"


def test_gen_formats(capsys):
    code, out, _ = run(capsys, "gen", "--cycle", "ab", "--length", "3", "--format", "json")
    assert json.loads(out) == {"length": 3, "letters": ["a", "b", "a"]}
    code, out, _ = run(capsys, "gen", "--cycle", "ab", "--length", "2", "--format", "csv")
    assert out.splitlines() == ["index,letter", "0,a", "1,b"]


def test_gen_long_names_one_per_line(capsys):
    out = run(capsys, "gen", "--cycle", "x1 x2", "--length", "3")[1]
    assert out.splitlines() == ["x1", "x2", "x1"]


def test_complexity(capsys):
    code, out, _ = run(capsys, "complexity", "--cycle", "abcabc", "--max-n", "3")
    assert code == 0
    assert out.splitlines() == ["0,1,true", "1,3,true", "2,3,true", "3,3,true"]
    out = run(capsys, "complexity", "--morphism", FIB, "--fix", "0", "--max-n", "4", "--window", "200")[1]
    assert [line.split(",")[1] for line in out.splitlines()] == ["1", "2", "3", "4", "5"]


def test_classify(capsys):
    code, out, _ = run(capsys, "classify", "--morphism", "a -> a b; b -> b; c -> eps", "--verify")
    assert code == 0
    assert out.splitlines() == ["a:Growing", "b:BoundedImmortal", "c:Mortal"]
    out = run(capsys, "classify", "--morphism", TM, "--format", "json")[1]
    assert json.loads(out) == {"0": "Growing", "1": "Growing"}


def test_pushy(capsys):
    code, out, _ = run(capsys, "pushy", "--morphism", "a->a b b; b->b", "--axiom", "a", "--power", "1", "--verify")
    assert code == 0
    lines = out.splitlines()
    assert lines[:2] == ["pushy=true", "pushy(f^2)=true"]
    assert lines[2].startswith("oracle=Conclusive(True)")
    assert run(capsys, "pushy", "--morphism", TM, "--axiom", "0")[1] == "pushy=false"


def test_language(capsys):
    code, out, _ = run(capsys, "language", "--morphism", TM, "--axiom", "0", "--length", "2", "--verify")
    assert code == 0
    assert out.splitlines() == ["complete=true length_bound=2", "eps", "0", "1", "00", "01", "10", "11"]
    out = run(capsys, "language", "--morphism", TM, "--axiom", "0", "--length", "1", "--outer", "0 -> a; 1 -> a a")[1]
    assert out.splitlines() == ["complete=true length_bound=1", "eps", "a"]
    out = run(capsys, "language", "--morphism", "a -> a b; b -> eps", "--axiom", "a", "--length", "1")[1]
    assert out.splitlines()[0] == "complete=false length_bound=1 depth=8"


def test_period(capsys):
    assert run(capsys, "period", "--alpha", "2/5", "--beta", "1/3")[1] == "PurelyPeriodic(5)"
    out = run(capsys, "period", "--alpha", "(0+1*sqrt(2))", "--max-period", "20", "--window", "200")[1]
    assert out == "NoPeriodFound(max_period=20, window=200)"
    assert run(capsys, "period", "--cycle", "aab")[1] == "PurelyPeriodic(3)"
    data = json.loads(run(capsys, "period", "--morphism", TM, "--fix", "0", "--format", "json")[1])
    assert data["status"] == "NoPeriodFound"


def test_usage_errors(capsys):
    assert run(capsys, "gen", "--length", "3")[0] == 1
    assert run(capsys, "gen", "--cycle", "ab", "--alpha", "1/2", "--length", "3")[0] == 1
    assert run(capsys, "gen", "--fix", "a", "--length", "3")[0] == 1
    assert run(capsys, "classify", "--morphism", "a -> a; a -> b")[0] == 1
    assert run(capsys, "period", "--alpha", "1.5")[0] == 1
    assert run(capsys, "pushy", "--morphism", TM, "--axiom", "2")[0] == 1
    with pytest.raises(SystemExit) as exc:
        main(["gen", "--length", "-1", "--cycle", "a"])
    assert exc.value.code == 1
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 1


def test_math_errors(capsys):
    code, _, err = run(capsys, "gen", "--morphism", "a -> b a; b -> b", "--fix", "a", "--length", "3")
    assert code == 2 and "prolongable" in err


def test_verification_mismatch_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(cli, "is_pushy", lambda f, axiom: False)
    code, _, err = run(capsys, "pushy", "--morphism", "a->a b b; b->b", "--axiom", "a", "--verify", "--format", "json")
    assert code == 3
    report = json.loads(err)
    assert report["check"] == "is_pushy" and report["verdicts"]["oracle"] is True


def test_deterministic_output(capsys):
    argv = ["language", "--morphism", FIB, "--axiom", "0", "--length", "4", "--format", "json"]
    first = run(capsys, *argv)[1]
    assert all(run(capsys, *argv)[1] == first for _ in range(3))
