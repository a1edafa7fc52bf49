import io
import json
import subprocess
import sys
from fractions import Fraction as F

import pytest
from hypothesis import given, settings

from conftest import e, mono, rngs, tau
from hahnseries import DomainError, Series, UsageError
from hahnseries.cli import main
from hahnseries.frontend import EvalContext, ParseError, evaluate, evaluate_text, parse, parse_spec, unparse
from hahnseries.frontend.parser import Apply, BinOp, Mono, Rat
from hahnseries.selftest import _random_expression

CORPUS = [
    "0",
    "1",
    "3/2",
    "t",
    "t^{0}",
    "t^{1*e(0)}",
    "t^{-1*e(0)}",
    "t^{e(0)}",
    "t^{2*e(0) - 1*tau(0)}",
    "t^{1/2*e(1/3)}",
    "t^{-e(-2) + 3*e(4)}",
    "t^{tau(0)}",
    "t^{-tau(-1) + e(0)}",
    "t^{1*e(0)} + 3/2",
    "1 - t",
    "1 + t + t^2",
    "(1 + t) * (1 - t)",
    "1 / (1 - t)",
    "2 * 3 / 4",
    "1 - 2 - 3",
    "1 - (2 - 3)",
    "(1 - 2) - 3",
    "1 / 2 / 3",
    "1 / (2 / 3)",
    "-t",
    "--t",
    "-(1 + t)",
    "-t^2",
    "(-t)^2",
    "t^-1",
    "(1 + t)^3",
    "(1 + t)^-2",
    "((t))",
    "exp(t)",
    "exp(0)",
    "log(1 + t)",
    "inv(1 - t)",
    "D(t)",
    "D(exp(t))",
    "exp(log(1 + t))",
    "log(exp(t^{1/2*e(0)}))",
    "exp(t) * exp(2*t)",
    "exp(t)^2 - exp(2 * t)",
    "D(t * t) - 2 * t * D(t)",
    "t^{-1*e(0)} + 3",
    "2*t^{-1*e(0)} - 1",
    "inv(t^{-1*e(0)} + 1)",
    "1/3 * t^{2*e(1)} + 5/7",
    "exp(t + t^{e(1)}) - 1",
    "log(1 - t^{e(0) - e(1)})",
    "  t ^ { 2 * e ( 0 ) }  ",
    "D(log(1 + t)) * (1 + t)",
    "(t + 1) * (t - 1) / (t + 2)",
]

MALFORMED = [
    "",
    "log(",
    "1 +",
    "t^{",
    "t^{2*q(0)}",
    "foo(t)",
    "(1",
    "1 */ 2",
    "t^{e(0)",
    "3 $ 4",
    "exp()",
    "1 2",
    "t^1.5",
    "t^{e()}",
    "exp t",
    ")",
    "1/0",
]


def test_corpus_is_large_enough():
    assert len(CORPUS) >= 50


@pytest.mark.parametrize("text", CORPUS)
def test_round_trip(text):
    tree = parse(text)
    printed = unparse(tree)
    assert parse(printed) == tree
    assert unparse(parse(printed)) == printed


@settings(max_examples=100, deadline=None)
@given(rngs)
def test_random_round_trip(rng):
    tree = parse(_random_expression(rng, 4))
    assert parse(unparse(tree)) == tree


@pytest.mark.parametrize("text", MALFORMED)
def test_malformed_inputs_have_positions(text):
    with pytest.raises(ParseError) as info:
        parse(text)
    err = info.value
    assert err.line >= 1 and err.column >= 1
    assert err.position == (err.line, err.column)


def test_diagnostic_details():
    with pytest.raises(ParseError) as info:
        parse("1 +\n  foo(t)")
    assert (info.value.line, info.value.column) == (2, 3)
    with pytest.raises(ParseError) as info:
        parse("log(")
    assert "t" in info.value.expected


def test_tree_shapes():
    tree = parse("t^{1*e(0)} + 3/2")
    assert isinstance(tree, BinOp) and tree.op == "+"
    assert tree.right == Rat(F(3, 2))
    assert parse("exp(t^{1*e(0)})") == Apply("exp", Mono((("e", F(1), F(0)),)))
    assert parse("t^{2*e(0) - 1*tau(0)}") == Mono((("e", F(2), F(0)), ("tau", F(-1), F(0))))
    assert parse("t") == parse("t^{1*e(0)}")


def test_evaluation_examples():
    assert evaluate_text("(1 + t^{1*e(0)}) * (1 - t^{1*e(0)})") == 1 - mono(e(0, 2))
    assert evaluate_text("D(t^{1*e(0)})", parse_spec("case1:shift=1")) == mono(e(0) - e(1))
    assert evaluate_text("exp(0)") == Series.one()
    assert evaluate_text("t^{tau(0)}", parse_spec("el:shift=1")) == mono(tau(0))
    assert evaluate_text("1/(1 - t)", depth=2).guarantee == e(0, 3)


def test_evaluation_errors_carry_positions():
    with pytest.raises(DomainError) as info:
        evaluate_text("1 + D(t)")
    assert info.value.position == (1, 5)
    with pytest.raises(DomainError):
        evaluate_text("t^{tau(0)}")
    with pytest.raises(ZeroDivisionError):
        evaluate(parse("1/(t - t)"), EvalContext())


@pytest.mark.parametrize(
    "text",
    ["case1:shift=2", "el", "case2max:f=affine(1,0),phiM=10", "case2max:f=table(0:1,1:2),phiM=1",
     "case2cof:f=affine(1,1),seq=powers2", "case2cof:f=affine(2,1),seq=arith(0,3)"],
)
def test_spec_strings(text):
    spec = parse_spec(text)
    assert parse_spec(spec.describe()) == spec


@pytest.mark.parametrize(
    "text",
    ["case3", "case1:shift=0", "case2max:f=affine(1,0)", "case2max:f=sin(1),phiM=1", "el:shift",
     "case2max:f=affine(-1,0),phiM=1", "case2cof:f=affine(1,1),seq=primes", "case2max:f=table(0:2,1:1),phiM=1"],
)
def test_bad_spec_strings(text):
    with pytest.raises(UsageError):
        parse_spec(text)


# -- CLI --------------------------------------------------------------------


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_cli_eval():
    code, out, _ = run("eval", "-e", "exp(t^{1*e(0)})", "--depth", "3")
    assert code == 0
    assert out == "1 + 1*t^{1*e(0)} + 1/2*t^{2*e(0)} + 1/6*t^{3*e(0)}\n"


def test_cli_eval_json():
    code, out, _ = run("eval", "-e", "1/(1 - t)", "--depth", "2", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["guarantee"] == "3*e(0)"
    assert data["terms"] == [["0", "1"], ["1*e(0)", "1"], ["2*e(0)", "1"]]


def test_cli_eval_with_spec():
    code, out, _ = run("eval", "-e", "D(t^{1*e(0)})", "--spec", "case1:shift=1")
    assert (code, out) == (0, "1*t^{1*e(0) - 1*e(1)}\n")


def test_cli_exit_codes():
    code, _, err = run("eval", "-e", "log(")
    assert code == 2 and err.startswith("error: 1:5:")
    code, _, err = run("eval", "-e", "log(2)")
    assert code == 1 and "1:1" in err
    assert run("eval", "-e", "t", "--spec", "bogus")[0] == 2
    assert run("check")[0] == 2
    assert run("frobnicate")[0] == 2
    assert run("find-relation", "-e", "t", "--degree", "0")[0] == 2
    assert run("find-relation", "-e", "t", "-e", "t", "--degree", "6", "--cap", "10")[0] == 1


def test_cli_check(tmp_path):
    code, out, _ = run("check", "-e", "t^{-1*e(0)} + 3", "-e", "t^{-2*e(0)}")
    data = json.loads(out)
    assert code == 0 and data["outcome"] == "certified" and data["conclusion"] == "td >= 3"
    path = tmp_path / "ys.txt"
    path.write_text("# two inputs\nt^{-1*e(0)} + 3\n\n2*t^{-1*e(0)} - 1  # dependent\n", encoding="utf-8")
    code, out, _ = run("check", str(path))
    assert code == 0 and json.loads(out)["witness"] == [2, -1]
    code, _, err = run("check", str(tmp_path / "missing.txt"))
    assert code == 2 and "missing.txt" in err


def test_cli_check_error_names_the_input(tmp_path):
    path = tmp_path / "bad.txt"
    path.write_text("t\nlog(3)\n", encoding="utf-8")
    code, _, err = run("check", str(path))
    assert code == 1 and "bad.txt:2" in err


def test_cli_find_relation():
    code, out, _ = run("find-relation", "-e", "t", "-e", "t^2", "--degree", "2")
    assert code == 0 and json.loads(out)["relation"] == "w2 - w1^2"


def test_cli_is_byte_stable_across_processes():
    argv = [sys.executable, "-m", "hahnseries", "check", "-e", "t^{-1*e(0)} + 3", "-e", "2*t^{-1*e(0)} - 1"]
    first = subprocess.run(argv, capture_output=True, check=True).stdout
    second = subprocess.run(argv, capture_output=True, check=True).stdout
    assert first == second
    assert json.loads(first)["outcome"] == "dependent"
