from fractions import Fraction
from pathlib import Path

import pytest

import polyopt

CORPUS = Path(__file__).resolve().parents[2] / "corpus"


def test_circle_from_text():
    r = polyopt.solve(polyopt.problem_text(["x", "y"], "x + y", ["x^2 + y^2 - 1"]))
    assert r["status"] == "attained"
    lo, hi = (polyopt.to_fraction(s) for s in r["value"]["interval"])
    assert lo <= hi < -1
    assert lo * lo >= 2 >= hi * hi
    assert r["value"]["decimal"].startswith("-1.41421356")
    assert len(r["minimizer"]["coords"]) == 2


def test_corpus_files():
    nonreached = polyopt.solve(CORPUS / "nonreached.pop", seed=3)
    assert nonreached["status"] == "not_attained"
    assert nonreached["value"]["annihilator"] == ["-42/1", "1/1"]
    assert nonreached["seed"] == 3
    assert nonreached["p_np"] is not None

    assert polyopt.solve(str(CORPUS / "empty.pop"))["status"] == "empty"
    assert polyopt.solve(CORPUS / "line_unbounded.pop")["value"] is None


def test_oracle_matches_solver_on_maxcut():
    path = CORPUS / "maxcut5-2.pop"
    o = polyopt.oracle(path)
    assert o["exact"] and o["feasible"]
    r = polyopt.solve(path)
    assert [Fraction(c) for c in r["value"]["annihilator"]] == [-Fraction(o["value"]), 1]


def test_errors():
    with pytest.raises(polyopt.ParseError, match="undeclared variable"):
        polyopt.solve("vars: x\nobjective: x*z\n")
    with pytest.raises(polyopt.AssumptionFailure):
        polyopt.solve(polyopt.problem_text(["x", "y", "z"], "x", ["x^2*y"]))
    with pytest.raises(polyopt.RetryExhausted):
        polyopt.solve(CORPUS / "hyperbola.pop", max_coord_retries=1)


def test_normalize_is_a_fixed_point():
    text = (CORPUS / "GGSZ2012.pop").read_text()
    once = polyopt.normalize(text)
    assert polyopt.normalize(once) == once
