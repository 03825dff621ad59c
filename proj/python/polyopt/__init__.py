"""Exact global minimization of a polynomial on a real algebraic set."""

import json
from fractions import Fraction
from pathlib import Path

from ._core import AssumptionFailure, ParseError, RetryExhausted, normalize, oracle_text, solve_file, solve_text

__all__ = [
    "AssumptionFailure",
    "ParseError",
    "RetryExhausted",
    "normalize",
    "oracle",
    "problem_text",
    "solve",
    "to_fraction",
]


def problem_text(variables, objective, constraints=()):
    """Builds the text of a problem file."""
    lines = ["vars: " + " ".join(variables), "objective: " + objective, "constraints:"]
    lines += ["  " + c for c in constraints]
    return "\n".join(lines) + "\n"


def solve(problem, *, seed=0, digits=30, check_genericity=True, max_coord_retries=8):
    """Solves a problem given as a path or as problem-file text; returns the JSON report as a dict."""
    kwargs = dict(seed=seed, digits=digits, check_genericity=check_genericity, max_coord_retries=max_coord_retries)
    if isinstance(problem, Path) or ("\n" not in problem and Path(problem).is_file()):
        return json.loads(solve_file(str(problem), **kwargs))
    return json.loads(solve_text(problem, **kwargs))


def oracle(problem, *, grid=9, penalty="1000"):
    text = Path(problem).read_text() if isinstance(problem, Path) else problem
    return oracle_text(text, grid=grid, penalty=str(penalty))


def to_fraction(s):
    """Converts an "a/b" string from a report into a Fraction."""
    return Fraction(s)
