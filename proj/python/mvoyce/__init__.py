"""Exact coefficient triangle of the Morgan-Voyce polynomials and its limit laws."""

from fractions import Fraction

from . import _core
from ._core import (
    VerificationFailure,
    harper_max_error,
    kolmogorov_distance,
    local_limit_error,
    singularity_constants,
    table2_row,
)

__all__ = [
    "VerificationFailure",
    "binom",
    "double_mode_sequence",
    "fib",
    "harper_max_error",
    "kolmogorov_distance",
    "local_limit_error",
    "locate_mode",
    "moment_summary",
    "pell_all_solutions",
    "row",
    "row_hereditary",
    "run_cli",
    "singularity_constants",
    "table2_row",
]


def fib(n: int) -> int:
    return int(_core.fib(n))


def binom(n: int, k: int) -> int:
    return int(_core.binom(n, k))


def row(n: int, method: str = "closed") -> list[int]:
    """A(n, k) for k = 0..n; method is "closed", "three_term" or "reciprocal"."""
    return [int(c) for c in _core.row(n, method)]


def row_hereditary(n: int, g: str = "identity") -> list[Fraction]:
    return [Fraction(c) for c in _core.row_hereditary(n, g)]


def moment_summary(n: int) -> dict:
    raw = _core.moment_summary(n)
    return {
        "n": raw["n"],
        "u": int(raw["u"]),
        "v": int(raw["v"]),
        "w": int(raw["w"]),
        "mu": Fraction(raw["mu"]),
        "sigma2": Fraction(raw["sigma2"]),
    }


def locate_mode(n: int) -> tuple[int, bool, Fraction]:
    m, is_double, gap = _core.locate_mode(n)
    return m, is_double, Fraction(gap)


def double_mode_sequence(count: int) -> list[tuple[int, int]]:
    return [(int(m), int(n)) for m, n in _core.double_mode_sequence(count)]


def pell_all_solutions(count: int) -> list[tuple[int, int]]:
    return [(int(j), int(n)) for j, n in _core.pell_all_solutions(count)]


def run_cli(*args: str) -> tuple[int, str, str]:
    return _core.run_cli(list(args))
