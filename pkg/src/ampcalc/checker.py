"""Sampling-based verification of the consistency laws.

Laws checked, with f = series rule and g = parallel rule:

* ``series_assoc``    f(x, f(y, z)) == f(f(x, y), z)
* ``parallel_assoc``  g(x, g(y, z)) == g(g(x, y), z)
* ``distributivity``  f(g(x, y), z) == g(f(x, z), f(y, z))
* ``parallel_comm``   g(x, y) == g(y, x)

Residuals are normalised by ``1 + max(|lhs|, |rhs|)``.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass

from .core import format_complex
from .errors import RuleEvaluationFailure
from .laws import CompositionRule
from .sampling import sample_points

LAWS = ("series_assoc", "parallel_assoc", "distributivity", "parallel_comm")
ARITY = {"series_assoc": 3, "parallel_assoc": 3, "distributivity": 3, "parallel_comm": 2}


@dataclass(frozen=True)
class CheckConfig:
    samples: int = 1000
    seed: int = 42
    tolerance: float = 1e-9

    def __post_init__(self) -> None:
        if self.samples < 1:
            raise ValueError("samples must be >= 1")
        if not self.tolerance > 0:
            raise ValueError("tolerance must be > 0")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")


@dataclass(frozen=True)
class LawReport:
    law: str
    samples: int
    max_residual: float
    worst_case: tuple[complex, ...]
    passed: bool
    tolerance: float
    # largest unnormalised |lhs - rhs| over the same samples
    max_abs_residual: float = 0.0

    def render(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        at = ", ".join(
            f"{name}={format_complex(v)}" for name, v in zip("xyz", self.worst_case)
        )
        return f"LAW {self.law} {verdict} max_residual={self.max_residual:.3e} at ({at})"


def law_sides(rule: CompositionRule, law: str, args: tuple[complex, ...]) -> tuple[complex, complex]:
    if law not in ARITY:
        raise ValueError(f"unknown law {law!r}")
    f, g = rule.series_f, rule.parallel_g
    try:
        if law == "series_assoc":
            x, y, z = args
            sides = f(x, f(y, z)), f(f(x, y), z)
        elif law == "parallel_assoc":
            x, y, z = args
            sides = g(x, g(y, z)), g(g(x, y), z)
        elif law == "distributivity":
            x, y, z = args
            sides = f(g(x, y), z), g(f(x, z), f(y, z))
        else:
            x, y = args
            sides = g(x, y), g(y, x)
    except (ArithmeticError, ValueError) as exc:
        raise RuleEvaluationFailure(f"{rule.name}: {law} failed at {args}: {exc}") from exc
    lhs, rhs = complex(sides[0]), complex(sides[1])
    if not (cmath.isfinite(lhs) and cmath.isfinite(rhs)):
        raise RuleEvaluationFailure(f"{rule.name}: {law} is not finite at {args}")
    return lhs, rhs


def residual(lhs: complex, rhs: complex) -> tuple[float, float]:
    """(absolute, relative) discrepancy between two sides of a law."""
    diff = abs(lhs - rhs)
    return diff, diff / (1.0 + max(abs(lhs), abs(rhs)))


def check_law(rule: CompositionRule, law: str, cfg: CheckConfig = CheckConfig()) -> LawReport:
    arity = ARITY[law]
    worst_rel, worst_abs, worst = -1.0, 0.0, ()
    for i in range(cfg.samples):
        args = sample_points(cfg.seed, i, rule.safe_domain, arity)
        abs_res, rel_res = residual(*law_sides(rule, law, args))
        # strict > keeps the lowest index on ties
        if rel_res > worst_rel:
            worst_rel, worst = rel_res, args
        worst_abs = max(worst_abs, abs_res)
    return LawReport(
        law=law,
        samples=cfg.samples,
        max_residual=worst_rel,
        worst_case=worst,
        passed=worst_rel <= cfg.tolerance,
        tolerance=cfg.tolerance,
        max_abs_residual=worst_abs,
    )


def check_series_assoc(rule: CompositionRule, cfg: CheckConfig = CheckConfig()) -> LawReport:
    return check_law(rule, "series_assoc", cfg)


def check_parallel_assoc(rule: CompositionRule, cfg: CheckConfig = CheckConfig()) -> LawReport:
    return check_law(rule, "parallel_assoc", cfg)


def check_distributivity(rule: CompositionRule, cfg: CheckConfig = CheckConfig()) -> LawReport:
    return check_law(rule, "distributivity", cfg)


def check_parallel_comm(rule: CompositionRule, cfg: CheckConfig = CheckConfig()) -> LawReport:
    return check_law(rule, "parallel_comm", cfg)


def run_full_suite(rule: CompositionRule, cfg: CheckConfig = CheckConfig()) -> list[LawReport]:
    return [check_law(rule, law, cfg) for law in LAWS]


def all_pass(reports: list[LawReport]) -> bool:
    return all(r.passed for r in reports)
