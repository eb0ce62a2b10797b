"""Amplitude of a process diagram under a composition rule.

Series(first, second) evaluates to ``f(later, earlier)`` = f(amp(second),
amp(first)), mirroring <A|C>_via B = f(<A|B>, <B|C>). Parallel branches are
folded left with g in textual order.
"""

from __future__ import annotations

import cmath
from functools import reduce

from .core import AmplitudeTable, ComplexAmp
from .diagram import (
    Atomic,
    Parallel,
    ProcessExpr,
    Series,
    chain_legs,
    left_nested,
    require_valid,
    right_nested,
)
from .errors import RuleEvaluationFailure
from .laws import CompositionRule


def _eval(e: ProcessExpr, table: AmplitudeTable, rule: CompositionRule) -> complex:
    if isinstance(e, Atomic):
        return table.lookup(e.source, e.target)
    if isinstance(e, Series):
        earlier = _eval(e.first, table, rule)
        later = _eval(e.second, table, rule)
        return _call(rule.series_f, later, earlier, rule)
    amps = [_eval(b, table, rule) for b in e.branches]
    return reduce(lambda acc, b: _call(rule.parallel_g, acc, b, rule), amps)


def _call(op, x: complex, y: complex, rule: CompositionRule) -> complex:
    try:
        out = complex(op(x, y))
    except (ArithmeticError, ValueError) as exc:
        raise RuleEvaluationFailure(f"{rule.name} failed on ({x!r}, {y!r}): {exc}") from exc
    if not cmath.isfinite(out):
        raise RuleEvaluationFailure(f"{rule.name} gave {out!r} on ({x!r}, {y!r})")
    return out


def eval_diagram(e: ProcessExpr, table: AmplitudeTable, rule: CompositionRule) -> ComplexAmp:
    require_valid(e)
    return _eval(e, table, rule)


def eval_both_orders(
    e: ProcessExpr, table: AmplitudeTable, rule: CompositionRule
) -> tuple[ComplexAmp, ComplexAmp]:
    """Evaluate a pure chain fully right-nested and fully left-nested."""
    require_valid(e)
    legs = chain_legs(e)
    return (
        _eval(right_nested(legs), table, rule),
        _eval(left_nested(legs), table, rule),
    )
