"""Series/parallel process expressions.

``Series(first, second)`` runs ``first`` and then ``second``;
``Parallel(branches)`` routes the same source to the same target through
two or more alternative sub-processes. Constructors do not check endpoint
agreement; call :func:`validate` or :func:`require_valid` on trees that did
not come from the parser.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .core import Leg, StateLabel, check_label
from .errors import InvalidDiagram, NotAChain


@dataclass(frozen=True)
class Atomic:
    source: StateLabel
    target: StateLabel

    def __post_init__(self) -> None:
        check_label(self.source)
        check_label(self.target)


@dataclass(frozen=True)
class Series:
    first: "ProcessExpr"
    second: "ProcessExpr"


@dataclass(frozen=True, init=False)
class Parallel:
    branches: tuple["ProcessExpr", ...]

    def __init__(self, branches: Iterable["ProcessExpr"]):
        object.__setattr__(self, "branches", tuple(branches))


ProcessExpr = Union[Atomic, Series, Parallel]


def endpoints(e: ProcessExpr) -> Leg:
    """(source, target) of the whole process."""
    if isinstance(e, Atomic):
        return e.source, e.target
    if isinstance(e, Series):
        return endpoints(e.first)[0], endpoints(e.second)[1]
    return endpoints(e.branches[0])


def validate(e: object, path: str = "root") -> str | None:
    """Return a description of the first invariant violation, or None.

    Paths read like ``root.second.branches[1]``.
    """
    if isinstance(e, Atomic):
        return None
    if isinstance(e, Series):
        for name in ("first", "second"):
            problem = validate(getattr(e, name), f"{path}.{name}")
            if problem is not None:
                return problem
        mid_a = endpoints(e.first)[1]
        mid_b = endpoints(e.second)[0]
        if mid_a != mid_b:
            return f"endpoint mismatch {mid_a}≠{mid_b} at {path}"
        return None
    if isinstance(e, Parallel):
        if len(e.branches) < 2:
            return f"parallel node needs at least 2 branches at {path}"
        for i, b in enumerate(e.branches):
            problem = validate(b, f"{path}.branches[{i}]")
            if problem is not None:
                return problem
        ends = [endpoints(b) for b in e.branches]
        if any(s != ends[0][0] for s, _ in ends):
            return f"branch from-endpoints differ at {path}"
        if any(t != ends[0][1] for _, t in ends):
            return f"branch to-endpoints differ at {path}"
        return None
    return f"not a process expression ({type(e).__name__}) at {path}"


def require_valid(e: object) -> ProcessExpr:
    problem = validate(e)
    if problem is not None:
        raise InvalidDiagram(problem)
    return e  # type: ignore[return-value]


def atomic_legs(e: ProcessExpr) -> list[Leg]:
    """All atomic transitions in temporal (left-to-right) order."""
    if isinstance(e, Atomic):
        return [(e.source, e.target)]
    if isinstance(e, Series):
        return atomic_legs(e.first) + atomic_legs(e.second)
    return [leg for b in e.branches for leg in atomic_legs(b)]


def labels(e: ProcessExpr) -> list[StateLabel]:
    """Distinct state labels in order of first appearance."""
    seen: dict[StateLabel, None] = {}
    for s, t in atomic_legs(e):
        seen.setdefault(s)
        seen.setdefault(t)
    return list(seen)


def series_steps(e: ProcessExpr) -> list[ProcessExpr]:
    """Flatten nested Series nodes into the ordered list of their parts."""
    if isinstance(e, Series):
        return series_steps(e.first) + series_steps(e.second)
    return [e]


def right_nested(steps: Sequence[ProcessExpr]) -> ProcessExpr:
    """``Series(s0, Series(s1, ... s_n))`` -- the parser's convention."""
    if not steps:
        raise ValueError("empty chain")
    expr = steps[-1]
    for step in reversed(steps[:-1]):
        expr = Series(step, expr)
    return expr


def left_nested(steps: Sequence[ProcessExpr]) -> ProcessExpr:
    if not steps:
        raise ValueError("empty chain")
    expr = steps[0]
    for step in steps[1:]:
        expr = Series(expr, step)
    return expr


def chain(*states: StateLabel) -> ProcessExpr:
    """Right-nested series of atomic steps through ``states``."""
    if len(states) < 2:
        raise ValueError("a chain needs at least two states")
    return right_nested([Atomic(a, b) for a, b in zip(states, states[1:])])


def chain_legs(e: ProcessExpr) -> list[Atomic]:
    """Atomic steps of a pure series chain; NotAChain if a Parallel occurs."""
    steps = series_steps(e)
    if not all(isinstance(s, Atomic) for s in steps):
        raise NotAChain("expression contains a parallel node")
    return steps  # type: ignore[return-value]


def parallel_nodes(e: ProcessExpr) -> list[Parallel]:
    """Every Parallel node, outermost first."""
    if isinstance(e, Atomic):
        return []
    if isinstance(e, Series):
        return parallel_nodes(e.first) + parallel_nodes(e.second)
    return [e] + [p for b in e.branches for p in parallel_nodes(b)]


def branch_filter(branch: ProcessExpr) -> StateLabel:
    """First intermediate state a parallel branch passes through."""
    return atomic_legs(branch)[0][1]


def distribute(e: ProcessExpr) -> ProcessExpr:
    """Rewrite ``Series(z, Parallel[b1..bn])`` as ``Parallel[Series(z, bi)]``.

    Applied once at the root; the combined process reads either as a series
    whose later part is parallel or as a parallel of series.
    """
    if isinstance(e, Series) and isinstance(e.second, Parallel):
        return Parallel(Series(e.first, b) for b in e.second.branches)
    raise ValueError("distribute needs Series(first, Parallel[...]) at the root")


def insert_filter_bank(
    e: ProcessExpr, leg_index: int, filters: Sequence[StateLabel]
) -> ProcessExpr:
    """Replace the ``leg_index``-th atomic leg A->B by A->{F1|...|Fn}->B."""
    counter = [leg_index]

    def walk(node: ProcessExpr) -> ProcessExpr:
        if isinstance(node, Atomic):
            if counter[0] == 0:
                counter[0] -= 1
                s, t = node.source, node.target
                return Parallel(Series(Atomic(s, f), Atomic(f, t)) for f in filters)
            counter[0] -= 1
            return node
        if isinstance(node, Series):
            return Series(walk(node.first), walk(node.second))
        return Parallel(walk(b) for b in node.branches)

    if not 0 <= leg_index < len(atomic_legs(e)):
        raise IndexError(f"leg index {leg_index} out of range")
    return walk(e)
