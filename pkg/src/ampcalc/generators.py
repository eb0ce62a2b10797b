"""Seeded random series-parallel diagrams for sweeps and tests."""

from __future__ import annotations

import itertools
from typing import Iterator

import numpy as np

from .core import StateLabel
from .diagram import (
    Atomic,
    Parallel,
    ProcessExpr,
    Series,
    branch_filter,
    parallel_nodes,
    right_nested,
)


class _Labels:
    def __init__(self) -> None:
        self._states: Iterator[int] = itertools.count()
        self._filters: Iterator[int] = itertools.count()

    def state(self) -> StateLabel:
        return f"S{next(self._states)}"

    def filter(self) -> StateLabel:
        return f"F{next(self._filters)}"


def random_diagram(
    rng: np.random.Generator,
    max_chain: int = 5,
    max_fanout: int = 3,
    max_depth: int = 2,
    p_parallel: float = 0.4,
) -> ProcessExpr:
    """A valid, printable diagram with fresh labels.

    Every parallel branch starts with its own fresh filter state, so the
    filters of one parallel node form an orthogonal group.
    """
    names = _Labels()
    src, dst = names.state(), names.state()
    length = int(rng.integers(1, max_chain + 1))
    return _chain(rng, names, src, dst, length, 0, max_fanout, max_depth, p_parallel)


def _chain(rng, names, src, dst, length, depth, max_fanout, max_depth, p_parallel) -> ProcessExpr:
    points = [src] + [names.state() for _ in range(length - 1)] + [dst]
    steps: list[ProcessExpr] = []
    for a, b in zip(points, points[1:]):
        if depth < max_depth and rng.random() < p_parallel:
            fanout = int(rng.integers(2, max_fanout + 1))
            branches = []
            for _ in range(fanout):
                f = names.filter()
                tail_len = int(rng.integers(1, 3))
                tail = _chain(rng, names, f, b, tail_len, depth + 1, max_fanout, max_depth, p_parallel)
                branches.append(Series(Atomic(a, f), tail))
            steps.append(Parallel(branches))
        else:
            steps.append(Atomic(a, b))
    return right_nested(steps)


def filter_groups(e: ProcessExpr) -> list[list[StateLabel]]:
    """Immediate branch filters of every parallel node, outermost first."""
    return [[branch_filter(b) for b in p.branches] for p in parallel_nodes(e)]


def max_fanout(e: ProcessExpr) -> int:
    return max((len(p.branches) for p in parallel_nodes(e)), default=0)
