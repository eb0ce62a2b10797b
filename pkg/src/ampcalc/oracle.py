"""Brute-force Hilbert-space model used as an independent check.

States are unit vectors in C^dim and ``<u|v> = sum(conj(u_i) * v_i)``. The
amplitude for source -> target is <target|source>; a series process is the
product of its legs and a parallel process is the plain sum of its branches.
Nothing here routes through the composition-rule machinery.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Mapping, Sequence

import numpy as np

from .core import AmplitudeTable, ComplexAmp, Leg, StateLabel, check_label
from .diagram import Atomic, Parallel, ProcessExpr, Series, branch_filter, require_valid
from .errors import (
    DuplicateLabel,
    GroupTooLarge,
    IncompatibleGroups,
    NonOrthogonalBranches,
    UnknownLabel,
)

ORTHOGONALITY_TOL = 1e-10
UNIT_NORM_TOL = 1e-12


@dataclass(frozen=True)
class HilbertModel:
    dim: int
    states: Mapping[StateLabel, np.ndarray] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.dim < 2:
            raise ValueError("dim must be >= 2")
        frozen = {}
        for label, vec in self.states.items():
            check_label(label)
            v = np.array(vec, dtype=np.complex128)
            if v.shape != (self.dim,):
                raise ValueError(f"state {label} has shape {v.shape}, expected ({self.dim},)")
            if abs(np.linalg.norm(v) - 1.0) > UNIT_NORM_TOL:
                raise ValueError(f"state {label} is not a unit vector")
            v.flags.writeable = False
            frozen[label] = v
        object.__setattr__(self, "states", MappingProxyType(frozen))

    def vector(self, label: StateLabel) -> np.ndarray:
        try:
            return self.states[label]
        except KeyError:
            raise UnknownLabel(f"no state {label!r} in model") from None


def _random_vector(rng: np.random.Generator, dim: int) -> np.ndarray:
    return rng.standard_normal(dim) + 1j * rng.standard_normal(dim)


def _orthonormalize(v: np.ndarray, basis: Sequence[np.ndarray]) -> np.ndarray:
    """Project ``v`` off ``basis`` twice (classical Gram-Schmidt, re-orthogonalized)."""
    for _ in range(2):
        for b in basis:
            v = v - np.vdot(b, v) * b
    return v / np.linalg.norm(v)


def random_model(
    dim: int,
    labels: Sequence[StateLabel],
    orthogonal_groups: Sequence[Sequence[StateLabel]] = (),
    seed: int = 0,
) -> HilbertModel:
    """Random unit vectors, with each group made mutually orthonormal.

    Groups are filled in order; a label already placed by an earlier group
    is kept and the newcomers are orthogonalized against it.
    """
    if dim < 2:
        raise ValueError("dim must be >= 2")
    if len(set(labels)) != len(labels):
        dupes = sorted({l for l in labels if list(labels).count(l) > 1})
        raise DuplicateLabel(f"duplicate labels: {', '.join(dupes)}")
    known = set(labels)
    rng = np.random.default_rng(seed)
    states: dict[StateLabel, np.ndarray] = {}

    for group in orthogonal_groups:
        members = list(dict.fromkeys(group))
        if len(members) > dim:
            raise GroupTooLarge(f"group of {len(members)} states cannot be orthogonal in dim {dim}")
        for label in members:
            if label not in known:
                raise UnknownLabel(f"group label {label!r} is not among the model labels")
        placed = [states[l] for l in members if l in states]
        if placed:
            gram = np.array([[np.vdot(a, b) for b in placed] for a in placed])
            if np.max(np.abs(gram - np.eye(len(placed)))) > ORTHOGONALITY_TOL:
                raise IncompatibleGroups(f"group {members} overlaps non-orthogonal states")
        basis = list(placed)
        for label in members:
            if label in states:
                continue
            v = _orthonormalize(_random_vector(rng, dim), basis)
            states[label] = v
            basis.append(v)

    for label in labels:
        if label not in states:
            v = _random_vector(rng, dim)
            states[label] = v / np.linalg.norm(v)
    return HilbertModel(dim, {l: states[l] for l in labels})


def model_amplitude(m: HilbertModel, source: StateLabel, target: StateLabel) -> ComplexAmp:
    """<target|source>."""
    return complex(np.vdot(m.vector(target), m.vector(source)))


def table_from_model(m: HilbertModel, legs: Sequence[Leg]) -> AmplitudeTable:
    table = AmplitudeTable()
    for source, target in legs:
        if table.has(source, target):
            continue
        table = table.insert(source, target, model_amplitude(m, source, target))
    return table


def orthogonality_check(m: HilbertModel, labels: Sequence[StateLabel]) -> float:
    """Largest |<l_i|l_j>| over index pairs i != j."""
    vecs = np.array([m.vector(l) for l in labels])
    if len(vecs) < 2:
        return 0.0
    gram = np.abs(vecs.conj() @ vecs.T)
    np.fill_diagonal(gram, 0.0)
    return float(gram.max())


def _check_branches(m: HilbertModel, node: Parallel) -> None:
    filters = [branch_filter(b) for b in node.branches]
    for i in range(len(filters)):
        for j in range(i + 1, len(filters)):
            overlap = abs(np.vdot(m.vector(filters[i]), m.vector(filters[j])))
            if overlap > ORTHOGONALITY_TOL:
                raise NonOrthogonalBranches(filters[i], filters[j], float(overlap))


def _oracle(m: HilbertModel, e: ProcessExpr) -> complex:
    if isinstance(e, Atomic):
        return model_amplitude(m, e.source, e.target)
    if isinstance(e, Series):
        return _oracle(m, e.second) * _oracle(m, e.first)
    _check_branches(m, e)
    return sum((_oracle(m, b) for b in e.branches), 0j)


def oracle_eval(m: HilbertModel, e: ProcessExpr) -> ComplexAmp:
    require_valid(e)
    return _oracle(m, e)


def standard_basis(dim: int, prefix: str = "E") -> dict[StateLabel, np.ndarray]:
    return {f"{prefix}{k}": np.eye(dim, dtype=np.complex128)[k] for k in range(dim)}


def random_basis(dim: int, seed: int, prefix: str = "A") -> dict[StateLabel, np.ndarray]:
    """A complete orthonormal family of ``dim`` labelled states."""
    labels = [f"{prefix}{k}" for k in range(dim)]
    return dict(random_model(dim, labels, [labels], seed).states)
