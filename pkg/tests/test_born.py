import math

import numpy as np
import pytest
from hypothesis import given
import hypothesis.strategies as st

from ampcalc.born import (
    ALPHA_BRACKET,
    BornExponent,
    born_probabilities,
    completeness_residual,
    moment,
    probability,
    solve_exponent,
)
from ampcalc.core import conjugate
from ampcalc.errors import DegenerateDistribution, NotNormalized

from conftest import SQRT_HALF, finite_complex


def test_probability_examples():
    assert probability(0.6 + 0.8j, 2) == 1.0
    assert probability(0.5 + 0j, 2) == 0.25
    assert probability(0j, 0.3) == 0.0
    assert probability(0j, BornExponent(7.0)) == 0.0


def test_born_exponent_validation():
    for bad in (0.0, -1.0, math.inf, math.nan):
        with pytest.raises(ValueError):
            BornExponent(bad)


def test_completeness_examples():
    assert completeness_residual([0.6 + 0.8j]) == 0.0
    assert completeness_residual([SQRT_HALF, SQRT_HALF * 1j]) <= 1e-15
    assert completeness_residual([0.5 + 0j]) == 0.75
    with pytest.raises(ValueError):
        completeness_residual([])


def test_solve_examples():
    assert solve_exponent([0.6, 0.8], 1e-10).alpha == pytest.approx(2, abs=1e-10)
    assert solve_exponent([SQRT_HALF, SQRT_HALF], 1e-10).alpha == pytest.approx(2, abs=1e-10)


def test_solve_degenerate():
    with pytest.raises(DegenerateDistribution):
        solve_exponent([1.0, 0.0])


def test_solve_not_normalized():
    with pytest.raises(NotNormalized):
        solve_exponent([0.5, 0.5])


@pytest.mark.parametrize("bad", [[-0.1, 0.9], [1.2, 0.3]])
def test_solve_rejects_out_of_range(bad):
    with pytest.raises(ValueError):
        solve_exponent(bad)


def test_zeros_are_ignored_when_two_interior_moduli_remain():
    assert solve_exponent([0.6, 0.0, 0.8, 0.0]).alpha == pytest.approx(2, abs=1e-10)


def test_born_probabilities_examples():
    assert born_probabilities([0.6 + 0.8j]) == [1.0]
    assert born_probabilities([0.6, 0.8j]) == pytest.approx([0.36, 0.64], abs=1e-15)
    with pytest.raises(NotNormalized):
        born_probabilities([0.5, 0.5])


def normalized_moduli(seed, dim, lo=1e-3, hi=1 - 1e-3):
    rng = np.random.default_rng(seed)
    while True:
        v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        m = np.abs(v / np.linalg.norm(v))
        if m.min() >= lo and m.max() <= hi:
            return [float(x) for x in m]


@given(st.integers(0, 2**32 - 1), st.integers(2, 8))
def test_exponent_is_two_for_any_complete_family(seed, dim):
    ms = normalized_moduli(seed, dim)
    alpha = solve_exponent(ms).alpha
    assert abs(alpha - 2) <= 1e-6
    # independent check: the squared moduli already sum to one
    assert abs(math.fsum(m * m for m in ms) - 1) <= 1e-12


@given(st.integers(0, 2**32 - 1), st.integers(2, 8))
def test_moment_brackets_root(seed, dim):
    ms = normalized_moduli(seed, dim)
    lo, hi = ALPHA_BRACKET
    assert moment(ms, lo) > 1 > moment(ms, hi)
    grid = np.linspace(lo, hi, 50)
    values = [moment(ms, a) for a in grid]
    assert all(a > b for a, b in zip(values, values[1:]))


@given(finite_complex(1e3))
def test_probability_ignores_conjugation(x):
    assert probability(x, 2) == probability(conjugate(x), 2)


@given(st.integers(0, 2**32 - 1), st.integers(1, 8))
def test_probability_sum_bounded_by_completeness(seed, dim):
    rng = np.random.default_rng(seed)
    v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
    xs = [complex(x) for x in v / np.linalg.norm(v)]
    ps = born_probabilities(xs)
    assert abs(math.fsum(ps) - 1) <= completeness_residual(xs) + 1e-12
