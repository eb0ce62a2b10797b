"""Probabilities from amplitudes, and the exponent in Pr = |x|**alpha.

For an exhaustive family of orthogonal outcomes reached from one state the
amplitudes satisfy sum |x_i|**2 == 1 (completeness) while the probabilities
satisfy sum |x_i|**alpha == 1. :func:`solve_exponent` finds the alpha that
makes both hold; for any non-degenerate family it is 2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .core import ComplexAmp
from .errors import DegenerateDistribution, NoRootInBracket, NotNormalized

ALPHA_BRACKET = (0.1, 10.0)
# a modulus counts as strictly inside (0, 1) only within this guard band
INTERIOR_GUARD = 1e-9
NORMALIZATION_TOL = 1e-12


@dataclass(frozen=True)
class BornExponent:
    alpha: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.alpha) and self.alpha > 0):
            raise ValueError(f"Born exponent must be finite and positive, got {self.alpha}")

    def __float__(self) -> float:
        return self.alpha


def probability(x: ComplexAmp, alpha: BornExponent | float = 2.0) -> float:
    a = float(alpha)
    if not (math.isfinite(a) and a > 0):
        raise ValueError("alpha must be finite and positive")
    return abs(x) ** a


def completeness_residual(xs: Sequence[ComplexAmp]) -> float:
    """|sum_i conj(x_i) x_i - 1|."""
    if not xs:
        raise ValueError("need at least one amplitude")
    return abs(math.fsum(abs(x) ** 2 for x in xs) - 1.0)


def moment(moduli: Sequence[float], alpha: float) -> float:
    """sum_i m_i**alpha; zero moduli contribute nothing."""
    return math.fsum(m**alpha for m in moduli if m > 0)


def solve_exponent(moduli: Sequence[float], tol: float = 1e-10) -> BornExponent:
    """Find alpha with sum m_i**alpha == 1 by bisection on [0.1, 10].

    The sum is strictly decreasing in alpha when at least two moduli lie in
    (0, 1), so the root is unique and bisection always converges. Halving
    continues down to floating-point resolution; ``tol`` is the accuracy
    the caller is promised and must exceed that resolution.
    """
    ms = [float(m) for m in moduli]
    if not tol >= 4 * math.ulp(ALPHA_BRACKET[1]):
        raise ValueError("tol is below floating-point resolution of the bracket")
    if any(not (0.0 <= m <= 1.0) for m in ms):
        raise ValueError("every modulus must lie in [0, 1]")
    if any(m > 1.0 - INTERIOR_GUARD for m in ms):
        raise DegenerateDistribution(
            "a modulus equals 1, so every alpha satisfies sum m**alpha = 1"
        )
    norm = math.fsum(m * m for m in ms)
    if abs(norm - 1.0) > NORMALIZATION_TOL:
        raise NotNormalized(f"squared moduli sum to {norm!r}, not 1")
    if sum(INTERIOR_GUARD <= m for m in ms) < 2:
        raise DegenerateDistribution("need at least two moduli strictly inside (0, 1)")

    lo, hi = ALPHA_BRACKET
    f_lo, f_hi = moment(ms, lo) - 1.0, moment(ms, hi) - 1.0
    if not (f_lo > 0 > f_hi):
        raise NoRootInBracket(f"sum m**alpha - 1 does not change sign on [{lo}, {hi}]")
    while True:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        f_mid = moment(ms, mid) - 1.0
        if f_mid == 0:
            return BornExponent(mid)
        if f_mid > 0:
            lo = mid
        else:
            hi = mid
    return BornExponent(0.5 * (lo + hi))


def born_probabilities(xs: Sequence[ComplexAmp]) -> list[float]:
    """[|x_i|**2]; the amplitudes must already be complete."""
    res = completeness_residual(xs)
    if res > 1e-9:
        raise NotNormalized(f"completeness residual {res:.3e} exceeds 1e-9")
    return [abs(x) ** 2 for x in xs]
