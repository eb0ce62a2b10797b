"""Composition rules for amplitudes in series (f) and in parallel (g).

The canonical pair is ``f = x*y`` and ``g = x+y``. Any invertible
regraduation H yields an equivalent pair

    f_H(x, y) = H^-1(H(x) * H(y)),    g_H(x, y) = H^-1(H(x) + H(y))

with the same content in a different form. Two fixed, deliberately broken
rules serve as negative controls for the law checker.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import Callable

from .core import ComplexAmp, parse_complex
from .errors import DomainViolation

BinaryOp = Callable[[complex, complex], complex]


@dataclass(frozen=True)
class SampleDomain:
    """Annular sector ``modulus in [lo, hi]``, ``arg in (arg_min, arg_max]``."""

    modulus_min: float
    modulus_max: float
    arg_min: float
    arg_max: float

    def __post_init__(self) -> None:
        if not 0 < self.modulus_min < self.modulus_max:
            raise ValueError("need 0 < modulus_min < modulus_max")
        if not -math.pi <= self.arg_min < self.arg_max <= math.pi:
            raise ValueError("need -pi <= arg_min < arg_max <= pi")

    def point(self, u_mod: float, u_arg: float) -> complex:
        """Map two uniforms in [0, 1) onto the domain."""
        r = self.modulus_min + u_mod * (self.modulus_max - self.modulus_min)
        theta = self.arg_max - u_arg * (self.arg_max - self.arg_min)
        return cmath.rect(r, theta)

    def contains(self, x: complex, slack: float = 1e-12) -> bool:
        """Membership test; ``slack`` absorbs rounding in :meth:`point`."""
        r = abs(x)
        if not self.modulus_min * (1 - slack) <= r <= self.modulus_max * (1 + slack):
            return False
        return self.arg_min - slack < principal_arg(x) <= self.arg_max + slack


CANONICAL_DOMAIN = SampleDomain(0.05, 2.0, -math.pi, math.pi)
POWER_DOMAIN = SampleDomain(0.1, 1.5, -math.pi / 4, math.pi / 4)
EXPLOG_DOMAIN = SampleDomain(0.05, 1.0, -math.pi / 4, math.pi / 4)


def principal_arg(x: complex) -> float:
    """Argument in (-pi, pi]; ``phase`` may return -pi for a -0.0 imaginary part."""
    theta = cmath.phase(x)
    return math.pi if theta == -math.pi else theta


@dataclass(frozen=True)
class Regraduation:
    """An invertible amplitude transform H.

    ``kind`` is one of ``identity``, ``scale`` (``param`` = nonzero complex
    factor), ``power`` (``param`` = exponent in (0, 1]) or ``explog``.
    """

    kind: str
    param: complex | float | None = None

    def __post_init__(self) -> None:
        if self.kind == "scale":
            if self.param is None or complex(self.param) == 0:
                raise ValueError("scale factor must be nonzero")
            object.__setattr__(self, "param", complex(self.param))
        elif self.kind == "power":
            p = self.param
            if p is None or isinstance(p, complex) or not 0 < float(p) <= 1:
                raise ValueError("power exponent must lie in (0, 1]")
            object.__setattr__(self, "param", float(p))
        elif self.kind in ("identity", "explog"):
            if self.param is not None:
                raise ValueError(f"{self.kind} takes no parameter")
        else:
            raise ValueError(f"unknown regraduation kind {self.kind!r}")

    @property
    def domain(self) -> SampleDomain:
        return {"power": POWER_DOMAIN, "explog": EXPLOG_DOMAIN}.get(self.kind, CANONICAL_DOMAIN)

    # Unchecked forward/backward maps; composition feeds them values that
    # legitimately leave the sampling domain (e.g. f(y, z) inside f(x, f(y, z))).
    def forward(self, x: complex) -> complex:
        if self.kind == "identity":
            return x
        if self.kind == "scale":
            return self.param * x
        if self.kind == "power":
            return _principal_power(x, self.param)
        return cmath.exp(x)

    def backward(self, w: complex) -> complex:
        if self.kind == "identity":
            return w
        if self.kind == "scale":
            return w / self.param
        if self.kind == "power":
            return _principal_power(w, 1.0 / self.param)
        return cmath.log(w)

    def __str__(self) -> str:
        if self.kind == "scale":
            c = self.param
            return f"scale:{c.real:g}{'-' if c.imag < 0 else '+'}{abs(c.imag):g}i"
        if self.kind == "power":
            return f"power:{self.param:g}"
        return self.kind


def _principal_power(x: complex, p: float) -> complex:
    if x == 0:
        return 0j
    return cmath.rect(abs(x) ** p, p * principal_arg(x))


def apply_regraduation(h: Regraduation, x: ComplexAmp) -> ComplexAmp:
    """H(x); power and explog refuse points outside their safe domain."""
    if h.kind in ("power", "explog") and not h.domain.contains(x):
        raise DomainViolation(f"{x!r} lies outside the safe domain of {h}")
    return h.forward(x)


def invert_regraduation(h: Regraduation, x: ComplexAmp) -> ComplexAmp:
    """H^-1(x), defined wherever the principal-branch inverse exists."""
    if not cmath.isfinite(x):
        raise DomainViolation(f"{x!r} is not finite")
    if h.kind == "explog" and x == 0:
        raise DomainViolation("log is undefined at 0")
    return h.backward(x)


@dataclass(frozen=True)
class CompositionRule:
    name: str
    series_f: BinaryOp = field(repr=False)
    parallel_g: BinaryOp = field(repr=False)
    safe_domain: SampleDomain = CANONICAL_DOMAIN
    expected_consistent: bool = True
    regraduation: Regraduation | None = None

    @property
    def series_identity(self) -> complex:
        """Two-sided unit of f: H^-1(1)."""
        if self.regraduation is None:
            return 1 + 0j
        return self.regraduation.backward(1 + 0j)


def canonical_rule() -> CompositionRule:
    return CompositionRule(
        "canonical",
        series_f=lambda x, y: x * y,
        parallel_g=lambda x, y: x + y,
    )


def _log_add_exp(x: complex, y: complex) -> complex:
    # e^m is a positive real, so factoring it out leaves the principal branch intact
    m = max(x.real, y.real)
    return m + cmath.log(cmath.exp(x - m) + cmath.exp(y - m))


def regraduated_rule(h: Regraduation) -> CompositionRule:
    fwd, back = h.forward, h.backward

    def series_f(x: complex, y: complex) -> complex:
        return back(fwd(x) * fwd(y))

    def parallel_g(x: complex, y: complex) -> complex:
        return back(fwd(x) + fwd(y))

    if h.kind == "explog":
        parallel_g = _log_add_exp

    return CompositionRule(
        str(h),
        series_f=series_f,
        parallel_g=parallel_g,
        safe_domain=h.domain,
        regraduation=h,
    )


def broken_rule(which: str) -> CompositionRule:
    if which == "g_affine":
        return CompositionRule(
            "broken:g_affine",
            series_f=lambda x, y: x * y,
            parallel_g=lambda x, y: x + 2 * y,
            expected_consistent=False,
        )
    if which == "f_offset":
        return CompositionRule(
            "broken:f_offset",
            series_f=lambda x, y: x * y + 0.01,
            parallel_g=lambda x, y: x + y,
            expected_consistent=False,
        )
    raise ValueError(f"unknown broken rule {which!r}")


def rule_from_selector(selector: str) -> CompositionRule:
    """Build a rule from ``canonical``, ``scale:2+1i``, ``power:0.7``,
    ``explog`` or ``broken:NAME``."""
    kind, _, arg = selector.strip().partition(":")
    if kind == "canonical" and not arg:
        return canonical_rule()
    if kind == "explog" and not arg:
        return regraduated_rule(Regraduation("explog"))
    if kind == "identity" and not arg:
        return regraduated_rule(Regraduation("identity"))
    if kind == "scale" and arg:
        return regraduated_rule(Regraduation("scale", parse_complex(arg)))
    if kind == "power" and arg:
        try:
            p = float(arg)
        except ValueError:
            raise ValueError(f"bad power exponent {arg!r}") from None
        return regraduated_rule(Regraduation("power", p))
    if kind == "broken" and arg:
        return broken_rule(arg)
    raise ValueError(f"unknown rule selector {selector!r}")
