"""Value types: amplitudes, state labels and the Markovian amplitude table.

Amplitudes are plain Python ``complex`` values (two IEEE doubles). A table
entry is keyed only by the ordered pair ``(source, target)``; nothing about
the surrounding diagram can influence a lookup.
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterator, Mapping

from .errors import ConjugateConflict, MissingAmplitude, NonFinite

ComplexAmp = complex
StateLabel = str
Leg = tuple[StateLabel, StateLabel]

LABEL_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")


def is_label(name: object) -> bool:
    return isinstance(name, str) and LABEL_RE.fullmatch(name) is not None


def check_label(name: object) -> StateLabel:
    if not is_label(name):
        raise ValueError(f"invalid state label {name!r}")
    return name  # type: ignore[return-value]


def conjugate(x: ComplexAmp) -> ComplexAmp:
    return complex(x.real, -x.imag)


def check_finite(x: ComplexAmp) -> ComplexAmp:
    x = complex(x)
    if not cmath.isfinite(x):
        raise NonFinite(f"amplitude {x!r} is not finite")
    return x


def _fmt_sci(v: float) -> str:
    mantissa, exp = f"{v:.12e}".split("e")
    return f"{mantissa}e{int(exp)}"


def format_complex(x: ComplexAmp) -> str:
    """Render ``x`` as ``RE(+|-)IMi`` with 12 digits after the point.

    The output parses back through :func:`parse_complex` to the same value
    up to the printed precision; the sign of a zero imaginary part is kept.
    """
    re_part = _fmt_sci(x.real)
    im = x.imag
    sign = "-" if (im < 0 or (im == 0 and math.copysign(1.0, im) < 0)) else "+"
    return f"{re_part}{sign}{_fmt_sci(abs(im))}i"


_NUM = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
COMPLEX_RE = re.compile(
    rf"\s*(?P<re>[+-]?\s*{_NUM})(?:\s*(?P<sign>[+-])\s*(?P<im>{_NUM})\s*i)?\s*"
)


def parse_complex(text: str) -> ComplexAmp:
    """Parse ``RE``, or ``RE+IMi`` / ``RE-IMi``; raise ValueError otherwise."""
    m = COMPLEX_RE.fullmatch(text)
    if m is None:
        raise ValueError(f"malformed complex literal {text!r}")
    re_part = float(m["re"].replace(" ", ""))
    im_part = 0.0
    if m["im"] is not None:
        im_part = float(m["im"])
        if m["sign"] == "-":
            im_part = -im_part
    return complex(re_part, im_part)


@dataclass(frozen=True)
class AmplitudeTable:
    """Immutable map ``(source, target) -> <target|source>``.

    Only one direction of a pair needs storing; the other is synthesized
    as the complex conjugate on lookup.
    """

    _entries: Mapping[Leg, ComplexAmp] = field(default_factory=dict)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_entries", MappingProxyType(dict(self._entries)))

    @property
    def entries(self) -> Mapping[Leg, ComplexAmp]:
        return self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def __iter__(self) -> Iterator[Leg]:
        return iter(self._entries)

    def __contains__(self, leg: object) -> bool:
        return leg in self._entries

    def has(self, source: StateLabel, target: StateLabel) -> bool:
        return (source, target) in self._entries or (target, source) in self._entries

    def insert(
        self, source: StateLabel, target: StateLabel, amp: ComplexAmp
    ) -> "AmplitudeTable":
        amp = check_finite(amp)
        check_label(source)
        check_label(target)
        # a self-transition is its own reverse, so it must be real
        reverse = amp if source == target else self._entries.get((target, source))
        # == rather than bit comparison so that +0.0 and -0.0 agree
        if reverse is not None and amp != conjugate(reverse):
            raise ConjugateConflict(
                f"<{target}|{source}> = {amp!r} is not the conjugate of "
                f"<{source}|{target}> = {reverse!r}"
            )
        entries = dict(self._entries)
        entries[(source, target)] = amp
        return AmplitudeTable(entries)

    def lookup(self, source: StateLabel, target: StateLabel) -> ComplexAmp:
        """Amplitude ``<target|source>`` for the transition source -> target."""
        try:
            return self._entries[(source, target)]
        except KeyError:
            pass
        try:
            return conjugate(self._entries[(target, source)])
        except KeyError:
            raise MissingAmplitude(source, target) from None

    @classmethod
    def from_entries(cls, items) -> "AmplitudeTable":
        table = cls()
        for source, target, amp in items:
            table = table.insert(source, target, amp)
        return table


def table_insert(
    table: AmplitudeTable, source: StateLabel, target: StateLabel, amp: ComplexAmp
) -> AmplitudeTable:
    return table.insert(source, target, amp)


def table_lookup(
    table: AmplitudeTable, source: StateLabel, target: StateLabel
) -> ComplexAmp:
    return table.lookup(source, target)
