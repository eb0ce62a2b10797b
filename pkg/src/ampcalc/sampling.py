"""Counter-based sampling: draw ``i`` depends only on ``(seed, i)``.

Each sample gets its own Philox stream keyed by the seed, with the sample
index placed in the second counter word so consecutive samples never share
counter blocks. Evaluation order therefore cannot change any value.
"""

from __future__ import annotations

import numpy as np

from .laws import SampleDomain

_MASK64 = (1 << 64) - 1


def sample_uniforms(seed: int, index: int, count: int) -> np.ndarray:
    """``count`` uniforms in [0, 1) for sample ``index`` under ``seed``."""
    if not 0 <= index <= _MASK64:
        raise ValueError("sample index must fit in 64 bits")
    bits = np.random.Philox(key=seed & _MASK64, counter=[0, index, 0, 0])
    return np.random.Generator(bits).random(count)


def sample_points(seed: int, index: int, domain: SampleDomain, arity: int) -> tuple[complex, ...]:
    u = sample_uniforms(seed, index, 2 * arity)
    return tuple(domain.point(float(u[2 * k]), float(u[2 * k + 1])) for k in range(arity))
