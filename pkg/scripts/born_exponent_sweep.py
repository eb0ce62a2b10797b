"""Solve for the Born exponent on random normalized modulus vectors.

Reports the worst |alpha - 2| per dimension, which should sit at
floating-point resolution.

    python3 scripts/born_exponent_sweep.py --trials 500
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

import numpy as np

from ampcalc.born import solve_exponent


@dataclass
class ExponentSweepConfig:
    dims: tuple[int, ...] = (2, 3, 4, 6, 8, 16, 32)
    trials: int = 200
    seed: int = 0
    floor: float = 1e-3


def random_moduli(rng: np.random.Generator, dim: int, floor: float) -> list[float]:
    while True:
        v = rng.standard_normal(dim) + 1j * rng.standard_normal(dim)
        m = np.abs(v) / np.linalg.norm(v)
        if m.min() >= floor and m.max() <= 1 - floor:
            return m.tolist()


def run(cfg: ExponentSweepConfig) -> None:
    rng = np.random.default_rng(cfg.seed)
    print(f"{'dim':>4} {'trials':>7} {'max |alpha-2|':>15}")
    for dim in cfg.dims:
        errs = [abs(solve_exponent(random_moduli(rng, dim, cfg.floor / dim)).alpha - 2)
                for _ in range(cfg.trials)]
        print(f"{dim:>4} {cfg.trials:>7} {max(errs):>15.3e}")


def main() -> None:
    d = ExponentSweepConfig()
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--dims", nargs="+", type=int, default=list(d.dims))
    ap.add_argument("--trials", type=int, default=d.trials)
    ap.add_argument("--seed", type=int, default=d.seed)
    a = ap.parse_args()
    run(ExponentSweepConfig(tuple(a.dims), a.trials, a.seed))


if __name__ == "__main__":
    main()
