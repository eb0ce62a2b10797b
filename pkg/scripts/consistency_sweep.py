"""Residual table for every built-in rule across several seeds and sample counts.

    python3 scripts/consistency_sweep.py --seeds 0 1 2 --samples 1000
"""

from __future__ import annotations

import argparse
import time
from dataclasses import dataclass, field

from ampcalc.checker import LAWS, CheckConfig, run_full_suite
from ampcalc.laws import rule_from_selector


@dataclass
class SweepConfig:
    rules: list[str] = field(default_factory=lambda: [
        "canonical", "scale:2+1i", "power:0.7", "power:0.4", "explog",
        "broken:g_affine", "broken:f_offset",
    ])
    seeds: list[int] = field(default_factory=lambda: [0, 1, 2])
    samples: int = 1000
    tolerance: float = 1e-9


def run(cfg: SweepConfig) -> None:
    print(f"{'rule':<18}" + "".join(f"{law:>17}" for law in LAWS) + f"{'seconds':>10}")
    for sel in cfg.rules:
        rule = rule_from_selector(sel)
        worst = dict.fromkeys(LAWS, 0.0)
        start = time.perf_counter()
        for seed in cfg.seeds:
            for r in run_full_suite(rule, CheckConfig(cfg.samples, seed, cfg.tolerance)):
                worst[r.law] = max(worst[r.law], r.max_residual)
        elapsed = time.perf_counter() - start
        cells = "".join(f"{worst[law]:>12.2e} {'ok ' if worst[law] <= cfg.tolerance else 'BAD'}" + " " for law in LAWS)
        print(f"{sel:<18}{cells}{elapsed:>10.2f}")


def main() -> None:
    d = SweepConfig()
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--rules", nargs="+", default=d.rules)
    ap.add_argument("--seeds", nargs="+", type=int, default=d.seeds)
    ap.add_argument("--samples", type=int, default=d.samples)
    ap.add_argument("--tol", type=float, default=d.tolerance)
    a = ap.parse_args()
    run(SweepConfig(a.rules, a.seeds, a.samples, a.tol))


if __name__ == "__main__":
    main()
