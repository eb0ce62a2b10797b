"""Compare the rule evaluator with the Hilbert-space oracle on random diagrams.

    python3 scripts/oracle_sweep.py --diagrams 500 --max-depth 3
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

import numpy as np

from ampcalc.diagram import atomic_legs, labels
from ampcalc.evaluator import eval_diagram
from ampcalc.generators import filter_groups, max_fanout, random_diagram
from ampcalc.laws import canonical_rule
from ampcalc.oracle import oracle_eval, random_model, table_from_model


@dataclass
class OracleSweepConfig:
    diagrams: int = 200
    min_dim: int = 2
    max_dim: int = 8
    max_chain: int = 5
    max_fanout: int = 4
    max_depth: int = 2
    seed: int = 0


def run(cfg: OracleSweepConfig) -> float:
    rule = canonical_rule()
    worst, legs_total = 0.0, 0
    for k in range(cfg.diagrams):
        rng = np.random.default_rng([cfg.seed, k])
        e = random_diagram(rng, cfg.max_chain, cfg.max_fanout, cfg.max_depth)
        dim = max(int(rng.integers(cfg.min_dim, cfg.max_dim + 1)), max_fanout(e))
        m = random_model(dim, labels(e), filter_groups(e), seed=k)
        legs = atomic_legs(e)
        legs_total += len(legs)
        diff = abs(eval_diagram(e, table_from_model(m, legs), rule) - oracle_eval(m, e))
        worst = max(worst, diff)
    print(f"diagrams={cfg.diagrams} legs={legs_total} max |evaluator - oracle| = {worst:.3e}")
    return worst


def main() -> None:
    d = OracleSweepConfig()
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--diagrams", type=int, default=d.diagrams)
    ap.add_argument("--max-dim", type=int, default=d.max_dim)
    ap.add_argument("--max-depth", type=int, default=d.max_depth)
    ap.add_argument("--max-fanout", type=int, default=d.max_fanout)
    ap.add_argument("--seed", type=int, default=d.seed)
    a = ap.parse_args()
    run(OracleSweepConfig(diagrams=a.diagrams, max_dim=a.max_dim, max_depth=a.max_depth,
                          max_fanout=a.max_fanout, seed=a.seed))


if __name__ == "__main__":
    main()
