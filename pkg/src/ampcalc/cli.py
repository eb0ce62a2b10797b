"""Command-line entry point: ``ampcalc parse|eval|check|exponent|oracle-compare``.

Exit codes: 0 success, 1 a law check or oracle comparison failed, 2 bad
input or usage.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path
from typing import Sequence

from .born import probability, solve_exponent
from .checker import CheckConfig, all_pass, run_full_suite
from .core import format_complex
from .diagram import Atomic, Parallel, ProcessExpr, Series, atomic_legs, labels
from .dsl import DslSyntaxError, parse_amp_table, parse_diagram, print_diagram
from .errors import AmplitudeError
from .evaluator import eval_diagram
from .generators import filter_groups
from .laws import canonical_rule, rule_from_selector
from .oracle import oracle_eval, random_model, table_from_model

ORACLE_TOL = 1e-10


class UsageError(Exception):
    pass


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_diagram(path: str) -> ProcessExpr:
    try:
        return parse_diagram(_read(path))
    except DslSyntaxError as exc:
        d = exc.diagnostic
        raise UsageError(f"{path}:{d.line}:{d.column}: {d.message}") from None


def render_tree(e: ProcessExpr, indent: int = 0) -> list[str]:
    pad = "  " * indent
    if isinstance(e, Atomic):
        return [f"{pad}Atomic {e.source} -> {e.target}"]
    if isinstance(e, Series):
        return [f"{pad}Series"] + render_tree(e.first, indent + 1) + render_tree(e.second, indent + 1)
    lines = [f"{pad}Parallel ({len(e.branches)} branches)"]
    for b in e.branches:
        lines += render_tree(b, indent + 1)
    return lines


def cmd_parse(args) -> int:
    e = _load_diagram(args.diagram)
    print(print_diagram(e))
    print("\n".join(render_tree(e)))
    return 0


def cmd_eval(args) -> int:
    e = _load_diagram(args.diagram)
    try:
        table = parse_amp_table(_read(args.amps))
    except DslSyntaxError as exc:
        d = exc.diagnostic
        raise UsageError(f"{args.amps}:{d.line}:{d.column}: {d.message}") from None
    rule = _rule(args.rule)
    if not args.alpha > 0:
        raise UsageError("--alpha must be positive")
    amp = eval_diagram(e, table, rule)
    print(f"amplitude = {format_complex(amp)}")
    print(f"probability = {probability(amp, args.alpha):.12g}")
    return 0


def _rule(selector: str):
    try:
        return rule_from_selector(selector)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def cmd_check(args) -> int:
    rule = _rule(args.rule)
    try:
        cfg = CheckConfig(samples=args.samples, seed=args.seed, tolerance=args.tol)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    reports = run_full_suite(rule, cfg)
    for r in reports:
        print(r.render())
    return 0 if all_pass(reports) else 1


def cmd_exponent(args) -> int:
    try:
        moduli = [float(tok) for tok in args.moduli.split(",")]
    except ValueError:
        raise UsageError(f"--moduli must be comma-separated reals, got {args.moduli!r}") from None
    alpha = solve_exponent(moduli, args.tol)
    print(f"alpha = {alpha.alpha:.12f}")
    return 0


def cmd_oracle_compare(args) -> int:
    e = _load_diagram(args.diagram)
    model = random_model(args.dim, labels(e), filter_groups(e), args.seed)
    table = table_from_model(model, atomic_legs(e))
    via_rules = eval_diagram(e, table, canonical_rule())
    via_oracle = oracle_eval(model, e)
    diff = abs(via_rules - via_oracle)
    print(f"evaluator = {format_complex(via_rules)}")
    print(f"oracle = {format_complex(via_oracle)}")
    print(f"difference = {diff:.3e}")
    return 0 if diff <= ORACLE_TOL else 1


def _seed(text: str) -> int:
    value = int(text)
    if not 0 <= value < 2**64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ampcalc", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="pretty-print a diagram file")
    p.add_argument("diagram")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("eval", help="amplitude and probability of a diagram")
    p.add_argument("diagram")
    p.add_argument("amps")
    p.add_argument("--rule", default="canonical")
    p.add_argument("--alpha", type=float, default=2.0)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("check", help="sample the consistency laws of a rule")
    p.add_argument("rule")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--seed", type=_seed, default=42)
    p.add_argument("--tol", type=float, default=1e-9)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("exponent", help="solve sum m_i**alpha = 1 for alpha")
    p.add_argument("--moduli", required=True)
    p.add_argument("--tol", type=float, default=1e-10)
    p.set_defaults(func=cmd_exponent)

    p = sub.add_parser("oracle-compare", help="evaluator vs Hilbert-space oracle")
    p.add_argument("diagram")
    p.add_argument("--dim", type=int, default=4)
    p.add_argument("--seed", type=_seed, default=42)
    p.set_defaults(func=cmd_oracle_compare)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (AmplitudeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
