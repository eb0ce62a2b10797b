"""Amplitude-composition calculus for series/parallel quantum processes."""

from .born import BornExponent, born_probabilities, completeness_residual, probability, solve_exponent
from .checker import CheckConfig, LawReport, run_full_suite
from .core import AmplitudeTable, conjugate, format_complex, parse_complex
from .diagram import Atomic, Parallel, Series, atomic_legs, endpoints, validate
from .dsl import Diagnostic, DslSyntaxError, parse_amp_table, parse_diagram, print_diagram
from .evaluator import eval_both_orders, eval_diagram
from .laws import (
    CompositionRule,
    Regraduation,
    SampleDomain,
    apply_regraduation,
    broken_rule,
    canonical_rule,
    invert_regraduation,
    regraduated_rule,
    rule_from_selector,
)
from .oracle import HilbertModel, model_amplitude, oracle_eval, random_model, table_from_model

__version__ = "0.1.0"
