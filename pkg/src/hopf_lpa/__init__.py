"""Hopf graphs of groups with ramification data, and the classification of
their Leavitt path algebras cross-checked against direct graph computations."""

from .classifier import NOT_APPLICABLE, ONE, ZERO, Classification, classify
from .cross_check import CrossCheckReport, run_cross_check, default_sweep, evaluate, run_sweep
from .digraph import MultiDigraph, scc
from .errors import HopfError
from .graph_monoid import GraphMonoid, MonoidDecision, decide_equal, ibn_test
from .groups import (
    INFINITE,
    TRIVIAL,
    FiniteGroup,
    IntegerGroup,
    build_finite_group,
    build_group,
    conjugacy_classes,
)
from .hopf_graph import build_delta_lambda, build_gamma, build_window
from .ramification import RamificationData, parse_ramification
from .semigroup import SemigroupReport, analyze

__version__ = "0.1.0"

__all__ = [
    "INFINITE", "TRIVIAL", "ZERO", "ONE", "NOT_APPLICABLE",
    "FiniteGroup", "IntegerGroup", "build_group", "build_finite_group", "conjugacy_classes",
    "RamificationData", "parse_ramification", "SemigroupReport", "analyze",
    "MultiDigraph", "scc", "build_gamma", "build_delta_lambda", "build_window",
    "GraphMonoid", "MonoidDecision", "decide_equal", "ibn_test",
    "Classification", "classify", "CrossCheckReport", "run_cross_check", "evaluate",
    "default_sweep", "run_sweep", "HopfError",
]
