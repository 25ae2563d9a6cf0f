"""Executable workbench for the untyped lambda calculus with an
arity-generic combinator basis, bracket abstraction, and the library of
arity-generic terms (tuples, selectors, iota, map, multiple fixed-point
combinators, one-point basis maker)."""

from .engine import (
    ReductionConfig,
    ReductionOutcome,
    Status,
    Verdict,
    beta_eta_equal,
    normalize,
    reduces_to,
    trace,
)
from .env import Env, standard_env
from .syntax import ParseError, parse, parse_meta, print_term
from .terms import (
    App,
    Const,
    Lam,
    LambdaError,
    Term,
    UnboundName,
    Var,
    alpha_eq,
    expand_consts,
    free_vars,
    size,
    substitute,
)

__all__ = [
    "App",
    "Const",
    "Env",
    "Lam",
    "LambdaError",
    "ParseError",
    "ReductionConfig",
    "ReductionOutcome",
    "Status",
    "Term",
    "UnboundName",
    "Var",
    "Verdict",
    "alpha_eq",
    "beta_eta_equal",
    "expand_consts",
    "free_vars",
    "normalize",
    "parse",
    "parse_meta",
    "print_term",
    "reduces_to",
    "size",
    "standard_env",
    "substitute",
    "trace",
]

__version__ = "0.1.0"
