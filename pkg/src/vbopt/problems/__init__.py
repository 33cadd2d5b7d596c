"""Benchmark problem suite: importing this package registers all problems."""

from .core import (BudgetExhausted, EvalCounter, Evaluation, ProblemSpec,
                   UnknownProblem, constraint_violation, evaluate, lookup,
                   registry)
from . import cec2006  # noqa: F401  (registration side effect)
from . import engineering  # noqa: F401

for _spec in registry():
    _spec.self_check()
del _spec

__all__ = [
    "BudgetExhausted", "EvalCounter", "Evaluation", "ProblemSpec",
    "UnknownProblem", "constraint_violation", "evaluate", "lookup", "registry",
]
