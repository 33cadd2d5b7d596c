"""Constrained black-box optimizer built from viability-boundary local
search units recombined by differential evolution, plus a benchmark harness.
"""

from .backend import BACKEND_NAME
from .engine import RunConfig, RunResult, run
from .global_search import DEParams
from .problems.core import (Evaluation, EvalCounter, ProblemSpec,
                            constraint_violation, evaluate, lookup, registry)
from .ranking import RankedSolution, deb_compare, rank_population

__all__ = [
    "BACKEND_NAME", "RunConfig", "RunResult", "run", "DEParams",
    "Evaluation", "EvalCounter", "ProblemSpec", "constraint_violation",
    "evaluate", "lookup", "registry", "RankedSolution", "deb_compare",
    "rank_population",
]

__version__ = "0.1.0"
