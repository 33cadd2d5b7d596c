"""Problem definitions and evaluation accounting.

A problem is a boxed minimization task with m inequality constraints in the
g_j(x) <= 0 convention. Every call to :func:`evaluate` goes through an
:class:`EvalCounter`, so the number of function evaluations (NFES) charged to
a run is exactly the number of evaluate calls made anywhere in the system.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np


class BudgetExhausted(Exception):
    """Raised when an evaluation is requested past the NFES budget."""


class UnknownProblem(KeyError):
    pass


@dataclass(frozen=True)
class ProblemSpec:
    """Immutable description of one benchmark problem."""

    name: str
    n: int
    lower: np.ndarray
    upper: np.ndarray
    m: int
    objective: Callable[[np.ndarray], float]
    constraints: Callable[[np.ndarray], np.ndarray]
    f_star: float
    x_star: Optional[np.ndarray] = None
    active_at_optimum: int = 0

    def __post_init__(self):
        lower = np.asarray(self.lower, dtype=float)
        upper = np.asarray(self.upper, dtype=float)
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)
        if lower.shape != (self.n,) or upper.shape != (self.n,):
            raise ValueError(f"{self.name}: bounds must have length n={self.n}")
        if not np.all(lower < upper):
            raise ValueError(f"{self.name}: requires lower_i < upper_i")
        if self.x_star is not None:
            xs = np.asarray(self.x_star, dtype=float)
            object.__setattr__(self, "x_star", xs)

    def self_check(self, tol: float = 1e-8) -> None:
        """Verify the bundled best-known solution, if any."""
        if self.x_star is None:
            return
        xs = self.x_star
        if not (np.all(self.lower <= xs) and np.all(xs <= self.upper)):
            raise AssertionError(f"{self.name}: x_star outside box")
        f = self.objective(xs)
        if abs(f - self.f_star) > tol:
            raise AssertionError(
                f"{self.name}: f(x_star)={f!r} vs f_star={self.f_star!r}"
            )
        if self.m:
            gmax = float(np.max(self.constraints(xs)))
            if gmax > tol:
                raise AssertionError(f"{self.name}: x_star infeasible, max g={gmax}")

    def metadata(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "m": self.m,
            "lower": self.lower.tolist(),
            "upper": self.upper.tolist(),
            "f_star": self.f_star,
        }

    def metadata_json(self) -> str:
        return json.dumps(self.metadata())


@dataclass
class EvalCounter:
    """Per-run evaluation budget. Not shared between runs."""

    budget: int
    count: int = 0

    def tick(self) -> int:
        if self.count >= self.budget:
            raise BudgetExhausted(f"budget of {self.budget} evaluations spent")
        self.count += 1
        return self.count

    @property
    def remaining(self) -> int:
        return self.budget - self.count


@dataclass(frozen=True)
class Evaluation:
    """Result of evaluating one point: objective, raw constraints, violation."""

    x: np.ndarray
    f: float
    g: np.ndarray
    violation: float
    nfes_index: int


def constraint_violation(g) -> float:
    """Unweighted sum of positive parts; zero iff every g_j <= 0."""
    g = np.asarray(g, dtype=float)
    if g.size == 0:
        return 0.0
    return float(np.sum(np.maximum(g, 0.0)))


def evaluate(problem: ProblemSpec, x: np.ndarray, counter: EvalCounter) -> Evaluation:
    x = np.asarray(x, dtype=float)
    if not (np.all(problem.lower <= x) and np.all(x <= problem.upper)):
        raise ValueError(f"{problem.name}: point outside box bounds")
    idx = counter.tick()
    f = float(problem.objective(x))
    g = np.asarray(problem.constraints(x), dtype=float)
    return Evaluation(x=x.copy(), f=f, g=g, violation=constraint_violation(g), nfes_index=idx)


_REGISTRY: dict[str, ProblemSpec] = {}


def register(spec: ProblemSpec) -> ProblemSpec:
    if spec.name in _REGISTRY:
        raise ValueError(f"duplicate problem name {spec.name}")
    _REGISTRY[spec.name] = spec
    return spec


def registry() -> list[ProblemSpec]:
    """All bundled problems, in registration order."""
    return list(_REGISTRY.values())


def lookup(name: str) -> ProblemSpec:
    try:
        return _REGISTRY[name]
    except KeyError:
        raise UnknownProblem(name) from None
