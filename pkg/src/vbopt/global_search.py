"""Differential-evolution recombination of the local search units.

A trial mean is built from three distinct donor units (rand/1 mutation with
exponential crossover), evaluated once, wrapped into a new unit that inherits
the adaptive parameters of its nearest donor, and inserted in place of a
tournament-selected victim if it wins under the feasibility rules on raw
violations (boundaries are unit-local, so only raw values are comparable
across units).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .problems.core import EvalCounter, Evaluation, ProblemSpec, evaluate
from .ranking import A_BETTER, B_BETTER, RankedSolution, deb_compare
from .unit import VieUnit, init_unit


@dataclass(frozen=True)
class DEParams:
    F: float = 0.5
    CR: float = 0.9

    def __post_init__(self):
        if self.F <= 0:
            raise ValueError("F must be positive")
        if not 0.0 <= self.CR <= 1.0:
            raise ValueError("CR must lie in [0, 1]")


@dataclass
class GlobalOutcome:
    evaluation: Evaluation
    improved_best: bool
    replaced_unit: bool


def de_rand1_exponential(r1: VieUnit, r2: VieUnit, r3: VieUnit,
                         params: DEParams, rng: np.random.Generator,
                         lower: np.ndarray, upper: np.ndarray) -> np.ndarray:
    """rand/1 mutant crossed into the base vector over a contiguous block."""
    mutant = r1.x + params.F * (r2.x - r3.x)
    n = mutant.shape[0]
    trial = r1.x.copy()
    k = int(rng.integers(n))
    copied = 0
    while copied < n:
        trial[(k + copied) % n] = mutant[(k + copied) % n]
        copied += 1
        if not rng.random() < params.CR:
            break
    return np.clip(trial, lower, upper)


def select_replacement_target(population: list[VieUnit],
                              rng: np.random.Generator) -> int:
    """Binary tournament for the slot to overwrite: the deb-worse of two."""
    i, j = rng.choice(len(population), size=2, replace=False)
    a = RankedSolution(population[i].f_x, population[i].raw_violation)
    b = RankedSolution(population[j].f_x, population[j].raw_violation)
    return int(i) if deb_compare(a, b) == B_BETTER else int(j)


def inherit_parameters(trial_unit: VieUnit, donors: tuple[VieUnit, VieUnit, VieUnit],
                       trial_mean: np.ndarray) -> None:
    """Copy adaptive state from the nearest donor; keep defaults if it converged.

    Ties on distance go to the earliest donor in (r1, r2, r3) order.
    """
    dists = [float(np.linalg.norm(trial_mean - d.x)) for d in donors]
    nearest = donors[int(np.argmin(dists))]
    if nearest.active:
        trial_unit.copy_parameters_from(nearest)
        # the trial's own evaluation joins the inherited history, like any
        # accepted parent would
        trial_unit.ancestors.append(RankedSolution(trial_unit.f_x,
                                                   trial_unit.raw_violation))


def global_step(population: list[VieUnit], problem: ProblemSpec,
                rng: np.random.Generator, counter: EvalCounter,
                params: DEParams,
                global_best: RankedSolution | None) -> GlobalOutcome:
    """One DE trial: exactly one evaluation; replaces the victim iff it wins."""
    if len(population) < 4:
        raise ValueError("global step needs a victim plus three donors")
    victim = select_replacement_target(population, rng)
    pool = [i for i in range(len(population)) if i != victim]
    d1, d2, d3 = rng.choice(len(pool), size=3, replace=False)
    donors = (population[pool[int(d1)]], population[pool[int(d2)]],
              population[pool[int(d3)]])
    trial_mean = de_rand1_exponential(*donors, params, rng,
                                      problem.lower, problem.upper)
    trial_unit, ev = init_unit(problem, rng, counter, x0=trial_mean)
    inherit_parameters(trial_unit, donors, trial_mean)

    trial_ranked = RankedSolution(ev.f, ev.violation)
    victim_ranked = RankedSolution(population[victim].f_x,
                                   population[victim].raw_violation)
    replaced = deb_compare(trial_ranked, victim_ranked) == A_BETTER
    if replaced:
        population[victim] = trial_unit
    improved = (global_best is None
                or deb_compare(trial_ranked, global_best) == A_BETTER)
    return GlobalOutcome(evaluation=ev, improved_best=improved,
                         replaced_unit=replaced)
