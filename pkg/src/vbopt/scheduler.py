"""Adaptive allocation of evaluations between local and global search.

Each branch carries a moving-average success probability together with
cumulative improvement/evaluation counts. After a warmup window in which both
branches run every cycle, the branch is drawn with probability proportional
to a clamped mix of the two branch scores: each side is floored at a fraction
L of the other, which bounds the selection frequency of either branch to
[L/(1+L), 1/(1+L)] whenever both scores are positive.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .unit import StepOutcome
from .global_search import GlobalOutcome

LOCAL = "local"
GLOBAL = "global"
BOTH = "both"


@dataclass
class SchedulerState:
    n: int
    c_alpha: float = 0.1
    beta_R: float = 0.05
    L: float = 0.18
    P_succ_local: float = 0.5
    P_succ_global: float = 0.5
    N_succ_local: int = 0
    N_succ_global: int = 0
    N_evals_local: int = 0
    N_evals_global: int = 0
    # evaluations counted toward the warmup window; reset on restart while
    # the cumulative statistics above persist
    warmup_evals: int = 0

    def __post_init__(self):
        self.c_beta = self.beta_R * self.c_alpha

    @property
    def warmup_threshold(self) -> int:
        return 100 * self.n

    @property
    def in_warmup(self) -> bool:
        return self.warmup_evals < self.warmup_threshold

    def branch_scores(self) -> tuple[float, float]:
        p_local = (0.0 if self.N_evals_local == 0
                   else self.P_succ_local * self.N_succ_local / self.N_evals_local)
        p_global = (0.0 if self.N_evals_global == 0
                    else self.P_succ_global * self.N_succ_global / self.N_evals_global)
        return p_local, p_global

    def local_probability(self) -> float:
        p_local, p_global = self.branch_scores()
        p1 = max(p_local, self.L * p_global)
        p2 = max(p_global, self.L * p_local)
        if p1 + p2 == 0.0:
            return 0.5
        return p1 / (p1 + p2)


def choose_component(state: SchedulerState, active_local_units: int,
                     rng: np.random.Generator) -> str:
    if state.in_warmup:
        return BOTH
    if active_local_units > 0 and rng.random() < state.local_probability():
        return LOCAL
    return GLOBAL


def choose_component_random(state: SchedulerState, active_local_units: int,
                            rng: np.random.Generator) -> str:
    """Ablation scheduler: fair coin after the same warmup window."""
    if state.in_warmup:
        return BOTH
    if active_local_units > 0 and rng.random() < 0.5:
        return LOCAL
    return GLOBAL


def record_local_outcome(state: SchedulerState, outcome: StepOutcome) -> None:
    state.N_evals_local += 1
    state.warmup_evals += 1
    if outcome.improved_global_best:
        state.P_succ_local = (1 - state.c_alpha) * state.P_succ_local + state.c_alpha
        state.N_succ_local += 1
    elif outcome.boundary_violated:
        state.P_succ_local = (1 - state.c_beta) * state.P_succ_local
    else:
        state.P_succ_local = (1 - state.c_alpha) * state.P_succ_local


def record_global_outcome(state: SchedulerState, outcome: GlobalOutcome) -> None:
    state.N_evals_global += 1
    state.warmup_evals += 1
    if outcome.improved_best:
        state.P_succ_global = (1 - state.c_alpha) * state.P_succ_global + state.c_alpha
        state.N_succ_global += 1
    elif outcome.replaced_unit:
        state.P_succ_global = (1 - state.c_beta) * state.P_succ_global + state.c_beta
    else:
        state.P_succ_global = (1 - state.c_alpha) * state.P_succ_global


def record_init_evals(state: SchedulerState, count: int) -> None:
    """Population (re)initialization charges the local branch, no success credit."""
    state.N_evals_local += count
    state.warmup_evals += count
