"""The main optimization loop.

A population of local search units is initialized uniformly in the box
(pop_size evaluations), then every further evaluation is allocated by the
scheduler either to one step of the best active unit or to one DE
recombination trial. The global best is updated on every evaluation made
anywhere (initialization, rejected offspring, DE trials included). The
population restarts when every unit has converged or the whole population
has collapsed onto the best solution.

Reproducibility: a run owns a single numpy Generator seeded from the config.
Draws happen in a fixed order: unit initialization in population-index order;
then per loop cycle a scheduler draw (outside warmup) followed by the chosen
branch's draws (offspring sampling, or tournament/donor/crossover draws).
Identical configs therefore produce identical RunResults.
"""

from __future__ import annotations

from dataclasses import dataclass, field, asdict
from typing import Optional

import numpy as np

from .global_search import DEParams, global_step
from .problems.core import BudgetExhausted, EvalCounter, Evaluation, lookup
from .ranking import A_BETTER, RankedSolution, deb_compare
from .scheduler import (BOTH, GLOBAL, LOCAL, SchedulerState, choose_component,
                        choose_component_random, record_global_outcome,
                        record_init_evals, record_local_outcome)
from .unit import VieUnit, init_unit, local_step

MODES = ("full", "local-only", "global-only", "random-scheduler")
ENGINEERING = ("welded-beam", "pressure-vessel", "spring", "cantilever")
DEFAULT_CHECKPOINTS = (5000, 50000, 500000)
RESTART_TOL = 1e-10
VIOLATION_TIERS = (1.0, 0.01, 0.0001)


def default_budget(problem_name: str) -> int:
    return 200000 if problem_name in ENGINEERING else 500000


@dataclass
class RunConfig:
    problem: str
    pop_size: int = 40
    max_nfes: Optional[int] = None
    target_accuracy: float = 1e-4
    seed: int = 0
    mode: str = "full"
    de_params: DEParams = field(default_factory=DEParams)
    trace_enabled: bool = False
    checkpoints: tuple = DEFAULT_CHECKPOINTS
    capture_checkpoints: bool = False
    # scheduler constants, exposed for parameter sweeps
    c_alpha: float = 0.1
    beta_R: float = 0.05
    L: float = 0.18

    def resolved_budget(self) -> int:
        return self.max_nfes if self.max_nfes is not None else default_budget(self.problem)

    def validate(self) -> None:
        lookup(self.problem)
        if self.pop_size < 4:
            raise ValueError("pop_size must be at least 4")
        if self.resolved_budget() <= 0:
            raise ValueError("max_nfes must be positive")
        if self.target_accuracy <= 0:
            raise ValueError("target_accuracy must be positive")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")


@dataclass
class CheckpointRecord:
    nfes: int
    error: float
    violated_counts: tuple[int, int, int]
    mean_violation: float


@dataclass
class RunResult:
    problem: str
    seed: int
    mode: str
    best_f: float
    best_violation: float
    best_x: np.ndarray
    nfes_used: int
    nfes_to_success: Optional[int]
    success: bool
    checkpoints: list[CheckpointRecord]
    restarts: int
    trace: Optional[list[dict]]

    def to_dict(self) -> dict:
        return {
            "problem": self.problem,
            "seed": self.seed,
            "mode": self.mode,
            "best_f": self.best_f,
            "best_violation": self.best_violation,
            "best_x": self.best_x.tolist(),
            "nfes_used": self.nfes_used,
            "nfes_to_success": self.nfes_to_success,
            "success": self.success,
            "checkpoints": [asdict(c) for c in self.checkpoints],
            "restarts": self.restarts,
        }


def select_local_unit(population: list[VieUnit]) -> Optional[int]:
    """Best-ranked active unit by (objective, raw violation), or None.

    Linear scan with strictly-better replacement, so ties keep the
    lowest-index unit exactly as a stable full ranking would.
    """
    best_idx: Optional[int] = None
    best_rs: Optional[RankedSolution] = None
    for idx, u in enumerate(population):
        if not u.active:
            continue
        rs = RankedSolution(u.f_x, u.raw_violation)
        if best_rs is None or deb_compare(rs, best_rs) == A_BETTER:
            best_idx, best_rs = idx, rs
    return best_idx


def check_restart(population: list[VieUnit], best: RankedSolution) -> bool:
    """Restart when nothing can move or everything sits on the best solution."""
    if all(not u.active for u in population):
        return True
    size = len(population)
    mean_f = sum(u.f_x for u in population) / size
    mean_v = sum(u.viol_x for u in population) / size
    return (abs(mean_f - best.f) <= RESTART_TOL * max(1.0, abs(best.f))
            and abs(mean_v - best.violation) <= RESTART_TOL)


class _Run:
    def __init__(self, config: RunConfig):
        config.validate()
        self.config = config
        self.problem = lookup(config.problem)
        self.rng = np.random.default_rng(config.seed)
        self.counter = EvalCounter(config.resolved_budget())
        self.sched = SchedulerState(n=self.problem.n, c_alpha=config.c_alpha,
                                    beta_R=config.beta_R, L=config.L)
        self.best: Optional[RankedSolution] = None
        self.best_x: Optional[np.ndarray] = None
        self.best_g: Optional[np.ndarray] = None
        self.nfes_to_success: Optional[int] = None
        self.restarts = 0
        self.trace: Optional[list[dict]] = [] if config.trace_enabled else None
        self.pending_checkpoints = sorted(config.checkpoints)
        self.checkpoint_records: list[CheckpointRecord] = []
        self.population: list[VieUnit] = []

    # -- bookkeeping ------------------------------------------------------

    def note_eval(self, ev: Evaluation, branch: str) -> bool:
        ranked = RankedSolution(ev.f, ev.violation)
        improved = self.best is None or deb_compare(ranked, self.best) == A_BETTER
        if improved:
            self.best = ranked
            self.best_x = ev.x.copy()
            self.best_g = ev.g.copy()
        if (self.nfes_to_success is None and self.best.violation == 0.0
                and self.best.f - self.problem.f_star <= self.config.target_accuracy):
            self.nfes_to_success = ev.nfes_index
        while self.pending_checkpoints and ev.nfes_index >= self.pending_checkpoints[0]:
            self.checkpoint_records.append(self._snapshot(self.pending_checkpoints.pop(0)))
        if self.trace is not None:
            total = self.sched.N_evals_local + self.sched.N_evals_global
            self.trace.append({
                "nfes": ev.nfes_index,
                "branch": branch,
                "f_best": self.best.f,
                "violation_best": self.best.violation,
                "P_succ_local": self.sched.P_succ_local,
                "P_succ_global": self.sched.P_succ_global,
                "freq_local": (self.sched.N_evals_local / total) if total else 0.0,
            })
        return improved

    def _snapshot(self, nfes: int) -> CheckpointRecord:
        g = self.best_g if self.best_g is not None else np.zeros(0)
        counts = tuple(int(np.sum(g > tier)) for tier in VIOLATION_TIERS)
        mean_v = float(np.mean(np.maximum(g, 0.0))) if g.size else 0.0
        return CheckpointRecord(
            nfes=nfes,
            error=self.best.f - self.problem.f_star if self.best else float("inf"),
            violated_counts=counts,
            mean_violation=mean_v,
        )

    def done(self) -> bool:
        return self.nfes_to_success is not None and not self.config.capture_checkpoints

    # -- population -------------------------------------------------------

    def init_population(self) -> None:
        units = []
        for _ in range(self.config.pop_size):
            unit, ev = init_unit(self.problem, self.rng, self.counter)
            self.note_eval(ev, "init")
            units.append(unit)
        self.population = units
        if self.config.mode != "global-only":
            record_init_evals(self.sched, self.config.pop_size)

    def active_count(self) -> int:
        return sum(1 for u in self.population if u.active)

    # -- branches ---------------------------------------------------------

    def step_local(self) -> bool:
        idx = select_local_unit(self.population)
        if idx is None:
            return False
        outcome = local_step(self.population[idx], self.problem, self.rng, self.counter)
        outcome.improved_global_best = self.note_eval(outcome.evaluation, LOCAL)
        record_local_outcome(self.sched, outcome)
        return True

    def step_global(self) -> None:
        outcome = global_step(self.population, self.problem, self.rng,
                              self.counter, self.config.de_params, self.best)
        outcome.improved_best = self.note_eval(outcome.evaluation, GLOBAL)
        record_global_outcome(self.sched, outcome)

    def decide(self) -> str:
        mode = self.config.mode
        if mode == "local-only":
            return LOCAL
        if mode == "global-only":
            return GLOBAL
        chooser = choose_component_random if mode == "random-scheduler" else choose_component
        return chooser(self.sched, self.active_count(), self.rng)

    # -- main loop --------------------------------------------------------

    def execute(self) -> RunResult:
        try:
            self.init_population()
            while not self.done():
                branch = self.decide()
                if branch == BOTH:
                    if self.active_count() > 0:
                        self.step_local()
                    if not self.done():
                        self.step_global()
                elif branch == LOCAL:
                    if not self.step_local():
                        # nothing active; fall through to the restart check
                        pass
                else:
                    self.step_global()
                if not self.done() and check_restart(self.population, self.best):
                    self.restarts += 1
                    self.sched.warmup_evals = 0
                    self.init_population()
        except BudgetExhausted:
            pass
        # a run that ends before crossing every configured checkpoint reports
        # its final state for the remaining ones
        if self.config.capture_checkpoints:
            while self.pending_checkpoints:
                self.checkpoint_records.append(self._snapshot(self.pending_checkpoints.pop(0)))
        return RunResult(
            problem=self.problem.name,
            seed=self.config.seed,
            mode=self.config.mode,
            best_f=self.best.f,
            best_violation=self.best.violation,
            best_x=self.best_x,
            nfes_used=self.counter.count,
            nfes_to_success=self.nfes_to_success,
            success=self.nfes_to_success is not None,
            checkpoints=self.checkpoint_records,
            restarts=self.restarts,
            trace=self.trace,
        )


def run(config: RunConfig) -> RunResult:
    return _Run(config).execute()
