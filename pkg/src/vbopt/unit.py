"""One elitist local search unit with adaptive viability boundaries.

Each unit is a (1+1) evolution strategy over a square-root covariance factor
A (C = A @ A.T), a global step size sigma adapted by a success-rule, and a
set of per-constraint viability boundaries b_j that start loose enough to
contain the unit's initial point and tighten monotonically toward 0. An
offspring is *viable* when g_j(y) <= b_j for every j (and, once a feasible
point has been seen, f(y) <= b_f). Non-viable offspring are rejected and
their directions feed an active covariance shrink; viable offspring compete
with the parent under the feasibility rules measured against the boundaries.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .backend import chol_rank_one, constraint_downdate
from .problems.core import Evaluation, EvalCounter, ProblemSpec, evaluate
from .ranking import B_BETTER, RankedSolution, better_or_tie, deb_compare

INV_REFRESH_EVERY = 50
RESAMPLE_LIMIT = 10
SIGMA_MIN, SIGMA_MAX = 1e-20, 1e20
PATH_TOL = 1e-12
SIGMA_DIVERGENCE = 1e8
COND_LIMIT = 1e14


@dataclass(frozen=True)
class UnitConstants:
    """Dimension-derived adaptation constants."""

    n: int
    c: float
    c_c: float
    c_p: float
    d: float
    B: float
    c_cov_plus: float
    c_cov_minus: float
    P_thresh: float
    P_target: float

    @classmethod
    def for_dimension(cls, n: int) -> "UnitConstants":
        return cls(
            n=n,
            c=2.0 / (n + 2),
            c_c=1.0 / (n + 2),
            c_p=1.0 / 12.0,
            d=1.0 + n / 2.0,
            B=0.1 / (n + 2),
            c_cov_plus=2.0 / (n ** 2 + 6),
            c_cov_minus=0.4 / (n ** 1.6 + 1),
            P_thresh=0.44,
            P_target=2.0 / 11.0,
        )


@dataclass
class StepOutcome:
    evaluation: Evaluation
    accepted: bool
    boundary_violated: bool
    converged_now: bool
    improved_global_best: bool = False


@dataclass
class VieUnit:
    x: np.ndarray
    f_x: float
    g_x: np.ndarray
    viol_x: float
    sigma: float
    A: np.ndarray
    A_inv: np.ndarray
    s: np.ndarray
    v: np.ndarray               # (m, n) per-constraint direction accumulators
    P_succ: float
    p_succ: np.ndarray          # (m,) per-constraint success probabilities
    b: np.ndarray               # (m,) viability boundaries, >= 0
    b_f: Optional[float]
    ancestors: deque            # up to 5 most recent parents as RankedSolution
    consts: UnitConstants
    active: bool = True
    iterations: int = 0
    updates_since_refresh: int = 0
    skipped_downdates: int = 0

    @property
    def raw_violation(self) -> float:
        return self.viol_x

    def shifted_violation_of(self, g: np.ndarray) -> float:
        if g.size == 0:
            return 0.0
        return float(np.sum(np.maximum(g - self.b, 0.0)))

    def copy_parameters_from(self, other: "VieUnit") -> None:
        """Adopt another unit's adaptive state (mean and parent eval excluded)."""
        self.sigma = other.sigma
        self.A = other.A.copy()
        self.A_inv = other.A_inv.copy()
        self.s = other.s.copy()
        self.v = other.v.copy()
        self.P_succ = other.P_succ
        self.p_succ = other.p_succ.copy()
        self.b = other.b.copy()
        self.b_f = other.b_f
        self.ancestors = deque(other.ancestors, maxlen=5)


def init_unit(problem: ProblemSpec, rng: np.random.Generator,
              counter: EvalCounter,
              x0: Optional[np.ndarray] = None) -> tuple[VieUnit, Evaluation]:
    """Create a unit at a uniform random point (one evaluation).

    The boundaries are relaxed to contain the initial point, so the unit
    starts viable by construction. The initial factor is diagonal with the
    per-dimension box widths relative to their mean, and sigma is 0.3 times
    the mean width, so the first sampling ellipsoid matches the box aspect.
    """
    n = problem.n
    consts = UnitConstants.for_dimension(n)
    widths = problem.upper - problem.lower
    mean_width = float(np.mean(widths))
    if x0 is None:
        x0 = problem.lower + rng.random(n) * widths
    ev = evaluate(problem, x0, counter)
    b = np.maximum(ev.g, 0.0)
    b_f = ev.f if ev.violation == 0.0 else None
    diag = widths / mean_width
    unit = VieUnit(
        x=ev.x.copy(), f_x=ev.f, g_x=ev.g.copy(), viol_x=ev.violation,
        sigma=0.3 * mean_width,
        A=np.diag(diag), A_inv=np.diag(1.0 / diag),
        s=np.zeros(n),
        v=np.zeros((problem.m, n)),
        P_succ=consts.P_target,
        p_succ=np.ones(problem.m),
        b=b, b_f=b_f,
        ancestors=deque([RankedSolution(ev.f, ev.violation)], maxlen=5),
        consts=consts,
    )
    return unit, ev


def sample_offspring(unit: VieUnit, problem: ProblemSpec,
                     rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    """Draw y = x + sigma*A*z; resample out-of-box draws, then clamp."""
    n = unit.consts.n
    for _ in range(RESAMPLE_LIMIT):
        z = rng.standard_normal(n)
        y = unit.x + unit.sigma * (unit.A @ z)
        if np.all(y >= problem.lower) and np.all(y <= problem.upper):
            return y, z
    y = np.clip(y, problem.lower, problem.upper)
    return y, z


def update_step_size(unit: VieUnit) -> None:
    c = unit.consts
    ratio = c.P_target / (1.0 - c.P_target)
    exponent = (unit.P_succ - ratio * (1.0 - unit.P_succ)) / c.d
    unit.sigma = float(np.clip(unit.sigma * np.exp(exponent), SIGMA_MIN, SIGMA_MAX))


def _apply_rank_one(unit: VieUnit, alpha: float, beta: float,
                    direction: np.ndarray) -> bool:
    """Route one factor update through the kernel backend. False if skipped."""
    result = chol_rank_one(unit.A, unit.A_inv, alpha, beta, direction)
    if result is None:
        unit.skipped_downdates += 1
        return False
    unit.A, unit.A_inv = result
    unit.updates_since_refresh += 1
    if unit.updates_since_refresh >= INV_REFRESH_EVERY:
        unit.A_inv = np.linalg.inv(unit.A)
        unit.updates_since_refresh = 0
    return True


def on_success_covariance_update(unit: VieUnit, z: np.ndarray) -> None:
    c = unit.consts
    if unit.P_succ < c.P_thresh:
        unit.s = (1.0 - c.c) * unit.s + np.sqrt(c.c * (2.0 - c.c)) * (unit.A @ z)
        alpha = 1.0 - c.c_cov_plus
    else:
        unit.s = (1.0 - c.c) * unit.s
        alpha = 1.0 - c.c_cov_plus + c.c_cov_plus * c.c * (2.0 - c.c)
    _apply_rank_one(unit, alpha, c.c_cov_plus, unit.s)


def fifth_ancestor_active_update(unit: VieUnit, z: np.ndarray) -> None:
    """Shrink variance along a step that lost to the fifth-oldest parent."""
    c = unit.consts
    _apply_rank_one(unit, np.sqrt(1.0 + c.c_cov_minus), -c.c_cov_minus, unit.A @ z)


def constraint_direction_update(unit: VieUnit, z: np.ndarray,
                                exceeded: np.ndarray) -> None:
    """Accumulate the exceeded-boundary directions and shrink A along them."""
    c = unit.consts
    step = unit.A @ z
    idx = np.flatnonzero(exceeded)
    unit.v[idx] = (1.0 - c.c_c) * unit.v[idx] + c.c_c * step
    coeff = c.B / len(idx)
    A_new, skipped = constraint_downdate(unit.A, unit.A_inv, unit.v[idx], coeff)
    unit.skipped_downdates += skipped
    unit.A = np.asarray(A_new)
    try:
        unit.A_inv = np.linalg.inv(unit.A)
    except np.linalg.LinAlgError:
        unit.active = False
        return
    unit.updates_since_refresh = 0


def update_boundaries(unit: VieUnit, ev: Evaluation) -> None:
    """Halve the gap between each boundary and the accepted offspring."""
    if unit.b.size:
        unit.b = np.maximum(0.0, np.minimum(unit.b, ev.g + (unit.b - ev.g) / 2.0))
    if ev.violation == 0.0:
        unit.b_f = ev.f


VIABLE_ACCEPTED = "viable-accepted"
VIABLE_REJECTED = "viable-rejected"
BOUNDARY_VIOLATED = "boundary-violated"


def viability_probability_update(unit: VieUnit, kind: str,
                                 exceeded: Optional[np.ndarray]) -> None:
    c_p = unit.consts.c_p
    if kind == VIABLE_ACCEPTED:
        unit.P_succ = (1.0 - c_p) * unit.P_succ + c_p
        unit.p_succ = (1.0 - c_p) * unit.p_succ + c_p
    elif kind == BOUNDARY_VIOLATED:
        unit.p_succ[exceeded] = (1.0 - c_p) * unit.p_succ[exceeded]
        if float(np.min(unit.p_succ)) < 0.5:
            unit.P_succ = (1.0 - c_p) * unit.P_succ
    elif kind == VIABLE_REJECTED:
        unit.P_succ = (1.0 - c_p) * unit.P_succ
    else:
        raise ValueError(kind)


def check_convergence(unit: VieUnit) -> bool:
    """Flag the unit inactive on path collapse, divergence, or ill-conditioning."""
    C_diag = np.sum(unit.A * unit.A, axis=1)
    if float(np.max(C_diag)) * unit.sigma > SIGMA_DIVERGENCE:
        unit.active = False
        return True
    # s starts at zero, so the collapse test only arms after n iterations and
    # once the path has actually picked up a successful step
    if unit.iterations > unit.consts.n and np.any(unit.s != 0.0):
        if float(np.linalg.norm(unit.s)) * unit.sigma < PATH_TOL:
            unit.active = False
            return True
    svals = np.linalg.svd(unit.A, compute_uv=False)
    if svals[-1] <= 0.0 or (svals[0] / svals[-1]) ** 2 > COND_LIMIT:
        unit.active = False
        return True
    return False


def local_step(unit: VieUnit, problem: ProblemSpec, rng: np.random.Generator,
               counter: EvalCounter) -> StepOutcome:
    """One offspring: sample, evaluate, adapt. Consumes exactly one evaluation."""
    y, z = sample_offspring(unit, problem, rng)
    ev = evaluate(problem, y, counter)
    unit.iterations += 1

    exceeded = ev.g > unit.b if unit.b.size else np.zeros(0, dtype=bool)
    offspring_raw = RankedSolution(ev.f, ev.violation)
    # snapshot the queue before any push so the fifth-ancestor test sees the
    # parent's own five ancestors
    oldest = unit.ancestors[0] if len(unit.ancestors) == 5 else None

    accepted = False
    if exceeded.size and bool(np.any(exceeded)):
        kind = BOUNDARY_VIOLATED
        constraint_direction_update(unit, z, exceeded)
    elif unit.b_f is not None and ev.f > unit.b_f:
        kind = VIABLE_REJECTED
    else:
        offspring = RankedSolution(ev.f, unit.shifted_violation_of(ev.g))
        parent = RankedSolution(unit.f_x, unit.shifted_violation_of(unit.g_x))
        if better_or_tie(offspring, parent):
            kind = VIABLE_ACCEPTED
            accepted = True
            unit.x = ev.x.copy()
            unit.f_x = ev.f
            unit.g_x = ev.g.copy()
            unit.viol_x = ev.violation
            unit.ancestors.append(offspring_raw)
            update_boundaries(unit, ev)
            on_success_covariance_update(unit, z)
        else:
            kind = VIABLE_REJECTED

    if kind != BOUNDARY_VIOLATED and oldest is not None \
            and deb_compare(offspring_raw, oldest) == B_BETTER:
        fifth_ancestor_active_update(unit, z)

    viability_probability_update(unit, kind,
                                 exceeded if kind == BOUNDARY_VIOLATED else None)
    update_step_size(unit)
    converged_now = check_convergence(unit) if unit.active else False

    return StepOutcome(
        evaluation=ev,
        accepted=accepted,
        boundary_violated=(kind == BOUNDARY_VIOLATED),
        converged_now=converged_now,
    )
