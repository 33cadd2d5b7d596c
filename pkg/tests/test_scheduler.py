"""Branch scheduler: warmup, clamped selection probability, credit updates."""

import numpy as np
import pytest

from vbopt.global_search import GlobalOutcome
from vbopt.scheduler import (BOTH, GLOBAL, LOCAL, SchedulerState,
                             choose_component, choose_component_random,
                             record_global_outcome, record_init_evals,
                             record_local_outcome)


class FakeLocalOutcome:
    def __init__(self, improved=False, boundary=False):
        self.improved_global_best = improved
        self.boundary_violated = boundary


def fake_global(improved=False, replaced=False):
    return GlobalOutcome(evaluation=None, improved_best=improved,
                         replaced_unit=replaced)


def test_warmup_lasts_100n_evaluations():
    state = SchedulerState(n=3)
    rng = np.random.default_rng(0)
    assert state.warmup_threshold == 300
    assert choose_component(state, 1, rng) == BOTH
    state.warmup_evals = 299
    assert choose_component(state, 1, rng) == BOTH
    state.warmup_evals = 300
    assert choose_component(state, 1, rng) in (LOCAL, GLOBAL)


def test_initial_post_warmup_choice_is_fair():
    state = SchedulerState(n=1)
    state.warmup_evals = state.warmup_threshold
    assert state.local_probability() == 0.5  # no evals recorded yet


def test_global_forced_when_no_active_units():
    state = SchedulerState(n=1)
    state.warmup_evals = state.warmup_threshold
    rng = np.random.default_rng(0)
    for chooser in (choose_component, choose_component_random):
        for _ in range(20):
            assert chooser(state, 0, rng) == GLOBAL


def test_local_probability_clamped_by_mixing_floor():
    state = SchedulerState(n=1, L=0.18)
    lo, hi = state.L / (1 + state.L), 1 / (1 + state.L)
    # overwhelming local dominance still cannot exceed the clamp
    state.P_succ_local, state.N_succ_local, state.N_evals_local = 1.0, 1000, 1000
    state.P_succ_global, state.N_succ_global, state.N_evals_global = 1e-9, 1, 10**9
    assert state.local_probability() == pytest.approx(hi)
    # and overwhelming global dominance cannot push it below
    state.P_succ_local, state.N_succ_local, state.N_evals_local = 1e-9, 1, 10**9
    state.P_succ_global, state.N_succ_global, state.N_evals_global = 1.0, 1000, 1000
    assert state.local_probability() == pytest.approx(lo)


def test_branch_scores_zero_without_evaluations():
    state = SchedulerState(n=2)
    assert state.branch_scores() == (0.0, 0.0)
    assert state.local_probability() == 0.5


def test_record_local_outcome_updates():
    state = SchedulerState(n=2)
    p0 = state.P_succ_local
    record_local_outcome(state, FakeLocalOutcome(improved=True))
    assert state.P_succ_local == pytest.approx((1 - 0.1) * p0 + 0.1)
    assert state.N_succ_local == 1 and state.N_evals_local == 1
    assert state.warmup_evals == 1

    p1 = state.P_succ_local
    record_local_outcome(state, FakeLocalOutcome(boundary=True))
    assert state.P_succ_local == pytest.approx((1 - state.c_beta) * p1)
    assert state.N_succ_local == 1

    p2 = state.P_succ_local
    record_local_outcome(state, FakeLocalOutcome())
    assert state.P_succ_local == pytest.approx((1 - 0.1) * p2)
    assert state.N_evals_local == 3


def test_record_global_outcome_updates():
    state = SchedulerState(n=2)
    p0 = state.P_succ_global
    record_global_outcome(state, fake_global(improved=True))
    assert state.P_succ_global == pytest.approx((1 - 0.1) * p0 + 0.1)
    assert state.N_succ_global == 1

    p1 = state.P_succ_global
    record_global_outcome(state, fake_global(replaced=True))
    assert state.P_succ_global == pytest.approx((1 - state.c_beta) * p1 + state.c_beta)
    assert state.N_succ_global == 1

    p2 = state.P_succ_global
    record_global_outcome(state, fake_global())
    assert state.P_succ_global == pytest.approx((1 - 0.1) * p2)
    assert state.N_evals_global == 3


def test_record_init_evals_charges_local_branch_without_credit():
    state = SchedulerState(n=2)
    record_init_evals(state, 40)
    assert state.N_evals_local == 40
    assert state.warmup_evals == 40
    assert state.N_succ_local == 0
    assert state.P_succ_local == 0.5


def test_c_beta_derived_from_beta_r():
    state = SchedulerState(n=2, c_alpha=0.2, beta_R=0.1)
    assert state.c_beta == pytest.approx(0.02)


def test_random_scheduler_is_fair_coin_after_warmup():
    state = SchedulerState(n=1)
    state.warmup_evals = state.warmup_threshold
    # bias the learned statistics heavily toward local ...
    state.P_succ_local, state.N_succ_local, state.N_evals_local = 1.0, 100, 100
    rng = np.random.default_rng(123)
    picks = [choose_component_random(state, 5, rng) for _ in range(2000)]
    frac_local = picks.count(LOCAL) / len(picks)
    # ... and the random scheduler must ignore them
    assert abs(frac_local - 0.5) < 0.05
