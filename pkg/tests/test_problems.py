"""Problem suite: registry contents, evaluation accounting, reference points."""

import json

import numpy as np
import pytest

from vbopt.problems import (BudgetExhausted, EvalCounter, ProblemSpec,
                            UnknownProblem, constraint_violation, evaluate,
                            lookup, registry)

EXPECTED_NAMES = [
    "g01", "g02", "g04", "g06", "g07", "g08", "g09", "g10", "g12", "g16",
    "g18", "g19", "g24", "welded-beam", "pressure-vessel", "spring",
    "cantilever",
]

EXPECTED_DIMENSIONS = {
    "g01": 13, "g02": 20, "g04": 5, "g06": 2, "g07": 10, "g08": 2,
    "g09": 7, "g10": 8, "g12": 3, "g16": 5, "g18": 9, "g19": 15, "g24": 2,
    "welded-beam": 4, "pressure-vessel": 4, "spring": 3, "cantilever": 10,
}


def test_registry_names_and_order():
    assert [s.name for s in registry()] == EXPECTED_NAMES


def test_dimensions():
    for spec in registry():
        assert spec.n == EXPECTED_DIMENSIONS[spec.name], spec.name
        assert spec.lower.shape == (spec.n,)
        assert spec.upper.shape == (spec.n,)


def test_reference_points_feasible_and_accurate():
    for spec in registry():
        spec.self_check(tol=1e-8)


def test_every_cec_problem_bundles_a_reference_point():
    for spec in registry():
        if spec.name.startswith("g"):
            assert spec.x_star is not None, spec.name


def test_lookup_unknown_raises():
    with pytest.raises(UnknownProblem):
        lookup("g99")


def test_constraint_violation_values():
    assert constraint_violation(np.array([-1.0, -2.0])) == 0.0
    assert constraint_violation(np.array([0.5, -1.0, 0.25])) == 0.75
    assert constraint_violation(np.zeros(0)) == 0.0


def test_evaluate_counts_and_enforces_budget():
    spec = lookup("g24")
    counter = EvalCounter(budget=2)
    x = (spec.lower + spec.upper) / 2.0
    ev1 = evaluate(spec, x, counter)
    ev2 = evaluate(spec, x, counter)
    assert (ev1.nfes_index, ev2.nfes_index) == (1, 2)
    assert counter.count == 2 and counter.remaining == 0
    with pytest.raises(BudgetExhausted):
        evaluate(spec, x, counter)
    assert counter.count == 2  # the failed call consumed nothing


def test_evaluate_rejects_out_of_box_points():
    spec = lookup("g24")
    counter = EvalCounter(budget=10)
    with pytest.raises(ValueError):
        evaluate(spec, spec.upper + 1.0, counter)
    assert counter.count == 0


def test_evaluation_violation_matches_positive_part_sum():
    spec = lookup("g06")
    counter = EvalCounter(budget=5)
    rng = np.random.default_rng(0)
    for _ in range(5):
        x = spec.lower + rng.random(spec.n) * (spec.upper - spec.lower)
        ev = evaluate(spec, x, counter)
        assert ev.violation == constraint_violation(ev.g)
        assert ev.g.shape == (spec.m,)


def test_g24_objective_is_negated_coordinate_sum():
    spec = lookup("g24")
    assert spec.objective(np.array([1.0, 1.0])) == pytest.approx(-2.0)
    assert spec.objective(np.array([2.0, 3.0])) == pytest.approx(-5.0)


def test_metadata_json_round_trip():
    for spec in registry():
        meta = json.loads(spec.metadata_json())
        assert meta["name"] == spec.name
        assert meta["n"] == spec.n
        assert meta["m"] == spec.m
        assert meta["f_star"] == spec.f_star


def test_problem_spec_validates_bounds():
    with pytest.raises(ValueError):
        ProblemSpec(name="bad", n=2, lower=np.array([0.0, 1.0]),
                    upper=np.array([1.0, 1.0]), m=0,
                    objective=lambda x: 0.0,
                    constraints=lambda x: np.zeros(0), f_star=0.0)


def test_g16_constraint_count():
    assert lookup("g16").m == 38


def test_feasible_reference_reaches_zero_violation():
    for spec in registry():
        if spec.x_star is None or spec.m == 0:
            continue
        g = np.asarray(spec.constraints(spec.x_star), dtype=float)
        assert constraint_violation(np.maximum(g, 0.0) - 1e-8) == pytest.approx(0.0, abs=1e-12)
