"""Harness: aggregation, report determinism, ranks, output formats."""

import csv
import io
import json

import pytest

from vbopt import harness
from vbopt.engine import RunConfig, run


@pytest.fixture(scope="module")
def g24_report():
    return harness.run_experiment("g24", runs=3, seed0=0, max_nfes=5000)


def test_run_experiment_uses_consecutive_seeds(g24_report):
    assert [r["seed"] for r in g24_report["per_run"]] == [0, 1, 2]
    assert g24_report["runs"] == 3
    assert g24_report["seed0"] == 0


def test_run_experiment_aggregates(g24_report):
    rep = g24_report
    assert 0.0 <= rep["success_rate"] <= 1.0
    s = rep["nfes_stats"]
    if s["count"]:
        assert s["best"] <= s["median"] <= s["worst"]
    assert rep["schema_version"] == harness.SCHEMA_VERSION
    assert rep["best"]["violation"] >= 0.0
    assert rep["config"]["max_nfes"] == 5000


def test_run_experiment_rejects_zero_runs():
    with pytest.raises(ValueError):
        harness.run_experiment("g24", runs=0)


def test_stats_of_empty_and_single():
    empty = harness._stats([])
    assert empty["count"] == 0 and empty["median"] is None
    single = harness._stats([4.0])
    assert single["count"] == 1
    assert single["best"] == single["median"] == single["worst"] == 4.0
    assert single["std"] == 0.0 and single["degenerate_std"]


def test_error_table_present_with_checkpoints():
    rep = harness.run_experiment("g24", runs=2, seed0=0, max_nfes=2000,
                                 capture_checkpoints=True,
                                 checkpoints=(500, 1500),
                                 target_accuracy=1e-300)
    assert [row["nfes"] for row in rep["error_table"]] == [500, 1500]
    for row in rep["error_table"]:
        assert row["best"] <= row["median"] <= row["worst"]
        assert len(row["c_triple"]) == 3


def test_report_emission_is_deterministic(g24_report):
    a = harness.emit(g24_report, format="json")
    b = harness.emit(g24_report, format="json")
    rerun = harness.run_experiment("g24", runs=3, seed0=0, max_nfes=5000)
    c = harness.emit(rerun, format="json")
    assert a == b == c


def test_emit_csv_and_text_table(g24_report, tmp_path):
    text = harness.emit(g24_report, format="csv")
    rows = list(csv.reader(io.StringIO(text)))
    assert rows[0] == ["seed", "success", "nfes_to_success", "best_f",
                       "best_violation", "restarts"]
    assert len(rows) == 1 + 3
    table = harness.emit(g24_report, format="text-table")
    assert "success rate" in table
    out = tmp_path / "report.json"
    harness.emit(g24_report, format="json", path=str(out))
    assert json.loads(out.read_text())["problem"] == "g24"


def test_emit_unknown_format(g24_report):
    with pytest.raises(ValueError):
        harness.emit(g24_report, format="yaml")


def test_ablation_report_shape():
    rep = harness.ablation_report(["g24"], runs=2, seed0=0, max_nfes=3000)
    modes = [row["mode"] for row in rep["rows"]]
    assert modes == ["full", "local-only", "global-only", "random-scheduler"]
    for row in rep["rows"]:
        assert 0.0 <= row["mean_sr"] <= 1.0
        assert row["total_nfes"] > 0
    full_row = rep["rows"][0]
    if full_row["scaled_nfes"] is not None:
        assert full_row["scaled_nfes"] == pytest.approx(1.0)


def test_average_ranks_with_ties():
    assert harness._average_ranks([3.0, 1.0, 1.0, 2.0], descending=False) \
        == [4.0, 1.5, 1.5, 3.0]
    assert harness._average_ranks([3.0, 1.0, 1.0, 2.0], descending=True) \
        == [1.0, 3.5, 3.5, 2.0]
    assert harness._average_ranks([5.0], descending=False) == [1.0]


def test_parameter_sweep_ranks_combinations():
    grid = {"pop_size": [10, 40]}
    rep = harness.parameter_sweep(grid, ["g24"], runs=2, repetitions=2,
                                  seed0=0, max_nfes=3000)
    assert len(rep["rows"]) == 2
    sums = [row["rank_sum_mean"] for row in rep["rows"]]
    assert sums == sorted(sums)
    for row in rep["rows"]:
        assert set(row["params"]) == {"pop_size"}
        assert row["rank_sum_std"] >= 0.0


def test_parameter_sweep_rejects_unknown_parameters():
    with pytest.raises(ValueError):
        harness.parameter_sweep({"mutation_rate": [0.1]}, ["g24"], runs=1)


def test_parameter_sweep_rejects_empty_grid():
    with pytest.raises(ValueError):
        harness.parameter_sweep({}, ["g24"], runs=1)


def test_reference_nfes_table_covers_cec_suite(tmp_path):
    ref = harness.load_reference_nfes()
    assert set(harness.CEC_PROBLEMS) <= set(ref)
    assert all(v > 0 for v in ref.values())
    custom = tmp_path / "ref.json"
    custom.write_text(json.dumps({"g24": 100.0}))
    assert harness.load_reference_nfes(str(custom)) == {"g24": 100.0}


def test_write_trace_csv(tmp_path):
    result = run(RunConfig(problem="g24", seed=0, max_nfes=300,
                           trace_enabled=True, target_accuracy=1e-300))
    path = tmp_path / "trace.csv"
    harness.write_trace_csv(result, str(path))
    rows = list(csv.DictReader(path.open()))
    assert len(rows) == 300
    assert set(rows[0]) == {"nfes", "branch", "f_best", "violation_best",
                            "P_succ_local", "P_succ_global", "freq_local"}


def test_write_trace_csv_requires_trace():
    result = run(RunConfig(problem="g24", seed=0, max_nfes=100,
                           target_accuracy=1e-300))
    with pytest.raises(ValueError):
        harness.write_trace_csv(result, "/dev/null")
