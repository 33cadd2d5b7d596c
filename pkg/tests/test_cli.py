"""Command-line interface: subcommands, config merging, exit codes."""

import json

import pytest

from vbopt.cli import main


def test_list_problems(capsys):
    assert main(["list-problems"]) == 0
    rows = json.loads(capsys.readouterr().out)
    names = [r["name"] for r in rows]
    assert "g24" in names and "welded-beam" in names
    assert len(names) == 17


def test_run_single(capsys):
    code = main(["run", "--problem", "g24", "--seed", "0",
                 "--max-nfes", "600", "--accuracy", "1e-300"])
    assert code == 0
    report = json.loads(capsys.readouterr().out)
    assert report["kind"] == "run"
    assert report["result"]["nfes_used"] == 600


def test_run_requires_problem():
    with pytest.raises(SystemExit):
        main(["run", "--max-nfes", "100"])


def test_unknown_problem_exit_code(capsys):
    assert main(["run", "--problem", "g99", "--max-nfes", "100"]) == 2


def test_run_writes_output_file(tmp_path):
    out = tmp_path / "r.json"
    code = main(["run", "--problem", "g24", "--seed", "1",
                 "--max-nfes", "500", "--accuracy", "1e-300",
                 "--out", str(out)])
    assert code == 0
    assert json.loads(out.read_text())["result"]["seed"] == 1


def test_run_trace_csv(tmp_path, capsys):
    trace = tmp_path / "t.csv"
    code = main(["run", "--problem", "g24", "--max-nfes", "300",
                 "--accuracy", "1e-300", "--trace", str(trace),
                 "--out", str(tmp_path / "r.json")])
    assert code == 0
    assert trace.read_text().startswith("nfes,branch,")


def test_config_file_underrides_flags(tmp_path, capsys):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"problem": "g24", "max_nfes": 400,
                               "seed": 9, "target_accuracy": 1e-300}))
    # flag overrides the file's seed; file supplies everything else
    code = main(["run", "--config", str(cfg), "--seed", "2"])
    assert code == 0
    result = json.loads(capsys.readouterr().out)["result"]
    assert result["seed"] == 2
    assert result["nfes_used"] == 400


def test_experiment_subcommand(capsys):
    code = main(["experiment", "--problem", "g24", "--runs", "2",
                 "--max-nfes", "3000", "--seed", "0"])
    assert code == 0
    report = json.loads(capsys.readouterr().out)
    assert report["kind"] == "experiment"
    assert report["runs"] == 2


def test_experiment_requires_problem_or_preset():
    with pytest.raises(SystemExit):
        main(["experiment", "--runs", "1"])


def test_experiment_csv_format(capsys):
    code = main(["experiment", "--problem", "g24", "--runs", "2",
                 "--max-nfes", "2000", "--format", "csv"])
    assert code == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "seed,success,nfes_to_success,best_f,best_violation,restarts"


def test_ablation_subcommand(capsys):
    code = main(["ablation", "--problem", "g24", "--runs", "1",
                 "--max-nfes", "2000"])
    assert code == 0
    report = json.loads(capsys.readouterr().out)
    assert report["kind"] == "ablation"
    assert len(report["rows"]) == 4


def test_sweep_subcommand(capsys):
    code = main(["sweep", "--problem", "g24", "--runs", "1",
                 "--max-nfes", "2000", "--grid", '{"pop_size": [10, 20]}'])
    assert code == 0
    report = json.loads(capsys.readouterr().out)
    assert report["kind"] == "sweep"
    assert len(report["rows"]) == 2


def test_sweep_requires_grid():
    with pytest.raises(SystemExit):
        main(["sweep", "--problem", "g24"])


def test_invalid_config_file_is_an_error(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps([1, 2, 3]))
    assert main(["run", "--problem", "g24", "--config", str(bad)]) == 1


def test_console_script_is_registered():
    import importlib.metadata as md
    eps = md.entry_points()
    scripts = eps.select(group="console_scripts") if hasattr(eps, "select") \
        else eps.get("console_scripts", [])
    assert any(ep.name == "vbopt" for ep in scripts)
