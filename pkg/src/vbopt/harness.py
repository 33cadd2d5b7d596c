"""Multi-run experiments, ablation comparisons, and parameter sweeps.

Reports are plain dicts with a schema_version field so they serialize
deterministically; :func:`emit` renders them as JSON, CSV, or a text table.
"""

from __future__ import annotations

import csv
import io
import itertools
import json
import statistics
import sys
from importlib import resources

import numpy as np

from .engine import (DEFAULT_CHECKPOINTS, MODES, RunConfig, RunResult,
                     default_budget, run)
from .global_search import DEParams

SCHEMA_VERSION = 1

CEC_PROBLEMS = ["g01", "g02", "g04", "g06", "g07", "g08", "g09", "g10",
                "g12", "g16", "g18", "g19", "g24"]
QUICK_PROBLEMS = ["g04", "g06", "g08", "g12", "g24"]


def load_reference_nfes(path: str | None = None) -> dict[str, float]:
    """Per-problem reference NFES medians used by sweep factors."""
    if path is not None:
        with open(path) as fh:
            return json.load(fh)
    text = resources.files("vbopt.data").joinpath("reference_nfes.json").read_text()
    return json.loads(text)


def _base_config(problem: str, seed: int, **overrides) -> RunConfig:
    de = DEParams(F=overrides.pop("F", 0.5), CR=overrides.pop("CR", 0.9))
    return RunConfig(problem=problem, seed=seed, de_params=de, **overrides)


def _stats(values: list[float]) -> dict:
    if not values:
        return {"best": None, "median": None, "worst": None,
                "mean": None, "std": None, "count": 0, "degenerate_std": False}
    vs = sorted(values)
    return {
        "best": vs[0],
        "median": float(statistics.median(vs)),
        "worst": vs[-1],
        "mean": float(statistics.fmean(vs)),
        "std": float(np.std(vs)) if len(vs) > 1 else 0.0,
        "count": len(vs),
        "degenerate_std": len(vs) == 1,
    }


def run_experiment(problem: str, runs: int = 25, mode: str = "full",
                   seed0: int = 0, max_nfes: int | None = None,
                   target_accuracy: float = 1e-4, pop_size: int = 40,
                   capture_checkpoints: bool = False,
                   checkpoints: tuple = DEFAULT_CHECKPOINTS,
                   trace_enabled: bool = False,
                   **param_overrides) -> dict:
    """Run ``runs`` seeded runs (seeds seed0..seed0+runs-1) and aggregate."""
    if runs < 1:
        raise ValueError("runs must be >= 1")
    results: list[RunResult] = []
    for seed in range(seed0, seed0 + runs):
        cfg = _base_config(problem, seed, mode=mode, max_nfes=max_nfes,
                           target_accuracy=target_accuracy, pop_size=pop_size,
                           capture_checkpoints=capture_checkpoints,
                           checkpoints=tuple(checkpoints),
                           trace_enabled=trace_enabled, **param_overrides)
        results.append(run(cfg))

    successes = [r for r in results if r.success]
    best_run = min(results,
                   key=lambda r: (r.best_violation > 0, r.best_violation, r.best_f))
    error_table = []
    if capture_checkpoints and results and results[0].checkpoints:
        for ci, nfes in enumerate(sorted(checkpoints)):
            errs = [r.checkpoints[ci].error for r in results]
            order = sorted(range(len(results)), key=lambda i: errs[i])
            median_run = results[order[len(order) // 2]]
            error_table.append({
                "nfes": nfes,
                **{k: v for k, v in _stats(errs).items()
                   if k in ("best", "median", "worst", "mean", "std")},
                "c_triple": list(median_run.checkpoints[ci].violated_counts),
                "mean_violation": float(np.mean(
                    [r.checkpoints[ci].mean_violation for r in results])),
            })

    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "experiment",
        "problem": problem,
        "runs": runs,
        "mode": mode,
        "seed0": seed0,
        "config": {
            "max_nfes": max_nfes if max_nfes is not None else default_budget(problem),
            "target_accuracy": target_accuracy,
            "pop_size": pop_size,
            **param_overrides,
        },
        "success_rate": len(successes) / runs,
        "nfes_stats": _stats([float(r.nfes_to_success) for r in successes]),
        "best": {
            "f": best_run.best_f,
            "violation": best_run.best_violation,
            "x": best_run.best_x.tolist(),
            "seed": best_run.seed,
        },
        "error_table": error_table,
        "per_run": [r.to_dict() for r in results],
    }


def ablation_report(problems: list[str], runs: int = 25, seed0: int = 0,
                    max_nfes: int | None = None,
                    modes: tuple = MODES, **kw) -> dict:
    """Compare scheduler modes over a problem set.

    Total NFES charges unsuccessful runs the full budget. The scaled-NFES
    metric is the mean over problems of each mode's median NFES-to-success
    divided by the full mode's, computed only where both have successes.
    """
    reports = {m: {p: run_experiment(p, runs=runs, mode=m, seed0=seed0,
                                     max_nfes=max_nfes, **kw)
                   for p in problems} for m in modes}
    rows = []
    for m in modes:
        total_nfes = 0
        srs = []
        ratios = []
        for p in problems:
            rep = reports[m][p]
            budget = rep["config"]["max_nfes"]
            for rr in rep["per_run"]:
                total_nfes += rr["nfes_to_success"] if rr["success"] else budget
            srs.append(rep["success_rate"])
            med = rep["nfes_stats"]["median"]
            full_med = reports["full"][p]["nfes_stats"]["median"] \
                if "full" in reports else None
            if med is not None and full_med:
                ratios.append(med / full_med)
        rows.append({
            "mode": m,
            "mean_sr": float(np.mean(srs)) if srs else 0.0,
            "total_nfes": total_nfes,
            "scaled_nfes": float(np.mean(ratios)) if ratios else None,
        })
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "ablation",
        "problems": list(problems),
        "runs": runs,
        "seed0": seed0,
        "rows": rows,
        "details": {m: {p: {k: reports[m][p][k]
                            for k in ("success_rate", "nfes_stats")}
                        for p in problems} for m in modes},
    }


def _average_ranks(values: list[float], descending: bool) -> list[float]:
    """Competition-free ranks starting at 1; tied values share the average."""
    order = sorted(range(len(values)),
                   key=lambda i: (-values[i] if descending else values[i]))
    ranks = [0.0] * len(values)
    i = 0
    while i < len(order):
        j = i
        while j + 1 < len(order) and values[order[j + 1]] == values[order[i]]:
            j += 1
        avg = (i + j) / 2 + 1
        for k in range(i, j + 1):
            ranks[order[k]] = avg
        i = j + 1
    return ranks


def parameter_sweep(grid: dict[str, list], problems: list[str], runs: int = 5,
                    repetitions: int = 1, seed0: int = 0,
                    max_nfes: int | None = None,
                    reference: dict[str, float] | None = None) -> dict:
    """Grid search ranked by success rate and NFES-factor.

    Each combination is scored per repetition (distinct seed blocks): mean
    success rate over problems, and mean over problems of the median NFES
    (failures charged the budget) divided by the reference NFES for that
    problem. Combinations are ranked on both axes (average ranks for ties)
    and reported by mean rank sum across repetitions.
    """
    if not grid:
        raise ValueError("empty parameter grid")
    reference = reference or load_reference_nfes()
    warnings = [p for p in problems if p not in reference]
    factor_problems = [p for p in problems if p in reference]
    keys = sorted(grid)
    combos = [dict(zip(keys, vals)) for vals in itertools.product(*(grid[k] for k in keys))]

    allowed = {"c_alpha", "beta_R", "L", "F", "CR", "pop_size"}
    for combo in combos:
        bad = set(combo) - allowed
        if bad:
            raise ValueError(f"unknown sweep parameters: {sorted(bad)}")

    per_rep_ranksums = []
    combo_srs = [[] for _ in combos]
    combo_factors = [[] for _ in combos]
    for rep in range(repetitions):
        rep_seed = seed0 + rep * 100003
        srs, factors = [], []
        for combo in combos:
            sr_vals, factor_vals = [], []
            for p in problems:
                rep_report = run_experiment(p, runs=runs, seed0=rep_seed,
                                            max_nfes=max_nfes, **combo)
                sr_vals.append(rep_report["success_rate"])
                if p in reference:
                    budget = rep_report["config"]["max_nfes"]
                    nfes = [rr["nfes_to_success"] if rr["success"] else budget
                            for rr in rep_report["per_run"]]
                    factor_vals.append(float(statistics.median(nfes)) / reference[p])
            srs.append(float(np.mean(sr_vals)))
            factors.append(float(np.mean(factor_vals)) if factor_vals else float("inf"))
        sr_ranks = _average_ranks(srs, descending=True)
        factor_ranks = _average_ranks(factors, descending=False)
        per_rep_ranksums.append([a + b for a, b in zip(sr_ranks, factor_ranks)])
        for i in range(len(combos)):
            combo_srs[i].append(srs[i])
            combo_factors[i].append(factors[i])

    rank_matrix = np.array(per_rep_ranksums)  # (repetitions, combos)
    rows = []
    for i, combo in enumerate(combos):
        rows.append({
            "params": combo,
            "mean_sr": float(np.mean(combo_srs[i])),
            "mean_factor": float(np.mean(combo_factors[i])),
            "rank_sum_mean": float(np.mean(rank_matrix[:, i])),
            "rank_sum_std": float(np.std(rank_matrix[:, i])),
        })
    rows.sort(key=lambda r: (r["rank_sum_mean"], json.dumps(r["params"], sort_keys=True)))
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "sweep",
        "problems": list(problems),
        "runs": runs,
        "repetitions": repetitions,
        "seed0": seed0,
        "excluded_from_factor": warnings,
        "rows": rows,
    }


# -- output -----------------------------------------------------------------

def _csv_rows(report: dict) -> tuple[list[str], list[list]]:
    kind = report.get("kind")
    if kind == "experiment":
        header = ["seed", "success", "nfes_to_success", "best_f",
                  "best_violation", "restarts"]
        rows = [[r["seed"], r["success"], r["nfes_to_success"], r["best_f"],
                 r["best_violation"], r["restarts"]] for r in report["per_run"]]
    elif kind == "ablation":
        header = ["mode", "mean_sr", "total_nfes", "scaled_nfes"]
        rows = [[r["mode"], r["mean_sr"], r["total_nfes"], r["scaled_nfes"]]
                for r in report["rows"]]
    elif kind == "sweep":
        header = ["params", "mean_sr", "mean_factor", "rank_sum_mean", "rank_sum_std"]
        rows = [[json.dumps(r["params"], sort_keys=True), r["mean_sr"],
                 r["mean_factor"], r["rank_sum_mean"], r["rank_sum_std"]]
                for r in report["rows"]]
    elif kind == "run":
        header = ["problem", "seed", "mode", "success", "nfes_to_success",
                  "best_f", "best_violation", "restarts"]
        r = report["result"]
        rows = [[r["problem"], r["seed"], r["mode"], r["success"],
                 r["nfes_to_success"], r["best_f"], r["best_violation"],
                 r["restarts"]]]
    else:
        raise ValueError(f"cannot render kind {kind!r} as csv")
    return header, rows


def _text_table(report: dict) -> str:
    out = io.StringIO()
    kind = report.get("kind")
    if kind == "experiment":
        s = report["nfes_stats"]
        out.write(f"problem {report['problem']}  mode {report['mode']}  "
                  f"runs {report['runs']}\n")
        out.write(f"success rate: {report['success_rate']:.2%}\n")
        out.write("NFES to success (successful runs):\n")
        out.write("  best      median    worst     mean      std\n")
        if s["count"]:
            out.write(f"  {s['best']:<9.0f} {s['median']:<9.0f} {s['worst']:<9.0f} "
                      f"{s['mean']:<9.1f} {s['std']:<9.1f}\n")
        else:
            out.write("  (no successful runs)\n")
        b = report["best"]
        out.write(f"best solution: f={b['f']:.10g} violation={b['violation']:.3g} "
                  f"(seed {b['seed']})\n")
        for row in report["error_table"]:
            out.write(f"NFES={row['nfes']}: best={row['best']:.4e} "
                      f"median={row['median']:.4e} worst={row['worst']:.4e} "
                      f"mean={row['mean']:.4e} std={row['std']:.4e} "
                      f"c={tuple(row['c_triple'])} vbar={row['mean_violation']:.4e}\n")
    elif kind in ("ablation", "sweep", "run"):
        header, rows = _csv_rows(report)
        widths = [max(len(str(h)), *(len(str(r[i])) for r in rows)) if rows else len(str(h))
                  for i, h in enumerate(header)]
        out.write("  ".join(str(h).ljust(w) for h, w in zip(header, widths)).rstrip() + "\n")
        for r in rows:
            out.write("  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip() + "\n")
    else:
        raise ValueError(f"cannot render kind {kind!r} as table")
    return out.getvalue()


def emit(report: dict, format: str = "json", path: str | None = None) -> str:
    """Render a report; write to ``path`` when given, else return the text."""
    if format == "json":
        text = json.dumps(report, indent=2, sort_keys=True) + "\n"
    elif format == "csv":
        header, rows = _csv_rows(report)
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
        text = buf.getvalue()
    elif format == "text-table":
        text = _text_table(report)
    else:
        raise ValueError(f"unknown format {format!r}")
    if path is not None:
        with open(path, "w") as fh:
            fh.write(text)
    return text


def write_trace_csv(result: RunResult, path) -> None:
    if result.trace is None:
        raise ValueError("run was executed without trace_enabled")
    fieldnames = ["nfes", "branch", "f_best", "violation_best",
                  "P_succ_local", "P_succ_global", "freq_local"]
    out = path if hasattr(path, "write") else open(path, "w")
    try:
        writer = csv.DictWriter(out, fieldnames=fieldnames, lineterminator="\n")
        writer.writeheader()
        writer.writerows(result.trace)
    finally:
        if out is not sys.stdout and not hasattr(path, "write"):
            out.close()
