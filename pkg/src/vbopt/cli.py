"""Command-line interface.

Subcommands: run, experiment, ablation, sweep, list-problems. A JSON config
file (--config) can pre-set any run option; explicit flags win over the file.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import harness
from .engine import MODES, RunConfig, run
from .global_search import DEParams
from .problems import core as problems_core
from .problems.core import UnknownProblem


def _add_common(p: argparse.ArgumentParser, with_problem: bool = True) -> None:
    if with_problem:
        p.add_argument("--problem", required=False, help="problem name (see list-problems)")
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--max-nfes", type=int, default=None)
    p.add_argument("--accuracy", type=float, default=None,
                   help="success threshold on f - f_star (default 1e-4)")
    p.add_argument("--mode", choices=MODES, default=None)
    p.add_argument("--format", choices=["json", "csv", "text-table"], default=None)
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.add_argument("--config", default=None, help="JSON config file; flags override it")


def _load_config_file(path: str | None) -> dict:
    if path is None:
        return {}
    with open(path) as fh:
        data = json.load(fh)
    if not isinstance(data, dict):
        raise ValueError("config file must hold a JSON object")
    return data


def _merged(args: argparse.Namespace, defaults: dict) -> dict:
    """File values underneath, CLI flags (when given) on top."""
    cfg = dict(defaults)
    cfg.update(_load_config_file(args.config))
    mapping = {
        "problem": "problem", "seed": "seed", "max_nfes": "max_nfes",
        "accuracy": "target_accuracy", "mode": "mode", "format": "format",
        "runs": "runs", "trace": "trace",
    }
    for attr, key in mapping.items():
        val = getattr(args, attr, None)
        if val is not None:
            cfg[key] = val
    return cfg


def _emit(report: dict, cfg: dict, out: str | None) -> None:
    text = harness.emit(report, format=cfg.get("format") or "json", path=out)
    if out is None:
        sys.stdout.write(text)


def cmd_run(args) -> int:
    cfg = _merged(args, {"seed": 0, "mode": "full", "target_accuracy": 1e-4})
    if not cfg.get("problem"):
        raise SystemExit("run: --problem is required")
    rc = RunConfig(
        problem=cfg["problem"], seed=cfg.get("seed", 0),
        max_nfes=cfg.get("max_nfes"), target_accuracy=cfg.get("target_accuracy", 1e-4),
        mode=cfg.get("mode", "full"), pop_size=cfg.get("pop_size", 40),
        de_params=DEParams(F=cfg.get("F", 0.5), CR=cfg.get("CR", 0.9)),
        trace_enabled=bool(cfg.get("trace")),
        capture_checkpoints=bool(cfg.get("capture_checkpoints")),
        c_alpha=cfg.get("c_alpha", 0.1), beta_R=cfg.get("beta_R", 0.05),
        L=cfg.get("L", 0.18),
    )
    result = run(rc)
    if cfg.get("trace"):
        trace_path = cfg["trace"] if isinstance(cfg["trace"], str) else None
        if trace_path:
            harness.write_trace_csv(result, trace_path)
    report = {"schema_version": harness.SCHEMA_VERSION, "kind": "run",
              "result": result.to_dict()}
    _emit(report, cfg, args.out)
    return 0


def _preset_values(preset: str | None) -> dict:
    if preset == "quick":
        return {"runs": 5, "problems": list(harness.QUICK_PROBLEMS)}
    if preset == "full":
        return {"runs": 25, "problems": list(harness.CEC_PROBLEMS)}
    return {}


def cmd_experiment(args) -> int:
    preset = _preset_values(args.preset)
    cfg = _merged(args, {"runs": 25, "seed": 0, "mode": "full",
                         "target_accuracy": 1e-4, **preset})
    problems = [cfg["problem"]] if cfg.get("problem") else preset.get("problems")
    if not problems:
        raise SystemExit("experiment: --problem or --preset is required")
    reports = []
    for name in problems:
        reports.append(harness.run_experiment(
            name, runs=cfg.get("runs", 25), mode=cfg.get("mode", "full"),
            seed0=cfg.get("seed", 0), max_nfes=cfg.get("max_nfes"),
            target_accuracy=cfg.get("target_accuracy", 1e-4),
            pop_size=cfg.get("pop_size", 40),
            capture_checkpoints=bool(cfg.get("capture_checkpoints")),
            trace_enabled=bool(cfg.get("trace"))))
    for rep in reports:
        _emit(rep, cfg, args.out if len(reports) == 1 else None)
    if len(reports) > 1 and args.out:
        combined = {"schema_version": harness.SCHEMA_VERSION,
                    "kind": "experiment-batch", "reports": reports}
        with open(args.out, "w") as fh:
            json.dump(combined, fh, indent=2, sort_keys=True)
    return 0


def cmd_ablation(args) -> int:
    preset = _preset_values(args.preset)
    cfg = _merged(args, {"runs": 25, "seed": 0, **preset})
    problems = ([cfg["problem"]] if cfg.get("problem")
                else preset.get("problems") or list(harness.QUICK_PROBLEMS))
    report = harness.ablation_report(
        problems, runs=cfg.get("runs", 25), seed0=cfg.get("seed", 0),
        max_nfes=cfg.get("max_nfes"))
    _emit(report, cfg, args.out)
    return 0


def cmd_sweep(args) -> int:
    cfg = _merged(args, {"runs": 5, "seed": 0})
    grid = json.loads(args.grid) if args.grid else cfg.get("grid")
    if not grid:
        raise SystemExit("sweep: --grid (JSON object of parameter lists) is required")
    problems = ([cfg["problem"]] if cfg.get("problem")
                else cfg.get("problems") or list(harness.QUICK_PROBLEMS))
    reference = harness.load_reference_nfes(args.reference)
    report = harness.parameter_sweep(
        grid, problems, runs=cfg.get("runs", 5),
        repetitions=args.repetitions, seed0=cfg.get("seed", 0),
        max_nfes=cfg.get("max_nfes"), reference=reference)
    _emit(report, cfg, args.out)
    return 0


def cmd_list_problems(args) -> int:
    rows = [spec.metadata() for spec in problems_core.registry()]
    text = json.dumps(rows, indent=2) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="vbopt")
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="single seeded run")
    _add_common(p_run)
    p_run.add_argument("--trace", nargs="?", const=True, default=None,
                       help="record a per-evaluation trace; give a path for CSV output")
    p_run.set_defaults(func=cmd_run)

    p_exp = sub.add_parser("experiment", help="multi-run statistics for one problem")
    _add_common(p_exp)
    p_exp.add_argument("--runs", type=int, default=None)
    p_exp.add_argument("--preset", choices=["quick", "full"], default=None)
    p_exp.set_defaults(func=cmd_experiment)

    p_abl = sub.add_parser("ablation", help="compare scheduler modes")
    _add_common(p_abl)
    p_abl.add_argument("--runs", type=int, default=None)
    p_abl.add_argument("--preset", choices=["quick", "full"], default=None)
    p_abl.set_defaults(func=cmd_ablation)

    p_sw = sub.add_parser("sweep", help="parameter grid search")
    _add_common(p_sw)
    p_sw.add_argument("--runs", type=int, default=None)
    p_sw.add_argument("--grid", default=None,
                      help='JSON object, e.g. \'{"c_alpha": [0.1, 0.5]}\'')
    p_sw.add_argument("--repetitions", type=int, default=1)
    p_sw.add_argument("--reference", default=None,
                      help="JSON file of per-problem reference NFES medians")
    p_sw.set_defaults(func=cmd_sweep)

    p_ls = sub.add_parser("list-problems", help="print problem metadata")
    p_ls.add_argument("--out", default=None)
    p_ls.set_defaults(func=cmd_list_problems)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UnknownProblem as exc:
        sys.stderr.write(f"unknown problem: {exc}\n")
        return 2
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
