"""Command-line entry point.

Exit codes: 0 success, 1 config/parse error, 2 model conditions violated,
3 insufficient data for the exponent fit.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from . import equilibrium as eq
from . import population as popm
from . import yule as ym
from .config import ConfigError, RunConfig, load_config
from .model import (
    DomainError,
    InfeasibleError,
    ModelParams,
    check_conditions,
    demand_share,
    indifference_vot,
)
from .outputs import cobweb_svg, write_csv

EXIT_OK, EXIT_CONFIG, EXIT_INFEASIBLE, EXIT_NO_DATA = 0, 1, 2, 3
CURVE_POINTS = 201


class _Infeasible(Exception):
    def __init__(self, report):
        self.report = report


def _emit(summary: dict, fmt: str) -> None:
    if fmt == "json-summary":
        print(json.dumps(summary, indent=2))
    else:
        for k, v in summary.items():
            if isinstance(v, dict):
                v = json.dumps(v)
            print(f"{k}={v}")


def _report_lines(report) -> list[str]:
    return [
        f"condition ({c.label}) {c.inequality}: {'PASS' if c.satisfied else 'FAIL'} margin={c.margin!r}"
        for c in report.conditions
    ]


def _require(params: ModelParams, *labels: int):
    report = check_conditions(params)
    if not report.holds(*labels):
        raise _Infeasible(report)
    return report


def _resolve_seed(cli_seed, block_seed, cfg: RunConfig) -> int:
    for s in (cli_seed, block_seed, cfg.seed):
        if s is not None:
            return int(s)
    return 0


def cmd_check(cfg: RunConfig, args) -> int:
    report = check_conditions(cfg.model)
    if args.format == "json-summary":
        _emit({"all_satisfied": report.all_satisfied, "conditions": report.as_dict()}, args.format)
    else:
        print("\n".join(_report_lines(report)))
    return EXIT_OK if report.all_satisfied else EXIT_INFEASIBLE


def cmd_solve(cfg: RunConfig, args) -> int:
    params, blk = cfg.model, cfg.solve
    report = _require(params, 1, 2, 3, 4)
    seed = _resolve_seed(args.seed, None, cfg)
    x_star = eq.solve_oracle(params)
    trace = eq.iterate(blk.x0, params, blk.tolerance, blk.max_iter)
    days = eq.iterate(blk.x0, params, eq.DAYS_TOLERANCE, blk.max_iter).iterations_to_tolerance

    out = Path(args.out)
    rows = [(0, trace.iterates[0], None)]
    rows += [(k + 1, x, r) for k, (x, r) in enumerate(zip(trace.iterates[1:], trace.residuals))]
    write_csv(out / "trace.csv", ["k", "x", "residual"], rows, seed)
    pts = eq.cobweb_points(trace)
    write_csv(out / "cobweb.csv", ["px", "py"], pts, seed)

    ps = np.linspace(1.0, params.p_max, CURVE_POINTS)
    xs = np.linspace(0.0, 1.0, CURVE_POINTS)
    curves = [("x_of_p", float(p), demand_share(float(p), params)) for p in ps]
    curves += [("p_of_x", indifference_vot(float(x), params), float(x)) for x in xs]
    write_csv(out / "curves.csv", ["curve", "p", "x"], curves, seed)
    phi = [(float(x), eq.best_response(float(x), params)) for x in xs]
    (out / "cobweb.svg").write_text(cobweb_svg(pts, phi))

    _emit({
        "x_star": x_star,
        "x_last": trace.last,
        "converged": trace.converged,
        "steps": trace.steps,
        "tolerance": trace.tolerance,
        "contraction_modulus": trace.contraction_modulus,
        "contraction_condition_5": report.holds(5),
        "days_to_0.01": days,
        "abs_error": abs(trace.last - x_star),
    }, args.format)
    return EXIT_OK


def cmd_simulate(cfg: RunConfig, args) -> int:
    params, blk = cfg.model, cfg.simulate
    _require(params, 1, 2, 3, 4)
    seed = _resolve_seed(args.seed, blk.seed, cfg)
    if blk.n < 1 or blk.max_days < 1:
        raise ConfigError("[simulate] n and max_days must be >= 1")
    pop = popm.sample_population(blk.n, params, seed)
    x0 = blk.x0 if blk.x0 is not None else popm.initial_share(seed)
    if not 0 <= x0 <= 1:
        raise ConfigError(f"[simulate] x0 must lie in [0, 1], got {x0}")
    records = popm.run_days(pop, x0, params, blk.max_days)
    write_csv(
        Path(args.out) / "days.csv",
        ["day", "car_share", "threshold_vot"],
        [(r.day, r.car_share, r.threshold_vot) for r in records],
        seed,
    )
    x_star = eq.solve_oracle(params)
    final = records[-1].car_share
    _emit({
        "seed": seed,
        "rng": popm.RNG_ALGORITHM,
        "n": pop.n,
        "x0": x0,
        "days_to_stability": popm.days_to_stability(records),
        "days_run": len(records),
        "final_car_share": final,
        "x_star": x_star,
        "abs_gap_to_x_star": abs(final - x_star),
    }, args.format)
    return EXIT_OK


def cmd_yule(cfg: RunConfig, args) -> int:
    blk = cfg.yule
    seed = _resolve_seed(args.seed, blk.seed, cfg)
    try:
        yp = ym.YuleParams(alpha=blk.alpha, steps=blk.steps, seed=seed)
    except ValueError as e:
        raise ConfigError(f"[yule] {e}") from e
    hist = ym.run_yule(yp)
    out = Path(args.out)
    write_csv(out / "yule_hist.csv", ["s", "count"], hist.counts.items(), seed)
    write_csv(out / "yule_ccdf.csv", ["s", "ccdf"], ym.ccdf(hist), seed)
    theory = ym.theoretical_exponent(blk.alpha)
    try:
        est, m = ym.estimate_exponent(hist, blk.s_min)
    except ym.InsufficientDataError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_NO_DATA
    _emit({
        "seed": seed,
        "alpha": blk.alpha,
        "steps": blk.steps,
        "s_min": blk.s_min,
        "tail_size": m,
        "estimated_exponent": est,
        "theoretical_exponent": theory,
        "difference": est - theory,
    }, args.format)
    return EXIT_OK


def sweep_rows(base: ModelParams, name: str, values, x0: float = 1.0, max_iter: int = 1000):
    if name not in ModelParams.field_names():
        raise ConfigError(
            f"[sweep] unknown parameter {name!r}; expected one of {', '.join(ModelParams.field_names())}"
        )
    rows = []
    for v in values:
        try:
            params = base.with_(**{name: v})
        except DomainError:
            rows.append((name, v, False, None, None, None))
            continue
        if not check_conditions(params).all_satisfied:
            rows.append((name, v, False, None, None, None))
            continue
        x_star = eq.solve_oracle(params)
        days = eq.iterate(x0, params, eq.DAYS_TOLERANCE, max_iter).iterations_to_tolerance
        rows.append((name, v, True, x_star, eq.contraction_modulus(params), days))
    return rows


def cmd_sweep(cfg: RunConfig, args) -> int:
    if cfg.sweep is None:
        raise ConfigError("missing [sweep] section")
    seed = _resolve_seed(args.seed, None, cfg)
    rows = sweep_rows(cfg.model, cfg.sweep.parameter, cfg.sweep.values, cfg.solve.x0, cfg.solve.max_iter)
    write_csv(
        Path(args.out) / "sweep.csv",
        ["param_name", "param_value", "feasible", "x_star", "q", "days_to_001"],
        rows,
        seed,
    )
    _emit({
        "parameter": cfg.sweep.parameter,
        "points": len(rows),
        "feasible_points": sum(1 for r in rows if r[2]),
    }, args.format)
    return EXIT_OK


COMMANDS = {
    "check": cmd_check,
    "solve": cmd_solve,
    "simulate": cmd_simulate,
    "yule": cmd_yule,
    "sweep": cmd_sweep,
}


HELP = {
    "check": "evaluate feasibility conditions (1)-(5)",
    "solve": "fixed point, iteration trace and cobweb data",
    "simulate": "day-by-day agent simulation",
    "yule": "coin-allocation process and tail exponent",
    "sweep": "one-parameter grid of equilibria",
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", required=True, help="TOML run configuration")
    common.add_argument("--out", default="out", help="output directory (default: out)")
    common.add_argument("--seed", type=int, default=None, help="override every seed in the config")
    common.add_argument("--format", choices=["csv", "json-summary"], default="csv",
                        help="stdout summary style; CSV files are always written")
    parser = argparse.ArgumentParser(prog="modalsplit", description="Bimodal modal-split laboratory")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, text in HELP.items():
        sub.add_parser(name, parents=[common], help=text)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_CONFIG if e.code else EXIT_OK
    try:
        cfg = load_config(args.config)
        return COMMANDS[args.command](cfg, args)
    except ConfigError as e:
        print(f"config error: {e}", file=sys.stderr)
        return EXIT_CONFIG
    except _Infeasible as e:
        print("\n".join(_report_lines(e.report)))
        print("error: model conditions violated", file=sys.stderr)
        return EXIT_INFEASIBLE
    except InfeasibleError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INFEASIBLE


if __name__ == "__main__":
    sys.exit(main())
