"""Command-line front end.

Subcommands: threshold, optimize, simulate, sweep, budget. Exit codes:
0 success, 2 configuration error, 3 infeasible target, 4 numerical failure.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys

import numpy as np

from . import budget as bdg
from . import harness as hns
from . import optimizer as opt
from . import sensing as sns
from .errors import ConfigError, InfeasibleError, NumericalError


def _add_common(p: argparse.ArgumentParser, config_required: bool = True) -> None:
    p.add_argument("--config", required=config_required, help="scenario YAML file")
    p.add_argument("--seed", type=int, default=None, help="override the scenario seed")
    p.add_argument("--trials", type=int, default=None, help="override the trial count")
    p.add_argument("--out", default=None, help="write results to this path")
    p.add_argument("--format", default="csv", choices=("csv", "json"))
    p.add_argument("--method", default=None,
                   help="coefficient method (mf|zf|mmse|wmmse|passive|passive-unit|passive-relaxed)")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="risense",
                                 description="Surface-assisted spectrum sensing simulator")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("threshold", help="print the detection threshold")
    _add_common(p, config_required=False)
    p.add_argument("-N", type=int, default=None, help="antennas (overrides config)")
    p.add_argument("-T", type=int, default=None, help="snapshots (overrides config)")
    p.add_argument("--alpha", type=float, default=None, help="false-alarm probability")

    p = sub.add_parser("optimize", help="optimize the reflecting coefficients once")
    _add_common(p)

    p = sub.add_parser("simulate", help="Monte Carlo detection/false-alarm rates")
    _add_common(p)

    p = sub.add_parser("sweep", help="element-count or budget sweeps")
    _add_common(p)
    p.add_argument("--sweep", default="m", choices=("m",) + hns.SWEEPABLE,
                   help="swept variable")
    p.add_argument("--values", default=None,
                   help="comma-separated grid for budget sweeps (e.g. 800,1600,3200)")
    p.add_argument("--methods", default="mf,mmse,passive",
                   help="comma-separated method list for budget sweeps")

    p = sub.add_parser("budget", help="required power budget for the target Pd")
    _add_common(p)
    p.add_argument("--pd-target", type=float, default=None)
    p.add_argument("--stop-tol", type=float, default=None)
    return ap


def _scenario(args, patch_method: bool = True) -> hns.ScenarioConfig:
    sc = hns.load_scenario(args.config)
    patch = {}
    if args.seed is not None:
        patch["seed"] = args.seed
    if getattr(args, "trials", None) is not None:
        patch["trials"] = args.trials
    if patch_method and getattr(args, "method", None):
        patch["method"] = args.method
    return dataclasses.replace(sc, **patch) if patch else sc


def _emit(rows, args) -> None:
    text = hns.render_results(rows, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        print(f"wrote {len(rows)} rows to {args.out}")
    else:
        sys.stdout.write(text)


def cmd_threshold(args) -> int:
    if args.config:
        cfg = _scenario(args).detector()
        n = args.N or cfg.n_antennas
        t = args.T or cfg.n_samples
        alpha = args.alpha or cfg.alpha
    else:
        if args.N is None or args.T is None:
            raise ConfigError("threshold needs --config or both -N and -T")
        n, t, alpha = args.N, args.T, args.alpha if args.alpha is not None else 0.1
    cfg = sns.DetectorConfig(n_antennas=n, n_samples=t, alpha=alpha)
    print(f"gamma_th = {sns.detection_threshold(cfg):.9g}  (N={n}, T={t}, alpha={alpha})")
    return 0


def cmd_optimize(args) -> int:
    sc = _scenario(args)
    channels = sc.build_channels()
    sources, noise = sc.sources(), sc.noise()
    power = sc.power_model()
    if sc.method in ("passive-unit", "passive-relaxed"):
        res = opt.wmmse_passive(channels, sources, noise, mode=sc.method)
    elif sc.method == "wmmse":
        p_out = power.p_out_budget(sc.ris_budget_w, channels.n_elements)
        if p_out <= 0:
            raise InfeasibleError("budget cannot power the configured element count")
        res = opt.wmmse_active(channels, sources, noise, p_out, sc.a_max)
    else:
        raise ConfigError("optimize supports wmmse, passive-unit or passive-relaxed")
    phi = res.rcm.phi
    print(f"eta = {res.eta:.9g}  (iterations: {len(res.trace) // 3})")
    cfg = sc.detector()
    stats = sns.spiked_stats_for(cfg, res.eta)
    print(f"predicted Pd = {sns.predicted_pd(stats):.6f} at alpha = {cfg.alpha}")
    for i, v in enumerate(phi):
        print(f"phi[{i:3d}] = {np.abs(v):.6f} * exp(j {np.angle(v):+.6f})")
    return 0


def cmd_simulate(args) -> int:
    sc = _scenario(args)
    h1 = hns.run_detection_mc(sc, hypothesis="h1")
    h0 = hns.run_detection_mc(sc, hypothesis="h0")
    row = hns.ResultRow(experiment="simulate", method=sc.method, pd_emp=h1.rate,
                        pfa_emp=h0.rate, pd_pred=h1.mean_pd_pred, eta=h1.mean_eta,
                        trials=sc.trials, seed=sc.seed)
    _emit([row], args)
    print(f"Pd = {h1.rate:.4f} +- {h1.stderr:.4f}, Pfa = {h0.rate:.4f} +- {h0.stderr:.4f}, "
          f"predicted Pd = {h1.mean_pd_pred:.4f}", file=sys.stderr)
    return 0


def cmd_sweep(args) -> int:
    sc = _scenario(args)
    if args.sweep == "m":
        rows = hns.run_m_sweep(sc)
    else:
        if not args.values:
            raise ConfigError("budget sweeps need --values")
        values = [float(v) for v in args.values.split(",")]
        methods = [m.strip() for m in args.methods.split(",") if m.strip()]
        rows = hns.run_budget_sweep(sc, args.sweep, values, methods)
    _emit(rows, args)
    return 0


def cmd_budget(args) -> int:
    sc = _scenario(args, patch_method=False)  # planner methods differ from simulate ones
    method = args.method or (sc.method if sc.method in bdg.METHODS else "wmmse")
    pd_target = args.pd_target if args.pd_target is not None else sc.pd_target
    res = bdg.required_budget(method, pd_target, sc, stop_tol=args.stop_tol)
    print(f"required budget = {res.required_power:.9g} W "
          f"({hns.watts_to_dbm(res.required_power):.4f} dBm) with M = {res.m_star}, "
          f"eta = {res.eta_star:.6g} >= target {res.eta_target:.6g}")
    if res.note:
        print(f"note: {res.note}")
    if args.out:
        row = hns.ResultRow(experiment="budget", method=method, eta=res.eta_star,
                            required_budget_w=res.required_power, trials=0, seed=sc.seed,
                            note=res.note)
        _emit([row], args)
    return 0


COMMANDS = {"threshold": cmd_threshold, "optimize": cmd_optimize,
            "simulate": cmd_simulate, "sweep": cmd_sweep, "budget": cmd_budget}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2
    except InfeasibleError as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return 3
    except (NumericalError, np.linalg.LinAlgError) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
