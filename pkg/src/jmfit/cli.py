"""Command-line front end.

Subcommands: datasets, estimate, gq, experiment.  Exit codes: 0 success,
1 computation failure, 2 usage error (argparse default).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

import numpy as np

from .datasets import BUILTIN_DATASETS, builtin_dataset, load_dataset, prefix
from .estimators import (
    ALL_METHODS,
    EstimationError,
    estimate,
    estimate_with_weights,
    lse_gq_test,
    mle_equation,
    wls_equation,
)
from .evaluation import (
    diff_against_reference,
    render_table,
    report_to_csv,
    report_to_json,
    run_experiment,
)
from .solver import RootConfig

__all__ = ["main", "build_parser"]


def _add_common(p):
    p.add_argument("--data", required=True, help="builtin name (ntds, musa1, musa2, musa3) or file path")
    p.add_argument("--data-format", choices=["plain", "csv"], default="plain",
                   help="file format when --data is a path")
    p.add_argument("--k", type=int, default=None, help="use only the first K intervals")


def _add_solver_opts(p):
    p.add_argument("--accuracy", type=float, default=1e-16, help="relative step tolerance")
    p.add_argument("--cap", type=float, default=1e12, help="upper bound for n0")
    p.add_argument("--scan-points", type=int, default=4096, help="root scan grid size")
    p.add_argument("--beta", type=float, default=0.5, help="power-law weight exponent")
    p.add_argument("--alpha", type=float, default=0.05, help="heteroscedasticity significance level")
    p.add_argument("--omit-fraction", type=float, default=0.25, help="middle fraction omitted by the GQ test")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="jmfit", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    sub.add_parser("datasets", help="list the bundled failure datasets")

    est = sub.add_parser("estimate", help="fit one method on one dataset segment")
    _add_common(est)
    est.add_argument("--method", default="mle", choices=sorted(ALL_METHODS) + ["wnls-custom"])
    est.add_argument("--mode", choices=["reasonable", "asymptotic"], default="reasonable")
    est.add_argument("--phi-recovery", choices=["unit", "weighted"], default="unit")
    est.add_argument("--weights-file", default=None,
                     help="explicit weights, one per line (method becomes wnls-custom)")
    est.add_argument("--format", choices=["table", "csv", "json"], default="table")
    est.add_argument("--out", default=None, help="write output to this path instead of stdout")
    est.add_argument("--dump-curve", default=None, metavar="PATH",
                     help="write CSV samples of the estimating function and its derivatives")
    _add_solver_opts(est)

    gq = sub.add_parser("gq", help="least-squares fit plus heteroscedasticity test")
    _add_common(gq)
    gq.add_argument("--mode", choices=["reasonable", "asymptotic"], default="reasonable")
    _add_solver_opts(gq)

    exp = sub.add_parser("experiment", help="run a bundled experiment and diff against references")
    exp.add_argument("id", choices=["exp1", "exp2", "exp3"])
    exp.add_argument("--format", choices=["table", "csv", "json"], default="table")
    exp.add_argument("--out", default=None)
    exp.add_argument("--diff-tolerance", type=float, default=0.01,
                     help="relative tolerance for the reference diff summary")
    _add_solver_opts(exp)
    return ap


def _load(args):
    name = args.data.lower()
    if name in BUILTIN_DATASETS:
        ds = builtin_dataset(name)
    else:
        ds = load_dataset(args.data, args.data_format)
    if args.k is not None:
        if not 3 <= args.k <= len(ds):
            raise ValueError(f"--k must be in 3..{len(ds)}")
        ds = prefix(ds, args.k)
    return ds


def _config(args) -> RootConfig:
    return RootConfig(
        step_tolerance=args.accuracy,
        n0_cap=args.cap,
        scan_points=args.scan_points,
    )


def _emit(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _cmd_datasets(_args) -> int:
    for name, ds in BUILTIN_DATASETS.items():
        print(f"{name}, {len(ds)}, {ds.unit}, {ds.source}")
    return 0


def _cmd_estimate(args) -> int:
    ds = _load(args)
    cfg = _config(args)
    kw = dict(beta=args.beta, alpha=args.alpha, omit_fraction=args.omit_fraction,
              phi_recovery=args.phi_recovery)
    if args.weights_file:
        w = [float(line) for line in Path(args.weights_file).read_text().split()]
        fit = estimate_with_weights(ds, w, args.mode, cfg, phi_recovery=args.phi_recovery)
    else:
        fit = estimate(ds, args.method, args.mode, cfg, **kw)

    if args.dump_curve:
        _dump_curve(ds, fit, args.dump_curve, cfg)

    payload = {
        "dataset": ds.name,
        "segment_length": fit.segment_length,
        "method": fit.method,
        "mode": args.mode,
        "n0": fit.params.n0,
        "phi": fit.params.phi,
        "root_kind": fit.root.kind,
        "iterations": fit.root.iterations,
        "residual": fit.root.residual,
    }
    if fit.weights is not None:
        payload["weights"] = list(fit.weights)
    if fit.gq is not None:
        payload["gq_heteroscedastic"] = fit.gq.heteroscedastic
        payload["gq_applicable"] = fit.gq.applicable
    if args.format == "json":
        _emit(json.dumps(payload, indent=2) + "\n", args.out)
    elif args.format == "csv":
        head = "dataset,method,mode,n0,phi,root_kind,iterations"
        line = (f"{ds.name},{fit.method},{args.mode},{fit.params.n0:.4f},"
                f"{fit.params.phi:.6f},{fit.root.kind},{fit.root.iterations}")
        _emit(head + "\n" + line + "\n", args.out)
    else:
        lines = [
            f"dataset        {ds.name} (n={fit.segment_length}, unit={ds.unit})",
            f"method         {fit.method} ({args.mode})",
            f"n0             {fit.params.n0:.4f}",
            f"phi            {fit.params.phi:.6f}",
            f"root kind      {fit.root.kind}",
            f"iterations     {fit.root.iterations}",
        ]
        if fit.weights is not None:
            lines.append(f"weight scheme  {fit.method} ({len(fit.weights)} weights)")
        if fit.gq is not None:
            verdict = "heteroscedastic" if fit.gq.heteroscedastic else "homoscedastic"
            if not fit.gq.applicable:
                verdict = "inapplicable"
            lines.append(f"gq verdict     {verdict}")
        _emit("\n".join(lines) + "\n", args.out)
    return 0


def _dump_curve(ds, fit, path, cfg):
    """Sample f, f', f'' of the fitted method's estimating function."""
    k = fit.segment_length
    if fit.method == "mle":
        eq = mle_equation(ds.intervals[:k])
    else:
        eq = wls_equation(ds.intervals[:k], fit.weights)
    grid = k + np.geomspace(cfg.lower_margin, cfg.n0_cap - k, 2000)
    rows = ["n0,f,fprime,fsecond"]
    rows += [
        f"{g:.10g},{eq.value(g):.10g},{eq.derivative(g):.10g},{eq.second(g):.10g}"
        for g in grid
    ]
    Path(path).write_text("\n".join(rows) + "\n")


def _cmd_gq(args) -> int:
    ds = _load(args)
    fit, gq = lse_gq_test(ds, args.mode, _config(args), alpha=args.alpha,
                          omit_fraction=args.omit_fraction)
    print(f"dataset          {ds.name} (n={len(ds)})")
    print(f"lse fit          n0={fit.params.n0:.4f} phi={fit.params.phi:.6f} ({fit.root.kind})")
    if not gq.applicable:
        print("verdict          inapplicable (too few observations for the dof)")
        return 0
    print(f"statistic        {gq.statistic:.4f}")
    print(f"dof              ({gq.dof[0]}, {gq.dof[1]})")
    print(f"critical value   {gq.critical_value:.4f} (alpha={gq.alpha})")
    print(f"omitted middle   {gq.omitted}")
    print(f"verdict          {'heteroscedastic' if gq.heteroscedastic else 'homoscedastic'}")
    return 0


def _cmd_experiment(args) -> int:
    report = run_experiment(args.id, _config(args), beta=args.beta, alpha=args.alpha,
                            omit_fraction=args.omit_fraction)
    if args.format == "json":
        body = report_to_json(report) + "\n"
    elif args.format == "csv":
        body = report_to_csv(report)
    else:
        body = render_table(report)
    _emit(body, args.out)
    if args.out:
        print(f"wrote {args.out}")

    diffs = diff_against_reference(report, args.diff_tolerance)
    bad = [d for d in diffs if not d["ok"]]
    print(f"reference diff: {len(diffs) - len(bad)}/{len(diffs)} cells within "
          f"{100 * args.diff_tolerance:g}% of the published values")
    for d in sorted(bad, key=lambda r: -r["rel_dev"]):
        got = "failed" if d["value"] is None else f"{d['value']:.4f}"
        print(f"  DEVIATES {d['method']}/{d['dataset']} {d['quantity']}: "
              f"got {got}, reference {d['reference']}, rel dev {100 * d['rel_dev']:.2f}%")
    crashed = [r for r in report.rows if "error" in r]
    for r in crashed:
        print(f"  ERROR {r['method']}/{r.get('dataset', '?')}: {r['error']}", file=sys.stderr)
    return 1 if crashed else 0


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "datasets": _cmd_datasets,
        "estimate": _cmd_estimate,
        "gq": _cmd_gq,
        "experiment": _cmd_experiment,
    }
    try:
        return handlers[args.command](args)
    except (EstimationError, ValueError, OSError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
