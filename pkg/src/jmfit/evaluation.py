"""Relative-error criteria, sequential one-step prediction, experiments.

Two scoring regimes:

* split scoring - fit once on the first m intervals, then score the
  prediction 1/(phi (n0 - i + 1)) against every interval, with training
  (i <= m) and testing (i > m) sub-means reported separately.
* one-step scoring - for each i from 3 to n, refit on the first i-1
  intervals and score the prediction of interval i.  Following the
  published tables this package reproduces, the accumulated relative
  errors are divided by the full series length n (not by the n-2 terms
  actually evaluated).

Predictions whose index exceeds the fitted error count are skipped and
counted rather than poisoning the average.
"""

from __future__ import annotations

import csv
import io
import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from . import reference
from .datasets import FailureDataset, builtin_dataset, prefix
from .estimators import TABLE_METHODS, EstimationError, EstimationResult, estimate
from .model import InvalidRegimeError, JmParams, mtbf
from .solver import RootConfig

__all__ = [
    "ReReport",
    "ExperimentReport",
    "re_split",
    "re_one_step",
    "count_optimal_solutions",
    "run_experiment",
    "render_table",
    "report_to_csv",
    "report_to_json",
    "diff_against_reference",
]


@dataclass(frozen=True)
class ReReport:
    re: float
    re_training: float | None
    re_testing: float | None
    terms_used: int
    terms_skipped: int
    per_term: tuple = ()


def _as_dataset(data) -> FailureDataset:
    if isinstance(data, FailureDataset):
        return data
    return FailureDataset("data", np.asarray(data, dtype=float))


def re_split(data, p: JmParams, m: int) -> ReReport:
    """Split scoring of one fitted parameter pair (fit made on the first m)."""
    ds = _as_dataset(data)
    n = len(ds)
    if not 3 <= m < n:
        raise ValueError(f"split index m must satisfy 3 <= m < {n}, got {m}")
    terms = []
    skipped = 0
    for i, x in enumerate(ds.intervals, start=1):
        try:
            pred = mtbf(p, i)
        except InvalidRegimeError:
            skipped += 1
            continue
        terms.append((i, float(x), pred, abs(x - pred) / x))
    train = [t[3] for t in terms if t[0] <= m]
    test = [t[3] for t in terms if t[0] > m]
    used = len(terms)
    return ReReport(
        re=100.0 * sum(t[3] for t in terms) / used if used else float("nan"),
        re_training=100.0 * sum(train) / len(train) if train else None,
        re_testing=100.0 * sum(test) / len(test) if test else None,
        terms_used=used,
        terms_skipped=skipped,
        per_term=tuple(terms),
    )


def _one_step_fits(data, method, mode, cfg, **kw):
    """Fit every prefix used by one-step scoring; yields (i, fit_or_None, error)."""
    ds = _as_dataset(data)
    n = len(ds)
    if n < 4:
        raise ValueError(f"one-step scoring needs at least 4 intervals, got {n}")
    for i in range(3, n + 1):
        seg = prefix(ds, i - 1)
        try:
            yield i, estimate(seg, method, mode, cfg, **kw), None
        except (EstimationError, ValueError) as exc:
            yield i, None, str(exc)


def re_one_step(
    data,
    method: str = "mle",
    mode: str = "reasonable",
    cfg: RootConfig | None = None,
    **kw,
) -> ReReport:
    """One-step prediction scoring; see the module docstring for the 1/n convention."""
    ds = _as_dataset(data)
    n = len(ds)
    terms = []
    skipped = 0
    for i, fit, err in _one_step_fits(ds, method, mode, cfg, **kw):
        if fit is None:
            skipped += 1
            continue
        x = float(ds.intervals[i - 1])
        try:
            pred = mtbf(fit.params, i)
        except InvalidRegimeError:
            skipped += 1
            continue
        terms.append((i, x, pred, abs(x - pred) / x))
    if not terms:
        raise EstimationError(f"{method}: every one-step term failed")
    return ReReport(
        re=100.0 * sum(t[3] for t in terms) / n,
        re_training=None,
        re_testing=None,
        terms_used=len(terms),
        terms_skipped=skipped,
        per_term=tuple(terms),
    )


def count_optimal_solutions(
    data,
    method: str = "mle",
    cfg: RootConfig | None = None,
    **kw,
) -> int:
    """How many one-step prefix fits found a genuine root."""
    return sum(
        1
        for _, fit, _err in _one_step_fits(data, method, "reasonable", cfg, **kw)
        if fit is not None and fit.reasonable
    )


@dataclass(frozen=True)
class ExperimentReport:
    experiment_id: str
    config: dict
    rows: tuple = ()


def _config_snapshot(exp_id, mode, cfg, kw):
    snap = {"experiment_id": exp_id, "mode": mode}
    snap.update(asdict(cfg))
    snap.update(kw)
    return snap


def _thread_count() -> int:
    env = os.environ.get("JM_ESTIMATE_THREADS", "").strip()
    if env:
        return max(1, int(env))
    return min(4, os.cpu_count() or 1)


def run_experiment(
    exp_id: str,
    cfg: RootConfig | None = None,
    *,
    beta: float = 0.5,
    alpha: float = 0.05,
    omit_fraction: float = 0.25,
    split_index: int = 26,
) -> ExperimentReport:
    """Run one of the three bundled experiments over the built-in datasets.

    exp1: single fit on the first `split_index` NTDS intervals, split
    scoring, every method.  exp2: one-step scoring with root-preferring
    solutions plus root counts, all four datasets.  exp3: one-step scoring
    with forced asymptotic solutions.

    Method failures are recorded in their row, never raised.
    """
    if exp_id not in ("exp1", "exp2", "exp3"):
        raise ValueError(f"unknown experiment {exp_id!r}; expected exp1, exp2 or exp3")
    cfg = cfg or RootConfig()
    kw = dict(beta=beta, alpha=alpha, omit_fraction=omit_fraction)

    if exp_id == "exp1":
        ds = builtin_dataset("ntds")
        seg = prefix(ds, split_index)
        rows = []
        for method in TABLE_METHODS:
            try:
                fit = estimate(seg, method, "reasonable", cfg, **kw)
                rep = re_split(ds, fit.params, split_index)
                rows.append(
                    {
                        "method": method,
                        "dataset": ds.name,
                        "n0": fit.params.n0,
                        "phi": fit.params.phi,
                        "re": rep.re,
                        "re_training": rep.re_training,
                        "re_testing": rep.re_testing,
                        "root_kind": fit.root.kind,
                        "terms_skipped": rep.terms_skipped,
                    }
                )
            except (EstimationError, ValueError) as exc:
                rows.append({"method": method, "dataset": ds.name, "error": str(exc)})
        snap = _config_snapshot(exp_id, "reasonable", cfg, dict(kw, split_index=split_index))
        return ExperimentReport(exp_id, snap, tuple(rows))

    mode = "reasonable" if exp_id == "exp2" else "asymptotic"
    cells = [
        (method, name)
        for method in TABLE_METHODS
        for name in reference.DATASET_ORDER
    ]

    def run_cell(cell):
        method, name = cell
        ds = builtin_dataset(name)
        row = {"method": method, "dataset": name}
        try:
            records = list(_one_step_fits(ds, method, mode, cfg, **kw))
            n = len(ds)
            terms = []
            skipped = 0
            count = 0
            for i, fit, _err in records:
                if fit is None:
                    skipped += 1
                    continue
                if fit.reasonable:
                    count += 1
                x = float(ds.intervals[i - 1])
                try:
                    pred = mtbf(fit.params, i)
                except InvalidRegimeError:
                    skipped += 1
                    continue
                terms.append(abs(x - pred) / x)
            if not terms:
                raise EstimationError(f"{method}/{name}: every one-step term failed")
            row["re2"] = 100.0 * sum(terms) / n
            row["terms_skipped"] = skipped
            if exp_id == "exp2":
                row["optimal_count"] = count
        except (EstimationError, ValueError) as exc:
            row["error"] = str(exc)
        return row

    workers = _thread_count()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            rows = tuple(pool.map(run_cell, cells))
    else:
        rows = tuple(run_cell(c) for c in cells)
    snap = _config_snapshot(exp_id, mode, cfg, kw)
    return ExperimentReport(exp_id, snap, rows)


_CSV_COLUMNS = [
    "method",
    "dataset",
    "n0",
    "phi",
    "re",
    "re_training",
    "re_testing",
    "re2",
    "optimal_count",
    "terms_skipped",
    "root_kind",
    "error",
]


def _fmt(value, column=""):
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.6f}" if column == "phi" else f"{value:.4f}"
    return str(value)


def report_to_csv(report: ExperimentReport) -> str:
    """CSV body, one row per method/dataset, floats at 4 decimals (phi at 6)."""
    cols = [c for c in _CSV_COLUMNS if any(c in row for row in report.rows)]
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(cols)
    for row in report.rows:
        writer.writerow([_fmt(row.get(c), c) for c in cols])
    return buf.getvalue()


def report_to_json(report: ExperimentReport) -> str:
    """JSON body with full-precision numbers."""
    payload = {
        "experiment_id": report.experiment_id,
        "config": report.config,
        "rows": list(report.rows),
    }
    return json.dumps(payload, indent=2, sort_keys=False)


def render_table(report: ExperimentReport) -> str:
    """Human-readable aligned table."""
    cols = [c for c in _CSV_COLUMNS if any(c in row for row in report.rows)]
    cells = [[_fmt(row.get(c), c) for c in cols] for row in report.rows]
    widths = [max(len(c), *(len(r[j]) for r in cells)) for j, c in enumerate(cols)]
    lines = ["  ".join(c.ljust(w) for c, w in zip(cols, widths)).rstrip()]
    for r in cells:
        lines.append("  ".join(v.ljust(w) for v, w in zip(r, widths)).rstrip())
    return "\n".join(lines) + "\n"


def diff_against_reference(report: ExperimentReport, tolerance: float = 0.01) -> list[dict]:
    """Per-cell relative deviation of a report from the embedded references.

    Returns one record per compared quantity with an `ok` flag at the
    given relative tolerance; rows with errors compare as failures.
    """
    out = []

    def add(method, dataset, quantity, got, want):
        if want is None:
            return
        if got is None:
            out.append(
                {"method": method, "dataset": dataset, "quantity": quantity,
                 "value": None, "reference": want, "rel_dev": float("inf"), "ok": False}
            )
            return
        dev = abs(got - want) / abs(want) if want else abs(got - want)
        out.append(
            {"method": method, "dataset": dataset, "quantity": quantity,
             "value": got, "reference": want, "rel_dev": dev, "ok": dev <= tolerance}
        )

    if report.experiment_id == "exp1":
        for row in report.rows:
            ref = reference.EXP1_REFERENCE.get(row["method"])
            if ref is None:
                continue
            for q, want in zip(("n0", "phi", "re", "re_training", "re_testing"), ref):
                add(row["method"], row["dataset"], q, row.get(q), want)
        return out

    table = reference.EXP2_REFERENCE if report.experiment_id == "exp2" else reference.EXP3_REFERENCE
    for row in report.rows:
        ref = table.get(row["method"])
        if ref is None:
            continue
        col = reference.DATASET_ORDER.index(row["dataset"])
        add(row["method"], row["dataset"], "re2", row.get("re2"), ref[col])
        if report.experiment_id == "exp2":
            want = reference.EXP2_COUNT_REFERENCE[row["method"]][col]
            got = row.get("optimal_count")
            out.append(
                {"method": row["method"], "dataset": row["dataset"], "quantity": "optimal_count",
                 "value": got, "reference": want,
                 "rel_dev": 0.0 if got == want else float("inf"), "ok": got == want}
            )
    return out
