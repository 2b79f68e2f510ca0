"""Scalar root finding for the estimating functions, with solution taxonomy.

Every estimating function f(n0) built by this package lives on the domain
(n0 > segment length k) and decays to zero as n0 grows.  Two outcomes are
meaningful:

* ``reasonable`` - a genuine root, evidenced by a sign change bracketing
  it.  Found by scanning a geometric grid of offsets above k, then
  shrinking the smallest bracket by bisection and polishing with Newton.
* ``asymptotic`` - no usable root; the damped Newton iteration rides the
  decaying tail outward until it meets the step criterion or the domain
  cap.  The iteration is started beyond the last detected sign change and
  past the largest |f| hump, so it always tracks the asymptote instead of
  being pulled back into a root basin.

The quoted control accuracy of 1e-16 is interpreted as a relative step
criterion (|delta| <= 1e-16 * max(1, |n0|)); an absolute criterion on |f|
is unreachable for the scales these functions take.  The interpretation is
recorded in the result trace.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

import numpy as np

__all__ = ["RootConfig", "RootResult", "find_root", "numeric_derivative"]

_STEP_CRITERION_NOTE = "relative step: |delta n0| <= step_tolerance * max(1, |n0|)"


@dataclass(frozen=True)
class RootConfig:
    """Knobs for `find_root`; the defaults reproduce the bundled reports."""

    step_tolerance: float = 1e-16
    residual_tolerance: float = 1e-12
    lower_margin: float = 1e-6
    n0_cap: float = 1e12
    scan_points: int = 4096
    max_iterations: int = 200

    def __post_init__(self) -> None:
        if min(self.step_tolerance, self.residual_tolerance, self.lower_margin) <= 0:
            raise ValueError("tolerances and lower_margin must be positive")
        if self.scan_points < 2:
            raise ValueError("scan_points must be >= 2")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be >= 1")


@dataclass(frozen=True)
class RootResult:
    n0: float
    kind: str  # "reasonable" | "asymptotic" | "failed"
    residual: float
    iterations: int
    bracket: tuple[float, float] | None = None
    trace: dict = field(default_factory=dict)


def numeric_derivative(f: Callable[[float], float], x: float) -> float:
    """Central difference with h = max(1e-6, 1e-6*|x|)."""
    h = max(1e-6, 1e-6 * abs(x))
    hi = float(f(x + h))
    lo = float(f(x - h))
    if not (np.isfinite(hi) and np.isfinite(lo)):
        raise ValueError(f"function not finite near x={x}")
    return (hi - lo) / (2.0 * h)


def _eval_grid(f, grid: np.ndarray) -> np.ndarray:
    try:
        fv = np.asarray(f(grid), dtype=float)
        if fv.shape == grid.shape:
            return fv
    except Exception:
        pass
    return np.array([float(f(x)) for x in grid], dtype=float)


def _bracket_width_ok(a: float, b: float, cfg: RootConfig) -> bool:
    mid = 0.5 * (a + b)
    return (b - a) <= cfg.step_tolerance * max(1.0, abs(mid)) * 10.0


def _polish(f, df, a, b, fa, fb, k, cfg):
    """Shrink a sign-change bracket by bisection, then polish with Newton.

    Returns (root, bracket, iterations).  The reported bracket keeps the
    sign change and satisfies the width criterion.
    """
    iterations = 0
    root = None
    for _ in range(cfg.max_iterations):
        if _bracket_width_ok(a, b, cfg):
            break
        m = 0.5 * (a + b)
        if m <= a or m >= b:  # bracket at floating-point resolution
            break
        fm = float(f(m))
        iterations += 1
        if fm == 0.0:
            root = m
            a = b = m  # exact root: the bracket collapses onto it
            break
        if fa * fm < 0:
            b, fb = m, fm
        else:
            a, fa = m, fm
    if root is None:
        root = 0.5 * (a + b)
    # Newton polish, clamped to the bracket.
    for _ in range(4):
        fx = float(f(root))
        if fx == 0.0:
            break
        try:
            dfx = float(df(root))
        except Exception:
            break
        if dfx == 0.0 or not np.isfinite(dfx):
            break
        step = fx / dfx
        cand = root - step
        if not (a <= cand <= b):
            break
        iterations += 1
        moved = abs(cand - root)
        root = cand
        if moved <= cfg.step_tolerance * max(1.0, abs(root)):
            break
    return root, (a, b), iterations


def _ride_tail(f, df, start, k, cfg):
    """Damped Newton along the decaying tail; stops at the step criterion,
    the cap, or the iteration budget."""
    x = float(start)
    cap_hit = False
    iterations = 0
    floor = k + cfg.lower_margin
    for _ in range(cfg.max_iterations):
        fx = float(f(x))
        if not np.isfinite(fx):
            return x, iterations, cap_hit, "nonfinite"
        try:
            dfx = float(df(x))
        except Exception:
            dfx = float("nan")
        if dfx == 0.0 or not np.isfinite(dfx):
            x = cfg.n0_cap
            cap_hit = True
            break
        step = fx / dfx
        cand = x - step
        halvings = 0
        while cand <= floor and halvings < 60:
            step *= 0.5
            cand = x - step
            halvings += 1
        if cand <= floor:
            break
        iterations += 1
        if cand >= cfg.n0_cap:
            x = cfg.n0_cap
            cap_hit = True
            break
        if abs(cand - x) <= cfg.step_tolerance * max(1.0, abs(x)):
            x = cand
            break
        x = cand
    return x, iterations, cap_hit, None


def find_root(
    f: Callable,
    df: Callable,
    k: float,
    cfg: RootConfig | None = None,
    mode: str = "reasonable",
) -> RootResult:
    """Solve f(n0) = 0 on (k + lower_margin, n0_cap], classifying the outcome.

    mode="reasonable": scan for a sign change; if one exists the smallest
    bracket is refined and the result kind is "reasonable", otherwise the
    tail iteration runs and the kind is "asymptotic".

    mode="asymptotic": no root is accepted even if one exists; the result
    is always the tail limit point (kind "asymptotic").
    """
    if mode not in ("reasonable", "asymptotic"):
        raise ValueError(f"unknown mode {mode!r}")
    cfg = cfg or RootConfig()
    if cfg.n0_cap <= k + cfg.lower_margin:
        raise ValueError("n0_cap must exceed the domain lower bound")

    offsets = np.geomspace(cfg.lower_margin, cfg.n0_cap - k, cfg.scan_points)
    grid = k + offsets
    fv = _eval_grid(f, grid)
    finite = np.isfinite(fv)
    trace: dict = {"mode": mode, "step_criterion": _STEP_CRITERION_NOTE}
    if not finite.any():
        return RootResult(float("nan"), "failed", float("nan"), 0, None, dict(trace, error="no finite evaluations"))

    signs = np.sign(fv)
    changes = np.where((signs[:-1] * signs[1:] < 0) & finite[:-1] & finite[1:])[0]
    exact = np.where((fv == 0.0) & finite)[0]
    trace["sign_changes"] = int(len(changes)) + int(len(exact))

    if mode == "reasonable" and (len(changes) or len(exact)):
        if len(exact) and (not len(changes) or exact[0] < changes[0]):
            root = float(grid[int(exact[0])])
            res = RootResult(root, "reasonable", 0.0, 0, (root, root), dict(trace, exact_grid_zero=True))
            return _with_curvature(res, df)
        j = int(changes[0])
        a, b = float(grid[j]), float(grid[j + 1])
        root, bracket, iters = _polish(f, df, a, b, float(fv[j]), float(fv[j + 1]), k, cfg)
        res = RootResult(root, "reasonable", float(f(root)), iters, bracket, trace)
        return _with_curvature(res, df)

    # Tail branch: start beyond the last sign change and past the |f| hump.
    j0 = int(changes[-1]) + 1 if len(changes) else 0
    seg = np.abs(np.where(finite, fv, -np.inf)[j0:])
    jmax = int(np.argmax(seg))
    start_idx = min(j0 + jmax + 1, len(grid) - 1)
    start = float(grid[start_idx])
    trace["start"] = start
    x, iters, cap_hit, err = _ride_tail(f, df, start, k, cfg)
    if err == "nonfinite":
        return RootResult(float("nan"), "failed", float("nan"), iters, None, dict(trace, error="non-finite evaluation"))
    trace["cap_hit"] = cap_hit
    res = RootResult(float(x), "asymptotic", float(f(x)), iters, None, trace)
    return _with_curvature(res, df)


def _with_curvature(res: RootResult, df) -> RootResult:
    """Record first/second-derivative signs at the solution (diagnostics only)."""
    try:
        d1 = float(df(res.n0))
        d2 = numeric_derivative(df, res.n0)
        res.trace["slope_sign"] = int(np.sign(d1))
        res.trace["curvature_sign"] = int(np.sign(d2))
    except Exception:
        pass
    return res
