"""Goldfeld-Quandt heteroscedasticity test on model residuals.

The regression here is x_i = 1/(phi (n0 - i + 1)) with the failure index
as regressor, so observations are already ordered by the variance driver
and no re-sorting is needed.  Residuals come from a single global
least-squares fit; the middle block is dropped and the two outer blocks'
raw residual sums of squares form the F-ratio.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import betainc

from .datasets import FailureDataset
from .model import JmParams

__all__ = ["GqTestResult", "residuals", "goldfeld_quandt", "f_cdf", "f_quantile"]

MODEL_PARAM_COUNT = 2  # (n0, phi)


def residuals(data, p: JmParams) -> np.ndarray:
    """Index-aligned residuals eps_i = x_i - 1/(phi (n0 - i + 1))."""
    x = data.intervals if isinstance(data, FailureDataset) else np.asarray(data, float)
    i = np.arange(1, x.size + 1, dtype=float)
    d = p.n0 - i + 1.0
    if np.any(d <= 0):
        raise ValueError(f"invalid regime: n0={p.n0:g} <= {x.size} - 1")
    return x - 1.0 / (p.phi * d)


@dataclass(frozen=True)
class GqTestResult:
    statistic: float
    dof: tuple[int, int]
    critical_value: float
    alpha: float
    heteroscedastic: bool
    omitted: int
    applicable: bool


def goldfeld_quandt(res, alpha: float = 0.05, omit_fraction: float = 0.25) -> GqTestResult:
    """Run the test on a residual vector.

    The omitted middle count d = round(N * omit_fraction) is adjusted by
    one (shrinking first) so the remaining observations split evenly.
    Each subgroup contributes (N - d)/2 - 2 degrees of freedom; when that
    drops below 1 the test is inapplicable and reported as such.
    """
    eps = np.asarray(res, dtype=float)
    if eps.ndim != 1 or eps.size < 1:
        raise ValueError("residuals must be a non-empty 1-d sequence")
    if not 0 < alpha < 1:
        raise ValueError(f"alpha must be in (0, 1), got {alpha}")
    if not 0 <= omit_fraction < 1:
        raise ValueError(f"omit_fraction must be in [0, 1), got {omit_fraction}")

    n_obs = eps.size
    d = round(n_obs * omit_fraction)
    if (n_obs - d) % 2:
        d = d - 1 if d >= 1 else d + 1
    half = (n_obs - d) // 2
    dof = (n_obs - d - 2 * MODEL_PARAM_COUNT) // 2
    if dof < 1 or half < 1:
        return GqTestResult(float("nan"), (dof, dof), float("nan"), alpha, False, d, False)

    err_low = float(np.sum(eps[:half] ** 2))
    err_high = float(np.sum(eps[n_obs - half:] ** 2))
    if err_low == 0.0:
        stat = math.inf if err_high > 0 else 1.0
    else:
        stat = (err_high / dof) / (err_low / dof)
    crit = f_quantile(1.0 - alpha, dof, dof)
    return GqTestResult(stat, (dof, dof), crit, alpha, stat > crit, d, True)


def f_cdf(x, d1: int, d2: int) -> float:
    """F(d1, d2) distribution function via the regularized incomplete beta."""
    if d1 < 1 or d2 < 1:
        raise ValueError("degrees of freedom must be >= 1")
    x = np.asarray(x, dtype=float)
    t = d1 * x / (d1 * x + d2)
    out = np.where(x > 0, betainc(d1 / 2.0, d2 / 2.0, np.where(x > 0, t, 0.0)), 0.0)
    return float(out) if out.ndim == 0 else out


def f_quantile(p: float, d1: int, d2: int) -> float:
    """Inverse F distribution function, to 1e-10 relative.

    Brackets the quantile by doubling, bisects, and finishes with Newton
    steps on the distribution function.
    """
    if not 0 < p < 1:
        raise ValueError(f"p must be in (0, 1), got {p}")
    if d1 < 1 or d2 < 1:
        raise ValueError("degrees of freedom must be >= 1")
    lo, hi = 0.0, 1.0
    while f_cdf(hi, d1, d2) < p:
        lo, hi = hi, hi * 2.0
        if hi > 1e300:
            raise ValueError("quantile bracket overflow")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if f_cdf(mid, d1, d2) < p:
            lo = mid
        else:
            hi = mid
        if hi - lo <= 1e-12 * max(1.0, hi):
            break
    x = 0.5 * (lo + hi)
    for _ in range(8):
        err = f_cdf(x, d1, d2) - p
        pdf = _f_pdf(x, d1, d2)
        if pdf <= 0 or not math.isfinite(pdf):
            break
        step = err / pdf
        cand = x - step
        if not (lo <= cand <= hi):
            break
        x = cand
        if abs(step) <= 1e-10 * max(1.0, abs(x)):
            break
    return x


def _f_pdf(x: float, d1: int, d2: int) -> float:
    if x <= 0:
        return 0.0
    a, b = d1 / 2.0, d2 / 2.0
    lg = (
        math.lgamma(a + b)
        - math.lgamma(a)
        - math.lgamma(b)
        + a * math.log(d1 / d2)
        + (a - 1.0) * math.log(x)
        - (a + b) * math.log1p(d1 * x / d2)
    )
    return math.exp(lg)
