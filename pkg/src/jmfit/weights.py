"""Weight policies for the weighted least-squares estimators.

The catalog holds eight empirical schemes built from the failure index i
and the cumulative test time S_i = x_1 + ... + x_i, their squared
variants, the variance-optimal weight, and the inverse-squared-residual
weight used by the second heteroscedasticity scheme.

Scheme numbering follows the published result tables, which pair scheme 3
with i**(-beta) and scheme 4 with i**(+beta).  (The listing order in the
accompanying text swaps those two; the tables are authoritative here, and
the cross-identities scheme3*scheme4 == 1 etc. hold either way.)
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .datasets import FailureDataset
from .model import JmParams

__all__ = [
    "WeightScheme",
    "empirical_weights",
    "optimal_weights",
    "inverse_residual_weights",
    "squared",
    "unit_weights",
    "as_weight_vector",
]

EMPIRICAL_SCHEME_COUNT = 8


@dataclass(frozen=True)
class WeightScheme:
    """A named weight policy.

    kind: "empirical" | "squared_empirical" | "optimal" | "inverse_residual" | "unit"
    index: catalog position 1..8 for the empirical kinds, else None.
    beta: exponent used by the i**(+-beta) schemes.
    """

    kind: str
    index: int | None = None
    beta: float = 0.5

    def __post_init__(self) -> None:
        if self.kind not in ("empirical", "squared_empirical", "optimal", "inverse_residual", "unit"):
            raise ValueError(f"unknown weight kind {self.kind!r}")
        if self.kind in ("empirical", "squared_empirical"):
            if self.index is None or not 1 <= self.index <= EMPIRICAL_SCHEME_COUNT:
                raise ValueError(f"empirical scheme index must be 1..8, got {self.index}")
        if self.beta <= 0:
            raise ValueError(f"beta must be positive, got {self.beta}")


def as_weight_vector(values, n: int | None = None) -> np.ndarray:
    """Validate and return a weight vector (positive, finite, 1-d)."""
    w = np.asarray(values, dtype=float)
    if w.ndim != 1 or w.size < 1:
        raise ValueError("weights must be a non-empty 1-d sequence")
    if n is not None and w.size != n:
        raise ValueError(f"expected {n} weights, got {w.size}")
    if not np.all(np.isfinite(w)) or np.any(w <= 0):
        raise ValueError("weights must be positive and finite")
    return w


def _intervals(data) -> np.ndarray:
    if isinstance(data, FailureDataset):
        return data.intervals
    return np.asarray(data, dtype=float)


def empirical_weights(scheme: WeightScheme, data) -> np.ndarray:
    """Realize one of the eight empirical schemes on a dataset."""
    x = _intervals(data)
    if x.size < 1 or np.any(x <= 0):
        raise ValueError("data must be non-empty with positive intervals")
    n = x.size
    i = np.arange(1, n + 1, dtype=float)
    cum = np.cumsum(x)
    beta = scheme.beta
    table = {
        1: lambda: cum / i,
        2: lambda: i / cum,
        3: lambda: i ** (-beta),
        4: lambda: i ** beta,
        5: lambda: i,
        6: lambda: 1.0 / i,
        7: lambda: cum,
        8: lambda: 1.0 / cum,
    }
    if scheme.kind == "empirical":
        return table[scheme.index]()
    if scheme.kind == "squared_empirical":
        return squared(table[scheme.index]())
    if scheme.kind == "unit":
        return unit_weights(n)
    raise ValueError(f"scheme kind {scheme.kind!r} needs fitted parameters, not just data")


def optimal_weights(p: JmParams, k: int) -> np.ndarray:
    """Inverse-variance weights phi^2 * (n0 - i + 1)^2 for i = 1..k."""
    if p.n0 <= k:
        raise ValueError(f"n0={p.n0:g} must exceed the segment length {k}")
    i = np.arange(1, k + 1, dtype=float)
    return (p.phi * (p.n0 - i + 1.0)) ** 2


def inverse_residual_weights(residuals, floor: float | None = None) -> np.ndarray:
    """Weights 1/eps_i^2 with a floor guarding exactly-fit points.

    The floor defaults to 1e-12 * (mean |residual|)^2, or 1e-300 when every
    residual is zero; clamping keeps the sample size intact instead of
    dropping points, which would change degrees of freedom downstream.
    """
    eps = np.asarray(residuals, dtype=float)
    if eps.ndim != 1 or eps.size < 1:
        raise ValueError("residuals must be a non-empty 1-d sequence")
    if floor is None:
        scale = float(np.mean(np.abs(eps)))
        floor = 1e-12 * scale * scale if scale > 0 else 1e-300
    if floor <= 0:
        raise ValueError("floor must be positive")
    return 1.0 / np.maximum(eps * eps, floor)


def squared(w) -> np.ndarray:
    """Elementwise square of a weight vector."""
    return as_weight_vector(w) ** 2


def unit_weights(k: int) -> np.ndarray:
    if k < 1:
        raise ValueError("k must be >= 1")
    return np.ones(k, dtype=float)
