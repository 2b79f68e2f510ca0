"""Pure Jelinski-Moranda model mathematics.

The model assumes a fixed unknown count of inherent errors ``n0`` and a
proportionality constant ``phi``; the i-th failure interval is exponential
with rate ``phi * (n0 - i + 1)``.  All functions here are stateless.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "JmParams",
    "InvalidRegimeError",
    "failure_rate",
    "reliability",
    "mtbf",
    "mean_failures",
    "interval_moments",
]


class InvalidRegimeError(ValueError):
    """Failure index exceeds the fitted error count (rate would be <= 0).

    Raised as a typed error, not returned as NaN, so callers that average
    predictions can detect and count invalid terms instead of silently
    propagating NaN.
    """


@dataclass(frozen=True)
class JmParams:
    """Fitted model parameters: inherent error count and rate constant."""

    n0: float
    phi: float

    def __post_init__(self) -> None:
        if not (self.n0 > 0 and math.isfinite(self.n0)):
            raise ValueError(f"n0 must be a positive finite real, got {self.n0}")
        if not (self.phi > 0 and math.isfinite(self.phi)):
            raise ValueError(f"phi must be a positive finite real, got {self.phi}")


def failure_rate(p: JmParams, i: int) -> float:
    """Failure rate in interval i: phi * (n0 - i + 1).

    May be <= 0 when i exceeds n0 + 1; validity is exposed through the
    sign so callers can decide how to handle the invalid regime.
    """
    if i < 1:
        raise ValueError(f"failure index must be >= 1, got {i}")
    return p.phi * (p.n0 - i + 1.0)


def _checked_rate(p: JmParams, i: int) -> float:
    rate = failure_rate(p, i)
    if rate <= 0:
        raise InvalidRegimeError(
            f"index {i} is beyond the fitted error count n0={p.n0:g} (rate {rate:g})"
        )
    return rate


def reliability(p: JmParams, i: int, x: float) -> float:
    """Probability that interval i exceeds x: exp(-rate * x)."""
    if x < 0:
        raise ValueError(f"elapsed time must be >= 0, got {x}")
    return math.exp(-_checked_rate(p, i) * x)


def mtbf(p: JmParams, i: int) -> float:
    """Mean time between failures for interval i: 1 / rate."""
    return 1.0 / _checked_rate(p, i)


def mean_failures(p: JmParams, t: float) -> float:
    """Expected cumulative failures by time t: n0 * (1 - exp(-phi*t))."""
    if t < 0:
        raise ValueError(f"cumulative time must be >= 0, got {t}")
    return p.n0 * -math.expm1(-p.phi * t)


def interval_moments(p: JmParams, i: int) -> tuple[float, float]:
    """Mean and variance of interval i.

    The interval is exponential, so the variance equals the squared mean;
    the variance grows with i, which is the structural heteroscedasticity
    the weighted estimators target.
    """
    mean = mtbf(p, i)
    return mean, mean * mean
