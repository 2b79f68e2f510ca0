"""Scikit-learn style front end for the reliability model."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator

from . import model
from .datasets import FailureDataset
from .estimators import estimate
from .solver import RootConfig

__all__ = ["JelinskiMoranda"]


class JelinskiMoranda(BaseEstimator):
    """Jelinski-Moranda reliability growth model with pluggable estimation.

    Parameters
    ----------
    method : str, default "mle"
        One of mle, lse, wnls-1..wnls-8, wnls2-1..wnls2-8, wnls-unit,
        wnls-opt, wnls-h1, wnls-h2.
    mode : {"reasonable", "asymptotic"}, default "reasonable"
        Whether to prefer a genuine root of the estimating function or to
        force the asymptotic solution.
    beta : float, default 0.5
        Exponent of the power-law weight schemes.
    alpha : float, default 0.05
        Significance level for the heteroscedasticity gate of the
        H-schemes.
    omit_fraction : float, default 0.25
        Middle fraction omitted by the heteroscedasticity test.
    phi_recovery : {"unit", "weighted"}, default "unit"
        Closed-form used to recover phi at the n0 root; "unit" matches the
        published reference tables, "weighted" yields a true stationary
        point of the weighted objective.
    step_tolerance, residual_tolerance, lower_margin, n0_cap, scan_points,
    max_iterations :
        Root-solver knobs; see `jmfit.solver.RootConfig`.

    Attributes
    ----------
    n0_ : float
        Estimated inherent error count.
    phi_ : float
        Estimated rate constant.
    result_ : EstimationResult
        Full fit record (root classification, weights, solver trace).

    Examples
    --------
    >>> from jmfit import builtin_dataset
    >>> from jmfit.estimator import JelinskiMoranda
    >>> est = JelinskiMoranda(method="mle").fit(builtin_dataset("ntds").intervals[:26])
    >>> round(est.n0_, 4)
    31.2159
    """

    def __init__(
        self,
        method: str = "mle",
        mode: str = "reasonable",
        beta: float = 0.5,
        alpha: float = 0.05,
        omit_fraction: float = 0.25,
        phi_recovery: str = "unit",
        step_tolerance: float = 1e-16,
        residual_tolerance: float = 1e-12,
        lower_margin: float = 1e-6,
        n0_cap: float = 1e12,
        scan_points: int = 4096,
        max_iterations: int = 200,
    ):
        self.method = method
        self.mode = mode
        self.beta = beta
        self.alpha = alpha
        self.omit_fraction = omit_fraction
        self.phi_recovery = phi_recovery
        self.step_tolerance = step_tolerance
        self.residual_tolerance = residual_tolerance
        self.lower_margin = lower_margin
        self.n0_cap = n0_cap
        self.scan_points = scan_points
        self.max_iterations = max_iterations

    def _root_config(self) -> RootConfig:
        return RootConfig(
            step_tolerance=self.step_tolerance,
            residual_tolerance=self.residual_tolerance,
            lower_margin=self.lower_margin,
            n0_cap=self.n0_cap,
            scan_points=self.scan_points,
            max_iterations=self.max_iterations,
        )

    @staticmethod
    def _validate_intervals(X) -> np.ndarray:
        if isinstance(X, FailureDataset):
            return X.intervals
        arr = np.asarray(X, dtype=float)
        arr = arr.ravel() if arr.ndim == 2 and 1 in arr.shape else arr
        if arr.ndim != 1:
            raise ValueError("X must be a 1-d sequence of failure intervals")
        if arr.size < 2:
            raise ValueError("need at least 2 intervals")
        if not np.all(np.isfinite(arr)) or np.any(arr <= 0):
            raise ValueError("intervals must be positive and finite")
        return arr

    def fit(self, X, y=None):
        """Fit on a 1-d sequence of failure time intervals."""
        intervals = self._validate_intervals(X)
        self.result_ = estimate(
            intervals,
            self.method,
            self.mode,
            self._root_config(),
            beta=self.beta,
            alpha=self.alpha,
            omit_fraction=self.omit_fraction,
            phi_recovery=self.phi_recovery,
        )
        self.n0_ = self.result_.params.n0
        self.phi_ = self.result_.params.phi
        self.n_intervals_ = int(intervals.size)
        return self

    def _check_fitted(self):
        if not hasattr(self, "result_"):
            raise AttributeError("this estimator is not fitted yet; call fit first")

    def predict(self, indices=None) -> np.ndarray:
        """Predicted mean time between failures for 1-based failure indices.

        With no argument, predicts the next interval (index k+1 after
        fitting on k intervals).
        """
        self._check_fitted()
        if indices is None:
            indices = [self.n_intervals_ + 1]
        idx = np.atleast_1d(np.asarray(indices, dtype=int))
        return np.array([model.mtbf(self.result_.params, int(i)) for i in idx])

    def failure_rate(self, i: int) -> float:
        self._check_fitted()
        return model.failure_rate(self.result_.params, i)

    def reliability(self, i: int, x: float) -> float:
        self._check_fitted()
        return model.reliability(self.result_.params, i, x)

    def mean_failures(self, t: float) -> float:
        self._check_fitted()
        return model.mean_failures(self.result_.params, t)
