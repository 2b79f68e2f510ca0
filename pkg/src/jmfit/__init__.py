"""Jelinski-Moranda reliability model estimation.

Fits the classic exponential reliability-growth model by maximum
likelihood, nonlinear least squares, and weighted nonlinear least squares
(empirical, variance-optimal and heteroscedasticity-gated weight
policies), classifies solutions as genuine roots or asymptotic limits,
and reproduces the published comparison experiments on the four bundled
failure datasets.
"""

from .datasets import (
    BUILTIN_DATASETS,
    DatasetFormatError,
    FailureDataset,
    builtin_dataset,
    load_dataset,
    prefix,
    save_dataset,
)
from .estimator import JelinskiMoranda
from .estimators import (
    EstimationError,
    EstimationResult,
    TABLE_METHODS,
    estimate,
    estimate_with_weights,
    f_lse,
    f_mle,
    f_wls,
    lse_gq_test,
    objective_swls,
    phi_mle,
    phi_wls,
    swls_gradient,
)
from .evaluation import (
    ExperimentReport,
    ReReport,
    count_optimal_solutions,
    diff_against_reference,
    re_one_step,
    re_split,
    run_experiment,
)
from .heteroscedasticity import GqTestResult, f_cdf, f_quantile, goldfeld_quandt, residuals
from .model import (
    InvalidRegimeError,
    JmParams,
    failure_rate,
    interval_moments,
    mean_failures,
    mtbf,
    reliability,
)
from .solver import RootConfig, RootResult, find_root, numeric_derivative
from .weights import (
    WeightScheme,
    empirical_weights,
    inverse_residual_weights,
    optimal_weights,
    squared,
    unit_weights,
)

__version__ = "0.1.0"

__all__ = [
    "BUILTIN_DATASETS",
    "DatasetFormatError",
    "EstimationError",
    "EstimationResult",
    "ExperimentReport",
    "FailureDataset",
    "GqTestResult",
    "InvalidRegimeError",
    "JelinskiMoranda",
    "JmParams",
    "ReReport",
    "RootConfig",
    "RootResult",
    "TABLE_METHODS",
    "WeightScheme",
    "builtin_dataset",
    "count_optimal_solutions",
    "diff_against_reference",
    "empirical_weights",
    "estimate",
    "estimate_with_weights",
    "f_cdf",
    "f_lse",
    "f_mle",
    "f_quantile",
    "f_wls",
    "failure_rate",
    "find_root",
    "goldfeld_quandt",
    "interval_moments",
    "inverse_residual_weights",
    "load_dataset",
    "lse_gq_test",
    "mean_failures",
    "mtbf",
    "numeric_derivative",
    "objective_swls",
    "optimal_weights",
    "phi_mle",
    "phi_wls",
    "prefix",
    "re_one_step",
    "re_split",
    "reliability",
    "residuals",
    "run_experiment",
    "save_dataset",
    "squared",
    "swls_gradient",
    "unit_weights",
]
