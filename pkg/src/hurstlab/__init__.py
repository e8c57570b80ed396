"""Weighted generalized Hurst exponents and power-law return tails.

The pipeline: ingest daily prices, take log-returns or log-prices, run
the exponentially weighted structure-function estimator of H(q) over
rolling windows, fit power-law exponents to the return tails, and compare
the measured scaling exponent with the one the tail index implies.
Synthetic generators with known exponents provide the validation oracles.
"""

from .core import (
    LogPriceSeries,
    PriceSeries,
    ReturnSeries,
    WeightVector,
    exp_weights,
    log_prices,
    log_returns,
    weighted_mean,
)
from .errors import (
    DegenerateSeriesError,
    DegenerateTailError,
    GeneratorFailureError,
    HurstlabError,
    InsufficientDataError,
    InvalidParameterError,
    NumericError,
    ParseError,
    RejectedInputError,
)
from .ghe import (
    DEFAULT_TAU_MAX_RANGE,
    GheEstimate,
    StructureFunction,
    estimate_ghe,
    ghe_from_structure,
    multifractality_width,
    structure_function,
)
from .rolling import GheTrajectory, RollingConfig, rolling_ghe, window_count
from .synth import GeneratorSpec, derived_seed, generate
from .tails import (
    Ccdf,
    SplitFit,
    TailFit,
    ccdf,
    excess_kurtosis,
    fit_tail,
    split_period_fit,
    tail_pvalue,
    theoretical_hurst,
)

__version__ = "0.1.0"

__all__ = [
    "PriceSeries",
    "ReturnSeries",
    "LogPriceSeries",
    "WeightVector",
    "log_returns",
    "log_prices",
    "exp_weights",
    "weighted_mean",
    "StructureFunction",
    "GheEstimate",
    "DEFAULT_TAU_MAX_RANGE",
    "structure_function",
    "ghe_from_structure",
    "estimate_ghe",
    "multifractality_width",
    "RollingConfig",
    "GheTrajectory",
    "rolling_ghe",
    "window_count",
    "Ccdf",
    "TailFit",
    "SplitFit",
    "ccdf",
    "fit_tail",
    "tail_pvalue",
    "theoretical_hurst",
    "excess_kurtosis",
    "split_period_fit",
    "GeneratorSpec",
    "generate",
    "derived_seed",
    "HurstlabError",
    "ParseError",
    "RejectedInputError",
    "InvalidParameterError",
    "InsufficientDataError",
    "DegenerateSeriesError",
    "DegenerateTailError",
    "NumericError",
    "GeneratorFailureError",
]
