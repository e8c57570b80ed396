"""Series containers, log-return transform, exponential weights.

The weighting scheme assigns observation ``s`` days before the window end
the weight ``w0 * exp(-s / theta)`` with ``w0`` chosen so the window sums
to one. ``theta`` is the characteristic (e-folding) time in days, and
``theta = inf`` degenerates to the plain uniform average.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import (
    InsufficientDataError,
    InvalidParameterError,
    RejectedInputError,
)

MASK64 = (1 << 64) - 1


def _as_float_array(values, name: str) -> np.ndarray:
    arr = np.asarray(values, dtype=float)
    if arr.ndim != 1:
        raise InvalidParameterError(f"{name} must be one-dimensional")
    return arr


@dataclass(frozen=True, eq=False)
class PriceSeries:
    """Daily closing prices with their calendar dates.

    Dates are metadata: all analysis treats the series as evenly spaced in
    trading time. Prices must be strictly positive and finite, dates must
    be strictly increasing, and at least two observations are required.
    """

    timestamps: np.ndarray
    prices: np.ndarray

    def __post_init__(self):
        prices = _as_float_array(self.prices, "prices")
        ts = np.asarray(self.timestamps, dtype="datetime64[D]")
        object.__setattr__(self, "prices", prices)
        object.__setattr__(self, "timestamps", ts)
        if len(prices) != len(ts):
            raise RejectedInputError("timestamps and prices differ in length")
        if len(prices) < 2:
            raise InsufficientDataError("a price series needs at least 2 points")
        bad = np.flatnonzero(~np.isfinite(prices) | (prices <= 0))
        if bad.size:
            i = int(bad[0])
            raise RejectedInputError(
                f"non-positive or non-finite price {prices[i]!r} at index {i}"
            )
        if np.any(np.diff(ts).astype(int) <= 0):
            raise RejectedInputError("timestamps must be strictly increasing")

    def __len__(self) -> int:
        return len(self.prices)


@dataclass(frozen=True, eq=False)
class ReturnSeries:
    """Daily log-returns, each stamped with the date of the later price."""

    values: np.ndarray
    timestamps: np.ndarray

    def __post_init__(self):
        values = _as_float_array(self.values, "values")
        ts = np.asarray(self.timestamps, dtype="datetime64[D]")
        object.__setattr__(self, "values", values)
        object.__setattr__(self, "timestamps", ts)
        if len(values) != len(ts):
            raise RejectedInputError("timestamps and values differ in length")

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True, eq=False)
class LogPriceSeries:
    """Natural log of a price series; the object every estimator consumes.

    ``timestamps`` is optional so synthetic series can be analyzed without
    inventing dates; window results then fall back to integer indices.
    """

    values: np.ndarray
    timestamps: np.ndarray | None = None

    def __post_init__(self):
        values = _as_float_array(self.values, "values")
        object.__setattr__(self, "values", values)
        if self.timestamps is not None:
            ts = np.asarray(self.timestamps, dtype="datetime64[D]")
            if len(ts) != len(values):
                raise RejectedInputError("timestamps and values differ in length")
            object.__setattr__(self, "timestamps", ts)

    def __len__(self) -> int:
        return len(self.values)


@dataclass(frozen=True, eq=False)
class WeightVector:
    """Normalized exponential weights over a window of ``window`` days.

    ``weights[s]`` multiplies the observation ``s`` days before the window
    end, so index 0 is the most recent day. The full vector sums to one.
    """

    weights: np.ndarray
    theta: float
    window: int


def log_returns(prices: PriceSeries) -> ReturnSeries:
    """Daily log-returns r(t) = ln P(t+1) - ln P(t).

    The result is one element shorter than the input and is stamped with
    the date of the later price of each pair.
    """
    logs = np.log(prices.prices)
    return ReturnSeries(values=np.diff(logs), timestamps=prices.timestamps[1:])


def log_prices(prices: PriceSeries) -> LogPriceSeries:
    """Natural log of the prices, keeping the dates."""
    return LogPriceSeries(values=np.log(prices.prices), timestamps=prices.timestamps)


def exp_weights(window: int, theta: float) -> WeightVector:
    """Exponential weight vector for a window of ``window`` days.

    w[s] = w0 * exp(-s / theta) for s = 0 .. window-1, with
    w0 = (1 - exp(-1/theta)) / (1 - exp(-window/theta)) so the vector sums
    to one. ``theta = math.inf`` yields the uniform vector exactly.
    """
    if not isinstance(window, (int, np.integer)) or isinstance(window, bool):
        raise InvalidParameterError("window must be an integer number of days")
    if window < 1:
        raise InvalidParameterError(f"window must be >= 1, got {window}")
    theta = float(theta)
    if not theta > 0:
        raise InvalidParameterError(f"theta must be positive, got {theta}")
    n = int(window)
    if math.isinf(theta):
        w = np.full(n, 1.0 / n)
    else:
        s = np.arange(n, dtype=float)
        # expm1 keeps w0 accurate when theta is huge and both exponents
        # are tiny; the ratio then tends cleanly to 1/window.
        w0 = math.expm1(-1.0 / theta) / math.expm1(-n / theta)
        w = w0 * np.exp(-s / theta)
    return WeightVector(weights=w, theta=theta, window=n)


def weighted_mean(values, weights: WeightVector) -> float:
    """Weighted average with index 0 holding the most recent observation.

    When fewer values than weights are supplied (a lag shortens the usable
    range), the leading ``len(values)`` weights are renormalized to sum to
    one before averaging, which preserves the recency semantics at every
    lag.
    """
    v = _as_float_array(values, "values")
    m = len(v)
    if m == 0:
        raise InsufficientDataError("weighted_mean of an empty sequence")
    if m > weights.window:
        raise InvalidParameterError(
            f"{m} values exceed the weight window of {weights.window}"
        )
    w = weights.weights[:m]
    return float(np.dot(w, v) / w.sum())
