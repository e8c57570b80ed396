"""Structure functions and the generalized Hurst exponent.

The q-th order structure function of a series S over lags tau = 1..tau_max
is K_q(tau) = avg(|S(t+tau) - S(t)|^q) / avg(|S(t)|^q), with either plain
or exponentially weighted averages. If K_q(tau) scales like tau**(q*H(q)),
the slope of ln K_q against ln tau estimates q*H(q). The estimator fits
that slope once per tau_max over an inclusive range of tau_max values and
reports the mean and spread of the fitted exponents.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import LogPriceSeries, WeightVector, weighted_mean
from .errors import (
    DegenerateSeriesError,
    InsufficientDataError,
    InvalidParameterError,
)

# 15 fits, tau_max = 5, 6, ..., 19
DEFAULT_TAU_MAX_RANGE = tuple(range(5, 20))


@dataclass(frozen=True, eq=False)
class StructureFunction:
    """K_q(tau) on an integer lag grid 1..tau_max for one window."""

    q: float
    lags: np.ndarray
    values: np.ndarray
    weighted: bool
    theta: float | None = None


@dataclass(frozen=True, eq=False)
class GheEstimate:
    """H(q) for one window: mean and spread over the tau_max fits.

    ``per_tau_max`` holds the individual fitted exponents, ``h`` is their
    arithmetic mean and ``sigma`` their population standard deviation.
    ``excluded_lags`` lists lags dropped from the fits because the
    structure function vanished there (flat sub-windows).
    """

    q: float
    h: float
    sigma: float
    tau_max_range: tuple
    per_tau_max: tuple
    excluded_lags: tuple = ()


def _series_values(series) -> np.ndarray:
    if isinstance(series, LogPriceSeries):
        return series.values
    return np.asarray(series, dtype=float)


def structure_function(
    series,
    q: float,
    tau_max: int,
    weights: WeightVector | None = None,
    normalized: bool = True,
) -> StructureFunction:
    """Compute K_q(tau) for tau = 1..tau_max on one window.

    ``series`` is a LogPriceSeries or a plain 1-d array treated as one
    window. With ``weights`` given, both the increment average and the
    normalization use the exponential weighting, index 0 on the most
    recent observation; the weight vector must span exactly the window.
    ``normalized=False`` skips the division by avg(|S|^q), leaving the raw
    q-th moment of the increments. The normalization is constant in tau,
    so it shifts the intercept of the log-log fit and never the slope.
    """
    x = _series_values(series)
    n = len(x)
    q = float(q)
    if not q > 0:
        raise InvalidParameterError(f"q must be positive, got {q}")
    if not isinstance(tau_max, (int, np.integer)) or tau_max < 2:
        raise InvalidParameterError(f"tau_max must be an integer >= 2, got {tau_max}")
    if n <= tau_max + 1:
        raise InsufficientDataError(
            f"window of {n} points cannot support lags up to {tau_max}"
        )
    if weights is not None and weights.window != n:
        raise InvalidParameterError(
            f"weight vector spans {weights.window} days but the window has {n}"
        )
    if np.ptp(x) == 0:
        raise DegenerateSeriesError(
            "constant window, increments are all zero and no scaling fit is possible"
        )

    lags = np.arange(1, tau_max + 1)
    k = np.empty(tau_max)
    for tau in lags:
        inc = np.abs(x[tau:] - x[:n - tau]) ** q
        if weights is None:
            k[tau - 1] = inc.mean()
        else:
            # most recent increment first, truncated weights renormalized
            k[tau - 1] = weighted_mean(inc[::-1], weights)
    if normalized:
        mag = np.abs(x[::-1]) ** q
        denom = weighted_mean(mag, weights) if weights is not None else mag.mean()
        if denom == 0:
            raise DegenerateSeriesError("normalization moment avg(|S|^q) is zero")
        k = k / denom
    return StructureFunction(
        q=q,
        lags=lags,
        values=k,
        weighted=weights is not None,
        theta=None if weights is None else weights.theta,
    )


def _ols_slope(x: np.ndarray, y: np.ndarray) -> float:
    xm = x - x.mean()
    return float(np.dot(xm, y - y.mean()) / np.dot(xm, xm))


def ghe_from_structure(sf: StructureFunction, tau_max_range=DEFAULT_TAU_MAX_RANGE) -> GheEstimate:
    """Fit H(q) from an already computed structure function.

    One ordinary least-squares fit of ln K on ln tau per tau_max in the
    range, each over lags 1..tau_max. Lags where K vanished are dropped
    from every fit; a fit is refused outright if its lag budget is below 3
    by construction, and reported as degenerate if vanishing lags push a
    fit below 3 usable points.
    """
    tmr = tuple(int(t) for t in tau_max_range)
    if len(tmr) == 0:
        raise InvalidParameterError("tau_max_range is empty")
    if min(tmr) < 3:
        raise InvalidParameterError(
            f"tau_max {min(tmr)} would fit fewer than 3 lags"
        )
    if max(tmr) > len(sf.values):
        raise InvalidParameterError(
            f"tau_max_range reaches {max(tmr)} but the structure function "
            f"stops at lag {len(sf.values)}"
        )
    usable = sf.values > 0
    excluded = tuple(int(t) for t in sf.lags[~usable])
    ln_tau = np.log(sf.lags.astype(float))
    ln_k = np.full(len(sf.values), np.nan)
    ln_k[usable] = np.log(sf.values[usable])

    fits = []
    for tm in tmr:
        sel = usable[:tm]
        if sel.sum() < 3:
            raise DegenerateSeriesError(
                f"only {int(sel.sum())} usable lags below tau_max={tm}, "
                "need at least 3 for a scaling fit"
            )
        slope = _ols_slope(ln_tau[:tm][sel], ln_k[:tm][sel])
        fits.append(slope / sf.q)
    per = np.array(fits)
    return GheEstimate(
        q=sf.q,
        h=float(per.mean()),
        sigma=float(per.std()),
        tau_max_range=tmr,
        per_tau_max=tuple(float(v) for v in per),
        excluded_lags=excluded,
    )


def estimate_ghe(
    series,
    q: float = 1.0,
    tau_max_range=DEFAULT_TAU_MAX_RANGE,
    weights: WeightVector | None = None,
    normalized: bool = True,
) -> GheEstimate:
    """Estimate H(q) on one window by the averaged log-log fit protocol."""
    tmr = tuple(int(t) for t in tau_max_range)
    if len(tmr) == 0:
        raise InvalidParameterError("tau_max_range is empty")
    sf = structure_function(series, q, max(tmr), weights=weights, normalized=normalized)
    return ghe_from_structure(sf, tmr)


def multifractality_width(
    series,
    q1: float = 1.0,
    q2: float = 1.5,
    weights: WeightVector | None = None,
    tau_max_range=DEFAULT_TAU_MAX_RANGE,
) -> float:
    """H(q1) - H(q2) on a shared window, zero for uniscaling processes."""
    if float(q1) == float(q2):
        raise InvalidParameterError("q1 and q2 must differ")
    a = estimate_ghe(series, q1, tau_max_range, weights=weights)
    b = estimate_ghe(series, q2, tau_max_range, weights=weights)
    return a.h - b.h
