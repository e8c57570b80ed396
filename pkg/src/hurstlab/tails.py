"""Power-law tail fitting of return distributions.

The tail model is F_>(x) = (x / x_min)^(1 - alpha) for x >= x_min. The
exponent comes from the continuous maximum-likelihood estimator
alpha = 1 + n / sum(ln(x_i / x_min)), the cutoff either fixed by the
caller or chosen by scanning candidates for the minimal Kolmogorov-
Smirnov distance, and the goodness of fit from a semiparametric bootstrap
that rebuilds synthetic samples from the empirical body plus the fitted
tail and refits each one the same way.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .core import MASK64, ReturnSeries
from .errors import (
    DegenerateSeriesError,
    DegenerateTailError,
    InsufficientDataError,
    InvalidParameterError,
)

DEFAULT_MIN_TAIL = 50
_SCAN_BLOCK = 256


@dataclass(frozen=True, eq=False)
class Ccdf:
    """Rank-frequency form of the complementary CDF, binning-free.

    ``sorted_values`` ascend and ``exceedance_probs`` is the vector
    [1, (T-1)/T, ..., 1/T], so each value is paired with the fraction of
    observations at or above it.
    """

    sorted_values: np.ndarray
    exceedance_probs: np.ndarray


@dataclass(frozen=True, eq=False)
class TailFit:
    """A fitted power-law tail.

    ``scanned`` records whether x_min was chosen by the KS scan, and
    ``min_tail`` the smallest tail size a scan candidate was allowed,
    so bootstrap replicates can refit under identical rules. ``p_value``
    and ``boot_replicates`` stay None until a bootstrap is attached.
    """

    alpha: float
    x_min: float
    n_tail: int
    ks_statistic: float
    p_value: float | None = None
    boot_replicates: int | None = None
    scanned: bool = False
    min_tail: int = DEFAULT_MIN_TAIL


def ccdf(values, absolute: bool = False) -> Ccdf:
    """Sort the observations and attach exceedance ranks.

    ``absolute=True`` takes |x| first, the usual presentation for the
    two-sided magnitude tail of returns.
    """
    v = np.asarray(values, dtype=float)
    if v.size == 0:
        raise InsufficientDataError("ccdf of an empty sequence")
    if absolute:
        v = np.abs(v)
    v = np.sort(v)
    t = len(v)
    probs = (t - np.arange(t)) / t
    return Ccdf(sorted_values=v, exceedance_probs=probs)


def _ks_fixed(log_tail: np.ndarray, lam: float) -> float:
    """Two-sided KS distance of sorted tail logs against the fitted law."""
    n = len(log_tail)
    f = -np.expm1(-lam * log_tail)
    i = np.arange(n)
    return float(np.maximum(f - i / n, (i + 1) / n - f).max())


def _fit_fixed(values: np.ndarray, x_min: float, min_tail: int) -> TailFit:
    x_min = float(x_min)
    if not x_min > 0:
        raise InvalidParameterError(f"x_min must be positive, got {x_min}")
    tail = np.sort(values[values >= x_min])
    n = len(tail)
    if n < 2:
        raise InsufficientDataError(
            f"only {n} observations at or above x_min={x_min}, need at least 2"
        )
    logs = np.log(tail) - np.log(x_min)
    s = float(logs.sum())
    if s <= 0:
        raise DegenerateTailError(
            "all tail observations equal, the exponent estimate diverges"
        )
    alpha = 1.0 + n / s
    d = _ks_fixed(logs, alpha - 1.0)
    return TailFit(
        alpha=alpha, x_min=x_min, n_tail=n, ks_statistic=d,
        scanned=False, min_tail=int(min_tail),
    )


def _fit_scan(values: np.ndarray, min_tail: int, max_candidates) -> TailFit:
    if min_tail < 2:
        raise InvalidParameterError(f"min_tail must be >= 2, got {min_tail}")
    pos = np.sort(values[values > 0])
    big = len(pos)
    if big < min_tail:
        raise InsufficientDataError(
            f"{big} positive observations cannot cover a tail of {min_tail}"
        )
    logv = np.log(pos)
    suffix = np.cumsum(logv[::-1])[::-1]  # suffix[i] = sum of logv[i:]
    first = np.ones(big, dtype=bool)
    first[1:] = pos[1:] != pos[:-1]
    counts = big - np.arange(big)
    cand = np.flatnonzero(first & (counts >= min_tail))
    if cand.size == 0:
        raise InsufficientDataError("no x_min candidate keeps enough tail points")
    if max_candidates is not None and cand.size > int(max_candidates):
        keep = np.unique(
            np.round(np.linspace(0, cand.size - 1, int(max_candidates))).astype(int)
        )
        cand = cand[keep]

    nn = counts[cand].astype(float)
    spread = suffix[cand] - nn * logv[cand]
    ok = spread > 0
    if not np.any(ok):
        raise DegenerateTailError(
            "every candidate tail is constant, the exponent estimate diverges"
        )
    cand, nn, spread = cand[ok], nn[ok], spread[ok]
    lam = nn / spread  # alpha - 1 per candidate

    ranks = np.arange(big, dtype=float)
    dist = np.empty(cand.size)
    for b in range(0, cand.size, _SCAN_BLOCK):
        sel = cand[b:b + _SCAN_BLOCK]
        lam_b = lam[b:b + _SCAN_BLOCK][:, None]
        nn_b = nn[b:b + _SCAN_BLOCK][:, None]
        # entries left of the candidate are masked below; clamping keeps
        # their exponent argument from overflowing first
        rel = np.maximum(logv[None, :] - logv[sel][:, None], 0.0)
        rank = ranks[None, :] - sel[:, None]
        f = -np.expm1(-lam_b * rel)
        d = np.maximum(f - rank / nn_b, (rank + 1.0) / nn_b - f)
        d[rank < 0] = -np.inf
        dist[b:b + _SCAN_BLOCK] = d.max(axis=1)

    # ties in the KS distance break toward the smaller x_min (more data);
    # candidates ascend, and argmin returns the first minimum
    best = int(np.argmin(dist))
    i = int(cand[best])
    return TailFit(
        alpha=float(1.0 + lam[best]),
        x_min=float(pos[i]),
        n_tail=int(big - i),
        ks_statistic=float(dist[best]),
        scanned=True,
        min_tail=int(min_tail),
    )


def fit_tail(
    values,
    x_min: float | None = None,
    min_tail: int = DEFAULT_MIN_TAIL,
    max_candidates: int | None = None,
) -> TailFit:
    """Fit the tail exponent, with a fixed cutoff or a KS scan.

    With ``x_min`` given, every observation at or above it forms the tail
    (at least two are required). With ``x_min=None`` the cutoff is scanned
    over the unique positive values that keep at least ``min_tail`` points
    in the tail, picking the candidate whose fitted law is closest to the
    empirical tail in KS distance. ``max_candidates`` optionally thins the
    scan grid (evenly over candidates) to bound its quadratic cost on very
    long inputs. Values are sorted internally, so the result is invariant
    under permutation of the input.
    """
    v = np.asarray(values, dtype=float)
    if v.size == 0:
        raise InsufficientDataError("fit_tail of an empty sequence")
    if not np.all(np.isfinite(v)):
        raise InvalidParameterError("fit_tail requires finite values")
    if x_min is None:
        return _fit_scan(v, int(min_tail), max_candidates)
    return _fit_fixed(v, x_min, int(min_tail))


def tail_pvalue(values, fit: TailFit, replicates: int = 1000, seed: int = 0) -> float:
    """Semiparametric bootstrap goodness-of-fit probability.

    Each replicate draws its tail size from Binomial(T, n_tail/T), fills
    the tail with inverse-CDF draws from the fitted law, resamples the
    body (observations below x_min) with replacement, refits under the
    same x_min strategy as the original fit, and records the KS distance.
    The p-value is the fraction of replicate distances at or above the
    observed one. Replicate randomness derives from (seed, replicate
    index), so results are independent of evaluation order.
    """
    replicates = int(replicates)
    if replicates < 100:
        raise InvalidParameterError(
            f"need at least 100 bootstrap replicates, got {replicates}"
        )
    v = np.asarray(values, dtype=float)
    total = len(v)
    body = v[v < fit.x_min]
    p_tail = fit.n_tail / total
    inv = -1.0 / (fit.alpha - 1.0)
    seed = int(seed) & MASK64

    hits = 0
    for r in range(replicates):
        rng = np.random.default_rng(np.random.SeedSequence([seed, r]))
        k = int(rng.binomial(total, p_tail))
        parts = []
        if k:
            parts.append(fit.x_min * (1.0 - rng.random(k)) ** inv)
        if total - k:
            parts.append(rng.choice(body, size=total - k, replace=True))
        boot = np.concatenate(parts)
        if fit.scanned:
            ref = _fit_scan(boot, fit.min_tail, None)
        else:
            ref = _fit_fixed(boot, fit.x_min, fit.min_tail)
        if ref.ks_statistic >= fit.ks_statistic:
            hits += 1
    return hits / replicates


def theoretical_hurst(alpha: float) -> float:
    """Diffusion exponent implied by a tail index: 1/alpha below 2, else 1/2."""
    alpha = float(alpha)
    if not alpha > 0:
        raise InvalidParameterError(f"alpha must be positive, got {alpha}")
    return 1.0 / alpha if alpha < 2.0 else 0.5


def excess_kurtosis(values) -> float:
    """Fourth standardized moment minus 3, population normalization."""
    v = np.asarray(values, dtype=float)
    if len(v) < 4:
        raise InsufficientDataError(
            f"excess kurtosis needs at least 4 observations, got {len(v)}"
        )
    centered = v - v.mean()
    m2 = float(np.mean(centered**2))
    if m2 == 0:
        raise DegenerateSeriesError("zero variance, kurtosis undefined")
    m4 = float(np.mean(centered**4))
    return m4 / (m2 * m2) - 3.0


class SplitFit(NamedTuple):
    excluded: TailFit
    full: TailFit


def split_period_fit(
    returns: ReturnSeries,
    exclude_from,
    exclude_to,
    x_min: float | None = None,
    min_tail: int = DEFAULT_MIN_TAIL,
) -> SplitFit:
    """Tail fits on |returns| with and without a date range.

    The exclusion bounds are inclusive. A range that misses the series
    entirely (or is empty) leaves both fits identical; a range that
    swallows the whole series is an error.
    """
    lo = np.datetime64(exclude_from, "D")
    hi = np.datetime64(exclude_to, "D")
    mags = np.abs(returns.values)
    mask = (returns.timestamps >= lo) & (returns.timestamps <= hi)
    kept = mags[~mask]
    if kept.size == 0:
        raise InsufficientDataError("the exclusion range removes every observation")
    full = fit_tail(mags, x_min=x_min, min_tail=min_tail)
    excl = fit_tail(kept, x_min=x_min, min_tail=min_tail)
    return SplitFit(excluded=excl, full=full)
