"""Rolling-window driver producing the H(q) trajectory of a series."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import LogPriceSeries, exp_weights
from .errors import (
    DegenerateSeriesError,
    InsufficientDataError,
    InvalidParameterError,
)
from .ghe import DEFAULT_TAU_MAX_RANGE, GheEstimate, estimate_ghe


@dataclass(frozen=True)
class RollingConfig:
    """Rolling protocol parameters.

    Defaults: 750-day windows moved in 50-day steps, exponential weights
    with a 250-day characteristic time, and moment orders 1 and 1.5. With
    ``anchor="end"`` the last window ends exactly on the last observation;
    ``anchor="start"`` pins the first window to the first observation
    instead. Both produce the same window count.
    """

    window: int = 750
    shift: int = 50
    theta: float = 250.0
    q_list: tuple = (1.0, 1.5)
    tau_max_range: tuple = DEFAULT_TAU_MAX_RANGE
    weighted: bool = True
    anchor: str = "end"

    def __post_init__(self):
        object.__setattr__(self, "q_list", tuple(float(q) for q in self.q_list))
        object.__setattr__(self, "tau_max_range", tuple(int(t) for t in self.tau_max_range))
        if not self.tau_max_range:
            raise InvalidParameterError("tau_max_range is empty")
        if self.window <= max(self.tau_max_range) + 1:
            raise InvalidParameterError(
                f"window {self.window} too short for tau_max up to {max(self.tau_max_range)}"
            )
        if not 1 <= self.shift <= self.window:
            raise InvalidParameterError(
                f"shift must lie in [1, window], got {self.shift}"
            )
        if not float(self.theta) > 0:
            raise InvalidParameterError(f"theta must be positive, got {self.theta}")
        if not self.q_list:
            raise InvalidParameterError("q_list is empty")
        if any(q <= 0 for q in self.q_list):
            raise InvalidParameterError("moment orders must be positive")
        if self.anchor not in ("start", "end"):
            raise InvalidParameterError(f"anchor must be 'start' or 'end', got {self.anchor!r}")


@dataclass(frozen=True, eq=False)
class GheTrajectory:
    """Per-window estimates over the whole series.

    ``estimates[q]`` is a list with one GheEstimate per window (None marks
    a window skipped as degenerate). ``widths[(q1, q2)]`` carries
    H(q1) - H(q2) per window for each adjacent pair in ``q_list``.
    ``window_end_dates`` holds dates when the series has them, otherwise
    the integer index of each window's last observation.
    """

    window_end_dates: np.ndarray
    estimates: dict
    widths: dict
    config: RollingConfig


def window_count(n: int, window: int, shift: int) -> int:
    """Number of rolling windows on a series of length n."""
    if n < window:
        raise InsufficientDataError(
            f"series of {n} points is shorter than one {window}-day window"
        )
    return (n - window) // shift + 1


def rolling_ghe(series: LogPriceSeries, config: RollingConfig = RollingConfig()) -> GheTrajectory:
    """Run the weighted (or plain) H(q) estimator over rolling windows.

    Windows that refuse to fit (constant stretches, vanishing lag budget)
    become gap markers rather than aborting the whole trajectory.
    """
    x = series.values
    n = len(x)
    k = window_count(n, config.window, config.shift)
    offset = (n - config.window) % config.shift if config.anchor == "end" else 0
    weights = exp_weights(config.window, config.theta) if config.weighted else None

    end_idx = np.array(
        [offset + i * config.shift + config.window - 1 for i in range(k)], dtype=int
    )
    if series.timestamps is not None:
        end_dates = series.timestamps[end_idx]
    else:
        end_dates = end_idx

    estimates = {q: [] for q in config.q_list}
    pairs = [
        (config.q_list[i], config.q_list[i + 1])
        for i in range(len(config.q_list) - 1)
    ]
    widths = {pair: [] for pair in pairs}

    for i in range(k):
        lo = offset + i * config.shift
        win = x[lo:lo + config.window]
        got = {}
        for q in config.q_list:
            try:
                est = estimate_ghe(win, q, config.tau_max_range, weights=weights)
            except DegenerateSeriesError:
                est = None
            estimates[q].append(est)
            got[q] = est
        for pair in pairs:
            a, b = got[pair[0]], got[pair[1]]
            widths[pair].append(a.h - b.h if a is not None and b is not None else None)

    return GheTrajectory(
        window_end_dates=end_dates,
        estimates=estimates,
        widths=widths,
        config=config,
    )
