"""Synthetic series with known scaling exponents.

These generators are the ground truth the estimators are validated
against: plain Gaussian walks (H = 1/2), exact fractional Brownian motion
via circulant embedding of the increment covariance (Davies-Harte), Levy
walks from the Chambers-Mallows-Stuck symmetric stable transform
(tail index alpha, H = 1/alpha below 2), and regime splices that
concatenate segments with matching endpoints.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import MASK64, LogPriceSeries
from .errors import GeneratorFailureError, InvalidParameterError

KINDS = ("gaussian_walk", "fbm", "levy_walk", "regime_splice")


@dataclass(frozen=True)
class GeneratorSpec:
    """Recipe for one synthetic log-price series.

    ``hurst`` applies to kind="fbm", ``alpha`` to kind="levy_walk", and
    ``segments`` (two or more sub-specs whose lengths sum to ``length``)
    to kind="regime_splice". Splice segments are generated from their own
    seeds; the parent seed is not consumed. Identical specs give
    bit-identical output.
    """

    kind: str
    length: int
    seed: int
    hurst: float | None = None
    alpha: float | None = None
    segments: tuple = ()

    def __post_init__(self):
        if self.kind not in KINDS:
            raise InvalidParameterError(
                f"unknown generator kind {self.kind!r}, expected one of {KINDS}"
            )
        if not isinstance(self.length, (int, np.integer)) or self.length < 2:
            raise InvalidParameterError(
                f"length must be an integer >= 2, got {self.length}"
            )
        if self.kind == "fbm":
            if self.hurst is None or not 0.0 < float(self.hurst) < 1.0:
                raise InvalidParameterError(
                    f"fbm needs 0 < hurst < 1, got {self.hurst}"
                )
        if self.kind == "levy_walk":
            if self.alpha is None or not 0.0 < float(self.alpha) <= 2.0:
                raise InvalidParameterError(
                    f"levy_walk needs 0 < alpha <= 2, got {self.alpha}"
                )
        if self.kind == "regime_splice":
            if len(self.segments) < 2:
                raise InvalidParameterError("regime_splice needs at least 2 segments")
            if any(not isinstance(s, GeneratorSpec) for s in self.segments):
                raise InvalidParameterError("segments must be GeneratorSpec instances")
            if sum(s.length for s in self.segments) != self.length:
                raise InvalidParameterError(
                    "segment lengths must sum to the parent length"
                )


def _rng_for(seed: int) -> np.random.Generator:
    return np.random.default_rng(np.random.SeedSequence(int(seed) & MASK64))


def derived_seed(master: int, index: int) -> int:
    """A child seed for ensemble member ``index``, stable across runs."""
    ss = np.random.SeedSequence([int(master) & MASK64, int(index)])
    return int(ss.generate_state(1, np.uint64)[0])


def fgn(n: int, hurst: float, rng: np.random.Generator) -> np.ndarray:
    """Exact fractional Gaussian noise by circulant embedding.

    Embeds the length-n increment autocovariance in a circulant matrix of
    size 2n whose eigenvalues come from one FFT; for 0 < H < 1 the
    spectrum is non-negative up to rounding, which is clipped. A genuinely
    negative spectrum aborts (the fallback would be a direct Cholesky
    factorization of the covariance, practical only for small n).
    """
    hurst = float(hurst)
    k = np.arange(n, dtype=float)
    g = 0.5 * ((k + 1) ** (2 * hurst) - 2 * k ** (2 * hurst) + np.abs(k - 1) ** (2 * hurst))
    circ = np.concatenate([g, [0.0], g[-1:0:-1]])
    lam = np.fft.fft(circ).real
    if lam.min() < -1e-8 * lam.max():
        raise GeneratorFailureError(
            f"circulant embedding not positive semidefinite for H={hurst}, n={n}; "
            "fall back to Cholesky factorization of the exact covariance"
        )
    lam = np.clip(lam, 0.0, None)

    z = np.empty(2 * n, dtype=complex)
    z[0] = rng.standard_normal()
    z[n] = rng.standard_normal()
    pair = rng.standard_normal((n - 1, 2))
    z[1:n] = (pair[:, 0] + 1j * pair[:, 1]) / np.sqrt(2.0)
    z[n + 1:] = np.conj(z[1:n][::-1])
    return np.sqrt(2 * n) * np.fft.ifft(np.sqrt(lam) * z).real[:n]


def stable_symmetric(n: int, alpha: float, rng: np.random.Generator) -> np.ndarray:
    """Symmetric alpha-stable variates, Chambers-Mallows-Stuck form.

    At alpha = 1 the transform reduces to tan(U) (standard Cauchy) and at
    alpha = 2 to a centered Gaussian with variance 2; the single formula
    covers both endpoints.
    """
    alpha = float(alpha)
    u = rng.uniform(-np.pi / 2, np.pi / 2, n)
    w = rng.standard_exponential(n)
    t1 = np.sin(alpha * u) / np.cos(u) ** (1.0 / alpha)
    t2 = (np.cos((1.0 - alpha) * u) / w) ** ((1.0 - alpha) / alpha)
    return t1 * t2


def generate(spec: GeneratorSpec) -> LogPriceSeries:
    """Realize a spec into a log-price series (no dates attached)."""
    n = int(spec.length)
    if spec.kind == "gaussian_walk":
        rng = _rng_for(spec.seed)
        x = np.cumsum(rng.standard_normal(n))
    elif spec.kind == "fbm":
        rng = _rng_for(spec.seed)
        x = np.cumsum(fgn(n, spec.hurst, rng))
    elif spec.kind == "levy_walk":
        rng = _rng_for(spec.seed)
        x = np.cumsum(stable_symmetric(n, spec.alpha, rng))
    else:  # regime_splice
        parts = [generate(s).values for s in spec.segments]
        joined = [parts[0]]
        for seg in parts[1:]:
            joined.append(seg - seg[0] + joined[-1][-1])
        x = np.concatenate(joined)
    return LogPriceSeries(values=x, timestamps=None)
