"""Matplotlib rendering for the CLI's plot mode.

Import of matplotlib is deferred to call time so the library stays usable
without a plotting stack loaded. SVG output is made byte-reproducible by
pinning the hash salt and stripping the creation date from the metadata.
"""

from __future__ import annotations

import numpy as np


def _pyplot():
    import matplotlib

    matplotlib.use("Agg", force=False)
    matplotlib.rcParams["svg.hashsalt"] = "hurstlab"
    import matplotlib.pyplot as plt

    return plt


def render_svg(
    path,
    curves,
    kind: str = "line",
    bands=None,
    xlabel: str = "",
    ylabel: str = "",
    title: str = "",
    logx: bool = False,
    logy: bool = False,
    diagonal: bool = False,
) -> None:
    """Write a self-contained SVG chart.

    ``curves`` is a list of (label, x, y) triples; ``bands`` an optional
    list of (x, lower, upper) shading triples; ``diagonal=True`` adds the
    identity reference line for scatter comparisons.
    """
    plt = _pyplot()
    fig, ax = plt.subplots(figsize=(8.0, 4.5))
    for x, lo, hi in bands or []:
        ax.fill_between(np.asarray(x), np.asarray(lo), np.asarray(hi), alpha=0.25, lw=0)
    for label, x, y in curves:
        if kind == "scatter":
            ax.plot(np.asarray(x), np.asarray(y), "o", ms=3.5, label=label)
        else:
            ax.plot(np.asarray(x), np.asarray(y), lw=1.2, label=label)
    if diagonal:
        xs = np.concatenate([np.asarray(x, dtype=float) for _, x, _ in curves])
        if xs.size:
            span = (np.min(xs), np.max(xs))
            ax.plot(span, span, "k--", lw=0.8, label="identity")
    if logx:
        ax.set_xscale("log")
    if logy:
        ax.set_yscale("log")
    ax.set_xlabel(xlabel)
    ax.set_ylabel(ylabel)
    if title:
        ax.set_title(title)
    if len(curves) > 1 or diagonal:
        ax.legend(frameon=False, fontsize=8)
    fig.autofmt_xdate(rotation=30)
    fig.tight_layout()
    fig.savefig(path, format="svg", metadata={"Date": None})
    plt.close(fig)
