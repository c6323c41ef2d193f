"""Figure rendering for report output. Files only, no interactive backend."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

_STYLE = {
    "figure.dpi": 120,
    "font.size": 9,
    "axes.titlesize": 10,
    "axes.grid": False,
}


def save_unbiasedness_heatmap(report, path) -> None:
    """Heatmap of pairwise overlap deviations with the clique marked."""
    n = report.n_bases
    dev = np.array(report.deviations, dtype=float)
    np.fill_diagonal(dev, np.nan)
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots(figsize=(6, 5))
        with np.errstate(divide="ignore"):
            img = ax.imshow(np.log10(dev + 1e-17), cmap="viridis")
        fig.colorbar(img, ax=ax, label=r"log10 max | |<a|b>|$^2$ - 1/d |")
        clique = set(report.clique_vertices)
        for v in report.clique_vertices:
            for w in report.clique_vertices:
                if v != w:
                    ax.plot(w, v, "r.", markersize=4)
        ax.set_title(
            f"d={report.dimension}: {n} candidate bases, "
            f"largest unbiased set {report.clique_size}"
        )
        ax.set_xlabel("basis index")
        ax.set_ylabel("basis index")
        fig.tight_layout()
        fig.savefig(path)
        plt.close(fig)
    _ = clique


def save_mub_counts(dims, counts, bounds, path) -> None:
    """Bar chart of unbiased-set sizes against the product lower bound."""
    with plt.rc_context(_STYLE):
        fig, ax = plt.subplots(figsize=(6, 3.5))
        xs = np.arange(len(dims))
        ax.bar(xs, counts, width=0.6, label="bases found")
        ax.plot(xs, bounds, "k_", markersize=16, label="product bound (min p^r + 1)")
        ax.set_xticks(xs, [str(d) for d in dims])
        ax.set_xlabel("dimension")
        ax.set_ylabel("pairwise unbiased bases")
        ax.legend(frameon=False)
        fig.tight_layout()
        fig.savefig(path)
        plt.close(fig)
