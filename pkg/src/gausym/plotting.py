"""Figure rendering for sweep and overlap data.

Figures are written straight to files through the Agg backend, so the module
works in headless environments; nothing here is needed by the numerical code.
"""

import math

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .overlaps import gamma_vacuum_overlap

__all__ = ["save_error_probability_plot", "save_overlap_phase_plot"]


def save_error_probability_plot(series, path, title=None):
    """Log-log error probability versus photons per bit.

    Args:
        series: mapping of label -> list[SweepPoint]; infeasible points are
            skipped
        path: output file (any extension matplotlib understands)
        title: optional figure title
    """
    fig, ax = plt.subplots(figsize=(6.4, 4.4))
    for label, rows in series.items():
        xs = [row.n_r for row in rows if row.feasible]
        ys = [row.pe for row in rows if row.feasible and row.pe > 0]
        xs = xs[: len(ys)]
        ax.loglog(xs, ys, label=label)
    ax.set_xlabel(r"photons per bit $N_R$")
    ax.set_ylabel(r"error probability $P_e$")
    ax.grid(True, which="both", alpha=0.3)
    if title:
        ax.set_title(title)
    if series:
        ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def save_overlap_phase_plot(r, alphas, path, points=181):
    """Pulse-vacuum overlap versus squeeze phase for several displacements."""
    thetas = np.linspace(0, 2 * math.pi, points)
    fig, ax = plt.subplots(figsize=(6.4, 4.4))
    for alpha in alphas:
        gammas = [gamma_vacuum_overlap(r, t, alpha) for t in thetas]
        ax.semilogy(thetas, gammas, label=rf"$\alpha = {alpha}$")
    ax.set_xlabel(r"squeeze phase $\theta$")
    ax.set_ylabel(r"$\Gamma$")
    ax.set_title(rf"pulse-vacuum overlap, $r = {r}$")
    ax.grid(True, which="both", alpha=0.3)
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
