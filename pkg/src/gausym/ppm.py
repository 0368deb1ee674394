"""Pulse-position-modulation analytics.

A K-ary PPM symbol occupies K modes; symbol i carries the squeezed-displaced
pulse in mode i and vacuum elsewhere. All K symbols share the photon budget
N_s = alpha^2 + sinh^2 r, and the square-root-measurement error probability
depends on the constellation only through the pairwise overlap Gamma.
"""

import math
from dataclasses import dataclass

import numpy as np

from .gus import Constellation
from .overlaps import (
    SingleModeParams,
    gamma_vacuum_overlap,
    overlap_decay_factor,
    symbol_photon_number,
)
from .states import product_state
from .unitaries import generate_pure_state

__all__ = [
    "EmptyFeasibleRangeError",
    "PpmConfig",
    "SweepPoint",
    "ppm_constellation",
    "ppm_error_probability",
    "gamma_from_photon_budget",
    "feasibility_threshold",
    "pe_sweep",
    "sweep_to_csv",
    "CSV_HEADER",
]

CSV_HEADER = "n_r,gamma,pe,feasible"


class EmptyFeasibleRangeError(ValueError):
    """Raised when no point of a requested sweep admits the photon budget."""


@dataclass(frozen=True)
class PpmConfig:
    """PPM order and pulse parameters.

    Exactly one of ``alpha`` (real displacement) or ``n_s`` (photons per
    symbol, with alpha implied as sqrt(n_s - sinh^2 r)) must be given.
    """

    order: int
    r: float = 0.0
    theta: float = math.pi
    alpha: float = None
    n_s: float = None

    def __post_init__(self):
        if self.order < 2:
            raise ValueError("PPM order must be at least 2")
        if (self.alpha is None) == (self.n_s is None):
            raise ValueError("specify exactly one of alpha and n_s")
        if self.alpha is not None and self.alpha < 0:
            raise ValueError("displacement must be non-negative")
        if self.n_s is not None and self.n_s < math.sinh(self.r) ** 2:
            raise ValueError(
                f"photon budget {self.n_s} is below the squeezing floor sinh^2(r) "
                f"= {math.sinh(self.r) ** 2:.6f}"
            )

    @property
    def pulse_alpha(self):
        if self.alpha is not None:
            return self.alpha
        return math.sqrt(self.n_s - math.sinh(self.r) ** 2)

    @property
    def photons_per_symbol(self):
        return symbol_photon_number(self.r, self.pulse_alpha)


def ppm_constellation(config):
    """The K-mode constellation of K PPM words.

    Word i places the (z, alpha) pulse in mode i and vacuum in the others.
    """
    K = config.order
    pulse = SingleModeParams(config.r, config.theta, config.pulse_alpha)
    vacuum = SingleModeParams()
    pulse_state = generate_pure_state(pulse.z, pulse.alpha)
    vacuum_state_1 = generate_pure_state(0.0, 0.0)
    params = []
    states = []
    for i in range(K):
        mode_params = tuple(pulse if m == i else vacuum for m in range(K))
        params.append(mode_params)
        states.append(product_state([pulse_state if m == i else vacuum_state_1 for m in range(K)]))
    return Constellation(tuple(states), tuple(params))


def ppm_error_probability(order, gamma):
    """Closed-form SRM error probability of K-ary PPM at pulse overlap Gamma.

    Pe = 1 - (1/K^2) (sqrt(1 + (K-1) Gamma) + (K-1) sqrt(1 - Gamma))^2
    """
    if not 0.0 <= gamma <= 1.0:
        raise ValueError(f"Gamma must lie in [0, 1], got {gamma}")
    K = order
    amplitude = math.sqrt(1 + (K - 1) * gamma) + (K - 1) * math.sqrt(1 - gamma)
    return 1.0 - (amplitude / K) ** 2


def gamma_from_photon_budget(n_s, r, theta):
    """Pulse-vacuum overlap Gamma at fixed photons per symbol.

    Gamma = sech(r) exp(-(N_s - sinh^2 r) f(r, theta)); the implied
    displacement is alpha = sqrt(N_s - sinh^2 r).
    """
    floor = math.sinh(r) ** 2
    if n_s < floor:
        raise EmptyFeasibleRangeError(
            f"photon budget {n_s} is below the squeezing floor sinh^2(r) = {floor:.6f}: "
            "no room for the displacement"
        )
    return math.exp(-(n_s - floor) * overlap_decay_factor(r, theta)) / math.cosh(r)


def feasibility_threshold(order, r):
    """Smallest feasible photons-per-bit: N_R = sinh^2(r) / log2(K)."""
    return math.sinh(r) ** 2 / math.log2(order)


@dataclass(frozen=True)
class SweepPoint:
    """One row of a photon-budget sweep; gamma/pe are None when infeasible."""

    n_r: float
    gamma: float
    pe: float
    feasible: bool


def pe_sweep(order, r, theta, nr_range, points):
    """Error probability versus photons per bit N_R on a logarithmic grid.

    Args:
        order: PPM order K
        r, theta: squeeze parameters of the pulse
        nr_range: (min, max) photons per bit, both positive
        points: number of grid points

    Returns:
        list[SweepPoint]: ordered by N_R; infeasible budgets are flagged
        rather than dropped, keeping the grid aligned.

    Raises:
        EmptyFeasibleRangeError: when no grid point is feasible.
    """
    lo, hi = nr_range
    if not (0 < lo <= hi):
        raise ValueError("need 0 < nr_min <= nr_max")
    if points < 1:
        raise ValueError("need at least one grid point")
    grid = np.geomspace(lo, hi, points)
    bits = math.log2(order)
    rows = []
    feasible_any = False
    for n_r in grid:
        n_s = n_r * bits
        if n_s < math.sinh(r) ** 2:
            rows.append(SweepPoint(float(n_r), None, None, False))
            continue
        gamma = gamma_from_photon_budget(n_s, r, theta)
        rows.append(SweepPoint(float(n_r), gamma, ppm_error_probability(order, gamma), True))
        feasible_any = True
    if not feasible_any:
        raise EmptyFeasibleRangeError(
            f"no feasible N_R in [{lo}, {hi}]: threshold is {feasibility_threshold(order, r):.6e}"
        )
    return rows


def _fmt(value):
    return f"{value:.11e}"


def sweep_to_csv(rows, header=None):
    """Render sweep rows as CSV with 12-significant-digit scientific floats.

    Args:
        rows: sweep points
        header: optional comment line (without the leading '# ')
    """
    lines = []
    if header:
        lines.append(f"# {header}")
    lines.append(CSV_HEADER)
    for row in rows:
        gamma = _fmt(row.gamma) if row.feasible else ""
        pe = _fmt(row.pe) if row.feasible else ""
        lines.append(f"{_fmt(row.n_r)},{gamma},{pe},{'true' if row.feasible else 'false'}")
    return "\n".join(lines) + "\n"
