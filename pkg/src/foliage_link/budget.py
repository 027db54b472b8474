"""Link-budget arithmetic and inverse solvers on top of the propagation model.

The forward model gives loss from geometry; the solvers here answer the
planning questions: how far can this radio reach at a given cover factor,
how much cover can it tolerate at a given distance, and how high may the
foliage grow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import (
    BracketExceeded,
    DeltaOutOfRange,
    InvalidRadioConfig,
    NonPositiveHeight,
    NoSolution,
)
from .propagation import DEFAULT_FSPL_CONSTANT_DB, LinkGeometry, total_loss


@dataclass(frozen=True)
class RadioConfig:
    """Radio parameters entering the budget arithmetic.

    ``rx_sensitivity_dbm`` is a negative number for real receivers.
    ``required_margin_db`` is the fade margin a link must keep on top of
    closing the budget.
    """

    tx_power_dbm: float
    tx_gain_dbi: float
    rx_gain_dbi: float
    rx_sensitivity_dbm: float
    required_margin_db: float = 0.0

    def __post_init__(self) -> None:
        for name in (
            "tx_power_dbm",
            "tx_gain_dbi",
            "rx_gain_dbi",
            "rx_sensitivity_dbm",
            "required_margin_db",
        ):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise InvalidRadioConfig(f"{name} must be finite, got {value}")
        if self.required_margin_db < 0:
            raise InvalidRadioConfig(
                f"required_margin_db must be >= 0, got {self.required_margin_db}"
            )


@dataclass(frozen=True)
class SolveResult:
    """Outcome of an inverse solve.

    ``value`` is in the unit of the solved quantity (km for range,
    dimensionless for cover factor, meters for foliage height).
    ``converged`` is set only when the achieved loss matches the budget
    within the solver's loss tolerance. ``all_feasible`` marks a cover
    solve where every scanned point fit the budget, so the cap itself was
    returned.
    """

    value: float
    achieved_loss_db: float
    iterations: int
    converged: bool
    all_feasible: bool = False


def link_margin(radio: RadioConfig, loss_db: float) -> float:
    """Margin above sensitivity: EIRP plus receive gain minus loss and sensitivity."""
    return (
        radio.tx_power_dbm
        + radio.tx_gain_dbi
        + radio.rx_gain_dbi
        - loss_db
        - radio.rx_sensitivity_dbm
    )


def required_tx_power(radio: RadioConfig, loss_db: float) -> float:
    """Smallest transmit power (dBm) closing the budget with the required margin."""
    return (
        loss_db
        + radio.rx_sensitivity_dbm
        - radio.tx_gain_dbi
        - radio.rx_gain_dbi
        + radio.required_margin_db
    )


def max_loss_budget(radio: RadioConfig) -> float:
    """Largest tolerable path loss (dB) for this radio at its required margin."""
    return (
        radio.tx_power_dbm
        + radio.tx_gain_dbi
        + radio.rx_gain_dbi
        - radio.rx_sensitivity_dbm
        - radio.required_margin_db
    )


def max_range(
    radio: RadioConfig,
    delta: float,
    f_mhz: float,
    *,
    d_lo_km: float = 1e-4,
    d_hi_km: float = 1000.0,
    loss_tol_db: float = 1e-6,
    d_tol_km: float = 1e-7,
    max_iter: int = 200,
    fspl_constant: float = DEFAULT_FSPL_CONSTANT_DB,
) -> SolveResult:
    """Largest distance (km) whose total loss fits the radio's budget.

    Total loss is strictly increasing in distance at a fixed cover factor
    (both terms grow with d), so plain bisection on [d_lo_km, d_hi_km]
    applies.

    Raises:
        NoSolution: the budget is below the loss already at ``d_lo_km``.
        BracketExceeded: the budget is above the loss at ``d_hi_km``.
    """
    if not 0.0 <= delta < 1.0:
        raise DeltaOutOfRange(f"delta must lie in [0, 1) for a range solve, got {delta}")
    budget = max_loss_budget(radio)

    def loss_at(d_km: float) -> float:
        return total_loss(
            LinkGeometry(d_km=d_km, delta=delta), f_mhz, fspl_constant
        ).l_total_db

    lo, hi = d_lo_km, d_hi_km
    loss_lo = loss_at(lo)
    loss_hi = loss_at(hi)
    if budget < loss_lo - loss_tol_db:
        raise NoSolution(
            f"budget {budget} dB is below the {loss_lo} dB loss at d = {lo} km"
        )
    if budget > loss_hi + loss_tol_db:
        raise BracketExceeded(
            f"budget {budget} dB exceeds the {loss_hi} dB loss at d = {hi} km"
        )
    if budget <= loss_lo:
        return SolveResult(lo, loss_lo, 0, abs(loss_lo - budget) <= loss_tol_db)
    if budget >= loss_hi:
        return SolveResult(hi, loss_hi, 0, abs(loss_hi - budget) <= loss_tol_db)

    iterations = 0
    feasible, feasible_loss = lo, loss_lo
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break  # float resolution exhausted
        iterations += 1
        loss_mid = loss_at(mid)
        if abs(loss_mid - budget) <= loss_tol_db:
            return SolveResult(mid, loss_mid, iterations, True)
        if loss_mid < budget:
            lo, feasible, feasible_loss = mid, mid, loss_mid
        else:
            hi = mid
        if hi - lo <= d_tol_km:
            break
    return SolveResult(
        feasible, feasible_loss, iterations, abs(feasible_loss - budget) <= loss_tol_db
    )


def max_foliage_factor(
    radio: RadioConfig,
    d_km: float,
    f_mhz: float,
    delta_cap: float = 0.95,
    *,
    grid_points: int = 10_000,
    loss_tol_db: float = 1e-6,
    delta_tol: float = 1e-9,
    max_iter: int = 200,
    fspl_constant: float = DEFAULT_FSPL_CONSTANT_DB,
) -> SolveResult:
    """Largest tolerable cover factor at a fixed distance, up to ``delta_cap``.

    Total loss is not monotone in the cover factor over (0, 1): the
    free-space term diverges to -inf as the factor approaches 1, so the
    curve eventually turns down. The solver therefore scans a uniform grid
    upward from 0, stops at the first grid point whose loss exceeds the
    budget (the first feasibility frontier, which is the physically
    conservative answer), and refines the crossing by bisection inside
    that cell. When no scanned point exceeds the budget the cap itself is
    returned with ``all_feasible`` set.

    Raises:
        NoSolution: the budget is exceeded already at cover factor 0.
    """
    if not 0.0 < delta_cap < 1.0:
        raise DeltaOutOfRange(f"delta_cap must lie in (0, 1), got {delta_cap}")
    budget = max_loss_budget(radio)

    def loss_at(delta: float) -> float:
        return total_loss(
            LinkGeometry(d_km=d_km, delta=delta), f_mhz, fspl_constant
        ).l_total_db

    lo = 0.0
    lo_loss = loss_at(lo)
    if lo_loss > budget + loss_tol_db:
        raise NoSolution(
            f"even delta = 0 loses {lo_loss} dB against a budget of {budget} dB"
        )
    hi = None
    for x in np.linspace(0.0, delta_cap, grid_points)[1:]:
        x = float(x)
        x_loss = loss_at(x)
        if x_loss > budget:
            hi = x
            break
        lo, lo_loss = x, x_loss
    if hi is None:
        return SolveResult(delta_cap, lo_loss, 0, True, all_feasible=True)

    iterations = 0
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        iterations += 1
        loss_mid = loss_at(mid)
        if abs(loss_mid - budget) <= loss_tol_db:
            return SolveResult(mid, loss_mid, iterations, True)
        if loss_mid < budget:
            lo, lo_loss = mid, loss_mid
        else:
            hi = mid
        if hi - lo <= delta_tol:
            break
    return SolveResult(lo, lo_loss, iterations, abs(lo_loss - budget) <= loss_tol_db)


def max_foliage_height(
    radio: RadioConfig,
    d_km: float,
    h_m: float,
    f_mhz: float,
    delta_cap: float = 0.95,
    **solver_options,
) -> SolveResult:
    """Largest tolerable foliage height (m) under an antenna of height ``h_m``.

    Solves for the cover factor and scales it by the antenna height
    (``h_f = delta * h``). Inherits the cover-factor solver's contracts,
    including the ``delta_cap`` ceiling.
    """
    if not h_m > 0:
        raise NonPositiveHeight(f"h_m must be > 0, got {h_m}")
    result = max_foliage_factor(radio, d_km, f_mhz, delta_cap, **solver_options)
    return SolveResult(
        value=result.value * h_m,
        achieved_loss_db=result.achieved_loss_db,
        iterations=result.iterations,
        converged=result.converged,
        all_feasible=result.all_feasible,
    )
