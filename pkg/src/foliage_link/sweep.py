"""One-dimensional parameter sweeps producing plot-ready loss tables.

A sweep varies exactly one of: cover factor, foliage height, distance or
frequency, holding everything else fixed, and evaluates the full loss
breakdown at uniformly spaced points (endpoints included). Presets
regenerate the bundled reference scenarios.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import FoliageLinkError, InvalidSpec, UnknownPreset
from .propagation import (
    DEFAULT_FSPL_CONSTANT_DB,
    LinkGeometry,
    Regime,
    Validity,
    total_loss,
)


class SweepVariable(str, Enum):
    DELTA = "delta"
    FOLIAGE_HEIGHT = "foliage_height"
    DISTANCE = "distance"
    FREQUENCY_MHZ = "frequency_mhz"


@dataclass(frozen=True)
class SweepSpec:
    """One-variable sweep definition.

    ``base`` fixes every parameter that is not swept; the field of ``base``
    corresponding to ``variable`` is ignored. Cover-factor sweeps are
    capped at ``delta_cap`` (0.95 by default) and full cover (delta = 1)
    is rejected outright for every variable, since the free-space term is
    singular there.
    """

    variable: SweepVariable
    start: float
    stop: float
    steps: int
    base: LinkGeometry
    f_mhz: float
    delta_cap: float = 0.95

    def __post_init__(self) -> None:
        if not isinstance(self.steps, int) or isinstance(self.steps, bool):
            raise InvalidSpec(f"steps must be an integer, got {self.steps!r}")
        if self.steps < 2:
            raise InvalidSpec(f"steps must be >= 2, got {self.steps}")
        if not self.start < self.stop:
            raise InvalidSpec(f"need start < stop, got [{self.start}, {self.stop}]")
        if not self.f_mhz > 0:
            raise InvalidSpec(f"f_mhz must be > 0, got {self.f_mhz}")
        if self.variable is SweepVariable.DELTA:
            if not 0.0 < self.delta_cap < 1.0:
                raise InvalidSpec(f"delta_cap must lie in (0, 1), got {self.delta_cap}")
            if self.start < 0.0 or self.stop > self.delta_cap:
                raise InvalidSpec(
                    f"cover-factor sweep must stay in [0, {self.delta_cap}], "
                    f"got [{self.start}, {self.stop}]"
                )
        elif self.variable is SweepVariable.FOLIAGE_HEIGHT:
            if self.base.h_m is None:
                raise InvalidSpec("foliage-height sweep needs base geometry with h_m")
            if self.start < 0.0:
                raise InvalidSpec(f"foliage height must be >= 0, got {self.start}")
            if self.stop >= self.base.h_m:
                raise InvalidSpec(
                    f"foliage-height sweep must stop below h_m = {self.base.h_m} "
                    "(full cover is singular)"
                )
        elif self.variable is SweepVariable.DISTANCE:
            if self.start <= 0.0:
                raise InvalidSpec(f"distance sweep needs start > 0, got {self.start}")
            if self.base.effective_delta >= 1.0:
                raise InvalidSpec("base cover factor must be below 1 (full cover)")
        elif self.variable is SweepVariable.FREQUENCY_MHZ:
            if self.start <= 0.0:
                raise InvalidSpec(f"frequency sweep needs start > 0, got {self.start}")
            if self.base.effective_delta >= 1.0:
                raise InvalidSpec("base cover factor must be below 1 (full cover)")


@dataclass(frozen=True)
class SweepRow:
    """One evaluated point: the swept value plus the full loss breakdown."""

    x: float
    delta: float
    d_f_m: float
    d_fsp_m: float
    l_foliage_db: float
    l_fsp_db: float
    l_total_db: float
    regime: Regime
    validity: Validity


@dataclass(frozen=True)
class SweepTable:
    variable: str
    rows: list[SweepRow]


def _point(spec: SweepSpec, x: float) -> tuple[LinkGeometry, float]:
    """Geometry and frequency for the sweep evaluated at x."""
    base = spec.base
    if spec.variable is SweepVariable.DELTA:
        return LinkGeometry(d_km=base.d_km, delta=x), spec.f_mhz
    if spec.variable is SweepVariable.FOLIAGE_HEIGHT:
        return LinkGeometry(d_km=base.d_km, h_m=base.h_m, h_f_m=x), spec.f_mhz
    if spec.variable is SweepVariable.DISTANCE:
        return LinkGeometry(d_km=x, delta=base.effective_delta), spec.f_mhz
    return base, x  # FREQUENCY_MHZ


def run_sweep(
    spec: SweepSpec, fspl_constant: float = DEFAULT_FSPL_CONSTANT_DB
) -> SweepTable:
    """Evaluate the sweep at ``steps`` uniformly spaced points, endpoints included.

    Rows come back sorted by the swept value. Any propagation error is
    re-raised annotated with the offending x.
    """
    rows: list[SweepRow] = []
    for x in np.linspace(spec.start, spec.stop, spec.steps):
        x = float(x)
        geometry, f_mhz = _point(spec, x)
        try:
            breakdown = total_loss(geometry, f_mhz, fspl_constant)
        except FoliageLinkError as exc:
            raise type(exc)(
                f"{spec.variable.value} sweep failed at x = {x}: {exc}"
            ) from exc
        rows.append(
            SweepRow(
                x=x,
                delta=breakdown.split.delta,
                d_f_m=breakdown.split.d_f_m,
                d_fsp_m=breakdown.split.d_fsp_m,
                l_foliage_db=breakdown.l_foliage_db,
                l_fsp_db=breakdown.l_fsp_db,
                l_total_db=breakdown.l_total_db,
                regime=breakdown.foliage.regime,
                validity=breakdown.foliage.validity,
            )
        )
    return SweepTable(variable=spec.variable.value, rows=rows)


def preset(name: str) -> SweepSpec:
    """A bundled sweep specification by name (figure2, figure3 or figure4).

    figure2 and figure3 share one cover-factor sweep (0 to 0.95, 96 points,
    2 km path at 2400 MHz); figure2 reads the distance columns, figure3 the
    loss columns. figure4 sweeps foliage height 0 to 15 m under a 30 m
    antenna over the same path.
    """
    key = str(name).lower()
    if key in ("figure2", "figure3"):
        return SweepSpec(
            variable=SweepVariable.DELTA,
            start=0.0,
            stop=0.95,
            steps=96,
            base=LinkGeometry(d_km=2.0, delta=0.0),
            f_mhz=2400.0,
        )
    if key == "figure4":
        return SweepSpec(
            variable=SweepVariable.FOLIAGE_HEIGHT,
            start=0.0,
            stop=15.0,
            steps=16,
            base=LinkGeometry(d_km=2.0, h_m=30.0, h_f_m=0.0),
            f_mhz=2400.0,
        )
    raise UnknownPreset(f"unknown preset {name!r}; expected figure2, figure3 or figure4")
