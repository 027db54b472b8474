"""Propagation-loss model for wireless links crossing foliage cover.

A sensor-to-gateway path of length ``d`` splits into a vegetation-covered
segment ``d_f`` and a free-space segment ``d_fsp``. The dimensionless
foliage cover factor ``delta = d_f / d`` describes the obstructed fraction;
it can equivalently be derived from heights as ``h_f / h`` (foliage height
above the sensor antenna over base-station antenna height above it, by
similar triangles).

Losses in dB:

* foliage segment -- Weissberger's modified exponential decay model, with a
  linear branch up to 14 m depth and a power branch above it (validated up
  to 400 m; deeper evaluations are flagged, not refused),
* free-space segment -- ``K + 20 log10(d_km) + 20 log10(f_mhz)`` with
  ``K = 32.45`` by default,
* total -- the sum of the two.

All functions are pure and stateless; they are safe to call concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from .errors import (
    DeltaOutOfRange,
    FullFoliageCover,
    HeightOutOfRange,
    InconsistentGeometry,
    InvalidBand,
    NegativeDistance,
    NonPositiveDistance,
    NonPositiveFrequency,
    NonPositiveHeight,
)

#: Free-space path loss constant for d in km and f in MHz.
DEFAULT_FSPL_CONSTANT_DB = 32.45

#: Foliage depth (m) where the decay model switches from its linear to its
#: power branch. The boundary itself belongs to the linear branch.
LINEAR_BRANCH_MAX_M = 14.0

#: Largest foliage depth (m) the decay model was validated for; deeper
#: results are extrapolations.
WEISSBERGER_MAX_DEPTH_M = 400.0

_DELTA_SOURCE_TOL = 1e-12


class Regime(str, Enum):
    """Which branch of the foliage decay model produced a loss value."""

    ZERO = "zero"
    LINEAR = "linear"
    POWER = "power"


class Validity(str, Enum):
    """Whether a foliage loss was computed inside the model's validated depth."""

    IN_DOMAIN = "in_domain"
    EXTRAPOLATED = "extrapolated"


@dataclass(frozen=True)
class PathSplit:
    """Decomposition of one path into foliage and free-space segments."""

    d_f_m: float
    d_fsp_m: float
    delta: float


@dataclass(frozen=True)
class FoliageLossResult:
    """Foliage loss in dB plus the branch and validity flags that produced it."""

    loss_db: float
    regime: Regime
    validity: Validity


@dataclass(frozen=True)
class LossBreakdown:
    """Foliage, free-space and total loss for one link, with its split."""

    l_foliage_db: float
    l_fsp_db: float
    l_total_db: float
    foliage: FoliageLossResult
    split: PathSplit


@dataclass(frozen=True)
class DeltaBounds:
    """Admissible band for a cover-factor pick under a fractional perturbation.

    A candidate value ``alpha`` is admissible when even after a relative
    perturbation of ``+/- sigma`` it stays inside ``[delta_min, delta_max]``:
    ``alpha_low_min <= alpha <= alpha_high_max``.
    """

    delta_min: float
    delta_max: float
    sigma: float
    alpha_low_min: float
    alpha_high_max: float

    def admits(self, alpha: float) -> bool:
        """True when ``alpha`` survives the perturbation inside the band."""
        return self.alpha_low_min <= alpha <= self.alpha_high_max


@dataclass(frozen=True)
class LinkGeometry:
    """Geometry of one sensor-to-gateway link.

    The cover factor can be given directly (``delta``) or derived from
    heights (``h_f_m / h_m``). Exactly one source must be supplied; when
    both are present they must agree to within 1e-12.

    Args:
        d_km: total path length in kilometers (> 0).
        h_m: base-station antenna height above the sensor antenna, meters.
        h_f_m: foliage height above the sensor antenna, meters.
        delta: foliage cover factor in [0, 1].
    """

    d_km: float
    h_m: float | None = None
    h_f_m: float | None = None
    delta: float | None = None

    def __post_init__(self) -> None:
        if not self.d_km > 0:
            raise NonPositiveDistance(f"d_km must be > 0, got {self.d_km}")
        has_h = self.h_m is not None
        has_hf = self.h_f_m is not None
        if has_h != has_hf:
            raise InconsistentGeometry("h_m and h_f_m must be supplied together")
        if not has_h and self.delta is None:
            raise InconsistentGeometry(
                "supply a cover-factor source: delta, or the pair (h_m, h_f_m)"
            )
        if self.delta is not None and not 0.0 <= self.delta <= 1.0:
            raise DeltaOutOfRange(f"delta must lie in [0, 1], got {self.delta}")
        if has_h:
            derived = delta_from_heights(self.h_f_m, self.h_m)
            if self.delta is not None and abs(self.delta - derived) > _DELTA_SOURCE_TOL:
                raise InconsistentGeometry(
                    f"delta={self.delta} disagrees with h_f_m/h_m={derived}"
                )

    @property
    def effective_delta(self) -> float:
        """The cover factor, taken from ``delta`` or derived from the heights."""
        if self.delta is not None:
            return self.delta
        return delta_from_heights(self.h_f_m, self.h_m)


def foliage_split(d_km: float, delta: float) -> PathSplit:
    """Split a path of ``d_km`` kilometers at cover factor ``delta``.

    Returns the foliage depth ``delta * d`` and free-space remainder
    ``(1 - delta) * d``, both in meters.
    """
    if not d_km > 0:
        raise NonPositiveDistance(f"d_km must be > 0, got {d_km}")
    if not 0.0 <= delta <= 1.0:
        raise DeltaOutOfRange(f"delta must lie in [0, 1], got {delta}")
    d_m = d_km * 1000.0
    return PathSplit(d_f_m=delta * d_m, d_fsp_m=(1.0 - delta) * d_m, delta=delta)


def delta_from_heights(h_f_m: float, h_m: float) -> float:
    """Cover factor from foliage height over antenna height (similar triangles)."""
    if not h_m > 0:
        raise NonPositiveHeight(f"h_m must be > 0, got {h_m}")
    if not 0.0 <= h_f_m <= h_m:
        raise HeightOutOfRange(f"h_f_m must lie in [0, h_m={h_m}], got {h_f_m}")
    return h_f_m / h_m


def split_from_heights(d_km: float, h_m: float, h_f_m: float) -> PathSplit:
    """Split a path using the height-derived cover factor ``h_f_m / h_m``."""
    return foliage_split(d_km, delta_from_heights(h_f_m, h_m))


def weissberger_loss(f_mhz: float, d_f_m: float) -> FoliageLossResult:
    """Foliage loss after Weissberger's modified exponential decay model.

    With ``f`` in GHz and the depth ``d_f`` in meters::

        0                            d_f = 0
        0.45 * f^0.284 * d_f         0 < d_f <= 14
        1.33 * f^0.284 * d_f^0.588   d_f > 14

    The frequency argument is taken in MHz and converted internally. The
    power branch is validated up to 400 m; deeper depths are still
    evaluated but flagged ``Validity.EXTRAPOLATED``, never clamped. Note
    the model is discontinuous at the 14 m branch boundary (a small
    downward step of about 0.36%).

    Args:
        f_mhz: carrier frequency in MHz (> 0).
        d_f_m: foliage depth in meters (>= 0).

    Returns:
        FoliageLossResult with the loss in dB, the branch used and the
        validity flag.
    """
    if not f_mhz > 0:
        raise NonPositiveFrequency(f"f_mhz must be > 0, got {f_mhz}")
    if not d_f_m >= 0:
        raise NegativeDistance(f"d_f_m must be >= 0, got {d_f_m}")
    if d_f_m == 0:
        return FoliageLossResult(0.0, Regime.ZERO, Validity.IN_DOMAIN)
    f_ghz = f_mhz / 1000.0  # the decay model takes GHz
    if d_f_m <= LINEAR_BRANCH_MAX_M:
        loss = 0.45 * f_ghz**0.284 * d_f_m
        return FoliageLossResult(loss, Regime.LINEAR, Validity.IN_DOMAIN)
    loss = 1.33 * f_ghz**0.284 * d_f_m**0.588
    validity = (
        Validity.EXTRAPOLATED if d_f_m > WEISSBERGER_MAX_DEPTH_M else Validity.IN_DOMAIN
    )
    return FoliageLossResult(loss, Regime.POWER, validity)


def free_space_loss(
    d_km: float, f_mhz: float, fspl_constant: float = DEFAULT_FSPL_CONSTANT_DB
) -> float:
    """Free-space path loss ``K + 20 log10(d_km) + 20 log10(f_mhz)`` in dB.

    ``fspl_constant`` selects the model-constant variant (32.45 by default;
    32.4478 or 32.5 are common alternatives).
    """
    if not d_km > 0:
        raise NonPositiveDistance(f"d_km must be > 0, got {d_km}")
    if not f_mhz > 0:
        raise NonPositiveFrequency(f"f_mhz must be > 0, got {f_mhz}")
    return fspl_constant + 20.0 * math.log10(d_km) + 20.0 * math.log10(f_mhz)


def total_loss(
    geometry: LinkGeometry,
    f_mhz: float,
    fspl_constant: float = DEFAULT_FSPL_CONSTANT_DB,
) -> LossBreakdown:
    """Total path loss of a link: foliage term plus free-space term.

    The free-space term is evaluated over the unobstructed remainder
    ``d * (1 - delta)``, so the cover factor must be strictly below 1.

    Raises:
        FullFoliageCover: at ``delta = 1`` the free-space segment vanishes
            and its loss term is singular.
    """
    delta = geometry.effective_delta
    if delta >= 1.0:
        raise FullFoliageCover(
            "delta = 1 leaves no free-space segment; the free-space loss term "
            "is undefined"
        )
    split = foliage_split(geometry.d_km, delta)
    foliage = weissberger_loss(f_mhz, split.d_f_m)
    l_fsp = free_space_loss(split.d_fsp_m / 1000.0, f_mhz, fspl_constant)
    return LossBreakdown(
        l_foliage_db=foliage.loss_db,
        l_fsp_db=l_fsp,
        l_total_db=foliage.loss_db + l_fsp,
        foliage=foliage,
        split=split,
    )


def delta_bounds(delta_min: float, delta_max: float, sigma: float) -> DeltaBounds:
    """Admissible cover-factor band under a ``+/- sigma`` relative perturbation.

    A pick ``alpha`` perturbed upward must stay at or below ``delta_max``
    (``alpha <= delta_max / (1 + sigma)``) and perturbed downward at or
    above ``delta_min`` (``alpha >= delta_min / (1 - sigma)``).

    Raises:
        InvalidBand: on inputs outside ``0 <= delta_min < delta_max <= 1``
            and ``0 <= sigma < 1``, or when the admissible band is empty.
    """
    if not 0.0 <= delta_min < delta_max <= 1.0:
        raise InvalidBand(
            f"need 0 <= delta_min < delta_max <= 1, got [{delta_min}, {delta_max}]"
        )
    if not 0.0 <= sigma < 1.0:
        raise InvalidBand(f"sigma must lie in [0, 1), got {sigma}")
    alpha_low_min = delta_min / (1.0 - sigma)
    alpha_high_max = delta_max / (1.0 + sigma)
    if alpha_low_min > alpha_high_max:
        raise InvalidBand(
            f"empty admissible band: alpha_low_min={alpha_low_min} exceeds "
            f"alpha_high_max={alpha_high_max}"
        )
    return DeltaBounds(delta_min, delta_max, sigma, alpha_low_min, alpha_high_max)


def weissberger_delta_limit(d_km: float) -> float:
    """Largest cover factor keeping the foliage depth inside the validated 400 m.

    Purely informational: deeper evaluations are allowed and flagged. The
    geometric maximum is always 1; callers pick which limit to apply.
    """
    if not d_km > 0:
        raise NonPositiveDistance(f"d_km must be > 0, got {d_km}")
    return min(1.0, WEISSBERGER_MAX_DEPTH_M / (d_km * 1000.0))
