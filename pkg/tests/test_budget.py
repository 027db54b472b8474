"""Tests for budget arithmetic and the inverse solvers.

Round-trip cases feed the solver a budget computed by the forward model
and expect the generating parameter back; grid oracles are rebuilt from
the raw formulas in numpy, independent of the solver's search.
"""

import random

import numpy as np
import pytest

from foliage_link import (
    BracketExceeded,
    DeltaOutOfRange,
    InvalidRadioConfig,
    LinkGeometry,
    NonPositiveHeight,
    NoSolution,
    RadioConfig,
    link_margin,
    max_foliage_factor,
    max_foliage_height,
    max_loss_budget,
    max_range,
    required_tx_power,
    total_loss,
)

# mpmath-frozen forward values
TOTAL_D2_DELTA0 = 106.07482474751174
TOTAL_D2_DELTA095 = 224.51127789911881
TOTAL_D2_DELTA05 = 199.09901440038047
# first feasibility frontier for a budget equal to the delta=0.95 loss: the
# loss curve crosses the budget on its way up well before the cap
FRONTIER_FOR_CAP_BUDGET = 0.8395133019247811


def radio_with_budget(budget_db: float) -> RadioConfig:
    return RadioConfig(
        tx_power_dbm=budget_db, tx_gain_dbi=0.0, rx_gain_dbi=0.0, rx_sensitivity_dbm=0.0
    )


def forward_total(d_km: float, delta: float, f_mhz: float) -> float:
    return total_loss(LinkGeometry(d_km=d_km, delta=delta), f_mhz).l_total_db


def oracle_total_grid(d_km, delta, f_mhz):
    """Model formulas rebuilt in numpy; independent of the package internals."""
    d_f = np.asarray(delta) * np.asarray(d_km) * 1000.0
    f_ghz = np.asarray(f_mhz) / 1000.0
    foliage = np.where(
        d_f <= 0,
        0.0,
        np.where(
            d_f <= 14.0,
            0.45 * f_ghz**0.284 * d_f,
            1.33 * f_ghz**0.284 * np.maximum(d_f, 1e-300) ** 0.588,
        ),
    )
    fsp = 32.45 + 20 * np.log10(np.asarray(d_km) * (1 - np.asarray(delta))) + 20 * np.log10(f_mhz)
    return foliage + fsp


class TestRadioConfig:
    def test_negative_margin(self):
        with pytest.raises(InvalidRadioConfig):
            RadioConfig(14, 0, 0, -137, required_margin_db=-1)

    def test_non_finite(self):
        with pytest.raises(InvalidRadioConfig):
            RadioConfig(float("nan"), 0, 0, -137)
        with pytest.raises(InvalidRadioConfig):
            RadioConfig(14, 0, 0, float("-inf"))


class TestBudgetArithmetic:
    def test_link_margin(self):
        radio = RadioConfig(14, 0, 0, -137)
        assert link_margin(radio, 224.5112779) == pytest.approx(-73.5112779, abs=1e-9)
        assert link_margin(radio, 0) == 151
        gains = RadioConfig(14, 2, 2, -137)
        assert link_margin(gains, 106.0748247) == pytest.approx(48.9251753, abs=1e-9)

    def test_required_tx_power(self):
        radio = RadioConfig(0, 0, 0, -137)
        assert required_tx_power(radio, 224.5112779) == pytest.approx(87.5112779, abs=1e-9)
        assert required_tx_power(radio, 0) == -137
        other = RadioConfig(0, 3, 3, -120, required_margin_db=10)
        assert required_tx_power(other, 106.0748247) == pytest.approx(-9.9251753, abs=1e-9)

    def test_max_loss_budget(self):
        assert max_loss_budget(RadioConfig(14, 0, 0, -137)) == 151
        assert max_loss_budget(RadioConfig(14, 0, 0, -137, required_margin_db=10)) == 141
        assert max_loss_budget(RadioConfig(20, 6, 6, -110)) == 142

    def test_margin_plus_loss_is_constant(self):
        radio = RadioConfig(17, 2, 3, -120, required_margin_db=5)
        rng = random.Random(11)
        reference = link_margin(radio, 0.0)
        for _ in range(200):
            loss = rng.uniform(0, 300)
            assert link_margin(radio, loss) + loss == pytest.approx(reference, abs=1e-9)

    def test_required_tx_inverts_margin(self):
        rng = random.Random(12)
        for _ in range(200):
            radio = RadioConfig(
                0.0,
                rng.uniform(-5, 15),
                rng.uniform(-5, 15),
                rng.uniform(-150, -80),
                required_margin_db=rng.uniform(0, 30),
            )
            loss = rng.uniform(50, 250)
            tx = required_tx_power(radio, loss)
            closed = RadioConfig(
                tx, radio.tx_gain_dbi, radio.rx_gain_dbi, radio.rx_sensitivity_dbm,
                radio.required_margin_db,
            )
            assert link_margin(closed, loss) == pytest.approx(
                radio.required_margin_db, abs=1e-9
            )


class TestMaxRange:
    def test_inverts_no_foliage_reference(self):
        result = max_range(radio_with_budget(TOTAL_D2_DELTA0), 0.0, 2400)
        assert result.converged
        assert result.value == pytest.approx(2.0, abs=1e-6)
        assert result.achieved_loss_db == pytest.approx(TOTAL_D2_DELTA0, abs=1e-6)

    def test_inverts_heavy_foliage_reference(self):
        result = max_range(radio_with_budget(TOTAL_D2_DELTA095), 0.95, 2400)
        assert result.converged
        assert result.value == pytest.approx(2.0, abs=1e-6)

    def test_round_trip_self_consistency(self):
        budget = forward_total(1.0, 0.3, 868)
        result = max_range(radio_with_budget(budget), 0.3, 868)
        assert result.value == pytest.approx(1.0, abs=1e-6)

    def test_no_solution(self):
        with pytest.raises(NoSolution):
            max_range(radio_with_budget(-500.0), 0.2, 2400)

    def test_bracket_exceeded(self):
        # at 1000 km and 20% cover the model already loses ~2390 dB
        with pytest.raises(BracketExceeded):
            max_range(radio_with_budget(3000.0), 0.2, 2400)

    def test_delta_domain(self):
        with pytest.raises(DeltaOutOfRange):
            max_range(radio_with_budget(150.0), 1.0, 2400)

    def test_agrees_with_grid_oracle(self):
        rng = random.Random(13)
        for _ in range(20):
            d_true = rng.uniform(0.8, 4.0)
            delta = rng.uniform(0.05, 0.75)
            f = rng.uniform(800, 5800)
            budget = forward_total(d_true, delta, f)
            result = max_range(radio_with_budget(budget), delta, f)
            assert result.value == pytest.approx(d_true, abs=1e-6)
            grid = np.arange(d_true - 0.02, d_true + 0.02, 1e-4)
            feasible = oracle_total_grid(grid, delta, f) <= budget
            oracle_d = grid[np.nonzero(feasible)[0][-1]]
            assert abs(result.value - oracle_d) <= 1.01e-4


class TestMaxFoliageFactor:
    def test_first_frontier_for_cap_budget(self):
        # a budget equal to the loss at the cap is already exceeded between
        # ~0.84 and ~0.94 (the curve peaks near 0.905), so the solver stops
        # at the first frontier rather than skipping to the cap
        result = max_foliage_factor(radio_with_budget(TOTAL_D2_DELTA095), 2.0, 2400)
        assert result.converged
        assert not result.all_feasible
        assert result.value == pytest.approx(FRONTIER_FOR_CAP_BUDGET, abs=1e-6)

    def test_all_feasible_above_peak(self):
        # the curve's maximum over [0, 0.95] is ~226.023 dB; anything above
        # that budget admits every scanned point
        result = max_foliage_factor(radio_with_budget(227.0), 2.0, 2400)
        assert result.all_feasible
        assert result.converged
        assert result.value == 0.95

    def test_baseline_budget_pins_delta_to_zero(self):
        result = max_foliage_factor(radio_with_budget(TOTAL_D2_DELTA0), 2.0, 2400)
        assert result.value == pytest.approx(0.0, abs=1e-6)
        assert not result.all_feasible

    def test_no_solution(self):
        with pytest.raises(NoSolution):
            max_foliage_factor(radio_with_budget(TOTAL_D2_DELTA0 - 1.0), 2.0, 2400)

    def test_cap_domain(self):
        with pytest.raises(DeltaOutOfRange):
            max_foliage_factor(radio_with_budget(150.0), 2.0, 2400, delta_cap=1.0)

    def test_round_trip_unique_frontier(self):
        rng = random.Random(14)
        for _ in range(20):
            d = rng.uniform(0.8, 4.0)
            delta_true = rng.uniform(0.05, 0.75)
            f = rng.uniform(800, 5800)
            budget = forward_total(d, delta_true, f)
            result = max_foliage_factor(radio_with_budget(budget), d, f)
            assert result.value == pytest.approx(delta_true, abs=1e-6)
            grid = np.arange(0.0, 0.95, 1e-4)
            infeasible = oracle_total_grid(d, grid, f) > budget
            hits = np.nonzero(infeasible)[0]
            oracle_delta = grid[hits[0] - 1] if hits.size else 0.95
            assert abs(result.value - oracle_delta) <= 1.01e-4


class TestMaxFoliageHeight:
    def test_inverts_height_reference(self):
        result = max_foliage_height(radio_with_budget(TOTAL_D2_DELTA05), 2.0, 30.0, 2400)
        assert result.value == pytest.approx(15.0, abs=1e-5)

    def test_baseline_budget_gives_zero_height(self):
        result = max_foliage_height(radio_with_budget(TOTAL_D2_DELTA0), 2.0, 30.0, 2400)
        assert result.value == pytest.approx(0.0, abs=1e-5)

    def test_cap_scales_with_height(self):
        result = max_foliage_height(radio_with_budget(500.0), 2.0, 30.0, 2400)
        assert result.all_feasible
        assert result.value == pytest.approx(28.5, rel=1e-12)

    def test_bad_height(self):
        with pytest.raises(NonPositiveHeight):
            max_foliage_height(radio_with_budget(150.0), 2.0, 0.0, 2400)
