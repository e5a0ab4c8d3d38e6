"""Tests for Wigner, s-ordered and Husimi distributions."""

import numpy as np
import pytest

from holoquant.exceptions import ContractError, CoverageWarning, DimensionError, TailDominanceWarning, UnsupportedOrderError
from holoquant.models import (
    CoherentStateSpec,
    DensityStateSpec,
    FockOp,
    FockStateSpec,
    FockTruncation,
    GridSpec,
    SuperpositionSpec,
)
from holoquant.quasiprob import (
    default_truncation,
    displace_density,
    distribution_grid,
    husimi_grid,
    husimi_value,
    s_distribution,
    state_density,
    validate_density,
    wigner_coherent_closed_form,
    wigner_grid,
    wigner_series,
)


class TestDensities:
    """State specifications to density matrices."""

    def test_default_truncations(self):
        assert default_truncation(FockStateSpec(occupations=(2,))).cutoffs == (14,)
        assert default_truncation(CoherentStateSpec(amplitudes=[1.0, 0.0])).cutoffs == (38, 30)
        mixed = SuperpositionSpec(
            weights=[1, 1],
            components=[FockStateSpec(occupations=(20,)), CoherentStateSpec(amplitudes=2.0)],
        )
        assert default_truncation(mixed).cutoffs == (62,)

    def test_pure_state_density(self, number_density):
        rho = number_density(1)
        assert rho.trace() == pytest.approx(1.0)
        assert rho.matrix[1, 1] == pytest.approx(1.0)

    def test_superposition_is_normalized(self):
        spec = SuperpositionSpec(
            weights=[1.0, 1.0], components=[FockStateSpec(occupations=(0,)), FockStateSpec(occupations=(1,))]
        )
        rho = state_density(spec, FockTruncation.uniform(1, 4))
        np.testing.assert_allclose(rho.matrix[:2, :2], 0.5 * np.ones((2, 2)), atol=1e-12)

    def test_vanishing_superposition(self):
        spec = SuperpositionSpec(
            weights=[1.0, -1.0], components=[FockStateSpec(occupations=(0,)), FockStateSpec(occupations=(0,))]
        )
        with pytest.raises(ContractError):
            state_density(spec)

    def test_mode_mismatch(self):
        with pytest.raises(DimensionError):
            state_density(FockStateSpec(occupations=(0, 0)), FockTruncation.uniform(1, 3))

    def test_explicit_density(self):
        trunc = FockTruncation.uniform(1, 2)
        rho = FockOp(truncation=trunc, matrix=np.diag([0.5, 0.5, 0.0]))
        assert state_density(DensityStateSpec(rho=rho)) is rho

    @pytest.mark.parametrize(
        "matrix",
        [
            np.diag([0.5, 0.4, 0.0]),
            np.array([[1.0, 0.1, 0], [0.0, 0.0, 0], [0, 0, 0]]),
            np.diag([1.5, -0.5, 0.0]),
        ],
    )
    def test_invalid_densities(self, matrix):
        with pytest.raises(ContractError):
            validate_density(FockOp(truncation=FockTruncation.uniform(1, 2), matrix=matrix))


class TestWignerSeries:
    """Pointwise Wigner values."""

    def test_vacuum_at_origin(self, number_density):
        assert wigner_series(number_density(0), 0.0) == pytest.approx(1.0, abs=1e-12)

    def test_one_photon_negativity(self, number_density):
        assert wigner_series(number_density(1), 0.0) == pytest.approx(-1.0, abs=1e-10)

    @pytest.mark.parametrize("alpha", [0.0, 1.0, 0.5 - 1.2j])
    def test_coherent_closed_form(self, coherent_density, alpha):
        rho = coherent_density(alpha)
        for xi in (alpha, alpha + 0.3, 0.7j, -1.0):
            assert wigner_series(rho, xi) == pytest.approx(wigner_coherent_closed_form(alpha, xi), abs=1e-8)

    def test_displacement_covariance(self):
        spec = SuperpositionSpec(
            weights=[1.0, 0.5j],
            components=[FockStateSpec(occupations=(1,)), CoherentStateSpec(amplitudes=0.5)],
        )
        rho = state_density(spec, FockTruncation.uniform(1, 40))
        beta, xi = 0.4 - 0.3j, 0.9 + 0.2j
        assert wigner_series(displace_density(rho, beta), xi) == pytest.approx(wigner_series(rho, xi - beta), abs=1e-6)

    def test_values_are_bounded(self, number_density):
        rho = number_density(3)
        for xi in (0.0, 0.5, 1.0 + 1.0j, 2.0):
            assert abs(wigner_series(rho, xi)) <= 1.0 + 1e-9

    def test_multimode_closed_form(self):
        spec = CoherentStateSpec(amplitudes=[0.5, -0.2j])
        rho = state_density(spec, FockTruncation.uniform(2, 12))
        xi = [0.3, 0.1j]
        assert wigner_series(rho, xi) == pytest.approx(wigner_coherent_closed_form([0.5, -0.2j], xi), abs=1e-8)

    def test_rejects_non_density(self):
        trunc = FockTruncation.uniform(1, 2)
        with pytest.raises(ContractError):
            wigner_series(FockOp(truncation=trunc, matrix=np.eye(3)), 0.0)

    def test_tail_dominance_warning(self):
        rho = state_density(CoherentStateSpec(amplitudes=2.0), FockTruncation.uniform(1, 3))
        with pytest.warns(TailDominanceWarning):
            wigner_series(rho, 2.0)


class TestOrderedDistributions:
    """s-ordered values and the Husimi limit."""

    @pytest.mark.parametrize("s", ["0", "-1/2", "-1", "-3"])
    def test_coherent_peak_is_one(self, coherent_density, s):
        rho = coherent_density(0.7 + 0.2j)
        assert s_distribution(rho, 0.7 + 0.2j, s) == pytest.approx(1.0, abs=1e-8)

    def test_coherent_value_off_peak(self, coherent_density):
        rho = coherent_density(0.5)
        beta = 0.6 + 0.3j
        expected = np.exp(-2.0 * abs(beta) ** 2 / 1.5)
        assert s_distribution(rho, 0.5 + beta, "-1/2") == pytest.approx(expected, abs=1e-8)

    def test_minus_one_is_husimi(self, coherent_density):
        rho = coherent_density(0.5)
        for xi in (0.0, 1.0j, -0.8):
            assert s_distribution(rho, xi, -1) == pytest.approx(husimi_value(rho, xi), abs=1e-10)
            assert husimi_value(rho, xi) == pytest.approx(np.exp(-abs(xi - 0.5) ** 2), abs=1e-10)

    def test_positive_orders_are_unsupported(self, coherent_density):
        with pytest.raises(UnsupportedOrderError):
            s_distribution(coherent_density(0.0), 0.0, "1/2")

    def test_smoothing_agrees_with_series(self, coherent_density):
        rho = coherent_density(0.5)
        xi = 1.0
        series = s_distribution(rho, xi, "-1/2")
        smoothed = s_distribution(rho, xi, "-1/2", method="smoothing")
        assert smoothed == pytest.approx(series, abs=1e-3)

    def test_smoothing_is_single_mode(self):
        rho = state_density(FockStateSpec(occupations=(0, 0)), FockTruncation.uniform(2, 3))
        with pytest.raises(ContractError):
            s_distribution(rho, [0.0, 0.0], "-1/2", method="smoothing")

    def test_unknown_method(self, coherent_density):
        with pytest.raises(ValueError):
            s_distribution(coherent_density(0.0), 0.0, -1, method="fft")


class TestGrids:
    """Single-mode grids."""

    def test_coherent_wigner_grid(self, coherent_density):
        grid = GridSpec(half_width=2.0, resolution=5)
        result = wigner_grid(coherent_density(0.5), grid)
        expected = np.exp(-2.0 * np.abs(grid.points() - 0.5) ** 2)
        np.testing.assert_allclose(result.values.real, expected, atol=1e-8)
        assert result.order == "0"

    def test_threads_give_identical_values(self, number_density):
        grid = GridSpec(half_width=1.5, resolution=4)
        rho = number_density(1)
        serial = distribution_grid(rho, grid, "-1/2")
        threaded = distribution_grid(rho, grid, "-1/2", workers=3)
        np.testing.assert_array_equal(serial.values, threaded.values)
        assert serial.order == "-1/2"

    def test_grid_tail_warning_once(self):
        rho = state_density(CoherentStateSpec(amplitudes=2.0), FockTruncation.uniform(1, 3))
        with pytest.warns(TailDominanceWarning) as record:
            wigner_grid(rho, GridSpec(half_width=1.0, resolution=3))
        assert len([w for w in record if w.category is TailDominanceWarning]) == 1

    def test_grids_are_single_mode(self):
        rho = state_density(FockStateSpec(occupations=(0, 0)), FockTruncation.uniform(2, 3))
        with pytest.raises(ContractError):
            wigner_grid(rho, GridSpec(resolution=3))

    def test_vacuum_husimi_grid(self, number_density):
        grid = GridSpec(half_width=4.0, resolution=41)
        result = husimi_grid(number_density(0), grid)
        np.testing.assert_allclose(result.values.real, np.exp(-np.abs(grid.points()) ** 2), atol=1e-10)
        assert result.quadrature_sum() == pytest.approx(1.0, abs=2e-2)
        assert result.order == "-1"

    def test_narrow_husimi_grid_warns(self, number_density):
        with pytest.warns(CoverageWarning):
            husimi_grid(number_density(0), GridSpec(half_width=0.5, resolution=11))

    def test_extremes_and_exports(self, number_density):
        result = wigner_grid(number_density(1), GridSpec(half_width=1.0, resolution=3))
        value, where = result.minimum()
        assert value == pytest.approx(-1.0, abs=1e-10)
        assert where == 0
        lines = result.to_csv().splitlines()
        assert lines[0] == "re,im,value"
        assert len(lines) == 10
