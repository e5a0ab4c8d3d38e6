"""Quasiprobability identities: closed forms, covariance, linearity and bounds."""

import numpy as np

from ..models.amplitudes import CoherentAmplitudes
from ..models.fock import FockOp
from ..models.grids import GridSpec
from ..models.run import CheckReport, RunConfig
from ..models.states import CoherentStateSpec, FockStateSpec, SuperpositionSpec
from ..quasiprob.grids import husimi_grid, wigner_grid
from ..quasiprob.wigner import (
    displace_density,
    husimi_value,
    s_distribution,
    state_density,
    wigner_coherent_closed_form,
    wigner_series,
)
from .base import SuiteRun, random_point

CLOSED_FORM_SAMPLES = 20
COVARIANCE_SAMPLES = 10
BOUND_SAMPLES = 20
SUITE_GRID_RESOLUTION = 21
NEGATIVITY_TOLERANCE = 1e-10
GRID_TOLERANCE = 1e-6
COVARIANCE_TOLERANCE = 1e-6
LINEARITY_TOLERANCE = 1e-12
BOUND_SLACK = 1e-9
HUSIMI_FLOOR = 1e-12
SMOOTHING_TOLERANCE = 1e-3
COVERAGE_TOLERANCE = 2e-2
RANDOM_STATE_LEVELS = 6


def _coherent(amplitude: complex, trunc) -> FockOp:
    return state_density(CoherentStateSpec(amplitudes=CoherentAmplitudes.coerce(amplitude)), trunc)


def _random_density(rng: np.random.Generator, trunc) -> FockOp:
    """Mixture of two random pure states supported on the lowest levels."""
    levels = min(RANDOM_STATE_LEVELS, trunc.dimension)
    rho = np.zeros((trunc.dimension, trunc.dimension), dtype=complex)
    weight = rng.random()
    for p in (weight, 1.0 - weight):
        psi = np.zeros(trunc.dimension, dtype=complex)
        psi[:levels] = rng.normal(size=levels) + 1j * rng.normal(size=levels)
        psi /= np.linalg.norm(psi)
        rho += p * np.outer(psi, psi.conj())
    return FockOp(truncation=trunc, matrix=rho)


def run(config: RunConfig, progress: bool = False) -> CheckReport:
    suite = SuiteRun("quasiprob", config, progress)
    rng = suite.rng
    trunc = config.truncation(1)
    scale = config.amplitude

    def closed_form():
        worst = 0.0
        for _ in suite.iterate(CLOSED_FORM_SAMPLES, "series vs closed form"):
            alpha = random_point(rng, scale)
            xi = alpha + random_point(rng, 2.0)
            worst = max(worst, abs(wigner_series(_coherent(alpha, trunc), xi) - wigner_coherent_closed_form(alpha, xi)))
        return worst

    suite.case("series_vs_closed_form", config.closed_form_tolerance, closed_form)

    def negativity():
        rho = state_density(FockStateSpec(occupations=(1,)), trunc)
        return abs(wigner_series(rho, 0.0) + 1.0)

    suite.case("fock_one_negativity", NEGATIVITY_TOLERANCE, negativity)

    grid = GridSpec(half_width=config.grid_half_width, resolution=SUITE_GRID_RESOLUTION)

    def coherent_grid():
        alpha = complex(scale)
        values = wigner_grid(_coherent(alpha, trunc), grid, progress=suite.progress).values.real
        expected = np.exp(-2.0 * np.abs(grid.points() - alpha) ** 2)
        return float(np.max(np.abs(values - expected)))

    suite.case("coherent_wigner_grid", GRID_TOLERANCE, coherent_grid)

    def vacuum_husimi():
        result = husimi_grid(state_density(FockStateSpec(occupations=(0,)), trunc), grid)
        expected = np.exp(-np.abs(grid.points()) ** 2)
        deviation = float(np.max(np.abs(result.values.real - expected)))
        return max(deviation, abs(result.quadrature_sum() - 1.0)), "max of pointwise error and quadrature defect"

    suite.case("vacuum_husimi_grid", COVERAGE_TOLERANCE, vacuum_husimi)

    def covariance():
        rho = state_density(
            SuperpositionSpec(
                weights=[1.0, 0.5j],
                components=[FockStateSpec(occupations=(1,)), CoherentStateSpec(amplitudes=CoherentAmplitudes.coerce(0.5))],
            ),
            trunc,
        )
        worst = 0.0
        for _ in suite.iterate(COVARIANCE_SAMPLES, "displacement covariance"):
            beta = random_point(rng, scale)
            xi = random_point(rng, 2.0 * scale)
            worst = max(worst, abs(wigner_series(displace_density(rho, beta), xi) - wigner_series(rho, xi - beta)))
        return worst

    suite.case("displacement_covariance", COVARIANCE_TOLERANCE, covariance)

    def linearity():
        rho1, rho2 = _random_density(rng, trunc), _random_density(rng, trunc)
        lam = rng.random()
        mixed = rho1 * lam + rho2 * (1.0 - lam)
        worst = 0.0
        for _ in range(BOUND_SAMPLES):
            xi = random_point(rng, 2.0)
            combined = lam * wigner_series(rho1, xi) + (1.0 - lam) * wigner_series(rho2, xi)
            worst = max(worst, abs(wigner_series(mixed, xi) - combined))
        return worst

    suite.case("linearity", LINEARITY_TOLERANCE, linearity)

    def boundedness():
        rho = _random_density(rng, trunc)
        excess = 0.0
        for _ in range(BOUND_SAMPLES):
            xi = random_point(rng, 2.0)
            excess = max(excess, abs(wigner_series(rho, xi)) - 1.0)
        return max(excess, 0.0)

    suite.case("wigner_bounded", BOUND_SLACK, boundedness)

    def husimi_nonnegative():
        values = husimi_grid(_random_density(rng, trunc), grid).values.real
        return max(-float(values.min()), 0.0)

    suite.case("husimi_nonnegative", HUSIMI_FLOOR, husimi_nonnegative)

    def husimi_limit():
        rho = _coherent(0.5 * scale, trunc)
        worst = 0.0
        for _ in range(BOUND_SAMPLES):
            xi = random_point(rng, 2.0)
            worst = max(worst, abs(s_distribution(rho, xi, -1) - husimi_value(rho, xi)))
        return worst

    suite.case("s_minus_one_is_husimi", config.closed_form_tolerance, husimi_limit)

    def smoothing():
        alpha = complex(0.5 * scale)
        rho = _coherent(alpha, trunc)
        xi = alpha + 0.5
        series = s_distribution(rho, xi, "-1/2")
        smoothed = s_distribution(rho, xi, "-1/2", method="smoothing")
        exact = np.exp(-2.0 * abs(xi - alpha) ** 2 / 1.5)
        return max(abs(series - smoothed), abs(series - exact))

    suite.case("gaussian_smoothing", SMOOTHING_TOLERANCE, smoothing)
    return suite.report()
