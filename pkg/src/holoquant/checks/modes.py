"""Lattice mode expansion: symplecticity, round trips and bracket identities."""

import numpy as np

from ..algebra.star import poisson_bracket
from ..fields.modes import (
    amplitudes_from_field,
    field_from_amplitudes,
    field_symbol,
    mode_energy,
    momentum_symbol,
    qp_from_amplitudes,
    qp_from_field,
    symplectic_check,
    wigner_functional_coherent,
)
from ..models.amplitudes import CoherentAmplitudes
from ..models.lattice import FieldConfig, ModeLattice
from ..models.run import CheckReport, RunConfig
from .base import SuiteRun

LATTICE_SIZES = (8, 16, 32, 64)
MASSES = (0.1, 1.0, 10.0)
SYMPLECTIC_TOLERANCE = 1e-10
TRANSFORM_TOLERANCE = 1e-10
RANDOM_FIELDS = 100
BRACKET_SITES = 8


def _full_lattice(config: RunConfig) -> ModeLattice:
    return ModeLattice(
        mass=config.mass,
        sites=config.lattice_sites,
        spacing=config.lattice_spacing,
        dimension=config.lattice_dimension,
    )


def _random_field(rng: np.random.Generator, lat: ModeLattice) -> FieldConfig:
    return FieldConfig(phi=rng.normal(size=lat.site_count), varpi=rng.normal(size=lat.site_count))


def run(config: RunConfig, progress: bool = False) -> CheckReport:
    suite = SuiteRun("modes", config, progress)
    rng = suite.rng

    for sites in LATTICE_SIZES:
        for mass in MASSES:
            lattice = ModeLattice(mass=mass, sites=sites, spacing=config.lattice_spacing)
            suite.case(f"symplectic_L{sites}_m{mass:g}", SYMPLECTIC_TOLERANCE, lambda lat=lattice: symplectic_check(lat))

    def selected_symplectic():
        return symplectic_check(config.lattice())

    suite.case("symplectic_configured_lattice", SYMPLECTIC_TOLERANCE, selected_symplectic)

    def field_round_trip():
        lat = _full_lattice(config)
        worst = 0.0
        for _ in suite.iterate(RANDOM_FIELDS, "field round trip"):
            cfg = _random_field(rng, lat)
            back = field_from_amplitudes(amplitudes_from_field(cfg, lat), lat)
            worst = max(worst, float(np.max(np.abs(back.phi - cfg.phi))), float(np.max(np.abs(back.varpi - cfg.varpi))))
        return worst

    suite.case("field_round_trip", TRANSFORM_TOLERANCE, field_round_trip)

    def amplitude_round_trip():
        lat = _full_lattice(config)
        worst = 0.0
        for _ in range(RANDOM_FIELDS):
            a = rng.normal(size=lat.mode_count) + 1j * rng.normal(size=lat.mode_count)
            back = amplitudes_from_field(field_from_amplitudes(a, lat), lat)
            worst = max(worst, float(np.max(np.abs(back.alpha - a))))
        return worst

    suite.case("amplitude_round_trip", TRANSFORM_TOLERANCE, amplitude_round_trip)

    def transform_triangle():
        lat = config.lattice()
        worst = 0.0
        for _ in suite.iterate(RANDOM_FIELDS, "transform triangle"):
            cfg = _random_field(rng, lat)
            direct = qp_from_field(cfg, lat)
            composed = qp_from_amplitudes(amplitudes_from_field(cfg, lat), lat.omega)
            worst = max(worst, float(np.max(np.abs(direct.Q - composed.Q))), float(np.max(np.abs(direct.P - composed.P))))
        return worst

    suite.case("transform_triangle", TRANSFORM_TOLERANCE, transform_triangle)

    def energy():
        lat = _full_lattice(config)
        worst = 0.0
        for j in range(lat.mode_count):
            a = np.zeros(lat.mode_count, dtype=complex)
            a[j] = rng.normal() + 1j * rng.normal()
            modes = qp_from_field(field_from_amplitudes(a, lat), lat)
            expected = lat.omega[j] * abs(a[j]) ** 2
            worst = max(worst, abs(mode_energy(modes, lat) - expected) / max(1.0, expected))
        return worst, "relative to max(1, w|a|^2)"

    suite.case("mode_energy", TRANSFORM_TOLERANCE, energy)

    def field_brackets():
        lat = ModeLattice(mass=config.mass or 1.0, sites=BRACKET_SITES, spacing=config.lattice_spacing)
        phis = [field_symbol(lat, n) for n in range(lat.site_count)]
        varpis = [momentum_symbol(lat, n) for n in range(lat.site_count)]
        worst = 0.0
        for n, phi in enumerate(phis):
            for m, varpi in enumerate(varpis):
                bracket = poisson_bracket(phi, varpi)
                if bracket.degree > 0:
                    return np.inf, f"{{phi_{n}, varpi_{m}}} is not constant"
                value = complex(bracket.coefficient((0,) * (2 * lat.mode_count)))
                expected = (1.0 if n == m else 0.0) / lat.cell_volume
                worst = max(worst, abs(value - expected))
        return worst

    suite.case("field_momentum_brackets", TRANSFORM_TOLERANCE, field_brackets)

    def functional_peak():
        lat = config.lattice()
        alpha = CoherentAmplitudes(alpha=rng.normal(size=lat.mode_count) + 1j * rng.normal(size=lat.mode_count))
        return abs(wigner_functional_coherent(alpha, field_from_amplitudes(alpha, lat), lat) - 1.0)

    suite.case("coherent_functional_peak", TRANSFORM_TOLERANCE, functional_peak)
    return suite.report()
