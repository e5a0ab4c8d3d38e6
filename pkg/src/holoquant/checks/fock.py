"""Truncated Fock-space oracles against exact symbol algebra and closed forms."""

import numpy as np

from ..algebra.sampling import random_symbol
from ..algebra.star import moyal_star
from ..fock.operators import (
    coherent_overlap,
    coherent_state,
    completeness_quadrature,
    default_cutoff,
    displacement,
    vacuum,
)
from ..fock.quantize import normal_quantize, weyl_quantize
from ..fock.symbols import husimi_symbol, weyl_symbol
from ..models.fock import FockOp, FockTruncation
from ..models.run import CheckReport, RunConfig
from .base import SuiteRun, random_point

SYMBOL_PAIRS = 50
POINTS = 20
DISPLACEMENT_PAIRS = 20
COMPLETENESS_CUTOFF = 10
COMPLETENESS_TOLERANCE = 1e-3
OVERLAP_TOLERANCE = 1e-10


def _deviation(got: complex, expected: complex) -> float:
    return float(abs(got - expected))


def run(config: RunConfig, progress: bool = False) -> CheckReport:
    suite = SuiteRun("fock", config, progress)
    rng = suite.rng
    trunc = config.truncation(1)
    radius = 2.0 * config.amplitude
    pairs = [
        (random_symbol(rng, 1, max_degree=3, max_terms=3), random_symbol(rng, 1, max_degree=3, max_terms=3))
        for _ in range(SYMBOL_PAIRS)
    ]
    points = [random_point(rng, radius) for _ in range(POINTS)]

    def quantization_oracle():
        worst = 0.0
        for F, G in suite.iterate(pairs, "quantization oracle"):
            product = weyl_quantize(F, trunc) @ weyl_quantize(G, trunc)
            symbol = moyal_star(F, G)
            for z in points:
                value = weyl_symbol(product, z, "regularized")
                worst = max(worst, _deviation(value, symbol.evaluate([z])))
        return worst

    suite.case("quantization_oracle", config.quantization_tolerance, quantization_oracle)

    def husimi_identity():
        worst = 0.0
        for F, _ in suite.iterate(pairs, "husimi identity"):
            op = normal_quantize(F, trunc)
            for z in points:
                worst = max(worst, _deviation(husimi_symbol(op, z), F.evaluate([z])))
        return worst

    suite.case("husimi_identity", config.closed_form_tolerance, husimi_identity)

    def displacement_composition():
        worst = 0.0
        for _ in suite.iterate(DISPLACEMENT_PAIRS, "displacement composition"):
            alpha = random_point(rng, 1.5 * config.amplitude)
            beta = random_point(rng, 1.5 * config.amplitude)
            # Compose on a padded space, compare on the configured levels
            padded = FockTruncation.uniform(1, max(trunc.cutoffs[0], default_cutoff([abs(alpha) + abs(beta)])))
            ground = vacuum(padded).vector
            composed = (displacement(padded, alpha) @ displacement(padded, beta)).matrix @ ground
            composed = composed[: trunc.dimension]
            phase = np.exp((alpha * np.conj(beta) - np.conj(alpha) * beta) / 2)
            direct = phase * coherent_state(trunc, alpha + beta).vector
            worst = max(worst, float(np.linalg.norm(composed - direct)))
        return worst

    suite.case("displacement_composition", config.closed_form_tolerance, displacement_composition)

    def completeness():
        block = FockTruncation.uniform(1, COMPLETENESS_CUTOFF)
        resolved = completeness_quadrature(block)
        return float(np.max(np.abs(resolved.matrix - np.eye(block.dimension))))

    suite.case("completeness_quadrature", COMPLETENESS_TOLERANCE, completeness)

    def overlaps():
        worst = 0.0
        for _ in range(DISPLACEMENT_PAIRS):
            alpha = random_point(rng, 1.5 * config.amplitude)
            beta = random_point(rng, 1.5 * config.amplitude)
            numeric = np.vdot(coherent_state(trunc, beta).vector, coherent_state(trunc, alpha).vector)
            worst = max(worst, abs(numeric - coherent_overlap(beta, alpha)))
        return worst

    suite.case("coherent_overlap", OVERLAP_TOLERANCE, overlaps)

    def identity_symbol():
        identity = FockOp.identity(trunc)
        return max(abs(weyl_symbol(identity, z, "regularized") - 1.0) for z in points)

    suite.case("identity_weyl_symbol", config.closed_form_tolerance, identity_symbol)
    return suite.report()
