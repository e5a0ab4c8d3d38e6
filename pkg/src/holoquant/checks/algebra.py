"""Exact star-algebra identities on seeded random symbols."""

from fractions import Fraction

from ..algebra.coefficients import GaussianRational
from ..algebra.polysymbol import SOrder
from ..algebra.sampling import random_symbol
from ..algebra.star import moyal_star, normal_star, poisson_bracket, s_star, s_transform, star_commutator
from ..models.run import CheckReport, RunConfig
from .base import SuiteRun

TRIPLES = 200
PAIRS = 200
FAMILY_PAIRS = 50
MAX_MODES = 3
MAX_DEGREE = 4
MAX_TERMS = 3
ORDERS = (Fraction(-1), Fraction(-1, 2), Fraction(0), Fraction(1, 2), Fraction(1))


def run(config: RunConfig, progress: bool = False) -> CheckReport:
    suite = SuiteRun("algebra", config, progress)
    rng = suite.rng

    def symbols(count: int, modes: int):
        return [random_symbol(rng, modes, MAX_DEGREE, MAX_TERMS) for _ in range(count)]

    def associativity(product, label: str):
        failures = 0
        for _ in suite.iterate(TRIPLES, f"{label} associativity"):
            F, G, H = symbols(3, int(rng.integers(1, MAX_MODES + 1)))
            if product(product(F, G), H) != product(F, product(G, H)):
                failures += 1
        return float(failures), f"{failures} of {TRIPLES} triples differ"

    suite.case("moyal_associativity", 0.0, lambda: associativity(moyal_star, "moyal"))
    suite.case("normal_associativity", 0.0, lambda: associativity(normal_star, "normal"))

    def to_normal(X):
        return s_transform(X, SOrder.WEYL, SOrder.NORMAL)

    def c_equivalence():
        failures = 0
        for _ in suite.iterate(PAIRS, "c-equivalence"):
            F, G = symbols(2, int(rng.integers(1, MAX_MODES + 1)))
            intertwined = s_transform(normal_star(to_normal(F), to_normal(G)), SOrder.NORMAL, SOrder.WEYL)
            if intertwined != moyal_star(F, G):
                failures += 1
        return float(failures), f"{failures} of {PAIRS} pairs differ"

    suite.case("c_equivalence", 0.0, c_equivalence)

    def ordering_family():
        failures = 0
        for _ in suite.iterate(FAMILY_PAIRS, "ordering family"):
            F, G = symbols(2, int(rng.integers(1, MAX_MODES + 1)))
            s, t = (ORDERS[int(i)] for i in rng.integers(0, len(ORDERS), size=2))
            expected = s_star(F, G, t)
            got = s_transform(s_star(s_transform(F, t, s), s_transform(G, t, s), s), s, t)
            if got != expected:
                failures += 1
        return float(failures), f"{failures} of {FAMILY_PAIRS} pairs differ"

    suite.case("ordering_family_intertwining", 0.0, ordering_family)

    def conjugation():
        failures = 0
        for _ in suite.iterate(PAIRS, "conjugation"):
            F, G = symbols(2, int(rng.integers(1, MAX_MODES + 1)))
            if moyal_star(F, G).conjugate() != moyal_star(G.conjugate(), F.conjugate()):
                failures += 1
        return float(failures), f"{failures} of {PAIRS} pairs differ"

    suite.case("moyal_conjugation_antiautomorphism", 0.0, conjugation)

    def bracket_antisymmetry():
        failures = 0
        for _ in suite.iterate(PAIRS, "bracket antisymmetry"):
            F, G = symbols(2, int(rng.integers(1, MAX_MODES + 1)))
            if poisson_bracket(F, G) != -poisson_bracket(G, F):
                failures += 1
        return float(failures), f"{failures} of {PAIRS} pairs differ"

    suite.case("poisson_antisymmetry", 0.0, bracket_antisymmetry)

    def bracket_derivation():
        failures = 0
        for _ in suite.iterate(TRIPLES, "bracket derivation"):
            F, G, H = symbols(3, int(rng.integers(1, MAX_MODES + 1)))
            if poisson_bracket(F, G * H) != poisson_bracket(F, G) * H + G * poisson_bracket(F, H):
                failures += 1
        return float(failures), f"{failures} of {TRIPLES} triples differ"

    suite.case("poisson_derivation", 0.0, bracket_derivation)

    def quadratic_correspondence():
        failures = 0
        for _ in suite.iterate(PAIRS, "quadratic correspondence"):
            modes = int(rng.integers(1, MAX_MODES + 1))
            F, G = (random_symbol(rng, modes, 2, MAX_TERMS) for _ in range(2))
            if star_commutator(F, G) != poisson_bracket(F, G) * GaussianRational.i():
                failures += 1
        return float(failures), f"{failures} of {PAIRS} quadratic pairs differ"

    suite.case("quadratic_correspondence", 0.0, quadratic_correspondence)
    return suite.report()
