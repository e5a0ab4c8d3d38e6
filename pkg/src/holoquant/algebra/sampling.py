"""Seeded random symbols for property suites."""

from fractions import Fraction

import numpy as np

from .coefficients import GaussianRational
from .polysymbol import PolySymbol


def _small_rational(rng: np.random.Generator) -> Fraction:
    return Fraction(int(rng.integers(-4, 5)), int(rng.integers(1, 4)))


def random_symbol(
    rng: np.random.Generator,
    mode_count: int,
    max_degree: int = 4,
    max_terms: int = 4,
    real_only: bool = False,
) -> PolySymbol:
    """Draw a symbol with at most max_terms terms of total degree <= max_degree.

    Coefficients are small complex rationals; about half of them are real.
    """
    if max_degree < 0 or max_terms < 1:
        raise ValueError("max_degree must be >= 0 and max_terms >= 1")
    width = 2 * mode_count
    terms = []
    for _ in range(int(rng.integers(1, max_terms + 1))):
        degree = int(rng.integers(0, max_degree + 1))
        exponents = rng.multinomial(degree, [1.0 / width] * width)
        re = _small_rational(rng)
        im = Fraction(0) if real_only or rng.random() < 0.5 else _small_rational(rng)
        terms.append((exponents.tolist(), GaussianRational(re, im)))
    return PolySymbol(mode_count, terms)
