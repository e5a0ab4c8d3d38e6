"""Shared fixtures and hypothesis strategies."""

from fractions import Fraction

import numpy as np
import pytest
from hypothesis import strategies as st

from holoquant.algebra import GaussianRational, PolySymbol
from holoquant.config import global_config
from holoquant.models import CoherentStateSpec, FockStateSpec, FockTruncation
from holoquant.quasiprob import state_density


# Hypothesis strategies
small_fractions = st.fractions(min_value=-4, max_value=4, max_denominator=4)
coefficients = st.builds(GaussianRational, small_fractions, small_fractions)


@st.composite
def symbols(draw, mode_count=None, max_degree=3, max_terms=3):
    """Small polynomial symbols with exact coefficients."""
    modes = mode_count or draw(st.integers(min_value=1, max_value=2))
    exponent = st.tuples(*[st.integers(min_value=0, max_value=max_degree)] * (2 * modes)).filter(
        lambda key: sum(key) <= max_degree
    )
    terms = draw(st.dictionaries(exponent, coefficients, max_size=max_terms))
    return PolySymbol(modes, terms)


@st.composite
def symbol_pairs(draw, max_degree=3):
    modes = draw(st.integers(min_value=1, max_value=2))
    return draw(symbols(modes, max_degree)), draw(symbols(modes, max_degree))


@st.composite
def symbol_triples(draw, max_degree=2):
    modes = draw(st.integers(min_value=1, max_value=2))
    return tuple(draw(symbols(modes, max_degree)) for _ in range(3))


orders = st.sampled_from([Fraction(-1), Fraction(-1, 2), Fraction(0), Fraction(1, 2), Fraction(1)])


# Fixtures
@pytest.fixture
def rng():
    return np.random.default_rng(7)


@pytest.fixture
def single_mode():
    """Single-mode truncation at the default run cutoff."""
    return FockTruncation.uniform(1, 40)


@pytest.fixture
def coherent_density(single_mode):
    def build(alpha):
        return state_density(CoherentStateSpec(amplitudes=alpha), single_mode)

    return build


@pytest.fixture
def number_density():
    def build(n, cutoff=None):
        trunc = FockTruncation.uniform(1, cutoff) if cutoff is not None else None
        return state_density(FockStateSpec(occupations=(n,)), trunc)

    return build


@pytest.fixture(autouse=True)
def restore_global_config():
    """Undo changes tests make to package-level tolerances."""
    saved = {name: getattr(global_config, name) for name in vars(type(global_config)) if not name.startswith("_")}
    yield
    for name, value in saved.items():
        setattr(global_config, name, value)
