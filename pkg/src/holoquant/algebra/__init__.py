"""Exact symbol algebra: polynomial symbols, star-products and ordering transforms."""

from ..models.amplitudes import PhasePoint
from .coefficients import GaussianRational, format_coefficient
from .polysymbol import PolySymbol, SOrder
from .sampling import random_symbol
from .star import (
    moyal_star,
    normal_from_weyl,
    normal_star,
    poisson_bracket,
    s_star,
    s_transform,
    star_commutator,
    weyl_from_normal,
)

__all__ = [
    # Values
    "GaussianRational",
    "PolySymbol",
    "SOrder",
    "PhasePoint",
    "format_coefficient",
    # Products and transforms
    "poisson_bracket",
    "moyal_star",
    "normal_star",
    "s_star",
    "star_commutator",
    "s_transform",
    "weyl_from_normal",
    "normal_from_weyl",
    # Sampling
    "random_symbol",
]
