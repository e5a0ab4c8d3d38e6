"""Poisson bracket, star-products and s-ordered symbol transforms.

All star-products here are bidifferential exponentials

    F * G = exp{ sum_j ( c_left <d_{a_j} d_{a*_j}> + c_right <d_{a*_j} d_{a_j}> ) } F G

where the left derivative acts on F and the right one on G. Because symbols are
polynomials the series terminates, so every result is exact.
"""

import itertools
import logging
from fractions import Fraction
from math import comb, factorial
from typing import Dict, List, Tuple, Union

from .coefficients import GaussianRational
from .polysymbol import Exponents, PolySymbol, SOrder

logger = logging.getLogger(__name__)

OrderLike = Union[SOrder, int, Fraction, str]


def _check_modes(F: PolySymbol, G: PolySymbol) -> None:
    # Mixing symbols of different mode counts raises DimensionError.
    F._coerce(G)


def poisson_bracket(F: PolySymbol, G: PolySymbol) -> PolySymbol:
    """{F, G} = -i sum_j (dF/da_j dG/da*_j - dF/da*_j dG/da_j)."""
    _check_modes(F, G)
    total = PolySymbol.zero(F.mode_count)
    for j in range(F.mode_count):
        total = total + F.derivative(j) * G.derivative(j, conjugate=True)
        total = total - F.derivative(j, conjugate=True) * G.derivative(j)
    return total * GaussianRational(0, -1)


def _mode_expansion(
    left: Tuple[int, int], right: Tuple[int, int], c_left: Fraction, c_right: Fraction
) -> List[Tuple[Fraction, int]]:
    """Single-mode bidifferential series for monomials a^fa a*^fad and a^ga a*^gad.

    Returns (coefficient, order) pairs; the product monomial for order k is
    a^(fa+ga-k) a*^(fad+gad-k).
    """
    fa, fad = left
    ga, gad = right
    collected: Dict[int, Fraction] = {}
    for p in range(min(fa, gad) + 1):
        weight_p = c_left ** p * comb(fa, p) * comb(gad, p) * factorial(p) if p else Fraction(1)
        if not weight_p:
            continue
        for q in range(min(fad, ga) + 1):
            weight_q = c_right ** q * comb(fad, q) * comb(ga, q) * factorial(q) if q else Fraction(1)
            if not weight_q:
                continue
            collected[p + q] = collected.get(p + q, Fraction(0)) + weight_p * weight_q
    return [(value, order) for order, value in collected.items() if value]


def _bidifferential_product(
    F: PolySymbol, G: PolySymbol, c_left: Fraction, c_right: Fraction
) -> PolySymbol:
    _check_modes(F, G)
    modes = F.mode_count
    result: Dict[Exponents, GaussianRational] = {}
    for f_key, f_value in F:
        for g_key, g_value in G:
            per_mode = [
                _mode_expansion(
                    (f_key[2 * j], f_key[2 * j + 1]),
                    (g_key[2 * j], g_key[2 * j + 1]),
                    c_left,
                    c_right,
                )
                for j in range(modes)
            ]
            base = f_value * g_value
            for choice in itertools.product(*per_mode):
                weight = Fraction(1)
                key: List[int] = []
                for j, (value, order) in enumerate(choice):
                    weight *= value
                    key.append(f_key[2 * j] + g_key[2 * j] - order)
                    key.append(f_key[2 * j + 1] + g_key[2 * j + 1] - order)
                key_t = tuple(key)
                result[key_t] = result.get(key_t, GaussianRational()) + base * weight
    return PolySymbol(modes, result)


def s_star(F: PolySymbol, G: PolySymbol, s: OrderLike) -> PolySymbol:
    """s-ordered star-product; -1 normal, 0 Moyal, +1 anti-normal."""
    s = SOrder(s).s
    return _bidifferential_product(F, G, (1 - s) / 2, -(1 + s) / 2)


def moyal_star(F: PolySymbol, G: PolySymbol) -> PolySymbol:
    """Moyal product exp{(1/2) sum_j (<d_a d_a*> - <d_a* d_a>)}."""
    return _bidifferential_product(F, G, Fraction(1, 2), Fraction(-1, 2))


def normal_star(F: PolySymbol, G: PolySymbol) -> PolySymbol:
    """Normal product exp{sum_j <d_a d_a*>}."""
    return _bidifferential_product(F, G, Fraction(1), Fraction(0))


def star_commutator(F: PolySymbol, G: PolySymbol) -> PolySymbol:
    return moyal_star(F, G) - moyal_star(G, F)


def s_transform(F: PolySymbol, s_from: OrderLike, s_to: OrderLike) -> PolySymbol:
    """Re-express an s-ordered symbol in s'-ordering.

    F_{s'} = exp{((s - s')/2) sum_j d_{a_j} d_{a*_j}} F_s
    """
    s_from, s_to = SOrder(s_from).s, SOrder(s_to).s
    if s_from == s_to:
        return F
    t = (s_from - s_to) / 2
    modes = F.mode_count
    result: Dict[Exponents, GaussianRational] = {}
    for key, value in F:
        per_mode = []
        for j in range(modes):
            ea, ead = key[2 * j], key[2 * j + 1]
            per_mode.append(
                [
                    (t ** k * comb(ea, k) * comb(ead, k) * factorial(k), k)
                    for k in range(min(ea, ead) + 1)
                ]
            )
        for choice in itertools.product(*per_mode):
            weight = Fraction(1)
            lowered: List[int] = []
            for j, (factor, k) in enumerate(choice):
                weight *= factor
                lowered.extend((key[2 * j] - k, key[2 * j + 1] - k))
            lowered_t = tuple(lowered)
            result[lowered_t] = result.get(lowered_t, GaussianRational()) + value * weight
    logger.debug("s_transform %s -> %s: %d -> %d terms", s_from, s_to, len(F), len(result))
    return PolySymbol(modes, result)


def weyl_from_normal(F: PolySymbol) -> PolySymbol:
    return s_transform(F, SOrder.NORMAL, SOrder.WEYL)


def normal_from_weyl(F: PolySymbol) -> PolySymbol:
    return s_transform(F, SOrder.WEYL, SOrder.NORMAL)
