"""Quantization maps from polynomial symbols to truncated operators."""

import logging
from functools import reduce
from typing import Dict, Tuple

import numpy as np

from ..algebra.polysymbol import PolySymbol, SOrder
from ..algebra.star import OrderLike, s_transform
from ..exceptions import DimensionError
from ..models.fock import FockOp, FockTruncation
from .operators import ladder_matrix

logger = logging.getLogger(__name__)


def normal_quantize(F: PolySymbol, trunc: FockTruncation) -> FockOp:
    """Map each monomial prod_j a*_j^m a_j^n to prod_j (a_j^dagger)^m (a_j)^n.

    On the truncated space the result is exactly P F P.
    """
    if F.mode_count != trunc.mode_count:
        raise DimensionError(
            f"Symbol has {F.mode_count} mode(s), truncation has {trunc.mode_count}"
        )
    cache: Dict[Tuple[int, int, int], np.ndarray] = {}

    def factor(mode: int, n_a: int, n_ad: int) -> np.ndarray:
        key = (mode, n_a, n_ad)
        if key not in cache:
            a = ladder_matrix(trunc.dims[mode])
            cache[key] = np.linalg.matrix_power(a.T, n_ad) @ np.linalg.matrix_power(a, n_a)
        return cache[key]

    matrix = np.zeros((trunc.dimension, trunc.dimension), dtype=complex)
    for exponents, coefficient in F:
        factors = [factor(j, exponents[2 * j], exponents[2 * j + 1]) for j in range(F.mode_count)]
        matrix += complex(coefficient) * reduce(np.kron, factors)
    return FockOp(truncation=trunc, matrix=matrix)


def s_quantize(F: PolySymbol, s: OrderLike, trunc: FockTruncation) -> FockOp:
    """Quantize an s-ordered symbol by converting it to its normal symbol first."""
    return normal_quantize(s_transform(F, s, SOrder.NORMAL), trunc)


def weyl_quantize(F: PolySymbol, trunc: FockTruncation) -> FockOp:
    return s_quantize(F, SOrder.WEYL, trunc)
