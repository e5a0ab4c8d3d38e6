"""Phase-space symbols of truncated operators: displaced parity, Weyl and Husimi values."""

import logging
import string
import warnings
from dataclasses import dataclass
from functools import reduce
from typing import Callable, List, Literal, Optional, Sequence, Tuple

import numpy as np
from scipy.stats import binom

from ..config import global_config
from ..exceptions import DimensionError, TailDominanceWarning
from ..models.amplitudes import CoherentAmplitudes
from ..models.fock import FockOp
from .operators import coherent_state, displaced_number_states, summation_size

logger = logging.getLogger(__name__)

Summation = Literal["direct", "regularized", "auto"]


@dataclass(frozen=True)
class DisplacedDiagonal:
    """f(n) = <n|D(z)^dagger A D(z)|n> on an occupation range padded beyond the truncation."""

    values: np.ndarray
    columns: Tuple[np.ndarray, ...]
    top_fraction: float


@dataclass(frozen=True)
class ParitySum:
    """Value of tr{Pi D(z)^dagger A D(z)} plus how it was obtained."""

    value: complex
    regime: str
    top_fraction: float
    trusted: Tuple[int, ...]


def _as_point(op: FockOp, z) -> CoherentAmplitudes:
    z = CoherentAmplitudes.coerce(z)
    if z.mode_count != op.truncation.mode_count:
        raise DimensionError(
            f"Phase point has {z.mode_count} mode(s), operator has {op.truncation.mode_count}"
        )
    return z


def _edges(dims: Tuple[int, ...], edge: int) -> Tuple[int, ...]:
    """Top-block width per mode, at most a quarter of the mode's levels."""
    return tuple(max(1, min(edge, dim // 4)) for dim in dims)


def _top_mask(dims: Tuple[int, ...], edge: int) -> np.ndarray:
    """Basis states with some mode in its top levels."""
    occupations = np.indices(dims).reshape(len(dims), -1)
    cutoffs = np.array(dims).reshape(-1, 1) - 1
    widths = np.array(_edges(dims, edge)).reshape(-1, 1)
    return np.any(occupations > cutoffs - widths, axis=0)


def _contract_modes(matrix: np.ndarray, dims: Tuple[int, ...], columns: Sequence[np.ndarray]) -> np.ndarray:
    """sum_ij conj(D_in) A_ij D_jn per occupation tuple n, contracting one mode at a time."""
    letters = string.ascii_letters
    count = len(dims)
    tensor = matrix.reshape(tuple(dims) + tuple(dims))
    for done, block in enumerate(columns):
        rest = count - done - 1
        bra, ket = letters[0], letters[1]
        bra_rest = letters[2 : 2 + rest]
        ket_rest = letters[2 + rest : 2 + 2 * rest]
        finished = letters[2 + 2 * rest : 2 + 2 * rest + done]
        n = letters[2 + 2 * rest + done]
        spec = f"{bra}{bra_rest}{ket}{ket_rest}{finished},{ket}{n},{bra}{n}->{bra_rest}{ket_rest}{finished}{n}"
        tensor = np.einsum(spec, tensor, block, block.conj(), optimize=True)
    return tensor


def displaced_diagonal(op: FockOp, z, edge: Optional[int] = None) -> DisplacedDiagonal:
    """
    Displaced diagonal of a truncated operator.

    The occupation range is padded per mode so that f(n) is negligible beyond it
    whenever the operator itself decays inside its truncation. `top_fraction` is
    the share of sum |f| contributed by matrix entries in the operator's top
    `edge` levels.
    """
    edge = global_config.top_edge if edge is None else edge
    z = _as_point(op, z)
    trunc = op.truncation
    columns = tuple(
        displaced_number_states(value, dim, summation_size(value, cutoff))
        for value, dim, cutoff in zip(z.alpha, trunc.dims, trunc.cutoffs)
    )
    values = _contract_modes(op.matrix, trunc.dims, columns)

    mask = _top_mask(trunc.dims, edge)
    top = np.where(mask[:, None] | mask[None, :], op.matrix, 0.0)
    total = float(np.abs(values).sum())
    fraction = 0.0
    if total > 0.0 and np.any(top):
        fraction = float(np.abs(_contract_modes(top, trunc.dims, columns)).sum() / total)
    return DisplacedDiagonal(values=values, columns=columns, top_fraction=fraction)


def _warn_tail(message: str) -> None:
    logger.warning(message)
    warnings.warn(message, TailDominanceWarning, stacklevel=4)


def _check_tail(
    op: FockOp, diagonal: DisplacedDiagonal, tail_fraction: float, edge: int, action: str = ""
) -> None:
    if diagonal.top_fraction > tail_fraction:
        widths = _edges(op.truncation.dims, edge)
        _warn_tail(
            f"Top {widths} occupation level(s) carry {diagonal.top_fraction:.3g} of the displaced "
            f"trace mass (limit {tail_fraction:.3g}); cutoffs {op.truncation.cutoffs} are too small{action}"
        )


def _parity_signs(shape: Tuple[int, ...]) -> np.ndarray:
    return np.where(np.indices(shape).sum(axis=0) % 2 == 0, 1.0, -1.0)


def weighted_series(
    op: FockOp,
    z,
    weight: Callable[[np.ndarray], np.ndarray],
    tail_fraction: Optional[float] = None,
    edge: Optional[int] = None,
    warn: bool = True,
) -> Tuple[complex, DisplacedDiagonal]:
    """sum_n w(n_0 + n_1 + ...) f(n) over the padded range, warning on tail dominance."""
    tail_fraction = global_config.tail_fraction if tail_fraction is None else tail_fraction
    edge = global_config.top_edge if edge is None else edge
    diagonal = displaced_diagonal(op, z, edge)
    if warn:
        _check_tail(op, diagonal, tail_fraction, edge)
    total = np.indices(diagonal.values.shape).sum(axis=0)
    return complex(np.sum(weight(total) * diagonal.values)), diagonal


def euler_weights(k: int) -> np.ndarray:
    """(-1)^n P(Binomial(k+1, 1/2) > n) for n = 0..k; sums polynomials of degree <= k exactly."""
    n = np.arange(k + 1)
    return np.where(n % 2 == 0, 1.0, -1.0) * binom.sf(n, k + 1, 0.5)


def _trusted_range(op: FockOp, columns: Sequence[np.ndarray], edge: int, tolerance: float) -> Tuple[int, ...]:
    """Largest K_j per mode such that D|n> for n <= K_j barely reaches the operator's top levels."""
    trunc = op.truncation
    mask = _top_mask(trunc.dims, edge)
    top_norm = float(np.linalg.norm(op.matrix[mask, :]) + np.linalg.norm(op.matrix[:, mask]))
    trusted: List[int] = []
    for block, cutoff, width in zip(columns, trunc.cutoffs, _edges(trunc.dims, edge)):
        low = max(cutoff - width + 1, 0)
        # D|n> is a unit vector; whatever is not in rows below the top block leaks.
        leak = np.clip(1.0 - np.sum(np.abs(block[:low, :]) ** 2, axis=0), 0.0, None)
        limit = max(cutoff - width, 0)
        k = 0
        while k < limit and leak[k + 1] * top_norm <= tolerance:
            k += 1
        trusted.append(k)
    return tuple(trusted)


def displaced_parity_details(
    op: FockOp,
    z,
    summation: Summation = "auto",
    tail_fraction: Optional[float] = None,
    edge: Optional[int] = None,
    leak_tolerance: Optional[float] = None,
    warn: bool = True,
) -> ParitySum:
    """
    Evaluate tr{Pi D(z)^dagger A D(z)} for a truncated operator A.

    Regimes:
        direct       alternating sum of f(n) over the padded occupation range
        regularized  Euler weights on the trusted occupation range; exact when f
                     is polynomial in n of degree <= K_j per mode, as for
                     quantized polynomial symbols
        auto         direct unless the operator's top levels carry more than
                     `tail_fraction` of the displaced trace mass; otherwise
                     it warns and falls back to the regularized sum
    """
    if summation not in ("direct", "regularized", "auto"):
        raise ValueError(f"Unknown summation regime {summation!r}")
    tail_fraction = global_config.tail_fraction if tail_fraction is None else tail_fraction
    edge = global_config.top_edge if edge is None else edge
    leak_tolerance = global_config.leak_tolerance if leak_tolerance is None else leak_tolerance

    z = _as_point(op, z)
    diagonal = displaced_diagonal(op, z, edge)
    if summation == "direct" or (summation == "auto" and diagonal.top_fraction <= tail_fraction):
        if warn:
            _check_tail(op, diagonal, tail_fraction, edge)
        value = complex(np.sum(_parity_signs(diagonal.values.shape) * diagonal.values))
        logger.debug("Direct parity sum, top fraction %.3g", diagonal.top_fraction)
        return ParitySum(value, "direct", diagonal.top_fraction, diagonal.values.shape)

    if warn and summation == "auto":
        _check_tail(op, diagonal, tail_fraction, edge, "; falling back to regularized summation")
    trusted = _trusted_range(op, diagonal.columns, edge, leak_tolerance)
    if warn and any(k == 0 < c for k, c in zip(trusted, op.truncation.cutoffs)):
        _warn_tail(
            f"No trusted occupation range beyond n = 0 at cutoffs {op.truncation.cutoffs}; "
            "increase the cutoff for this displacement"
        )
    weights = reduce(np.multiply.outer, [euler_weights(k) for k in trusted])
    window = diagonal.values[tuple(slice(0, k + 1) for k in trusted)]
    value = complex(np.sum(np.reshape(weights, window.shape) * window))
    logger.debug("Regularized parity sum on trusted range %s", trusted)
    return ParitySum(value, "regularized", diagonal.top_fraction, trusted)


def displaced_parity(op: FockOp, z, summation: Summation = "auto", **kwargs) -> complex:
    return displaced_parity_details(op, z, summation, **kwargs).value


def weyl_symbol(op: FockOp, z, summation: Summation = "auto", **kwargs) -> complex:
    """Weyl symbol 2^M tr{Pi D(z)^dagger A D(z)}, normalized so the identity maps to 1."""
    return 2 ** op.truncation.mode_count * displaced_parity(op, z, summation, **kwargs)


def husimi_symbol(op: FockOp, z) -> complex:
    """<z|A|z>, the normal symbol of A at z."""
    z = _as_point(op, z)
    state = coherent_state(op.truncation, z)
    return complex(np.vdot(state.vector, op.matrix @ state.vector))
