"""Operators and states on a truncated multimode Fock space."""

import logging
import math
from functools import reduce
from typing import List, Optional, Sequence

import numpy as np
from scipy.linalg import expm
from scipy.special import gammaln

from ..exceptions import DimensionError
from ..models.amplitudes import CoherentAmplitudes
from ..models.fock import FockOp, FockState, FockTruncation

logger = logging.getLogger(__name__)


def _kron_all(factors: Sequence[np.ndarray]) -> np.ndarray:
    return reduce(np.kron, factors)


def _check_mode(trunc: FockTruncation, mode: int) -> None:
    if not 0 <= mode < trunc.mode_count:
        raise DimensionError(f"Mode {mode} out of range for {trunc.mode_count} mode(s)")


def _check_amplitudes(trunc: FockTruncation, amplitudes: CoherentAmplitudes) -> None:
    if amplitudes.mode_count != trunc.mode_count:
        raise DimensionError(
            f"{amplitudes.mode_count} amplitude(s) given for {trunc.mode_count} mode(s)"
        )


def ladder_matrix(dimension: int) -> np.ndarray:
    """Single-mode annihilator: <n-1|a|n> = sqrt(n)."""
    return np.diag(np.sqrt(np.arange(1, dimension, dtype=float)), k=1).astype(complex)


def _embed(trunc: FockTruncation, mode: int, local: np.ndarray) -> np.ndarray:
    factors = [np.eye(d, dtype=complex) for d in trunc.dims]
    factors[mode] = local
    return _kron_all(factors)


def annihilation(trunc: FockTruncation, mode: int = 0) -> FockOp:
    _check_mode(trunc, mode)
    return FockOp(truncation=trunc, matrix=_embed(trunc, mode, ladder_matrix(trunc.dims[mode])))


def creation(trunc: FockTruncation, mode: int = 0) -> FockOp:
    _check_mode(trunc, mode)
    return FockOp(truncation=trunc, matrix=_embed(trunc, mode, ladder_matrix(trunc.dims[mode]).T))


def number_operator(trunc: FockTruncation, mode: Optional[int] = None) -> FockOp:
    """Total number operator, or the occupation of one mode."""
    occupations = trunc.occupations()
    if mode is None:
        diagonal = occupations.sum(axis=1)
    else:
        _check_mode(trunc, mode)
        diagonal = occupations[:, mode]
    return FockOp(truncation=trunc, matrix=np.diag(diagonal.astype(complex)))


def parity(trunc: FockTruncation) -> FockOp:
    """(-1)^N with N the total occupation."""
    signs = np.where(trunc.total_occupation() % 2 == 0, 1.0, -1.0)
    return FockOp(truncation=trunc, matrix=np.diag(signs.astype(complex)))


def displacement(trunc: FockTruncation, xi) -> FockOp:
    """D(xi) = exp(sum_j xi_j a_j^dagger - conj(xi_j) a_j) on the truncated space.

    Each mode factor is the exponential of the truncated generator, so the result
    is exactly unitary; on low-occupation blocks it matches the untruncated operator.
    """
    xi = CoherentAmplitudes.coerce(xi)
    _check_amplitudes(trunc, xi)
    factors: List[np.ndarray] = []
    for value, dim in zip(xi.alpha, trunc.dims):
        if value == 0:
            factors.append(np.eye(dim, dtype=complex))
            continue
        a = ladder_matrix(dim)
        factors.append(expm(value * a.conj().T - np.conj(value) * a))
    return FockOp(truncation=trunc, matrix=_kron_all(factors))


def coherent_coefficients(alpha: complex, cutoff: int) -> np.ndarray:
    """<n|alpha> = exp(-|alpha|^2/2) alpha^n / sqrt(n!) for n = 0..cutoff."""
    n = np.arange(cutoff + 1)
    if alpha == 0:
        coefficients = np.zeros(cutoff + 1, dtype=complex)
        coefficients[0] = 1.0
        return coefficients
    magnitude = np.exp(-abs(alpha) ** 2 / 2 + n * np.log(abs(alpha)) - 0.5 * gammaln(n + 1))
    return magnitude * np.exp(1j * n * np.angle(alpha))


def displaced_number_states(xi: complex, rows: int, size: int) -> np.ndarray:
    """<m|D(xi)|n> for m < rows and n < size.

    Row m is the conjugate of D(-xi)|m> = (a^dagger + conj(xi))^m |-xi> / sqrt(m!),
    built by the ladder recurrence from the analytic coherent expansion. Entries
    near n = size are only accurate when `size` exceeds the support of D(-xi)|m>.
    """
    out = np.empty((rows, size), dtype=complex)
    v = coherent_coefficients(-xi, size - 1)
    out[0] = v.conj()
    sqrt_n = np.sqrt(np.arange(1, size))
    for m in range(1, rows):
        raised = np.zeros(size, dtype=complex)
        raised[1:] = sqrt_n * v[:-1]
        v = (raised + np.conj(xi) * v) / np.sqrt(m)
        out[m] = v.conj()
    return out


def summation_size(xi: complex, cutoff: int) -> int:
    """Occupation range covering D(xi)^dagger applied to levels up to `cutoff`."""
    r = abs(xi)
    return cutoff + 1 + int(math.ceil(8.0 * r * r + 4.0 * r * math.sqrt(cutoff + 1) + 30.0))


def coherent_state(trunc: FockTruncation, alpha) -> FockState:
    """Product coherent state from the analytic expansion; `tail` is the norm lost to truncation."""
    alpha = CoherentAmplitudes.coerce(alpha)
    _check_amplitudes(trunc, alpha)
    per_mode = [coherent_coefficients(value, cutoff) for value, cutoff in zip(alpha.alpha, trunc.cutoffs)]
    kept = float(np.prod([np.sum(np.abs(c) ** 2) for c in per_mode]))
    return FockState(truncation=trunc, vector=_kron_all(per_mode), tail=max(0.0, 1.0 - kept))


def vacuum(trunc: FockTruncation) -> FockState:
    return fock_state(trunc, (0,) * trunc.mode_count)


def fock_state(trunc: FockTruncation, occupations: Sequence[int]) -> FockState:
    vector = np.zeros(trunc.dimension, dtype=complex)
    vector[trunc.index_of(occupations)] = 1.0
    return FockState(truncation=trunc, vector=vector)


def coherent_overlap(beta, alpha) -> complex:
    """<beta|alpha> = exp((<beta,alpha> - <alpha,beta>)/2) exp(-||beta - alpha||^2 / 2)."""
    beta = CoherentAmplitudes.coerce(beta).alpha
    alpha = CoherentAmplitudes.coerce(alpha).alpha
    if beta.shape != alpha.shape:
        raise DimensionError(f"Amplitude vectors differ in length: {beta.size} vs {alpha.size}")
    inner = np.vdot(beta, alpha)
    return complex(np.exp((inner - np.conj(inner)) / 2) * np.exp(-np.sum(np.abs(beta - alpha) ** 2) / 2))


def default_cutoff(amplitudes) -> int:
    """Per-mode cutoff ceil(8 max|alpha|^2 + 30); Poisson tails beyond it are below 1e-10."""
    if isinstance(amplitudes, CoherentAmplitudes):
        values = amplitudes.alpha
    else:
        values = np.atleast_1d(np.asarray(amplitudes, dtype=complex))
    return int(math.ceil(8.0 * float(np.max(np.abs(values)) ** 2) + 30.0))


def completeness_quadrature(
    trunc: FockTruncation, radius: float = 6.0, n_radial: int = 200, n_angular: int = 200
) -> FockOp:
    """(1/pi) * integral of |alpha><alpha| over |alpha| <= radius on a polar grid.

    Gauss-Legendre nodes in the radius, uniform nodes in the angle. Single mode only.
    """
    if trunc.mode_count != 1:
        raise DimensionError("The completeness quadrature is defined for a single mode")
    nodes, weights = np.polynomial.legendre.leggauss(n_radial)
    r = 0.5 * radius * (nodes + 1.0)
    w_r = 0.5 * radius * weights
    theta = 2.0 * np.pi * np.arange(n_angular) / n_angular
    w_theta = 2.0 * np.pi / n_angular

    cutoff = trunc.cutoffs[0]
    n = np.arange(cutoff + 1)
    # <n|alpha> on the polar grid, shape (n_radial * n_angular, cutoff + 1)
    log_radial = -0.5 * r[:, None] ** 2 + n[None, :] * np.log(r[:, None]) - 0.5 * gammaln(n + 1)[None, :]
    radial = np.exp(log_radial)
    angular = np.exp(1j * theta[:, None] * n[None, :])
    vectors = (radial[:, None, :] * angular[None, :, :]).reshape(-1, cutoff + 1)
    point_weights = (np.repeat(w_r * r, n_angular) * w_theta) / np.pi

    matrix = vectors.T @ (point_weights[:, None] * vectors.conj())
    logger.debug("Completeness quadrature with %d nodes, radius %.3g", point_weights.size, radius)
    return FockOp(truncation=trunc, matrix=matrix)
