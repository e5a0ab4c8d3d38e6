"""Displaced-parity quasiprobabilities and the state specifications feeding them."""

import logging
from fractions import Fraction
from typing import Literal, Optional, Tuple

import numpy as np

from ..algebra.polysymbol import SOrder
from ..algebra.star import OrderLike
from ..exceptions import ContractError, DimensionError, UnsupportedOrderError
from ..fock.operators import coherent_state, default_cutoff, displacement, fock_state
from ..fock.symbols import displaced_parity_details, weighted_series
from ..models.amplitudes import CoherentAmplitudes
from ..models.fock import FockOp, FockTruncation
from ..models.states import (
    CoherentStateSpec,
    DensityStateSpec,
    FockStateSpec,
    StateSpec,
    SuperpositionSpec,
)

logger = logging.getLogger(__name__)

DENSITY_TOLERANCE = 1e-9
FOCK_MARGIN = 12
HERMITE_NODES = 40


# Densities
def validate_density(rho: FockOp, tolerance: float = DENSITY_TOLERANCE, check_positive: bool = True) -> FockOp:
    """Hermitian, unit trace and positive semidefinite within `tolerance`."""
    asymmetry = float(np.max(np.abs(rho.matrix - rho.matrix.conj().T)))
    if asymmetry > tolerance:
        raise ContractError(f"Density matrix is not Hermitian (max |rho - rho^dagger| = {asymmetry:.3g})")
    trace = rho.trace()
    if abs(trace - 1.0) > tolerance:
        raise ContractError(f"Density matrix has trace {trace.real:.12g}, expected 1")
    if check_positive:
        smallest = float(np.linalg.eigvalsh(0.5 * (rho.matrix + rho.matrix.conj().T))[0])
        if smallest < -tolerance:
            raise ContractError(f"Density matrix has negative eigenvalue {smallest:.3g}")
    return rho


def default_truncation(spec: StateSpec) -> FockTruncation:
    """Smallest truncation the default cutoff policy allows for this state."""
    if isinstance(spec, CoherentStateSpec):
        return FockTruncation(cutoffs=tuple(default_cutoff([a]) for a in spec.amplitudes.alpha))
    if isinstance(spec, FockStateSpec):
        return FockTruncation(cutoffs=tuple(n + FOCK_MARGIN for n in spec.occupations))
    if isinstance(spec, SuperpositionSpec):
        parts = [default_truncation(component).cutoffs for component in spec.components]
        return FockTruncation(cutoffs=tuple(max(c) for c in zip(*parts)))
    return spec.rho.truncation


def _pure_vector(spec, trunc: FockTruncation) -> np.ndarray:
    if isinstance(spec, CoherentStateSpec):
        state = coherent_state(trunc, spec.amplitudes)
        if state.tail > 0.0:
            logger.debug("Coherent state loses %.3g of its norm to the truncation", state.tail)
        return state.vector / state.norm
    if isinstance(spec, FockStateSpec):
        return fock_state(trunc, spec.occupations).vector
    if isinstance(spec, SuperpositionSpec):
        vector = np.zeros(trunc.dimension, dtype=complex)
        for weight, component in zip(spec.weights, spec.components):
            vector = vector + weight * _pure_vector(component, trunc)
        norm = float(np.linalg.norm(vector))
        if norm == 0.0:
            raise ContractError("Superposition vanishes inside the truncation")
        return vector / norm
    raise TypeError(f"Not a pure state specification: {type(spec).__name__}")


def state_density(spec: StateSpec, trunc: Optional[FockTruncation] = None) -> FockOp:
    """Density matrix of a state specification; pure states are renormalized inside the truncation."""
    if isinstance(spec, DensityStateSpec):
        if trunc is not None and trunc != spec.rho.truncation:
            raise DimensionError("Density matrix truncation differs from the requested one")
        return validate_density(spec.rho)
    trunc = trunc or default_truncation(spec)
    if spec.mode_count != trunc.mode_count:
        raise DimensionError(f"State has {spec.mode_count} mode(s), truncation has {trunc.mode_count}")
    vector = _pure_vector(spec, trunc)
    return validate_density(FockOp(truncation=trunc, matrix=np.outer(vector, vector.conj())))


def displace_density(rho: FockOp, beta) -> FockOp:
    """D(beta) rho D(beta)^dagger."""
    D = displacement(rho.truncation, beta)
    return D @ rho @ D.dagger()


# Distributions
def _check_series_input(rho: FockOp) -> None:
    validate_density(rho, check_positive=False)


def wigner_series(rho: FockOp, xi, warn: bool = True) -> float:
    """W(xi) = sum_n <n|Pi D(xi)^dagger rho D(xi)|n>; equals 1 at the peak of a coherent state."""
    _check_series_input(rho)
    result = displaced_parity_details(rho, xi, "direct", warn=warn)
    return float(result.value.real)


def wigner_coherent_closed_form(alpha, xi) -> float:
    """prod_j exp(-2 |alpha_j - xi_j|^2)."""
    alpha = CoherentAmplitudes.coerce(alpha).alpha
    xi = CoherentAmplitudes.coerce(xi).alpha
    if alpha.shape != xi.shape:
        raise DimensionError(f"Amplitude vectors differ in length: {alpha.size} vs {xi.size}")
    return float(np.exp(-2.0 * np.sum(np.abs(alpha - xi) ** 2)))


def series_ratio(s: Fraction) -> float:
    """r = (s + 1)/(s - 1); the s-ordered series weights occupation N by r^N."""
    return float((s + 1) / (s - 1))


def series_details(rho: FockOp, xi, s: Fraction, warn: bool = True) -> Tuple[float, float]:
    """Series value at xi and the top-level share of its displaced trace mass."""
    r = series_ratio(s)
    value, diagonal = weighted_series(rho, xi, lambda n: np.power(r, n), warn=warn)
    return float(value.real), diagonal.top_fraction


def _check_order(s: OrderLike) -> Fraction:
    s = SOrder(s).s
    if s > 0:
        raise UnsupportedOrderError(
            f"s = {s} > 0 has no regular distribution for these states; "
            "anti-normal ordering is available at symbol level only"
        )
    return s


def s_distribution(
    rho: FockOp,
    xi,
    s: OrderLike,
    method: Literal["series", "smoothing"] = "series",
    warn: bool = True,
) -> float:
    """
    s-ordered quasiprobability for s <= 0, normalized so coherent peaks equal 1.

    `series` evaluates tr{r^N D(xi)^dagger rho D(xi)} with r = (s+1)/(s-1); s = 0 is the
    Wigner series and s = -1 the Husimi value. `smoothing` convolves the Wigner value with
    a Gaussian of variance -s/2 per complex coordinate (single mode, Gauss-Hermite
    quadrature) and rescales by (1 - s). The density in the usual convention is
    (2 / (pi (1 - s)))^M times this value.
    """
    s = _check_order(s)
    _check_series_input(rho)
    if method == "series":
        return series_details(rho, xi, s, warn=warn)[0]
    if method != "smoothing":
        raise ValueError(f"Unknown method {method!r}")
    if rho.truncation.mode_count != 1:
        raise ContractError("Gaussian smoothing is implemented for single-mode states")
    xi = complex(CoherentAmplitudes.coerce(xi).alpha[0])
    if s == 0:
        return wigner_series(rho, xi, warn=warn)
    nodes, weights = np.polynomial.hermite.hermgauss(HERMITE_NODES)
    sigma = float(np.sqrt(-float(s) / 2.0))
    total = 0.0
    for x, wx in zip(nodes, weights):
        for y, wy in zip(nodes, weights):
            total += wx * wy * wigner_series(rho, xi + sigma * (x + 1j * y), warn=warn)
    return float((1.0 - float(s)) * total / np.pi)


def husimi_value(rho: FockOp, xi) -> float:
    """<xi|rho|xi>."""
    state = coherent_state(rho.truncation, CoherentAmplitudes.coerce(xi))
    return float(np.vdot(state.vector, rho.matrix @ state.vector).real)
