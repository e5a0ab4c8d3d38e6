"""
Discretized mode expansion of a free scalar field.

On a periodic lattice with volume V = (L dx)^d the amplitudes are

    a_j = (dx^d / sqrt(V)) / sqrt(2 w_j) * sum_n exp(-i k_j . x_n) (w_j phi_n + i varpi_n)

and the field is rebuilt from

    phi_n   = V^(-1/2) sum_j (a_j e^{i k_j x_n} + a*_j e^{-i k_j x_n}) / sqrt(2 w_j)
    varpi_n = V^(-1/2) sum_j i sqrt(w_j / 2) (a*_j e^{-i k_j x_n} - a_j e^{i k_j x_n})

With the lattice brackets {phi_n, varpi_m} = delta_nm / dx^d this gives
{a_j, a*_l} = -i delta_jl and, for Q = (a + a*)/sqrt(2w), P = i sqrt(w/2)(a* - a),
{Q_j, P_l} = delta_jl.
"""

import logging

import numpy as np

from ..algebra.polysymbol import PolySymbol
from ..exceptions import DimensionError
from ..models.amplitudes import CoherentAmplitudes, PhasePoint
from ..models.lattice import CanonicalModes, FieldConfig, ModeLattice

logger = logging.getLogger(__name__)


def _check_field(cfg: FieldConfig, lat: ModeLattice) -> None:
    if cfg.site_count != lat.site_count:
        raise DimensionError(
            f"Field has {cfg.site_count} samples, lattice has {lat.site_count} sites"
        )


def _check_amplitudes(a: CoherentAmplitudes, lat: ModeLattice) -> None:
    if a.mode_count != lat.mode_count:
        raise DimensionError(f"{a.mode_count} amplitude(s) given for {lat.mode_count} lattice mode(s)")


def _weight(lat: ModeLattice) -> float:
    return lat.cell_volume / np.sqrt(lat.volume)


# Transforms
def amplitudes_from_field(cfg: FieldConfig, lat: ModeLattice) -> CoherentAmplitudes:
    _check_field(cfg, lat)
    omega = lat.omega
    sums = np.sum(lat.phases() * (omega[:, None] * cfg.phi[None, :] + 1j * cfg.varpi[None, :]), axis=1)
    a = _weight(lat) / np.sqrt(2.0 * omega) * sums
    return CoherentAmplitudes(alpha=a)


def field_from_amplitudes(a, lat: ModeLattice) -> FieldConfig:
    """Field samples from amplitudes, taking a*_j as the conjugate of a_j."""
    a = CoherentAmplitudes.coerce(a)
    _check_amplitudes(a, lat)
    omega = lat.omega
    E = lat.phases()  # exp(-i k x)
    scale = 1.0 / np.sqrt(lat.volume)
    phi = scale * ((a.alpha / np.sqrt(2.0 * omega)) @ E.conj() + (np.conj(a.alpha) / np.sqrt(2.0 * omega)) @ E)
    varpi = scale * 1j * (
        (np.sqrt(omega / 2.0) * np.conj(a.alpha)) @ E - (np.sqrt(omega / 2.0) * a.alpha) @ E.conj()
    )
    residue = max(float(np.max(np.abs(phi.imag))), float(np.max(np.abs(varpi.imag))))
    logger.debug("Field reconstruction imaginary residue %.3g", residue)
    return FieldConfig(phi=phi.real, varpi=varpi.real)


def qp_from_amplitudes(a, omega) -> CanonicalModes:
    """Q = (a + a*)/sqrt(2w), P = i sqrt(w/2)(a* - a)."""
    q, p = PhasePoint(z=CoherentAmplitudes.coerce(a).alpha).to_canonical(omega)
    return CanonicalModes(Q=q, P=p)


def amplitudes_from_qp(modes: CanonicalModes, omega) -> CoherentAmplitudes:
    return CoherentAmplitudes(alpha=PhasePoint.from_canonical(modes.Q, modes.P, omega).z)


def _qp_map(lat: ModeLattice) -> np.ndarray:
    """Real matrix of the linear map (phi, varpi) -> (Q, P), shape (2M, 2 L^d)."""
    c = _weight(lat)
    omega = lat.omega[:, None]
    angle = lat.k_vectors() @ lat.positions().T
    cos, sin = np.cos(angle), np.sin(angle)
    top = np.hstack([c * cos, c * sin / omega])
    bottom = np.hstack([-c * omega * sin, c * cos])
    return np.vstack([top, bottom])


def qp_from_field(cfg: FieldConfig, lat: ModeLattice) -> CanonicalModes:
    """
    Canonical pairs straight from the field through the cosine and sine quadratures:

        Q_j = c sum_n (phi_n cos(k_j x_n) + varpi_n sin(k_j x_n) / w_j)
        P_j = c sum_n (varpi_n cos(k_j x_n) - w_j phi_n sin(k_j x_n))

    with c = dx^d / sqrt(V).
    """
    _check_field(cfg, lat)
    qp = _qp_map(lat) @ np.concatenate([cfg.phi, cfg.varpi])
    M = lat.mode_count
    return CanonicalModes(Q=qp[:M], P=qp[M:])


# Symplectic structure
def symplectic_form(n: int) -> np.ndarray:
    """J = [[0, I], [-I, 0]] of size 2n."""
    identity = np.eye(n)
    zero = np.zeros((n, n))
    return np.block([[zero, identity], [-identity, zero]])


def symplectic_deviation(matrix: np.ndarray) -> float:
    """max |M^T J M - J| for a square 2n x 2n map."""
    matrix = np.asarray(matrix, dtype=float)
    rows, cols = matrix.shape
    if rows != cols or rows % 2:
        raise DimensionError(f"Symplectic maps are square with even size, got {matrix.shape}")
    J = symplectic_form(rows // 2)
    return float(np.max(np.abs(matrix.T @ J @ matrix - J)))


def lattice_bracket_matrix(lat: ModeLattice) -> np.ndarray:
    """Poisson brackets of (Q, P) under {phi_n, varpi_m} = delta_nm / dx^d."""
    A = _qp_map(lat)
    n = lat.site_count
    omega_lattice = symplectic_form(n) / lat.cell_volume
    return A @ omega_lattice @ A.T


def symplectic_check(lat: ModeLattice) -> float:
    """
    Deviation of the (Q, P) brackets from the canonical form J.

    When the selection covers every lattice mode, the map from the canonical site
    pairs (sqrt(dx^d) phi_n, sqrt(dx^d) varpi_n) is square and its own
    symplectic deviation is included.
    """
    M = lat.mode_count
    deviation = float(np.max(np.abs(lattice_bracket_matrix(lat) - symplectic_form(M))))
    if lat.covers_all_modes():
        square = _qp_map(lat) / np.sqrt(lat.cell_volume)
        deviation = max(deviation, symplectic_deviation(square))
    logger.debug("Symplectic deviation %.3g for L=%d, m=%g", deviation, lat.sites, lat.mass)
    return deviation


# Functionals
def wigner_functional_coherent(alpha, cfg: FieldConfig, lat: ModeLattice) -> float:
    """prod_j exp(-2 |z_j - alpha_j|^2) with z the amplitudes of `cfg`."""
    alpha = CoherentAmplitudes.coerce(alpha)
    _check_amplitudes(alpha, lat)
    z = amplitudes_from_field(cfg, lat)
    return float(np.exp(-2.0 * np.sum(np.abs(z.alpha - alpha.alpha) ** 2)))


def mode_energy(modes: CanonicalModes, lat: ModeLattice) -> float:
    """(1/2) sum_j (P_j^2 + w_j^2 Q_j^2)."""
    if modes.mode_count != lat.mode_count:
        raise DimensionError(f"{modes.mode_count} mode(s) given for {lat.mode_count} lattice mode(s)")
    return float(0.5 * np.sum(modes.P ** 2 + lat.omega ** 2 * modes.Q ** 2))


# Symbols
def field_symbol(lat: ModeLattice, site: int) -> PolySymbol:
    """phi(x_site) as a linear symbol in a_j, a*_j; coefficients are the exact values of the floats."""
    E = _site_phases(lat, site)
    weights = 1.0 / np.sqrt(2.0 * lat.omega * lat.volume)
    return _linear_symbol(lat, weights * E.conj(), weights * E)


def momentum_symbol(lat: ModeLattice, site: int) -> PolySymbol:
    E = _site_phases(lat, site)
    weights = np.sqrt(lat.omega / (2.0 * lat.volume))
    return _linear_symbol(lat, -1j * weights * E.conj(), 1j * weights * E)


def hamiltonian_symbol(lat: ModeLattice) -> PolySymbol:
    """H = sum_j w_j a*_j a_j."""
    M = lat.mode_count
    terms = {}
    for j, w in enumerate(lat.omega):
        exponents = [0] * (2 * M)
        exponents[2 * j] = exponents[2 * j + 1] = 1
        terms[tuple(exponents)] = float(w)
    return PolySymbol(M, terms)


def _site_phases(lat: ModeLattice, site: int) -> np.ndarray:
    if not 0 <= site < lat.site_count:
        raise DimensionError(f"Site {site} out of range for {lat.site_count} sites")
    return lat.phases()[:, site]


def _linear_symbol(lat: ModeLattice, on_a: np.ndarray, on_ad: np.ndarray) -> PolySymbol:
    M = lat.mode_count
    terms = {}
    for j in range(M):
        for slot, value in ((2 * j, on_a[j]), (2 * j + 1, on_ad[j])):
            exponents = [0] * (2 * M)
            exponents[slot] = 1
            terms[tuple(exponents)] = complex(value)
    return PolySymbol(M, terms)
