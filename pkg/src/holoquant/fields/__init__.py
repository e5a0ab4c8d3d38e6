"""Lattice scalar field: mode expansion, canonical variables and field files."""

from .io import field_frame, parse_field_csv, read_field_csv, write_field_csv
from .modes import (
    amplitudes_from_field,
    amplitudes_from_qp,
    field_from_amplitudes,
    field_symbol,
    hamiltonian_symbol,
    lattice_bracket_matrix,
    mode_energy,
    momentum_symbol,
    qp_from_amplitudes,
    qp_from_field,
    symplectic_check,
    symplectic_deviation,
    symplectic_form,
    wigner_functional_coherent,
)

__all__ = [
    # Transforms
    "amplitudes_from_field",
    "field_from_amplitudes",
    "qp_from_amplitudes",
    "amplitudes_from_qp",
    "qp_from_field",
    # Symplectic structure
    "symplectic_form",
    "symplectic_deviation",
    "lattice_bracket_matrix",
    "symplectic_check",
    # Functionals and symbols
    "wigner_functional_coherent",
    "mode_energy",
    "field_symbol",
    "momentum_symbol",
    "hamiltonian_symbol",
    # Files
    "parse_field_csv",
    "read_field_csv",
    "write_field_csv",
    "field_frame",
]
