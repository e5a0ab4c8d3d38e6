"""Truncated Fock-space oracle: operators, states, quantization and symbols."""

from .operators import (
    annihilation,
    coherent_coefficients,
    coherent_overlap,
    coherent_state,
    completeness_quadrature,
    creation,
    default_cutoff,
    displaced_number_states,
    displacement,
    fock_state,
    ladder_matrix,
    number_operator,
    parity,
    summation_size,
    vacuum,
)
from .quantize import normal_quantize, s_quantize, weyl_quantize
from .symbols import (
    DisplacedDiagonal,
    ParitySum,
    displaced_diagonal,
    displaced_parity,
    displaced_parity_details,
    euler_weights,
    husimi_symbol,
    weighted_series,
    weyl_symbol,
)

__all__ = [
    # Operators and states
    "ladder_matrix",
    "annihilation",
    "creation",
    "number_operator",
    "parity",
    "displacement",
    "displaced_number_states",
    "summation_size",
    "coherent_coefficients",
    "coherent_state",
    "coherent_overlap",
    "vacuum",
    "fock_state",
    "default_cutoff",
    "completeness_quadrature",
    # Quantization
    "normal_quantize",
    "weyl_quantize",
    "s_quantize",
    # Symbols
    "DisplacedDiagonal",
    "ParitySum",
    "displaced_diagonal",
    "displaced_parity",
    "displaced_parity_details",
    "euler_weights",
    "weighted_series",
    "weyl_symbol",
    "husimi_symbol",
]
