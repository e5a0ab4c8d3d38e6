"""Quasiprobability distributions of truncated states."""

from .grids import distribution_grid, husimi_grid, wigner_grid
from .wigner import (
    default_truncation,
    displace_density,
    husimi_value,
    s_distribution,
    series_details,
    state_density,
    validate_density,
    wigner_coherent_closed_form,
    wigner_series,
)

__all__ = [
    "state_density",
    "default_truncation",
    "validate_density",
    "displace_density",
    "wigner_series",
    "wigner_coherent_closed_form",
    "s_distribution",
    "series_details",
    "husimi_value",
    "distribution_grid",
    "wigner_grid",
    "husimi_grid",
]
