"""Global numeric configuration for holoquant."""


class GlobalConfig:
    """Package-level configuration storage."""

    # Comparison tolerances
    closed_form_tolerance: float = 1e-8
    quantization_tolerance: float = 1e-6

    # Displaced-parity summation
    tail_fraction: float = 1e-6
    top_edge: int = 4
    leak_tolerance: float = 1e-8

    # Dense Fock spaces
    max_dimension: int = 20_000

    # Grids
    coverage_tolerance: float = 2e-2


# Global instance for package-level configuration
global_config = GlobalConfig()
