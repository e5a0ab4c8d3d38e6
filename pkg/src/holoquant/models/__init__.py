"""Data models shared across holoquant."""

# Amplitude vectors
from .amplitudes import CoherentAmplitudes, PhasePoint

# Fock-space models
from .fock import FockOp, FockState, FockTruncation

# Grid models
from .grids import GridSpec, PhaseGrid

# Lattice models
from .lattice import CanonicalModes, FieldConfig, ModeLattice

# Run configuration and reports
from .run import CheckCase, CheckReport, RunConfig

# State specifications
from .states import (
    CoherentStateSpec,
    DensityStateSpec,
    FockStateSpec,
    StateSpec,
    SuperpositionSpec,
    vacuum_spec,
)

__all__ = [
    # Amplitude vectors
    "CoherentAmplitudes",
    "PhasePoint",

    # Fock-space models
    "FockTruncation",
    "FockOp",
    "FockState",

    # Grid models
    "GridSpec",
    "PhaseGrid",

    # Lattice models
    "ModeLattice",
    "FieldConfig",
    "CanonicalModes",

    # Run configuration and reports
    "RunConfig",
    "CheckCase",
    "CheckReport",

    # State specifications
    "StateSpec",
    "CoherentStateSpec",
    "FockStateSpec",
    "SuperpositionSpec",
    "DensityStateSpec",
    "vacuum_spec",
]
