"""holoquant - phase-space quantization with exact symbols and a Fock-space oracle."""

import sys
import types

from .__version__ import __version__
from .algebra import GaussianRational, PolySymbol, SOrder, moyal_star, normal_star, s_star, s_transform
from .checks import run_suite
from .config import global_config
from .exceptions import (
    ConfigurationError,
    ContractError,
    CoverageWarning,
    DimensionError,
    FieldFileError,
    ParseError,
    SymbolError,
    TailDominanceWarning,
)
from .fock import displaced_parity, husimi_symbol, weyl_symbol
from .models import FockOp, FockTruncation, GridSpec, ModeLattice, RunConfig
from .parsing import format_symbol, parse_state, parse_symbol
from .quasiprob import s_distribution, wigner_grid, wigner_series
from .settings import ConfigResolver


# Module-level attribute access for global configuration
# Usage: import holoquant as hq; hq.tail_fraction = 1e-4
class _ConfigModule(types.ModuleType):
    """Module type that forwards tolerance attributes to global_config."""

    def __getattr__(self, name):
        if hasattr(global_config, name):
            return getattr(global_config, name)
        raise AttributeError(f"module '{self.__name__}' has no attribute '{name}'")

    def __setattr__(self, name, value):
        if not name.startswith("_") and hasattr(global_config, name):
            setattr(global_config, name, value)
            return
        super().__setattr__(name, value)


sys.modules[__name__].__class__ = _ConfigModule

__all__ = [
    "__version__",
    "global_config",

    # Symbol algebra
    "GaussianRational",
    "PolySymbol",
    "SOrder",
    "moyal_star",
    "normal_star",
    "s_star",
    "s_transform",

    # Surface syntax
    "parse_symbol",
    "format_symbol",
    "parse_state",

    # Fock-space oracle
    "FockTruncation",
    "FockOp",
    "displaced_parity",
    "weyl_symbol",
    "husimi_symbol",

    # Distributions and lattices
    "GridSpec",
    "ModeLattice",
    "wigner_series",
    "s_distribution",
    "wigner_grid",

    # Runs
    "RunConfig",
    "ConfigResolver",
    "run_suite",

    # Exception classes
    "ConfigurationError",
    "SymbolError",
    "DimensionError",
    "ParseError",
    "FieldFileError",
    "ContractError",
    "TailDominanceWarning",
    "CoverageWarning",
]
