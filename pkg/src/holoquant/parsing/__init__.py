"""Surface syntax for symbols and states."""

from .state_parser import parse_state
from .symbol_parser import (
    GRAMMAR_VERSION,
    SymbolExpr,
    format_symbol,
    iter_nodes,
    lower,
    mode_span,
    parse_expr,
    parse_symbol,
)

__all__ = [
    "GRAMMAR_VERSION",
    "SymbolExpr",
    "parse_expr",
    "parse_symbol",
    "lower",
    "iter_nodes",
    "mode_span",
    "format_symbol",
    "parse_state",
]
