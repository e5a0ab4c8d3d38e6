"""Custom exceptions and warning categories for holoquant."""

from typing import Iterable, Optional


class ConfigurationError(Exception):
    """Base class for configuration-related errors."""
    pass


class ConfigFileError(ConfigurationError):
    """Config file unreadable, malformed, or carrying unknown keys."""
    pass


class TruncationLimitError(ConfigurationError):
    """Total Fock dimension exceeds the configured cap."""
    pass


# Symbol algebra exceptions
class SymbolError(Exception):
    """Base class for phase-space symbol errors."""
    pass


class DimensionError(SymbolError):
    """Mode counts, vector lengths or lattices do not match."""
    pass


class ParseError(SymbolError):
    """Symbol text could not be parsed.

    Carries the byte offset of the failure and the set of tokens that would
    have been accepted there.
    """

    def __init__(self, message: str, offset: int = 0, expected: Optional[Iterable[str]] = None):
        self.offset = offset
        self.expected = tuple(sorted(set(expected or ())))
        detail = f"{message} at offset {offset}"
        if self.expected:
            detail += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(detail)


class IndexOutOfRangeError(ParseError):
    """A variable names a mode beyond the declared mode count."""

    def __init__(self, variable: str, mode_count: int, offset: int = 0):
        self.variable = variable
        super().__init__(
            f"Variable '{variable}' is out of range for {mode_count} mode(s)", offset
        )


class ExponentError(ParseError):
    """Powers must be non-negative integers."""
    pass


class StateParseError(ParseError):
    """State mini-language text could not be parsed."""
    pass


class FieldFileError(Exception):
    """Malformed field configuration file."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


# Contract exceptions
class ContractError(Exception):
    """An operation's precondition or contract was violated."""
    pass


class UnsupportedOrderError(ContractError):
    """Ordering parameter not representable at distribution level."""
    pass


# Warning categories
class TailDominanceWarning(UserWarning):
    """Top occupation block carries too much of the displaced-parity mass."""
    pass


class CoverageWarning(UserWarning):
    """Evaluation grid does not cover the support of the state."""
    pass
