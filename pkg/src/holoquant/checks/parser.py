"""Parser round trips and fuzzing."""

from ..algebra.sampling import random_symbol
from ..exceptions import DimensionError, ParseError, StateParseError
from ..models.run import CheckReport, RunConfig
from ..parsing.state_parser import parse_state
from ..parsing.symbol_parser import Power, format_symbol, iter_nodes, lower, parse_expr, parse_symbol
from .base import SuiteRun

ROUND_TRIPS = 1000
SYMBOL_FUZZ = 10_000
STATE_FUZZ = 1_000
FUZZ_TOKENS = 12
# Trees with larger powers are only checked for syntax
LOWERING_EXPONENT_LIMIT = 3

SYMBOL_ALPHABET = (
    "a", "ad", "0", "1", "2", "7", "/", "i", "+", "-", "*", "^", "(", ")", " ", "x", ".", "é",
)
STATE_ALPHABET = (
    "vacuum", "fock:", "coherent:", "sup:", "(", ")", "1", "0.5", "+", "-", "i", ",", "x", ":", " ",
)


def _random_text(rng, alphabet) -> str:
    length = int(rng.integers(0, FUZZ_TOKENS + 1))
    return "".join(alphabet[int(k)] for k in rng.integers(0, len(alphabet), size=length))


def _largest_exponent(tree) -> int:
    return max((node.exponent for node in iter_nodes(tree) if isinstance(node, Power)), default=0)


def _offset_in_range(error: ParseError, text: str) -> bool:
    return 0 <= error.offset <= len(text.encode("utf-8", errors="surrogateescape"))


def run(config: RunConfig, progress: bool = False) -> CheckReport:
    suite = SuiteRun("parser", config, progress)
    rng = suite.rng

    def round_trip():
        failures = 0
        for _ in suite.iterate(ROUND_TRIPS, "round trip"):
            modes = int(rng.integers(1, 4))
            F = random_symbol(rng, modes, max_degree=4, max_terms=4)
            if parse_symbol(format_symbol(F), modes) != F:
                failures += 1
        return float(failures), f"{failures} of {ROUND_TRIPS} symbols changed"

    suite.case("format_parse_round_trip", 0.0, round_trip)

    def symbol_fuzz():
        crashes, first = 0, None
        for _ in suite.iterate(SYMBOL_FUZZ, "symbol fuzz"):
            text = _random_text(rng, SYMBOL_ALPHABET)
            try:
                tree = parse_expr(text)
                if _largest_exponent(tree) <= LOWERING_EXPONENT_LIMIT:
                    lower(tree, 2, text)
            except ParseError as e:
                if not _offset_in_range(e, text):
                    crashes += 1
                    first = first or f"offset {e.offset} outside {text!r}"
            except Exception as e:  # noqa: BLE001
                crashes += 1
                first = first or f"{type(e).__name__} on {text!r}"
        return float(crashes), first

    suite.case("symbol_fuzz", 0.0, symbol_fuzz)

    def state_fuzz():
        crashes, first = 0, None
        for _ in suite.iterate(STATE_FUZZ, "state fuzz"):
            text = _random_text(rng, STATE_ALPHABET)
            try:
                parse_state(text)
            except StateParseError as e:
                if not _offset_in_range(e, text):
                    crashes += 1
                    first = first or f"offset {e.offset} outside {text!r}"
            except DimensionError:
                pass
            except Exception as e:  # noqa: BLE001
                crashes += 1
                first = first or f"{type(e).__name__} on {text!r}"
        return float(crashes), first

    suite.case("state_fuzz", 0.0, state_fuzz)
    return suite.report()
