"""State mini-language used by `holoquant wigner --state`.

    state      = basic | "sup:" weighted { "+" weighted } ;
    weighted   = "(" complex ")" basic ;
    basic      = "vacuum" | "fock:" integer { "," integer } | "coherent:" complex { "," complex } ;
    complex    = real [ ("+" | "-") [ real ] "i" ] | [ "+" | "-" ] [ real ] "i" ;

Reals are decimal literals (`1`, `-0.5`, `2e-3`).
"""

import cmath
import math
import re
from typing import List, Optional, Union

from ..exceptions import DimensionError, StateParseError
from ..models.states import (
    CoherentStateSpec,
    FockStateSpec,
    StateSpec,
    SuperpositionSpec,
)

_NUMBER = r"(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d+)?"
_PURE_IMAGINARY = re.compile(rf"(?P<sign>[+-]?)(?P<mag>{_NUMBER})?i")
_COMPLEX = re.compile(rf"(?P<re>[+-]?{_NUMBER})(?:(?P<sign>[+-])(?P<mag>{_NUMBER})?i)?")
_INTEGER = re.compile(r"\d+")
_KEYWORDS = ("vacuum", "fock:", "coherent:", "sup:")


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.position = 0

    def skip_space(self) -> None:
        while self.position < len(self.text) and self.text[self.position].isspace():
            self.position += 1

    def fail(self, message: str, expected) -> None:
        offset = len(self.text[: self.position].encode("utf-8", errors="surrogateescape"))
        raise StateParseError(message, offset, expected)

    def take(self, literal: str) -> bool:
        self.skip_space()
        if self.text.startswith(literal, self.position):
            self.position += len(literal)
            return True
        return False

    def expect(self, literal: str) -> None:
        if not self.take(literal):
            self.fail(f"Expected {literal!r}", (literal,))

    def at_end(self) -> bool:
        self.skip_space()
        return self.position >= len(self.text)

    def integer(self) -> int:
        self.skip_space()
        match = _INTEGER.match(self.text, self.position)
        if not match:
            self.fail("Expected an occupation number", ("<integer>",))
        self.position = match.end()
        return int(match.group())

    def complex_number(self) -> complex:
        self.skip_space()
        match = _PURE_IMAGINARY.match(self.text, self.position)
        if match:
            magnitude = float(match.group("mag")) if match.group("mag") else 1.0
            if not math.isfinite(magnitude):
                self.fail("Complex literal out of range", ("<finite number>",))
            self.position = match.end()
            return complex(0.0, -magnitude if match.group("sign") == "-" else magnitude)
        match = _COMPLEX.match(self.text, self.position)
        if not match:
            self.fail("Expected a complex number", ("<complex>",))
        value = complex(float(match.group("re")), 0.0)
        if match.group("sign"):
            magnitude = float(match.group("mag")) if match.group("mag") else 1.0
            value += 1j * (-magnitude if match.group("sign") == "-" else magnitude)
        if not cmath.isfinite(value):
            self.fail("Complex literal out of range", ("<finite number>",))
        self.position = match.end()
        return value


def _basic(cursor: _Cursor, mode_count: Optional[int]) -> Union[CoherentStateSpec, FockStateSpec]:
    if cursor.take("vacuum"):
        return FockStateSpec(occupations=(0,) * (mode_count or 1))
    if cursor.take("fock:"):
        occupations = [cursor.integer()]
        while cursor.take(","):
            occupations.append(cursor.integer())
        return FockStateSpec(occupations=tuple(occupations))
    if cursor.take("coherent:"):
        amplitudes = [cursor.complex_number()]
        while cursor.take(","):
            amplitudes.append(cursor.complex_number())
        return CoherentStateSpec(amplitudes=amplitudes)
    cursor.fail("Unknown state", _KEYWORDS)


def _superposition(cursor: _Cursor, mode_count: Optional[int]) -> SuperpositionSpec:
    weights: List[complex] = []
    components = []
    while True:
        cursor.expect("(")
        weights.append(cursor.complex_number())
        cursor.expect(")")
        components.append(_basic(cursor, mode_count))
        if not cursor.take("+"):
            break
    return SuperpositionSpec(weights=weights, components=components)


def parse_state(text: str, mode_count: Optional[int] = None) -> StateSpec:
    """Parse `vacuum`, `fock:n`, `coherent:re+imi` or `sup:(w1)s1+(w2)s2`."""
    cursor = _Cursor(text)
    if cursor.at_end():
        cursor.fail("Empty state", _KEYWORDS)
    spec = _superposition(cursor, mode_count) if cursor.take("sup:") else _basic(cursor, mode_count)
    if not cursor.at_end():
        cursor.fail("Unexpected trailing text", ("+", "<end>") if spec.kind == "superposition" else (",", "<end>"))
    if mode_count is not None and spec.mode_count != mode_count:
        raise DimensionError(f"State has {spec.mode_count} mode(s), expected {mode_count}")
    return spec
