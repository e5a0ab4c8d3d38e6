"""Tests for the symbol grammar and the state mini-language."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from holoquant.algebra import PolySymbol
from holoquant.exceptions import DimensionError, ExponentError, IndexOutOfRangeError, ParseError, StateParseError
from holoquant.models import CoherentStateSpec, FockStateSpec, SuperpositionSpec
from holoquant.parsing import (
    GRAMMAR_VERSION,
    format_symbol,
    iter_nodes,
    lower,
    mode_span,
    parse_expr,
    parse_state,
    parse_symbol,
)

from ..conftest import symbols


class TestSymbolParsing:
    """Parsing symbols into exact polynomials."""

    def test_grammar_version(self):
        assert GRAMMAR_VERSION == "1.0"

    def test_precedence(self):
        assert parse_symbol("1 + 2*a0^2", 1) == PolySymbol(1, {(0, 0): 1, (2, 0): 2})
        assert parse_symbol("-a0^2", 1) == PolySymbol(1, {(2, 0): -1})
        assert parse_symbol("(a0 + ad0)^2", 1) == parse_symbol("a0^2 + 2*a0*ad0 + ad0^2", 1)

    def test_rational_and_imaginary_literals(self):
        F = parse_symbol("3/4*a0 + 2i*ad0 - i", 1)
        assert F.coefficient((1, 0)) == parse_symbol("3/4", 1).coefficient((0, 0))
        assert complex(F.coefficient((0, 1))) == 2j
        assert complex(F.coefficient((0, 0))) == -1j

    def test_whitespace_is_ignored(self):
        assert parse_symbol("  a0 *\tad0  ", 1) == parse_symbol("a0*ad0", 1)

    def test_bytes_input(self):
        assert parse_symbol(b"a0*ad0", 1) == parse_symbol("a0*ad0", 1)

    def test_mode_out_of_range(self):
        with pytest.raises(IndexOutOfRangeError) as info:
            parse_symbol("a0 + ad2", 2)
        assert info.value.offset == 5
        assert info.value.variable == "ad2"

    @pytest.mark.parametrize("text", ["a0^-1", "a0^1/2", "a0^i", "a0^300"])
    def test_bad_exponents(self, text):
        with pytest.raises(ExponentError):
            parse_symbol(text, 1)

    @pytest.mark.parametrize(
        "text, offset",
        [
            ("", 0),
            ("a0 +", 4),
            ("a0 ad0", 3),
            ("(a0", 3),
            ("a", 1),
            ("1/0", 2),
            ("a0 $", 3),
            ("é a0", 0),
            ("a0 é", 3),
        ],
    )
    def test_error_offsets(self, text, offset):
        with pytest.raises(ParseError) as info:
            parse_symbol(text, 1)
        assert info.value.offset == offset

    def test_offsets_count_bytes(self):
        with pytest.raises(ParseError) as info:
            parse_symbol("ééé $", 1)
        assert info.value.offset == len("ééé ".encode("utf-8"))

    def test_expected_tokens_are_reported(self):
        with pytest.raises(ParseError) as info:
            parse_symbol("a0 *", 1)
        assert "<variable>" in info.value.expected
        assert "expected one of" in str(info.value)

    def test_large_powers_of_short_sums(self):
        symbol = parse_symbol("(a0 + ad0)^200", 1)
        assert len(symbol) == 201
        assert symbol.coefficient((100, 100)).re == math.comb(200, 100)

    def test_runaway_powers_are_rejected(self):
        with pytest.raises(ExponentError) as info:
            parse_symbol("(a0+ad0+a1+ad1+a2+ad2)^16", 3)
        assert "terms" in str(info.value)

    def test_runaway_products_are_rejected(self):
        text = "(a0+ad0+a1+ad1+a2+ad2)^5 * (a0+ad0+a1+ad1+a2+ad2)^5"
        with pytest.raises(ParseError) as info:
            parse_symbol(text, 3)
        assert not isinstance(info.value, ExponentError)
        assert info.value.offset == 0

    def test_deep_nesting_is_an_error(self):
        with pytest.raises(ParseError):
            parse_expr("(" * 5000 + "a0" + ")" * 5000)


class TestSyntaxTrees:
    """Tree helpers used for mode inference."""

    def test_iter_nodes_visits_every_variable(self):
        tree = parse_expr("a0*(ad3 + 2)^2 - a1")
        modes = sorted(node.mode for node in iter_nodes(tree) if hasattr(node, "mode"))
        assert modes == [0, 1, 3]

    def test_mode_span(self):
        assert mode_span(parse_expr("a0*ad2")) == 3
        assert mode_span(parse_expr("1/2 + i")) == 0

    def test_lower_requires_declared_modes(self):
        tree = parse_expr("ad1")
        assert lower(tree, 2) == PolySymbol.ad(1, 2)
        with pytest.raises(IndexOutOfRangeError):
            lower(tree, 1, "ad1")


class TestFormatting:
    """Canonical text output."""

    def test_canonical_examples(self):
        assert format_symbol(parse_symbol("1/2 + ad0*a0", 1)) == "a0*ad0 + 1/2"
        assert format_symbol(parse_symbol("a0*ad0 - 1/2", 1)) == "a0*ad0 + -1/2"
        assert format_symbol(parse_symbol("0*a0", 1)) == "0"
        assert format_symbol(parse_symbol("-a0^2 + (1-2i)*ad1", 2)) == "-a0^2 + (1-2i)*ad1"

    @given(symbols(max_degree=4, max_terms=4))
    @settings(max_examples=100, deadline=None)
    def test_format_then_parse(self, F):
        assert parse_symbol(format_symbol(F), F.mode_count) == F

    @given(st.text(alphabet="a d 0 1 2 / i + - * ( ) x", max_size=12))
    @settings(max_examples=200, deadline=None)
    def test_arbitrary_text_never_crashes(self, text):
        try:
            parse_symbol(text, 3)
        except ParseError as e:
            assert 0 <= e.offset <= len(text.encode("utf-8"))
        except DimensionError:
            pass


class TestStateParsing:
    """The state mini-language."""

    def test_vacuum(self):
        spec = parse_state("vacuum")
        assert isinstance(spec, FockStateSpec)
        assert spec.occupations == (0,)
        assert parse_state("vacuum", mode_count=2).occupations == (0, 0)

    def test_number_states(self):
        assert parse_state("fock:3").occupations == (3,)
        assert parse_state("fock: 1, 2").occupations == (1, 2)

    @pytest.mark.parametrize(
        "text, expected",
        [
            ("coherent:1", 1.0),
            ("coherent:-0.5", -0.5),
            ("coherent:1+2i", 1 + 2j),
            ("coherent:1.5-i", 1.5 - 1j),
            ("coherent:i", 1j),
            ("coherent:-2.5i", -2.5j),
            ("coherent:2e-1+1e0i", 0.2 + 1j),
        ],
    )
    def test_coherent_amplitudes(self, text, expected):
        spec = parse_state(text)
        assert isinstance(spec, CoherentStateSpec)
        assert spec.amplitudes.alpha[0] == pytest.approx(expected)

    def test_superposition(self):
        spec = parse_state("sup:(1)fock:0+(0.5i)coherent:2")
        assert isinstance(spec, SuperpositionSpec)
        np.testing.assert_allclose(spec.weights, [1.0, 0.5j])
        assert [c.kind for c in spec.components] == ["fock", "coherent"]

    def test_declared_mode_count_must_match(self):
        with pytest.raises(DimensionError):
            parse_state("fock:1,1", mode_count=1)

    def test_superposed_states_must_agree_on_modes(self):
        with pytest.raises(DimensionError):
            parse_state("sup:(1)fock:0+(1)fock:0,1")

    @pytest.mark.parametrize(
        "text, offset",
        [
            ("", 0),
            ("squeezed:1", 0),
            ("fock:", 5),
            ("fock:1 x", 7),
            ("coherent:z", 9),
            ("sup:fock:1", 4),
            ("coherent:1e999", 9),
        ],
    )
    def test_errors_carry_offsets(self, text, offset):
        with pytest.raises(StateParseError) as info:
            parse_state(text)
        assert info.value.offset == offset
