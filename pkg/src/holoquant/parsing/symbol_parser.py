"""Text grammar for polynomial symbols.

    expr     = term { ("+" | "-") term } ;
    term     = factor { "*" factor } ;
    factor   = "-" factor | power ;
    power    = atom { "^" integer } ;
    atom     = number | imaginary | variable | "(" expr ")" ;
    number   = digits [ "/" digits ] ;
    imaginary = [ number ] "i" ;
    variable = ( "a" | "ad" ) digits ;

Whitespace between tokens is ignored; literals and variables are written
without inner spaces. See __doc__.md for the versioned grammar notes.
"""

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Tuple, Union

from ..exceptions import ExponentError, IndexOutOfRangeError, ParseError
from ..algebra.coefficients import GaussianRational, format_coefficient
from ..algebra.polysymbol import PolySymbol

logger = logging.getLogger(__name__)

GRAMMAR_VERSION = "1.0"
MAX_EXPONENT = 256
MAX_TERMS = 4096

_ATOM_START = ("<number>", "<variable>", "i", "(", "-")
_AFTER_OPERAND = ("+", "-", "*", "^", ")", "<end>")


# Syntax tree
@dataclass(frozen=True)
class Literal:
    value: GaussianRational
    offset: int


@dataclass(frozen=True)
class Variable:
    conjugate: bool
    mode: int
    text: str
    offset: int


@dataclass(frozen=True)
class Negate:
    operand: "SymbolExpr"
    offset: int


@dataclass(frozen=True)
class Sum:
    operands: Tuple["SymbolExpr", ...]
    offset: int


@dataclass(frozen=True)
class Product:
    operands: Tuple["SymbolExpr", ...]
    offset: int


@dataclass(frozen=True)
class Power:
    base: "SymbolExpr"
    exponent: int
    offset: int


@dataclass(frozen=True)
class Group:
    inner: "SymbolExpr"
    offset: int


SymbolExpr = Union[Literal, Variable, Negate, Sum, Product, Power, Group]


def iter_nodes(tree: SymbolExpr) -> Iterator[SymbolExpr]:
    """Every node of a syntax tree, depth first."""
    stack = [tree]
    while stack:
        node = stack.pop()
        yield node
        if isinstance(node, (Sum, Product)):
            stack.extend(reversed(node.operands))
        elif isinstance(node, Negate):
            stack.append(node.operand)
        elif isinstance(node, Group):
            stack.append(node.inner)
        elif isinstance(node, Power):
            stack.append(node.base)


def mode_span(tree: SymbolExpr) -> int:
    """Smallest mode count that holds every variable of the tree."""
    return 1 + max((node.mode for node in iter_nodes(tree) if isinstance(node, Variable)), default=-1)


@dataclass(frozen=True)
class _Token:
    kind: str  # number, imag, var, op, end
    text: str
    start: int
    value: object = None


class _Lexer:
    def __init__(self, text: str):
        self.text = text

    def _error(self, message: str, position: int, expected=_ATOM_START, cls=ParseError):
        raise cls(message, _byte_offset(self.text, position), expected)

    def _digits(self, i: int) -> int:
        j = i
        while j < len(self.text) and self.text[j] in "0123456789":
            j += 1
        return j

    def _int(self, start: int, end: int) -> int:
        try:
            return int(self.text[start:end])
        except ValueError:
            self._error("Number literal too long", start, ("<shorter number>",))

    def tokens(self) -> List[_Token]:
        text, i, out = self.text, 0, []
        while i < len(text):
            ch = text[i]
            if ch in " \t\r\n":
                i += 1
            elif ch in "0123456789":
                j = self._digits(i)
                value = Fraction(self._int(i, j))
                if j < len(text) and text[j] == "/":
                    k = self._digits(j + 1)
                    if k == j + 1:
                        self._error("Expected a denominator", j + 1, ("<digits>",))
                    denominator = self._int(j + 1, k)
                    if denominator == 0:
                        self._error("Zero denominator", j + 1, ("<non-zero digits>",))
                    value = value / denominator
                    j = k
                if j < len(text) and text[j] == "i":
                    out.append(_Token("imag", text[i:j + 1], i, value))
                    j += 1
                else:
                    out.append(_Token("number", text[i:j], i, value))
                i = j
            elif ch == "i":
                out.append(_Token("imag", "i", i, Fraction(1)))
                i += 1
            elif ch == "a":
                start = i + 2 if text.startswith("ad", i) else i + 1
                j = self._digits(start)
                if j == start:
                    self._error("Expected a mode index", start, ("<digits>",))
                out.append(_Token("var", text[i:j], i, (start == i + 2, self._int(start, j))))
                i = j
            elif ch in "+-*^()":
                out.append(_Token("op", ch, i))
                i += 1
            else:
                self._error(f"Unexpected character {ch!r}", i)
        out.append(_Token("end", "", len(text)))
        return out


def _byte_offset(text: str, position: int) -> int:
    return len(text[:position].encode("utf-8", errors="surrogateescape"))


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _Lexer(text).tokens()
        self.index = 0

    @property
    def current(self) -> _Token:
        return self.tokens[self.index]

    def _advance(self) -> _Token:
        token = self.tokens[self.index]
        self.index += 1
        return token

    def _at(self, op: str) -> bool:
        return self.current.kind == "op" and self.current.text == op

    def _fail(self, message: str, expected, cls=ParseError):
        raise cls(message, _byte_offset(self.text, self.current.start), expected)

    def parse(self) -> SymbolExpr:
        if self.current.kind == "end":
            self._fail("Empty expression", _ATOM_START)
        tree = self._expr()
        if self.current.kind != "end":
            self._fail(f"Unexpected {self.current.text!r}", _AFTER_OPERAND)
        return tree

    def _expr(self) -> SymbolExpr:
        start = self.current.start
        operands = [self._term()]
        while self._at("+") or self._at("-"):
            op = self._advance()
            term = self._term()
            operands.append(Negate(term, op.start) if op.text == "-" else term)
        return operands[0] if len(operands) == 1 else Sum(tuple(operands), start)

    def _term(self) -> SymbolExpr:
        start = self.current.start
        operands = [self._factor()]
        while self._at("*"):
            self._advance()
            operands.append(self._factor())
        return operands[0] if len(operands) == 1 else Product(tuple(operands), start)

    def _factor(self) -> SymbolExpr:
        if self._at("-"):
            op = self._advance()
            return Negate(self._factor(), op.start)
        return self._power()

    def _power(self) -> SymbolExpr:
        node = self._atom()
        while self._at("^"):
            caret = self._advance()
            node = Power(node, self._exponent(), caret.start)
        return node

    def _exponent(self) -> int:
        token = self.current
        if self._at("-"):
            self._fail("Exponents must be non-negative", ("<integer>",), ExponentError)
        if token.kind == "imag":
            self._fail("Exponents must be non-negative integers", ("<integer>",), ExponentError)
        if token.kind != "number":
            self._fail("Expected an exponent", ("<integer>",))
        value: Fraction = token.value
        if value.denominator != 1:
            self._fail(f"Fractional exponent {token.text}", ("<integer>",), ExponentError)
        if value > MAX_EXPONENT:
            self._fail(f"Exponent {token.text} exceeds {MAX_EXPONENT}", ("<integer>",), ExponentError)
        self._advance()
        return int(value)

    def _atom(self) -> SymbolExpr:
        token = self.current
        if token.kind == "number":
            self._advance()
            return Literal(GaussianRational(token.value), token.start)
        if token.kind == "imag":
            self._advance()
            return Literal(GaussianRational(0, token.value), token.start)
        if token.kind == "var":
            self._advance()
            conjugate, mode = token.value
            return Variable(conjugate, mode, token.text, token.start)
        if self._at("("):
            self._advance()
            inner = self._expr()
            if not self._at(")"):
                self._fail("Unclosed parenthesis", ("+", "-", "*", "^", ")"))
            self._advance()
            return Group(inner, token.start)
        what = "end of input" if token.kind == "end" else repr(token.text)
        self._fail(f"Unexpected {what}", _ATOM_START)


def parse_expr(text: Union[str, bytes]) -> SymbolExpr:
    """Parse text into a syntax tree without fixing the mode count."""
    if isinstance(text, bytes):
        text = text.decode("utf-8", errors="surrogateescape")
    try:
        return _Parser(text).parse()
    except RecursionError:
        raise ParseError("Expression nested too deeply", 0, _ATOM_START) from None


def _monomial_bound(mode_count: int, degree: int) -> int:
    """Number of monomials of total degree <= `degree` in 2 * mode_count variables."""
    return math.comb(2 * mode_count + degree, 2 * mode_count)


def _check_expansion(bound: int, node: SymbolExpr, text: str, error=ParseError) -> None:
    if bound > MAX_TERMS:
        raise error(
            f"Expansion may reach {bound} terms, more than the {MAX_TERMS} this parser expands",
            _byte_offset(text, node.offset),
        )


def lower(tree: SymbolExpr, mode_count: int, text: str = "") -> PolySymbol:
    """Evaluate a syntax tree to its canonical symbol."""
    if isinstance(tree, Literal):
        return PolySymbol.constant(tree.value, mode_count)
    if isinstance(tree, Variable):
        if tree.mode >= mode_count:
            raise IndexOutOfRangeError(tree.text, mode_count, _byte_offset(text, tree.offset))
        maker = PolySymbol.ad if tree.conjugate else PolySymbol.a
        return maker(tree.mode, mode_count)
    if isinstance(tree, Negate):
        return -lower(tree.operand, mode_count, text)
    if isinstance(tree, Group):
        return lower(tree.inner, mode_count, text)
    if isinstance(tree, Power):
        base = lower(tree.base, mode_count, text)
        if len(base) > 1:
            combinations = math.comb(len(base) + tree.exponent - 1, tree.exponent)
            bound = min(combinations, _monomial_bound(mode_count, base.degree * tree.exponent))
            _check_expansion(bound, tree, text, ExponentError)
        return base ** tree.exponent
    if isinstance(tree, Sum):
        total = PolySymbol.zero(mode_count)
        for operand in tree.operands:
            total = total + lower(operand, mode_count, text)
        return total
    if isinstance(tree, Product):
        product = PolySymbol.constant(1, mode_count)
        for operand in tree.operands:
            factor = lower(operand, mode_count, text)
            if not (product.is_zero or factor.is_zero):
                monomials = _monomial_bound(mode_count, product.degree + factor.degree)
                bound = min(len(product) * len(factor), monomials)
                _check_expansion(bound, tree, text)
            product = product * factor
        return product
    raise TypeError(f"Unknown syntax node {type(tree).__name__}")


def parse_symbol(text: Union[str, bytes], mode_count: int) -> PolySymbol:
    """Parse symbol text such as "a0*ad0 + 1/2" for `mode_count` modes."""
    if isinstance(text, bytes):
        text = text.decode("utf-8", errors="surrogateescape")
    tree = parse_expr(text)
    symbol = lower(tree, mode_count, text)
    logger.debug("Parsed %r into %d term(s)", text, len(symbol))
    return symbol


def _monomial_text(exponents) -> str:
    factors = []
    for j in range(len(exponents) // 2):
        for name, power in ((f"a{j}", exponents[2 * j]), (f"ad{j}", exponents[2 * j + 1])):
            if power == 1:
                factors.append(name)
            elif power > 1:
                factors.append(f"{name}^{power}")
    return "*".join(factors)


def format_symbol(symbol: PolySymbol) -> str:
    """Canonical text; parse_symbol(format_symbol(F), F.mode_count) == F."""
    if symbol.is_zero:
        return "0"
    pieces = []
    for exponents, coefficient in symbol.sorted_terms():
        monomial = _monomial_text(exponents)
        if not monomial:
            pieces.append(format_coefficient(coefficient))
        elif coefficient == 1:
            pieces.append(monomial)
        elif coefficient == -1:
            pieces.append(f"-{monomial}")
        else:
            pieces.append(f"{format_coefficient(coefficient)}*{monomial}")
    return " + ".join(pieces)
