"""Polynomial phase-space symbols in the holomorphic variables a_j, a*_j."""

import json
from fractions import Fraction
from types import MappingProxyType
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple, Union

import numpy as np

from ..exceptions import DimensionError
from .coefficients import CoefficientLike, GaussianRational

Exponents = Tuple[int, ...]


class SOrder:
    """Ordering parameter s (0 Weyl, -1 normal/Husimi, +1 anti-normal)."""

    __slots__ = ("s",)

    def __init__(self, s: Union[int, Fraction, str, "SOrder"]):
        if isinstance(s, SOrder):
            s = s.s
        if isinstance(s, float):
            raise TypeError("Ordering parameters must be exact rationals, not floats")
        self.s = Fraction(s)

    WEYL: "SOrder"
    NORMAL: "SOrder"
    ANTINORMAL: "SOrder"

    def __eq__(self, other):
        if isinstance(other, SOrder):
            return self.s == other.s
        try:
            return self.s == Fraction(other)
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash(self.s)

    def __repr__(self):
        return f"SOrder({str(self.s)!r})"

    def __str__(self):
        return str(self.s)


SOrder.WEYL = SOrder(0)
SOrder.NORMAL = SOrder(-1)
SOrder.ANTINORMAL = SOrder(1)


class PolySymbol:
    """
    Immutable polynomial in a_j, a*_j with exact complex rational coefficients.

    Terms map an exponent vector [e_a0, e_ad0, e_a1, e_ad1, ...] to a non-zero
    coefficient. Instances are hashable and compare coefficient-wise.
    """

    __slots__ = ("_mode_count", "_terms", "_hash")

    def __init__(
        self,
        mode_count: int,
        terms: Union[Mapping[Sequence[int], CoefficientLike], Iterable[Tuple[Sequence[int], CoefficientLike]], None] = None,
    ):
        if not isinstance(mode_count, (int, np.integer)) or mode_count < 1:
            raise DimensionError(f"mode_count must be a positive integer, got {mode_count!r}")
        self._mode_count = int(mode_count)

        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        width = 2 * self._mode_count
        canonical: Dict[Exponents, GaussianRational] = {}
        for exponents, coefficient in items:
            key = tuple(int(e) for e in exponents)
            if len(key) != width:
                raise DimensionError(
                    f"Exponent vector {key} has length {len(key)}, expected {width}"
                )
            if any(e < 0 for e in key):
                raise ValueError(f"Exponents must be non-negative, got {key}")
            total = canonical.get(key, GaussianRational()) + GaussianRational.coerce(coefficient)
            if total:
                canonical[key] = total
            else:
                canonical.pop(key, None)

        self._terms = MappingProxyType(canonical)
        self._hash = None

    # Constructors
    @classmethod
    def zero(cls, mode_count: int) -> "PolySymbol":
        return cls(mode_count)

    @classmethod
    def constant(cls, value: CoefficientLike, mode_count: int) -> "PolySymbol":
        return cls(mode_count, {(0,) * (2 * mode_count): value})

    @classmethod
    def a(cls, mode: int, mode_count: int) -> "PolySymbol":
        """The holomorphic variable a_mode."""
        return cls._variable(2 * mode, mode, mode_count)

    @classmethod
    def ad(cls, mode: int, mode_count: int) -> "PolySymbol":
        """The conjugate variable a*_mode."""
        return cls._variable(2 * mode + 1, mode, mode_count)

    @classmethod
    def _variable(cls, slot: int, mode: int, mode_count: int) -> "PolySymbol":
        if not 0 <= mode < mode_count:
            raise DimensionError(f"Mode {mode} out of range for {mode_count} mode(s)")
        exponents = [0] * (2 * mode_count)
        exponents[slot] = 1
        return cls(mode_count, {tuple(exponents): 1})

    # Read-only views
    @property
    def mode_count(self) -> int:
        return self._mode_count

    @property
    def terms(self) -> Mapping[Exponents, GaussianRational]:
        return self._terms

    @property
    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int:
        """Total degree; -1 for the zero symbol."""
        return max((sum(e) for e in self._terms), default=-1)

    def coefficient(self, exponents: Sequence[int]) -> GaussianRational:
        return self._terms.get(tuple(exponents), GaussianRational())

    def __iter__(self) -> Iterator[Tuple[Exponents, GaussianRational]]:
        return iter(self._terms.items())

    def __len__(self) -> int:
        return len(self._terms)

    # Arithmetic
    def _coerce(self, other) -> "PolySymbol":
        if isinstance(other, PolySymbol):
            if other._mode_count != self._mode_count:
                raise DimensionError(
                    f"Mode-count mismatch: {self._mode_count} vs {other._mode_count}"
                )
            return other
        return PolySymbol.constant(GaussianRational.coerce(other), self._mode_count)

    def __add__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        merged = dict(self._terms)
        for key, value in other._terms.items():
            merged[key] = merged.get(key, GaussianRational()) + value
        return PolySymbol(self._mode_count, merged)

    __radd__ = __add__

    def __neg__(self):
        return PolySymbol(self._mode_count, {k: -v for k, v in self._terms.items()})

    def __sub__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = self._coerce(other)
        except TypeError:
            return NotImplemented
        product: Dict[Exponents, GaussianRational] = {}
        for left_key, left_value in self._terms.items():
            for right_key, right_value in other._terms.items():
                key = tuple(l + r for l, r in zip(left_key, right_key))
                product[key] = product.get(key, GaussianRational()) + left_value * right_value
        return PolySymbol(self._mode_count, product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("Symbol powers must be non-negative integers")
        result = PolySymbol.constant(1, self._mode_count)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    # Calculus
    def derivative(self, mode: int, conjugate: bool = False) -> "PolySymbol":
        """Partial derivative with respect to a_mode, or a*_mode when conjugate."""
        if not 0 <= mode < self._mode_count:
            raise DimensionError(f"Mode {mode} out of range for {self._mode_count} mode(s)")
        slot = 2 * mode + (1 if conjugate else 0)
        result: Dict[Exponents, GaussianRational] = {}
        for key, value in self._terms.items():
            power = key[slot]
            if power == 0:
                continue
            lowered = list(key)
            lowered[slot] = power - 1
            result[tuple(lowered)] = value * power
        return PolySymbol(self._mode_count, result)

    def conjugate(self) -> "PolySymbol":
        """Complex conjugate as a function: swap a_j with a*_j and conjugate coefficients."""
        swapped = {}
        for key, value in self._terms.items():
            flipped = []
            for j in range(self._mode_count):
                flipped.extend((key[2 * j + 1], key[2 * j]))
            swapped[tuple(flipped)] = value.conjugate()
        return PolySymbol(self._mode_count, swapped)

    def is_real(self) -> bool:
        """Real-valued on phase space, i.e. the symbol of a Hermitian operator."""
        return self.conjugate() == self

    def evaluate(self, point) -> complex:
        """Evaluate at a_j = z_j, a*_j = conj(z_j)."""
        z = _point_values(point)
        if z.shape != (self._mode_count,):
            raise DimensionError(
                f"Phase point has {z.size} mode(s), symbol has {self._mode_count}"
            )
        zc = np.conj(z)
        total = 0j
        for key, value in self._terms.items():
            monomial = complex(value)
            for j in range(self._mode_count):
                monomial *= z[j] ** key[2 * j] * zc[j] ** key[2 * j + 1]
            total += monomial
        return complex(total)

    # Comparison and serialization
    def __eq__(self, other):
        if isinstance(other, PolySymbol):
            return self._mode_count == other._mode_count and dict(self._terms) == dict(other._terms)
        try:
            return self == self._coerce(other)
        except (TypeError, DimensionError):
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._mode_count, frozenset(self._terms.items())))
        return self._hash

    def sorted_terms(self) -> Iterator[Tuple[Exponents, GaussianRational]]:
        """Terms in graded lexicographic order: higher degree first, then larger exponents."""
        return iter(sorted(self._terms.items(), key=lambda item: (-sum(item[0]), tuple(-e for e in item[0]))))

    def to_dict(self) -> dict:
        return {
            "modes": self._mode_count,
            "terms": [
                {"exp": list(key), "re": str(value.re), "im": str(value.im)}
                for key, value in self.sorted_terms()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: Mapping) -> "PolySymbol":
        try:
            return cls(
                int(data["modes"]),
                [
                    (term["exp"], GaussianRational(Fraction(term["re"]), Fraction(term["im"])))
                    for term in data["terms"]
                ],
            )
        except (KeyError, TypeError) as e:
            raise ValueError(f"Malformed symbol document: {e}") from e

    @classmethod
    def from_json(cls, text: str) -> "PolySymbol":
        return cls.from_dict(json.loads(text))

    def __repr__(self):
        from ..parsing.symbol_parser import format_symbol

        return f"PolySymbol({self._mode_count}, {format_symbol(self)!r})"

    def __str__(self):
        from ..parsing.symbol_parser import format_symbol

        return format_symbol(self)


def _point_values(point) -> np.ndarray:
    for attribute in ("z", "alpha"):
        if hasattr(point, attribute):
            return np.asarray(getattr(point, attribute), dtype=complex)
    return np.atleast_1d(np.asarray(point, dtype=complex))
