"""Exact complex rational coefficients."""

from fractions import Fraction
from numbers import Rational
from typing import Union


class GaussianRational:
    """Complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: Union[int, Fraction, str] = 0, im: Union[int, Fraction, str] = 0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def coerce(cls, value: "CoefficientLike") -> "GaussianRational":
        """Convert ints, fractions, floats and complex numbers exactly."""
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Rational)):
            return cls(Fraction(value))
        if isinstance(value, float):
            return cls(Fraction(value))
        if isinstance(value, complex):
            return cls(Fraction(value.real), Fraction(value.imag))
        raise TypeError(f"Cannot use {type(value).__name__} as an exact coefficient")

    @classmethod
    def i(cls) -> "GaussianRational":
        return cls(0, 1)

    # Arithmetic
    def __add__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        norm = other.re * other.re + other.im * other.im
        if norm == 0:
            raise ZeroDivisionError("division by a zero coefficient")
        return self * GaussianRational(other.re / norm, -other.im / norm)

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("Coefficient powers must be non-negative integers")
        result = GaussianRational(1)
        for _ in range(exponent):
            result = result * self
        return result

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    # Comparisons and conversions
    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        try:
            other = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    @property
    def is_real(self) -> bool:
        return self.im == 0

    def __repr__(self):
        return f"GaussianRational({str(self.re)!r}, {str(self.im)!r})"

    def __str__(self):
        return format_coefficient(self)


CoefficientLike = Union[GaussianRational, int, Fraction, float, complex]


def _imaginary_text(im: Fraction) -> str:
    if im == 1:
        return "i"
    if im == -1:
        return "-i"
    return f"{im}i"


def format_coefficient(value: GaussianRational) -> str:
    """Canonical spelling: `3/2`, `-i`, `1/2i`, `(1-2i)`."""
    if value.im == 0:
        return str(value.re)
    if value.re == 0:
        return _imaginary_text(value.im)
    sign = "+" if value.im > 0 else "-"
    magnitude = abs(value.im)
    imaginary = "i" if magnitude == 1 else f"{magnitude}i"
    return f"({value.re}{sign}{imaginary})"
