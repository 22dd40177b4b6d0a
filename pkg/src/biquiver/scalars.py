"""Exact complex-rational scalars.

All certified computations in the package run on GaussianRational numbers:
complex numbers whose real and imaginary parts are arbitrary-precision
rationals. Fraction keeps every part canonical (denominator positive,
reduced), so equality is exact and hashing is well defined.
"""
from __future__ import annotations

import re as _re
from dataclasses import dataclass
from fractions import Fraction

from .errors import FormatError

_RATIONAL_RE = _re.compile(r"^-?\d+(/[1-9]\d*)?$")


def _coerce(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


@dataclass(frozen=True)
class GaussianRational:
    re: Fraction = Fraction(0)
    im: Fraction = Fraction(0)

    def __post_init__(self):
        object.__setattr__(self, "re", _coerce(self.re))
        object.__setattr__(self, "im", _coerce(self.im))

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "GaussianRational") -> "GaussianRational":
        other = as_gaussian(other)
        return GaussianRational(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other: "GaussianRational") -> "GaussianRational":
        other = as_gaussian(other)
        return GaussianRational(self.re - other.re, self.im - other.im)

    def __rsub__(self, other) -> "GaussianRational":
        return as_gaussian(other) - self

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other) -> "GaussianRational":
        other = as_gaussian(other)
        return GaussianRational(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "GaussianRational":
        other = as_gaussian(other)
        n = other.norm2()
        if n == 0:
            raise ZeroDivisionError("division by zero GaussianRational")
        return GaussianRational(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other) -> "GaussianRational":
        return as_gaussian(other) / self

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm2(self) -> Fraction:
        """Squared modulus re^2 + im^2, an exact rational."""
        return self.re * self.re + self.im * self.im

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def is_real(self) -> bool:
        return self.im == 0

    # -- presentation -------------------------------------------------------

    def __repr__(self) -> str:
        if not self.im:
            return f"{self.re}"
        if not self.re:
            return f"{self.im}i"
        sign = "+" if self.im > 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    def to_pair(self) -> list[str]:
        """[re, im] as canonical rational strings (used by the JSON formats)."""
        return [format_rational(self.re), format_rational(self.im)]


ZERO = GaussianRational()
ONE = GaussianRational(Fraction(1))
I = GaussianRational(Fraction(0), Fraction(1))


def as_gaussian(x) -> GaussianRational:
    """Coerce an int, Fraction, or GaussianRational to a GaussianRational."""
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussianRational(_coerce(x))
    raise TypeError(f"cannot interpret {x!r} as a GaussianRational")


def gaussian(re=0, im=0) -> GaussianRational:
    """Shorthand constructor accepting ints and Fractions."""
    return GaussianRational(_coerce(re), _coerce(im))


def parse_rational(text: str) -> Fraction:
    """Parse a canonical rational string "p" or "p/q" (q > 0)."""
    if not isinstance(text, str) or not _RATIONAL_RE.match(text):
        raise FormatError(f"not a canonical rational string: {text!r}")
    return Fraction(text)


def format_rational(x: Fraction) -> str:
    """Canonical rational string: "p" when the denominator is 1, else "p/q"."""
    return str(x)


def parse_gaussian_pair(pair) -> GaussianRational:
    """Parse a [re, im] pair of canonical rational strings."""
    if not isinstance(pair, (list, tuple)) or len(pair) != 2:
        raise FormatError(f"matrix entry must be a [re, im] pair, got {pair!r}")
    return GaussianRational(parse_rational(pair[0]), parse_rational(pair[1]))
