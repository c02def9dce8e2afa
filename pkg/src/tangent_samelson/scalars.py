"""Exact scalars: rationals (``fractions.Fraction``) and Gaussian rationals."""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)\s*(?:/\s*(\d+))?\s*$")


class GaussianRational:
    """Exact complex number ``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if isinstance(re, Fraction) else Fraction(re)
        self.im = im if isinstance(im, Fraction) else Fraction(im)

    @classmethod
    def coerce(cls, value):
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, Rational):
            return cls(value, 0)
        if isinstance(value, complex):
            raise TypeError("floating-point complex values are not exact")
        raise TypeError(f"cannot interpret {value!r} as a Gaussian rational")

    def conjugate(self):
        return GaussianRational(self.re, -self.im)

    def norm(self):
        """Squared modulus ``re**2 + im**2`` (a Fraction)."""
        return self.re * self.re + self.im * self.im

    def __add__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re + other.re, self.im + other.im)
        if isinstance(other, Rational):
            return GaussianRational(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(self.re - other.re, self.im - other.im)
        if isinstance(other, Rational):
            return GaussianRational(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, Rational):
            return GaussianRational(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, GaussianRational):
            return GaussianRational(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        if isinstance(other, Rational):
            return GaussianRational(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Rational):
            if other == 0:
                raise ZeroDivisionError("division by zero")
            return GaussianRational(self.re / other, self.im / other)
        if isinstance(other, GaussianRational):
            d = other.norm()
            if d == 0:
                raise ZeroDivisionError("division by zero")
            return GaussianRational(
                (self.re * other.re + self.im * other.im) / d,
                (self.im * other.re - self.re * other.im) / d,
            )
        return NotImplemented

    def __rtruediv__(self, other):
        if isinstance(other, Rational):
            return GaussianRational(other, 0) / self
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, GaussianRational):
            return self.re == other.re and self.im == other.im
        if isinstance(other, Rational):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def __repr__(self):
        return f"GaussianRational({rational_str(self.re)!r}, {rational_str(self.im)!r})"

    def __str__(self):
        if self.im == 0:
            return rational_str(self.re)
        im = "" if abs(self.im) == 1 else rational_str(abs(self.im)) + "*"
        if self.re == 0:
            return ("-" if self.im < 0 else "") + im + "i"
        sign = "-" if self.im < 0 else "+"
        return f"{rational_str(self.re)}{sign}{im}i"


I = GaussianRational(0, 1)


def parse_rational(text) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` exactly. Integers are accepted as-is."""
    if isinstance(text, bool):
        raise ValueError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"rationals must be given as strings or integers, got {text!r}")
    m = _RATIONAL_RE.match(text.replace("−", "-"))
    if m is None:
        raise ValueError(f"malformed rational {text!r}")
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(int(m.group(1)), den)


def rational_str(q) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def snap_real(x: float, tol: float, max_denominator: int = 10**6):
    """Best rational approximation of ``x`` with bounded denominator.

    Uses the continued-fraction convergents behind
    ``Fraction.limit_denominator``. Returns None when the approximation
    misses ``x`` by more than ``tol``.
    """
    q = Fraction(x).limit_denominator(max_denominator)
    if abs(float(q) - x) > tol:
        return None
    return q


def snap_complex(z: complex, tol: float, max_denominator: int = 10**6):
    re = snap_real(z.real, tol, max_denominator)
    im = snap_real(z.imag, tol, max_denominator)
    if re is None or im is None:
        return None
    return GaussianRational(re, im)


def to_complex(value):
    """Promote a Fraction/int to a GaussianRational."""
    return GaussianRational.coerce(value)
