"""Exact group law on integral short Weierstrass curves y^2 = x^3 + a*x + b."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import SingularCurve


class _Identity:
    """The point at infinity.  A singleton; compare with ``is``."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "O"

    def __reduce__(self):
        return (_Identity, ())


IDENTITY = _Identity()


@dataclass(frozen=True, order=True)
class Point:
    """Affine rational point; coordinates are normalised Fractions."""

    x: Fraction
    y: Fraction

    def __init__(self, x, y):
        object.__setattr__(self, "x", Fraction(x))
        object.__setattr__(self, "y", Fraction(y))

    def __repr__(self):
        return f"({self.x}, {self.y})"


def discriminant_of(a: int, b: int) -> int:
    return -16 * (4 * a**3 + 27 * b**2)


@dataclass(frozen=True)
class Curve:
    a: int
    b: int

    def __post_init__(self):
        if not isinstance(self.a, int) or not isinstance(self.b, int):
            raise TypeError("curve coefficients must be integers")
        if discriminant_of(self.a, self.b) == 0:
            raise SingularCurve(f"y^2 = x^3 + {self.a}x + {self.b} is singular")

    def rhs(self, x):
        return x**3 + self.a * x + self.b

    def __str__(self):
        return f"y^2 = x^3 + ({self.a})x + ({self.b})"


def discriminant(curve) -> int:
    """-16(4a^3 + 27b^2).  Accepts a Curve or an (a, b) pair."""
    if isinstance(curve, Curve):
        return discriminant_of(curve.a, curve.b)
    a, b = curve
    return discriminant_of(a, b)


def is_on_curve(curve: Curve, P) -> bool:
    if P is IDENTITY:
        return True
    return P.y * P.y == curve.rhs(P.x)


def negate(P):
    if P is IDENTITY:
        return P
    return Point(P.x, -P.y)


def double(curve: Curve, P):
    if P is IDENTITY or P.y == 0:
        return IDENTITY
    x, y = P.x, P.y
    a, b = curve.a, curve.b
    x2 = (x**4 - 2 * a * x**2 - 8 * b * x + a * a) / (4 * y * y)
    y2 = -y - (3 * x * x + a) / (2 * y) * (x2 - x)
    return Point(x2, y2)


def add(curve: Curve, P, Q):
    if P is IDENTITY:
        return Q
    if Q is IDENTITY:
        return P
    if P.x == Q.x:
        if P.y == Q.y:
            return double(curve, P)
        return IDENTITY
    lam = (Q.y - P.y) / (Q.x - P.x)
    x3 = lam * lam - P.x - Q.x
    return Point(x3, lam * (P.x - x3) - P.y)


def scalar_mul(curve: Curve, n: int, P):
    if n < 0:
        return scalar_mul(curve, -n, negate(P))
    result = IDENTITY
    addend = P
    while n:
        if n & 1:
            result = add(curve, result, addend)
        n >>= 1
        if n:
            addend = double(curve, addend)
    return result


def naive_height(P) -> int:
    """max(|num(x)|, den(x)); 0 for the identity."""
    if P is IDENTITY:
        return 0
    return max(abs(P.x.numerator), P.x.denominator)
