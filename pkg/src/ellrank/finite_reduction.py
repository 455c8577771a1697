"""Reduction of integral curves modulo odd primes and exhaustive point counting."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import isqrt

from .arith import is_prime
from .errors import BadReduction, DenominatorDivisible, NotPrime
from .weierstrass import IDENTITY, Curve, discriminant

MAX_PRIME = 10**6


def _check_prime(p: int):
    if not isinstance(p, int) or p == 2 or not is_prime(p):
        raise NotPrime(f"{p} is not an odd prime")
    if p > MAX_PRIME:
        raise NotPrime(f"{p} exceeds the point-counting cap {MAX_PRIME}")


@dataclass(frozen=True)
class FiniteCurve:
    p: int
    a: int
    b: int

    def __post_init__(self):
        _check_prime(self.p)
        object.__setattr__(self, "a", self.a % self.p)
        object.__setattr__(self, "b", self.b % self.p)
        if (4 * self.a**3 + 27 * self.b**2) % self.p == 0:
            raise BadReduction(f"y^2 = x^3 + {self.a}x + {self.b} is singular mod {self.p}")

    def contains(self, P) -> bool:
        if P is IDENTITY:
            return True
        x, y = P
        return (y * y - (x**3 + self.a * x + self.b)) % self.p == 0


@dataclass(frozen=True)
class PointCount:
    p: int
    order: int

    def __post_init__(self):
        # Hasse: |N - (p+1)| <= 2 sqrt(p)  <=>  (N - p - 1)^2 <= 4p
        assert (self.order - self.p - 1) ** 2 <= 4 * self.p, self


def has_good_reduction(curve: Curve, p: int) -> bool:
    _check_prime(p)
    return discriminant(curve) % p != 0


def reduce_curve(curve: Curve, p: int) -> FiniteCurve:
    if not has_good_reduction(curve, p):
        raise BadReduction(f"{p} divides the discriminant of {curve}")
    return FiniteCurve(p, curve.a, curve.b)


@lru_cache(maxsize=64)
def _square_counts(p: int):
    """counts[r] = number of y in F_p with y^2 = r."""
    counts = bytearray(p)
    for y in range(p):
        counts[y * y % p] += 1
    return bytes(counts)


def count_points(fc: FiniteCurve) -> PointCount:
    """#E(F_p) including the point at infinity, by enumerating every x."""
    p, a, b = fc.p, fc.a, fc.b
    sq = _square_counts(p)
    n = 1
    for x in range(p):
        n += sq[(x * x * x + a * x + b) % p]
    return PointCount(p, n)


def reduce_point(curve: Curve, fc: FiniteCurve, P):
    """Coordinatewise residue of a rational point; refuses p-adic poles."""
    if P is IDENTITY:
        return IDENTITY
    p = fc.p
    if P.x.denominator % p == 0 or P.y.denominator % p == 0:
        raise DenominatorDivisible(f"{p} divides a denominator of {P}")
    x = P.x.numerator * pow(P.x.denominator, -1, p) % p
    y = P.y.numerator * pow(P.y.denominator, -1, p) % p
    return (x, y)


def finite_add(fc: FiniteCurve, P, Q):
    """Group law on E(F_p); finite points are (x, y) tuples of residues."""
    if P is IDENTITY:
        return Q
    if Q is IDENTITY:
        return P
    p, a = fc.p, fc.a
    (x1, y1), (x2, y2) = P, Q
    if x1 == x2:
        if (y1 + y2) % p == 0:
            return IDENTITY
        lam = (3 * x1 * x1 + a) * pow(2 * y1, -1, p) % p
    else:
        lam = (y2 - y1) * pow(x2 - x1, -1, p) % p
    x3 = (lam * lam - x1 - x2) % p
    return (x3, (lam * (x1 - x3) - y1) % p)


def hasse_interval(p: int):
    """Inclusive integer range allowed for #E(F_p) by the Hasse bound."""
    r = isqrt(4 * p)
    return p + 1 - r, p + 1 + r
