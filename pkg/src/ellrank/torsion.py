"""Rational torsion via the reduction bound, Nagell-Lutz and Mazur's list."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import islice
from math import gcd

import sympy

from .arith import odd_primes
from .errors import NoUsablePrime, TorsionInconsistency
from .finite_reduction import count_points, has_good_reduction, reduce_curve
from .polyroots import integer_roots
from .weierstrass import IDENTITY, Curve, Point, add, discriminant

_POINT_ORDERS = frozenset({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 12})
# Group orders additionally include 16 for Z/2 x Z/8.
_GROUP_ORDERS = _POINT_ORDERS | {16}


def mazur_allowed_orders():
    """Possible orders of a rational torsion point."""
    return set(_POINT_ORDERS)


@dataclass(frozen=True)
class TorsionReport:
    order_bound: int
    points: tuple = ()  # (point, order) pairs, identity excluded
    group_structure: str = "trivial"
    counts: dict = field(default_factory=dict)  # prime -> #E(F_p) actually used

    @property
    def order(self):
        return len(self.points) + 1

    @property
    def is_trivial(self):
        return not self.points


def default_primes(curve: Curve, how_many: int = 5):
    """The first `how_many` odd primes >= 5 of good reduction."""
    good = (p for p in odd_primes(5) if has_good_reduction(curve, p))
    return list(islice(good, how_many))


def _point_counts(curve, primes):
    counts = {}
    for p in primes:
        if p % 2 and has_good_reduction(curve, p):
            counts[p] = count_points(reduce_curve(curve, p)).order
    if not counts:
        raise NoUsablePrime(f"no prime of good reduction among {list(primes)}")
    return counts


def _bound_from_counts(counts):
    g = 0
    for n in counts.values():
        g = gcd(g, n)
    # lcm of the admissible group orders dividing g
    bound = 1
    for d in _GROUP_ORDERS:
        if g % d == 0:
            bound = bound * d // gcd(bound, d)
    return bound


def torsion_order_divisor_bound(curve: Curve, primes) -> int:
    """A number the torsion order must divide; bad primes are skipped."""
    return _bound_from_counts(_point_counts(curve, primes))


def two_torsion_points(curve: Curve):
    xs = integer_roots([1, 0, curve.a, curve.b])
    return [Point(x, 0) for x in xs]


def three_torsion_roots(curve: Curve):
    """Integer x-coordinates where the 3-division polynomial vanishes."""
    a, b = curve.a, curve.b
    return integer_roots([3, 0, 6 * a, 12 * b, -a * a])


def _square_divisor_roots(n: int):
    """All y >= 1 with y^2 dividing n."""
    ys = [1]
    for prime, e in sympy.factorint(abs(n)).items():
        ys = [y * prime**k for y in ys for k in range(e // 2 + 1)]
    return sorted(ys)


def nagell_lutz_candidates(curve: Curve):
    """Integral points with y = 0 or y^2 | discriminant, sorted by (x, y)."""
    a, b = curve.a, curve.b
    points = list(two_torsion_points(curve))
    for y in _square_divisor_roots(discriminant(curve)):
        for x in integer_roots([1, 0, a, b - y * y]):
            points.append(Point(x, y))
            points.append(Point(x, -y))
    return sorted(points)


def _order(curve, P, cap=max(_POINT_ORDERS)):
    Q = P
    for n in range(1, cap + 1):
        if Q is IDENTITY:
            return n
        Q = add(curve, Q, P)
    return None


def torsion_subgroup(curve: Curve, primes=None) -> TorsionReport:
    if primes is None:
        primes = default_primes(curve)
    counts = _point_counts(curve, primes)
    bound = _bound_from_counts(counts)
    if bound == 1:
        return TorsionReport(1, (), "trivial", counts)
    pts = []
    for P in nagell_lutz_candidates(curve):
        n = _order(curve, P)
        if n is not None:
            pts.append((P, n))
    size = len(pts) + 1
    if bound % size:
        raise TorsionInconsistency(f"subgroup of order {size} does not divide bound {bound}")
    if size == 1:
        structure = "trivial"
    elif any(n == size for _, n in pts):
        structure = f"cyclic({size})"
    else:
        structure = f"product(2,{size // 2})"
    return TorsionReport(bound, tuple(pts), structure, counts)
