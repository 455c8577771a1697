"""Membership in 2E(Q) by exact halving, and the rank >= 2 certificate."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import polyroots
from .arith import rational_sqrt
from .errors import CertificateFailed
from .torsion import default_primes, torsion_subgroup, two_torsion_points
from .weierstrass import IDENTITY, Curve, Point, double


@dataclass(frozen=True)
class HalvingQuartic:
    """c4 x^4 + c3 x^3 + c2 x^2 + c1 x + c0, whose roots are x(Q) for 2Q = T."""

    coefficients: tuple
    target: Fraction

    @property
    def c4(self):
        return self.coefficients[0]


def halving_quartic(curve: Curve, x_target) -> HalvingQuartic:
    """Clear the doubling formula x(2Q) = x_target; scaled by den(x_target)."""
    t = Fraction(x_target)
    u, v = t.numerator, t.denominator
    a, b = curve.a, curve.b
    coeffs = (v, -4 * u, -2 * a * v, -(8 * b * v + 4 * a * u), a * a * v - 4 * b * u)
    return HalvingQuartic(coeffs, t)


def rational_roots(q: HalvingQuartic):
    return polyroots.rational_roots(list(q.coefficients))


def halve_point(curve: Curve, T):
    """Every rational Q with 2Q = T, sorted by (x, y)."""
    if T is IDENTITY:
        return [IDENTITY] + two_torsion_points(curve)
    found = []
    for x in rational_roots(halving_quartic(curve, T.x)):
        y = rational_sqrt(curve.rhs(x))
        if y is None or y == 0:
            continue
        for Q in (Point(x, y), Point(x, -y)):
            if double(curve, Q) == T:
                found.append(Q)
    return sorted(found)


def is_in_2E(curve: Curve, T) -> bool:
    return bool(halve_point(curve, T))


@dataclass(frozen=True)
class NotDoubleEvidence:
    label: str
    point: Point
    quartic: tuple
    quartic_roots: tuple  # rational roots found; none may lift to a half
    halves: tuple

    @property
    def holds(self):
        return not self.halves


def not_double_evidence(curve: Curve, label: str, T) -> NotDoubleEvidence:
    q = halving_quartic(curve, T.x)
    return NotDoubleEvidence(
        label, T, q.coefficients, tuple(rational_roots(q)), tuple(halve_point(curve, T))
    )


@dataclass(frozen=True)
class RankCertificate:
    family: object  # FamilyParams
    torsion_primes: tuple
    torsion_counts: dict
    torsion_bound: int
    torsion_trivial: bool
    not_double: tuple = field(default_factory=tuple)  # NotDoubleEvidence for A, B, A+B
    rank_lower_bound: int = 0

    @property
    def hypotheses_met(self):
        return self.family.hypotheses_met

    @property
    def facts(self):
        out = {"torsion_trivial": self.torsion_trivial}
        for ev in self.not_double:
            out[f"{ev.label}_not_double"] = ev.holds
        return out

    @property
    def note(self):
        if not self.hypotheses_met:
            return "outside stated hypotheses"
        return ""

    def explanation(self):
        if self.rank_lower_bound < 2:
            return "facts insufficient for rank >= 2"
        return (
            "torsion is trivial, so E(Q)/2E(Q) has order 2^r; A, B and A+B are not "
            "doubles, so [O], [A], [B], [A+B] are four distinct classes and r >= 2"
        )


def _lower_bound(torsion_trivial, not_double):
    if not torsion_trivial:
        return 0
    holding = sum(ev.holds for ev in not_double)
    if holding == len(not_double) == 3:
        return 2
    return 1 if holding else 0


def rank2_certificate(family, primes=None) -> RankCertificate:
    """Certify rank >= 2 from trivial torsion and three non-doubles.

    Raises CertificateFailed when the family satisfies the hypotheses but a
    fact fails; outside the hypotheses the facts are recorded as found.
    """
    from .family import marked_points

    curve = family.curve
    if primes is None:
        primes = default_primes(curve)
    tors = torsion_subgroup(curve, primes)
    A, B, AB = marked_points(family)
    evidence = tuple(
        not_double_evidence(curve, label, P) for label, P in (("A", A), ("B", B), ("AB", AB))
    )
    cert = RankCertificate(
        family=family,
        torsion_primes=tuple(sorted(tors.counts)),
        torsion_counts=dict(tors.counts),
        torsion_bound=tors.order_bound,
        torsion_trivial=tors.is_trivial,
        not_double=evidence,
        rank_lower_bound=_lower_bound(tors.is_trivial, evidence),
    )
    if family.hypotheses_met:
        for fact, ok in cert.facts.items():
            if not ok:
                raise CertificateFailed(fact, f"m={family.m}, p={family.p}, q={family.q}")
    return cert

