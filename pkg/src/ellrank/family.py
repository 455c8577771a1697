"""The family y^2 = x^3 - m^2 x + p^2 q^2 and its marked points."""

from __future__ import annotations

from dataclasses import dataclass

from .arith import is_prime
from .errors import EqualPrimes, InvalidPrime, NonpositiveM
from .weierstrass import Curve, Point, add

FLAG_NAMES = ("m_not_0_mod_4", "m_2_mod_64", "p_ne_q", "p_ndiv_m", "q_ndiv_m")


def compute_flags(m: int, p: int, q: int) -> dict:
    return {
        "m_not_0_mod_4": m % 4 != 0,
        "m_2_mod_64": m % 64 == 2,
        "p_ne_q": p != q,
        "p_ndiv_m": m % p != 0,
        "q_ndiv_m": m % q != 0,
    }


@dataclass(frozen=True)
class FamilyParams:
    m: int
    p: int
    q: int

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 1:
            raise NonpositiveM(f"m must be a positive integer, got {self.m!r}")
        for name in ("p", "q"):
            v = getattr(self, name)
            if not isinstance(v, int) or v == 2 or not is_prime(v):
                raise InvalidPrime(f"{name}={v!r} is not an odd prime")
        if self.p == self.q:
            raise EqualPrimes(f"p and q must differ (both {self.p})")

    @property
    def flags(self) -> dict:
        return compute_flags(self.m, self.p, self.q)

    @property
    def hypotheses_met(self) -> bool:
        return all(self.flags.values())

    @property
    def curve(self) -> Curve:
        return Curve(-self.m * self.m, (self.p * self.q) ** 2)


def make_family(m: int, p: int, q: int):
    fam = FamilyParams(m, p, q)
    return fam, fam.curve


def marked_points(family: FamilyParams):
    """A = (0, pq), B = (m, pq) and their sum, which is always (-m, -pq)."""
    pq = family.p * family.q
    A = Point(0, pq)
    B = Point(family.m, pq)
    AB = add(family.curve, A, B)
    assert AB == Point(-family.m, -pq), AB
    return A, B, AB
