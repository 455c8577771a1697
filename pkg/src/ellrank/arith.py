"""Integer helpers: primality, exact square roots, small factorizations."""

from fractions import Fraction
from math import isqrt

# Deterministic for every n < 3.3 * 10**24, which covers all 64-bit inputs.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin primality test for 64-bit sized integers."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def odd_primes(start: int = 3):
    """Yield odd primes >= start in increasing order."""
    n = max(start, 3)
    if n % 2 == 0:
        n += 1
    while True:
        if is_prime(n):
            yield n
        n += 2


def exact_isqrt(n: int):
    """Return r with r*r == n, or None when n is not a perfect square."""
    if n < 0:
        return None
    r = isqrt(n)
    return r if r * r == n else None


def rational_sqrt(q: Fraction):
    """Nonnegative rational square root of q, or None if q is not a square in Q."""
    num = exact_isqrt(q.numerator)
    if num is None:
        return None
    den = exact_isqrt(q.denominator)
    if den is None:
        return None
    return Fraction(num, den)


def two_prime_split(n: int):
    """Factor n as p*q with p < q distinct odd primes, by trial division.

    Returns (p, q) or None if n has any other shape.
    """
    if n < 15 or n % 2 == 0:
        return None
    d = 3
    while d * d <= n:
        if n % d == 0:
            q = n // d
            if q != d and is_prime(d) and is_prime(q):
                return d, q
            return None
        d += 2
    return None
