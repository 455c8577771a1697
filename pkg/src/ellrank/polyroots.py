"""Exact real-root isolation for univariate integer polynomials.

Polynomials are coefficient sequences, highest degree first.  Roots are
isolated with Sturm sequences over exact rationals, so every verdict
("no rational root") rests on exact sign counts rather than floating point.
"""

from fractions import Fraction
from math import gcd


def _trim(p):
    i = 0
    while i < len(p) - 1 and p[i] == 0:
        i += 1
    return list(p[i:])


def evaluate(p, x):
    acc = 0
    for c in p:
        acc = acc * x + c
    return acc


def derivative(p):
    n = len(p) - 1
    return _trim([c * (n - i) for i, c in enumerate(p[:-1])]) or [0]


def _rem(a, b):
    a = [Fraction(c) for c in a]
    lead = Fraction(b[0])
    while len(a) >= len(b) and any(a):
        f = a[0] / lead
        for i in range(len(b)):
            a[i] -= f * b[i]
        a.pop(0)
    return _trim(a) if a else [Fraction(0)]


def _is_zero(p):
    return all(c == 0 for c in p)


def _gcd(a, b):
    while not _is_zero(b):
        a, b = b, _rem(a, b)
    return a


def _quo(a, b):
    a = [Fraction(c) for c in a]
    q = []
    lead = Fraction(b[0])
    while len(a) >= len(b):
        f = a[0] / lead
        q.append(f)
        for i in range(len(b)):
            a[i] -= f * b[i]
        a.pop(0)
    return q


def squarefree_part(p):
    g = _gcd(p, derivative(p))
    if len(g) == 1:
        return [Fraction(c) for c in p]
    return _quo(p, g)


def sturm_sequence(p):
    seq = [p, derivative(p)]
    while True:
        r = _rem(seq[-2], seq[-1])
        if _is_zero(r):
            return seq
        seq.append([-c for c in r])


def _variations(seq, x):
    signs = []
    for q in seq:
        v = evaluate(q, x)
        if v:
            signs.append(v > 0)
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def _to_integer(p):
    p = [Fraction(c) for c in _trim(p)]
    den = 1
    for c in p:
        den = den * c.denominator // gcd(den, c.denominator)
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return [c // g for c in ints] if g > 1 else ints


def root_bound(p):
    """Cauchy bound: every real root r satisfies |r| < 1 + max |c_i / c_n|."""
    lead = abs(Fraction(p[0]))
    return 1 + max((abs(Fraction(c)) / lead for c in p[1:]), default=0)


def _refine(sf, seq, lo, hi, width):
    """Shrink (lo, hi], known to hold exactly one root of sf, to width <= width."""
    flo = evaluate(sf, lo)
    while hi - lo > width:
        mid = (lo + hi) / 2
        fmid = evaluate(sf, mid)
        if fmid == 0:
            return mid, mid
        if flo == 0:
            # lo is a neighbouring root; fall back to a Sturm count
            left = _variations(seq, lo) - _variations(seq, mid)
        else:
            left = (flo > 0) != (fmid > 0)
        if left:
            hi = mid
        else:
            lo, flo = mid, fmid
    return lo, hi


def isolate_real_roots(p, width=None):
    """Return half-open intervals (lo, hi], one per distinct real root.

    Intervals are refined until hi - lo <= width when width is given; an
    exactly located root r comes back as (r, r).
    """
    p = _trim(p)
    if len(p) <= 1:
        if _is_zero(p):
            raise ValueError("zero polynomial has every number as a root")
        return []
    sf = squarefree_part(p)
    seq = sturm_sequence(sf)
    bound = root_bound(sf)
    out = []
    stack = [(-bound, bound, _variations(seq, -bound), _variations(seq, bound))]
    while stack:
        lo, hi, vlo, vhi = stack.pop()
        n = vlo - vhi
        if n == 0:
            continue
        if n == 1:
            out.append(_refine(sf, seq, lo, hi, width) if width is not None else (lo, hi))
            continue
        mid = (lo + hi) / 2
        vmid = _variations(seq, mid)
        stack.append((mid, hi, vmid, vhi))
        stack.append((lo, mid, vlo, vmid))
    out.sort()
    return out


def rational_roots(p):
    """All distinct rational roots of an integer (or rational) polynomial, sorted.

    Any rational root n/d in lowest terms has d dividing the leading
    coefficient D of the primitive integer form, and two distinct fractions
    with denominators <= D are at least 1/D**2 apart; so an isolating interval
    of width below 1/(2 D**2) pins down the only possible candidate, which is
    then checked by exact substitution.
    """
    p = _to_integer(p)
    if len(p) <= 1:
        return []
    lead = abs(p[0])
    roots = []
    for lo, hi in isolate_real_roots(p, width=Fraction(1, 2 * lead * lead)):
        mid = (lo + hi) / 2
        cand = mid.limit_denominator(lead)
        if (lo < cand <= hi or cand == lo == hi) and evaluate(p, cand) == 0:
            roots.append(cand)
    return roots


def integer_roots(p):
    return [int(r) for r in rational_roots(p) if r.denominator == 1]
