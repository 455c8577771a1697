import itertools

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from ellrank import (
    BudgetExceeded, EqualPrimes, InvalidPrime, NonpositiveM, ObstructionSpec, Point, Variable,
    builtin_obstructions, check_obstruction, discriminant, is_on_curve, make_family,
    marked_points,
)
from ellrank.family import compute_flags
from ellrank.report import parse_table
from ellrank.cli import _bundled_table


def test_make_family():
    fam, E = make_family(2, 3, 7)
    assert (E.a, E.b) == (-4, 441)
    assert all(fam.flags.values())
    fam, _ = make_family(66, 3, 5)
    assert fam.flags["p_ndiv_m"] is False
    assert not fam.hypotheses_met


@pytest.mark.parametrize(
    "args,err",
    [((2, 3, 3), EqualPrimes), ((2, 9, 7), InvalidPrime), ((2, 2, 7), InvalidPrime),
     ((0, 3, 7), NonpositiveM), ((-2, 3, 7), NonpositiveM)],
)
def test_make_family_errors(args, err):
    with pytest.raises(err):
        make_family(*args)


@given(st.integers(1, 10**6), st.sampled_from([3, 5, 7, 11, 13, 17, 19, 23]),
       st.sampled_from([29, 31, 37, 41, 43, 47]))
def test_flags_match_modular_arithmetic(m, p, q):
    fam, _ = make_family(m, p, q)
    f = fam.flags
    assert f == compute_flags(m, p, q) == fam.flags
    assert f["m_not_0_mod_4"] == (m & 3 != 0)
    assert f["m_2_mod_64"] == ((m - 2) % 64 == 0)
    assert f["p_ndiv_m"] == (sympy.gcd(m, p) == 1)
    assert f["q_ndiv_m"] == (sympy.gcd(m, q) == 1)


def test_marked_points():
    fam, E = make_family(2, 3, 7)
    assert marked_points(fam) == (Point(0, 21), Point(2, 21), Point(-2, -21))
    fam, E = make_family(66, 5, 13)
    A, B, AB = marked_points(fam)
    assert (A, B, AB) == (Point(0, 65), Point(66, 65), Point(-66, -65))
    for P in (A, B, AB):
        assert is_on_curve(E, P)


def test_table_curves_nonsingular():
    rows, _ = parse_table(_bundled_table())
    for r in rows:
        _, E = make_family(r.m, r.p, r.q)
        assert 4 * r.m**6 != 27 * r.p**4 * r.q**4
        assert discriminant(E) != 0
        A, B, AB = marked_points(make_family(r.m, r.p, r.q)[0])
        assert AB == Point(-r.m, -r.pq)


# --- obstruction enumerator -------------------------------------------------

def naive_check(spec):
    """Oracle: python-level enumeration; constraints tested on integer lifts."""
    n = spec.modulus

    def ok(var, v):
        # some integer z = v mod n in a window of lifts satisfies every clause
        return any(_satisfies(var.constraint, z) for z in range(v, v + n * 64 * 9, n))

    domains = [[v for v in range(n) if ok(var, v)] for var in spec.variables]
    names = [v.name for v in spec.variables]
    syms = sympy.symbols(names)
    f = sympy.lambdify(syms, sympy.sympify(spec.polynomial, locals=dict(zip(names, syms))))
    return [dict(zip(names, vals)) for vals in itertools.product(*domains)
            if int(f(*vals)) % n == 0]


def _satisfies(constraint, z):
    for clause in constraint.split(";"):
        c = clause.split()
        if c == ["any"]:
            continue
        if c == ["odd"] and z % 2 == 1 or c == ["even"] and z % 2 == 0:
            continue
        if len(c) == 3 and c[1] == "mod" and z % int(c[2]) == int(c[0]) % int(c[2]):
            continue
        if len(c) == 4 and c[0] == "not" and z % int(c[3]) != int(c[1]) % int(c[3]):
            continue
        if c[0] == "coprime" and sympy.gcd(z, int(c[1])) == 1:
            continue
        return False
    return True


SMALL_SPECS = [s for s in builtin_obstructions() if s.space() <= 5000]


@pytest.mark.parametrize("spec", SMALL_SPECS, ids=lambda s: s.name)
def test_enumerator_matches_naive_oracle(spec):
    assert check_obstruction(spec) == naive_check(spec)


constraints = st.sampled_from(["any", "odd", "even", "2 mod 4", "not 0 mod 4", "coprime 3",
                               "1 mod 3", "22 mod 64", "odd; coprime 3"])


@settings(max_examples=60, deadline=None)
@given(st.sampled_from([2, 3, 4, 6, 8, 12, 16]), constraints, constraints,
       st.lists(st.integers(-9, 9), min_size=4, max_size=4))
def test_random_specs_match_naive_oracle(n, c1, c2, k):
    poly = f"{k[0]}*x**3 + {k[1]}*x*y + {k[2]}*y**2 + {k[3]}"
    spec = ObstructionSpec("random", n, poly, (Variable("x", c1), Variable("y", c2)))
    assert check_obstruction(spec) == naive_check(spec)


def test_enumerator_sanity():
    spec = ObstructionSpec("parity", 2, "x", (Variable("x"),), expect_empty=False)
    assert check_obstruction(spec) == [{"x": 0}]


def test_lemma_examples():
    a = ObstructionSpec("A", 4, "k**8 + 1 + 2*k**4 - k**2*p**2*q**2",
                        (Variable("k", "odd"), Variable("p", "odd"), Variable("q", "odd")))
    assert check_obstruction(a) == []
    b = ObstructionSpec("B", 4, "w**2 - (4*s + 3*m)",
                        (Variable("w"), Variable("s"), Variable("m", "2 mod 4")))
    assert check_obstruction(b) == []


def test_budget():
    big = ObstructionSpec("big", 2**16, "x*y", (Variable("x"), Variable("y")))
    with pytest.raises(BudgetExceeded):
        check_obstruction(big)
    with pytest.raises(BudgetExceeded):
        check_obstruction(ObstructionSpec("huge", 2**17, "x", (Variable("x"),)))


def test_corpus_shape():
    corpus = builtin_obstructions()
    claims = [s for s in corpus if s.expect_empty]
    assert len(claims) >= 8
    for prefix in ("order3/", "order5/", "order7/", "halving-A/", "halving-B", "halving-AB"):
        assert any(s.name.startswith(prefix) for s in claims)
    assert all(s.space() <= 10**8 and s.modulus <= 2**16 for s in corpus)
    assert len({s.name for s in corpus}) == len(corpus)


_REFUTED = {"order5/x-even/full"}


@pytest.mark.parametrize("spec", [s for s in builtin_obstructions() if s.name not in _REFUTED],
                         ids=lambda s: s.name)
def test_corpus_verdicts(spec):
    sols = check_obstruction(spec)
    assert (not sols) == spec.expect_empty, sols[:3]


def test_order5_even_x_reduction_admits_m_2_mod_4():
    """x even does not force m = 0 mod 4 at modulus 4: residues with m = 2 survive."""
    spec = next(s for s in builtin_obstructions() if s.name == "order5/x-even/full")
    sols = check_obstruction(spec)
    assert {"x": 0, "m": 2, "p": 1, "q": 1} in sols
    assert {s["m"] for s in sols} == {2}


def test_spec_round_trip():
    for s in builtin_obstructions():
        assert ObstructionSpec.from_dict(s.to_dict()) == s
