"""Builtin corpus of congruence obstructions behind the torsion and halving arguments.

Tags read <claim>/<branch>[/full]: the bare form is the final displayed
congruence, the /full form reduces the un-simplified equation itself.
Class representatives such as m = 2 + 64 t are substituted into the text.
"""

from .obstructions import ObstructionSpec, Variable

V = Variable

# x(4P) = x(-P) with 4 y^2 denominators cleared and y^2 replaced by the cubic.
_N = "(x**4 + m**4 + 2*m**2*x**2 - 8*p**2*q**2*x)"
_Y = "(x**3 - m**2*x + p**2*q**2)"
ORDER5_EQUATION = (
    f"{_N}**4 + 256*m**4*{_Y}**4 + 32*m**2*{_Y}**2*{_N}**2"
    f" - 512*p**2*q**2*{_Y}**3*{_N}"
    f" - 16*x*{_Y}*(-8*{_Y}**2 - (3*x**2 - m**2)*({_N} - 4*x*{_Y}))**2"
)

_ODD_PQ = (V("p", "odd"), V("q", "odd"))


def builtin_obstructions():
    return [
        # no point of order 3
        ObstructionSpec(
            "order3/x-0-mod-4", 6, "2*k1 - 5", (V("k1"),),
            note="x = 4k, m = 2 + 64 k1",
        ),
        ObstructionSpec(
            "order3/x-2-mod-4", 4, "3*(1 + 2*k)", (V("k"),),
        ),
        ObstructionSpec(
            "order3/x-2-mod-4/full", 32,
            "((2 + 64*t)**2 + 3*(2 + 4*k)**2)**2"
            " - 12*(2 + 4*k)*((2 + 4*k)**3 + p**2*q**2)",
            (V("t"), V("k")) + _ODD_PQ,
            note="(m^2 + 3x^2)^2 = 12 x (x^3 + p^2 q^2) with x = 2 + 4k",
        ),
        ObstructionSpec(
            "order3/n-0-mod-3", 8, "4*x2 - 5", (V("x2"),),
        ),
        ObstructionSpec(
            "order3/n-0-mod-3/full", 8,
            "m1**4 + 2*3**5*m1**2*x2**2 - 3**9*x2**4 - 4*p**2*q**2*x2",
            (V("m1", "22 mod 64"), V("x2", "odd")) + _ODD_PQ,
            note="m = 3 m1 = 2 mod 64 forces m1 = 22 mod 64; x = 27 x2 odd",
        ),
        ObstructionSpec(
            "order3/case-I", 3, "alpha**6 + p**2*q**2",
            (V("alpha", "coprime 3"), V("p"), V("q")),
            note="x = alpha^2, x^3 + p^2 q^2 = 3 beta^2",
        ),
        ObstructionSpec(
            "order3/case-II/3-divides-p", 3, "p**2*q**2 - 1",
            (V("p", "0 mod 3"), V("q")),
        ),
        # no point of order 5
        ObstructionSpec(
            "order5/x-odd", 4, "(m**2 + 1)**8", (V("m", "2 mod 4"),),
        ),
        ObstructionSpec(
            "order5/x-odd/full", 4, ORDER5_EQUATION,
            (V("x", "odd"), V("m", "2 mod 4")) + _ODD_PQ,
        ),
        ObstructionSpec(
            "order5/x-even/full", 4, ORDER5_EQUATION,
            (V("x", "even"), V("m", "not 0 mod 4")) + _ODD_PQ,
            note="claimed: x even forces m = 0 mod 4",
        ),
        # no point of order 7
        ObstructionSpec(
            "order7/x-odd", 8,
            "(1 + m**4)**8*(4*(3 - m**2)**2*(1 + m**4 + 2*m**2)**3 + (1 + m**4)**4)",
            (V("m", "2 mod 64"),),
        ),
        # A = (0, pq) is not a double
        ObstructionSpec(
            "halving-A/k-odd", 4, "k**8 + 1 + 2*k**4 - k**2*p**2*q**2",
            (V("k", "odd"),) + _ODD_PQ,
            note="x = 2 k^2",
        ),
        ObstructionSpec(
            "halving-A/k-odd/full", 64,
            "16*k**8 + (2 + 64*t)**4 + 8*k**4*(2 + 64*t)**2 - 16*k**2*p**2*q**2",
            (V("k", "odd"), V("t")) + _ODD_PQ,
        ),
        ObstructionSpec(
            "halving-A/k-even/full", 64,
            "(64*k1**4 + m**2)**2 - 64*k1**2*p**2*q**2",
            (V("k1"), V("m", "not 0 mod 4")) + _ODD_PQ,
            note="x = 8 k1^2 in (x^2 + m^2)^2 = 8 p^2 q^2 x",
        ),
        # B = (m, pq) is not a double
        ObstructionSpec(
            "halving-B", 4, "w**2 - (4*s + 3*m)",
            (V("w"), V("s"), V("m", "2 mod 4")),
            note="x - m = 2s, 4s + 3m = w^2",
        ),
        # A + B = (-m, -pq) is not a double
        ObstructionSpec(
            "halving-AB", 8, "2*s**4 - 2*p**2*q**2*s - p**2*q**2",
            (V("s"),) + _ODD_PQ,
        ),
        ObstructionSpec(
            "halving-AB/full", 16,
            "4*s**4 + 16*m*s**3 + 20*m**2*s**2 + 8*m**3*s - 4*p**2*q**2*s"
            " + m**4 - p**2*q**2*m",
            (V("s"), V("m", "2 mod 16")) + _ODD_PQ,
            note="x - m = 2s",
        ),
        # enumerator sanity checks
        ObstructionSpec(
            "sanity/parity", 2, "x", (V("x"),), expect_empty=False,
        ),
        ObstructionSpec(
            "sanity/order5-odd-m", 4, "(m**2 + 1)**8", (V("m"),), expect_empty=False,
            note="solutions are exactly the odd m",
        ),
    ]
