import pytest

from ellrank import add, make_family, marked_points, scalar_mul

# (m, p, q) triples satisfying the family hypotheses, drawn from the rank table.
FAMILIES = [
    (2, 3, 7),
    (2, 3, 5),
    (2, 3, 11),
    (66, 5, 13),
    (130, 3, 7),
    (194, 3, 11),
    (258, 5, 7),
    (2, 17, 19),
    (194, 11, 17),
    (258, 13, 17),
]


def combination(curve, A, B, i, j):
    return add(curve, scalar_mul(curve, i, A), scalar_mul(curve, j, B))


@pytest.fixture
def c237():
    fam, curve = make_family(2, 3, 7)
    return fam, curve, marked_points(fam)


@pytest.fixture(params=FAMILIES, ids=lambda t: "m{}p{}q{}".format(*t))
def family(request):
    fam, curve = make_family(*request.param)
    return fam, curve, marked_points(fam)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is not None and mod.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in mod.RESULTS:
            terminalreporter.write_line(line)
