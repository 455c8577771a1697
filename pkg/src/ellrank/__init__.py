"""Exact elliptic-curve arithmetic and rank >= 2 certificates for y^2 = x^3 - m^2 x + p^2 q^2."""

__version__ = "0.1.0"

from .errors import (
    BadReduction,
    BudgetExceeded,
    CertificateFailed,
    DenominatorDivisible,
    EqualPrimes,
    InvalidPrime,
    NonpositiveM,
    NoUsablePrime,
    NotPrime,
    SingularCurve,
)
from .family import FamilyParams, make_family, marked_points
from .finite_reduction import (
    FiniteCurve,
    PointCount,
    count_points,
    has_good_reduction,
    reduce_curve,
    reduce_point,
)
from .lemmas import builtin_obstructions
from .obstructions import ObstructionSpec, Variable, check_obstruction
from .torsion import (
    TorsionReport,
    mazur_allowed_orders,
    nagell_lutz_candidates,
    three_torsion_roots,
    torsion_order_divisor_bound,
    torsion_subgroup,
    two_torsion_points,
)
from .two_descent import (
    HalvingQuartic,
    RankCertificate,
    halve_point,
    halving_quartic,
    is_in_2E,
    rank2_certificate,
    rational_roots,
)
from .weierstrass import (
    IDENTITY,
    Curve,
    Point,
    add,
    discriminant,
    double,
    is_on_curve,
    naive_height,
    negate,
    scalar_mul,
)
