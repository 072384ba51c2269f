"""Cross-checks against independently known values and scaled variants."""

from fractions import Fraction

from qcolour.crystal import (ClassicalColouring, QuantumColouring,
                             check_h_admissible, congruence,
                             interpolation_colouring)
from qcolour.gqe import GqeEquation, solve, trivialised_generator
from qcolour.repmod import build_L, freudenthal_char
from qcolour.rootdata import RootDatum, cartan_by_name
from qcolour.series import QQ, TruncSeries1, quantum_number_series

# with the long root listed first, the first fundamental weight of the
# two-length types carries the larger representation
KNOWN_DIMENSIONS = {
    ("A2", (1, 0)): 3, ("A2", (2, 0)): 6, ("A2", (2, 2)): 27,
    ("B2", (1, 1)): 16, ("B2", (2, 0)): 14, ("B2", (0, 2)): 10,
    ("G2", (1, 0)): 14, ("G2", (0, 1)): 7, ("G2", (1, 1)): 64,
    ("A3", (1, 0, 0)): 4, ("A3", (0, 1, 0)): 6, ("A3", (1, 0, 1)): 15,
    ("B3", (1, 0, 0)): 7, ("B3", (0, 0, 1)): 8,
    ("C3", (1, 0, 0)): 6, ("C3", (0, 0, 1)): 14,
    ("D4", (1, 0, 0, 0)): 8, ("F4", (0, 0, 0, 1)): 26,
}


def test_freudenthal_against_known_dimensions():
    for (nm, lam), dim in KNOWN_DIMENSIONS.items():
        datum = RootDatum.standard(cartan_by_name(nm))
        assert sum(freudenthal_char(datum, lam).values()) == dim, (nm, lam)


def test_scaled_quantum_colouring_full_flow():
    q2 = QuantumColouring(d=2, order=6)
    assert check_h_admissible(q2, 6).all_pass()
    cong = congruence(q2, 6)
    assert cong.value(4, 1) == quantum_number_series(1, 6, 2) * \
        quantum_number_series(4, 6, 2)
    sol = solve(GqeEquation.build(q2, q2, -1, order=6))
    assert sol and sol.support() == 2
    sbar = solve(GqeEquation.build(q2, ClassicalColouring(), 0, order=6))
    for n in (2, 5):
        m = build_L(n, q2, order=6)
        op = trivialised_generator(sbar, m, basis="classical")
        for p in range(1, n + 1):
            assert op.entry(p - 1, p) == \
                TruncSeries1.constant(QQ, Fraction(n - p + 1), 6)


def test_interpolation_values_are_units():
    # blended edge values stay invertible in the ring regular at 0 and 1:
    # the reciprocal exists there and the product is 1
    from qcolour.crystal import RegRat
    cl = ClassicalColouring()
    blend = interpolation_colouring(cl, cl, 3)
    one = RegRat(Fraction(1))
    for n in range(1, 9):
        for k in range(1, n + 1):
            for v in (blend.minus(n, k), blend.plus(n, k)):
                assert one / v * v == one
