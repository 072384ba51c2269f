import random
from fractions import Fraction

import pytest

from qcolour.crystal import (ClassicalColouring, Edge,
                             PointwiseColouring, PolySeriesColouring,
                             QuantumColouring, RegRat, U, V, cartan_dual,
                             check_h_admissible, colouring_from_config,
                             colouring_from_congruence, colouring_to_config,
                             congruence, factorial_product,
                             h_admissible_expansion, interpolation_colouring,
                             isogeny_colouring, named_colouring,
                             parse_poly_uv, poly_uv, specialize_colouring)
from qcolour.polys import Poly
from qcolour.series import QQ, TruncSeries1, quantum_number_series

CL = ClassicalColouring()
QU = QuantumColouring(order=6)


def test_edge_bounds():
    Edge(1, 3, 3)
    with pytest.raises(ValueError):
        Edge(1, 3, 4)
    with pytest.raises(ValueError):
        Edge(1, 3, 0)
    with pytest.raises(ValueError):
        Edge(2, 3, 1)


def test_eval_edge_examples():
    assert CL.eval_edge(Edge(-1, 3, 2)) == 2
    e = QU.eval_edge(Edge(1, 5, 2))
    assert e.coeffs[:3] == (Fraction(2), Fraction(0), Fraction(1))
    assert QU.eval_edge(Edge(1, 9, 1)) == TruncSeries1.one(QQ, 6)
    assert QU.eval_edge(Edge(-1, 4, 1)) == TruncSeries1.one(QQ, 6)


def test_congruence_closed_forms():
    ccl = congruence(CL, 4)
    assert ccl.closed_form[0] == V * (U - V + 1)
    cq = congruence(QU, 6)
    assert cq.value(5, 2) == \
        quantum_number_series(2, 6) * quantum_number_series(4, 6)


def test_congruence_normalized_representative():
    cong = congruence(QU, 5)
    psi = colouring_from_congruence(cong)
    again = congruence(psi, 5)
    for n in range(1, 7):
        for k in range(1, n + 1):
            assert again.value(n, k) == cong.value(n, k)


def test_factorial_product_examples():
    ccl = congruence(CL, 4)
    assert factorial_product(ccl, 3, 2).coeffs[0] == 12
    assert factorial_product(ccl, 5, 0) == TruncSeries1.one(QQ, 4)
    import math
    assert factorial_product(ccl, 4, 4).coeffs[0] == math.factorial(4) ** 2
    with pytest.raises(ValueError):
        factorial_product(ccl, 3, 4)


def test_admissibility_classical_quantum():
    assert check_h_admissible(CL, 6).all_pass()
    assert check_h_admissible(QU, 6).all_pass()


def test_admissibility_failure_modes():
    one = poly_uv({(0, 0): Fraction(1)})
    pert = PolySeriesColouring([V, one], [V, one], order=4)
    rep = check_h_admissible(pert, 4)
    assert rep.deformation.status == "pass"
    assert rep.verma.status == "fail" and rep.verma.order == 1
    # wrong leading term
    bad = PolySeriesColouring([V + 1], [V], order=3)
    assert check_h_admissible(bad, 3).deformation.status == "fail"


def test_admissibility_undecidable_for_tables():
    psi = PointwiseColouring(rule=lambda s, n, k: Fraction(k))
    rep = check_h_admissible(psi, 3)
    assert all(v.status == "undecidable" for v in rep.verdicts())


def test_quotient_axiom_edgewise_recheck():
    # [psi](n, n+1) evaluates to the zero series for admissible forms
    cq = congruence(QU, 5)
    for n in range(0, 9):
        assert cq.value(n, n + 1).is_zero()


def test_cartan_dual_involution():
    assert cartan_dual(cartan_dual(QU)) is QU
    table = PointwiseColouring(rule=lambda s, n, k:
                               Fraction(k if s > 0 else k + 1))
    dual = cartan_dual(table)
    assert dual.minus(4, 2) == table.plus(4, 2)
    assert dual.plus(4, 2) == table.minus(4, 2)


def test_congruence_stable_under_double_dual():
    rng = random.Random(2)
    table = PointwiseColouring(
        rule=lambda s, n, k: Fraction(rng.randrange(1, 9)))
    cache = {}
    def rule(s, n, k):
        key = (s, n, k)
        if key not in cache:
            cache[key] = Fraction(rng.randrange(1, 9))
        return cache[key]
    psi = PointwiseColouring(rule=rule)
    twice = cartan_dual(cartan_dual(psi))
    for n in range(1, 9):
        for k in range(1, n + 1):
            assert twice.congruence_value(n, k) == psi.congruence_value(n, k)


def test_isogeny_colouring_examples():
    assert isogeny_colouring(CL, 1, 0) is CL
    two = isogeny_colouring(CL, 2, 0)
    for n in range(2, 7):
        for k in range(1, n + 1):
            assert two.minus(n, k) == (2 * k - 1) * (2 * k)
    shifted = isogeny_colouring(CL, 2, 1)
    assert shifted.plus(5, 2) == (2 * 2) * (2 * 2 + 1)
    with pytest.raises(ValueError):
        isogeny_colouring(CL, 2, 2)


def test_interpolation_endpoints():
    blend = interpolation_colouring(CL, CL, 2, "u1")
    at1 = specialize_colouring(blend, 1)
    at0 = specialize_colouring(blend, 0)
    for n in range(1, 13):
        for k in range(1, n + 1):
            assert at1.minus(n, k) == CL.minus(n, k)
            want = CL.minus(n, k // 2) if k % 2 == 0 else Fraction(1)
            assert at0.minus(n, k) == want
    swapped = interpolation_colouring(CL, CL, 2, "u0")
    at0s = specialize_colouring(swapped, 0)
    for n in range(1, 13):
        for k in range(1, n + 1):
            assert at0s.plus(n, k) == CL.plus(n, k)


def test_index_maps_of_colourings():
    # I-colourings are plain index maps; the transformers act per index
    psi = {0: CL, 1: QU}
    dual = cartan_dual(psi)
    assert dual[1].minus(3, 2) == QU.plus(3, 2)
    blend = interpolation_colouring({0: CL, 1: CL}, {0: CL, 1: CL},
                                    {0: 1, 1: 2})
    assert blend[1].xi == 2 and blend[0].xi == 1
    at1 = specialize_colouring(blend, 1)
    assert at1[0].minus(3, 2) == 2


def test_interpolation_endpoints_distinct_colourings():
    rng = random.Random(23)
    cache = {}
    def rule(s, n, k):
        key = (s, n, k)
        if key not in cache:
            cache[key] = Fraction(rng.randrange(1, 9))
        return cache[key]
    other = PointwiseColouring(rule=rule)
    blend = interpolation_colouring(CL, other, 3, "u1")
    at1 = specialize_colouring(blend, 1)
    at0 = specialize_colouring(blend, 0)
    for n in range(1, 13):
        for k in range(1, n + 1):
            assert at1.plus(n, k) == CL.plus(n, k)
            if k % 3 == 0:
                assert at0.plus(n, k) == other.plus(n, k // 3)
            else:
                assert at0.plus(n, k) == 1


def test_expansion_quotient_axiom_edgewise():
    rng = random.Random(77)
    cache = {}
    def rule(s, n, k):
        key = (s, n, k)
        if key not in cache:
            cache[key] = Fraction(rng.randrange(1, 8), rng.randrange(1, 4))
        return cache[key]
    expn = h_admissible_expansion(PointwiseColouring(rule=rule), 3)
    cong = congruence(expn, 4)
    for n in range(0, 10):
        assert cong.value(n, n + 1).is_zero()


def test_interpolation_degenerate_isogeny():
    blend = interpolation_colouring(CL, CL, 1)
    # straight affine blend of psi and psi' collapses for equal inputs
    for n in range(1, 6):
        for k in range(1, n + 1):
            assert blend.minus(n, k) == RegRat(Fraction(k))


def test_regrat_ring_guards():
    u = Poly.variable(("u",), "u")
    with pytest.raises(ArithmeticError):
        RegRat(Fraction(1), u)                 # pole at 0
    with pytest.raises(ArithmeticError):
        RegRat(Fraction(1), u - 1)             # pole at 1
    r = RegRat(Fraction(1), u - 2)
    with pytest.raises(ArithmeticError):
        r.at(2)
    assert r.at(0) == Fraction(-1, 2)


def test_specialize_constant_colouring():
    psi = PointwiseColouring(rule=lambda s, n, k: Fraction(5))
    assert specialize_colouring(psi, 7).minus(3, 1) == 5


def test_expansion_classical_is_trivial():
    expn = h_admissible_expansion(CL, 5)
    assert expn.plus_coeffs[0] == V
    assert all(p.is_zero() for p in expn.plus_coeffs[1:])
    assert all(p.is_zero() for p in expn.minus_coeffs[1:])


def test_expansion_random_colouring():
    rng = random.Random(31)
    cache = {}
    def rule(s, n, k):
        key = (s, n, k)
        if key not in cache:
            cache[key] = Fraction(rng.randrange(1, 10), rng.randrange(1, 4))
        return cache[key]
    psi = PointwiseColouring(rule=rule)
    depth = 4
    expn = h_admissible_expansion(psi, depth)
    assert check_h_admissible(expn, depth + 1).all_pass()
    for n in range(1, depth + 1):
        for k in range(1, n + 1):
            for sign, coeffs in ((1, expn.plus_coeffs),
                                 (-1, expn.minus_coeffs)):
                tot = sum((p(Fraction(n), Fraction(k)) for p in coeffs),
                          Fraction(0))
                assert tot == psi.value(sign, n, k)


def test_expansion_antisymmetry_constraint():
    rng = random.Random(8)
    cache = {}
    def rule(s, n, k):
        key = (s, n, k)
        if key not in cache:
            cache[key] = Fraction(rng.randrange(1, 7))
        return cache[key]
    expn = h_admissible_expansion(PointwiseColouring(rule=rule), 3)
    for pm, pp in zip(expn.minus_coeffs, expn.plus_coeffs):
        assert pp.substitute(u=-U - 2) == -pm.substitute(v=-V)


def test_poly_parser():
    assert parse_poly_uv("v(u - v + 1)") == V * (U - V + 1)
    assert parse_poly_uv("3/2*u^2*v - 1") == \
        U * U * V * Fraction(3, 2) - Fraction(1)
    assert parse_poly_uv("-u + 2") == -U + 2
    with pytest.raises(ValueError):
        parse_poly_uv("u + x")
    with pytest.raises(ValueError):
        parse_poly_uv("u + ")


def test_colouring_config_roundtrip():
    one = poly_uv({(0, 0): Fraction(1)})
    pert = PolySeriesColouring([V, one], [V], order=3)
    text = colouring_to_config(pert)
    again = colouring_from_config(text)
    assert again.minus_coeffs == pert.minus_coeffs
    assert again.plus_coeffs == pert.plus_coeffs
    q = colouring_from_config("variant = quantum\nd = 2\norder = 4\n")
    assert isinstance(q, QuantumColouring) and q.d == 2 and q.order == 4


def test_transformer_configs_roundtrip():
    base = colouring_from_config(
        "variant = isogeny\nxi = 2\nd = 1\nbase.variant = classical\n")
    assert base.minus(5, 2) == (2 * 2) * (2 * 2 + 1)
    text = colouring_to_config(base)
    again = colouring_from_config(text)
    assert again.minus(5, 2) == base.minus(5, 2)

    blend = colouring_from_config(
        "variant = interp\nxi = 2\norientation = u1\n"
        "first.variant = classical\nsecond.variant = classical\n")
    assert blend.minus(4, 2).at(1) == 2
    spec = colouring_from_config(colouring_to_config(
        specialize_colouring(blend, 0)))
    assert spec.minus(4, 2) == 1

    dual = colouring_from_config(
        "variant = cartan-dual\nbase.variant = pointwise\n"
        "base.value.-1.2.1 = 3\nbase.value.1.2.1 = 5\n")
    assert dual.minus(2, 1) == 5 and dual.plus(2, 1) == 3


def test_named_colouring():
    assert isinstance(named_colouring("classical"), ClassicalColouring)
    assert named_colouring("quantum:3", order=4).d == 3
    with pytest.raises(ValueError):
        named_colouring("nope")


def test_interpolation_rejects_non_admissible_inputs():
    zero_at = PointwiseColouring(
        rule=lambda s, n, k: Fraction(0) if (n, k) == (3, 2) else Fraction(k))
    blend = interpolation_colouring(zero_at, CL, 2)
    with pytest.raises(ArithmeticError):
        blend.minus(3, 2)
