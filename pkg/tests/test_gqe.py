from fractions import Fraction

import pytest

from qcolour.crystal import (ClassicalColouring, CongruenceClass,
                             PointwiseColouring, PolySeriesColouring,
                             QuantumColouring, V, congruence, poly_uv)
from qcolour.gqe import (POLY_U, GqeDegreeExhausted, GqeEquation, NoSolution,
                         deformed_commutator_operator, gqe_serre_residual,
                         rhs_row, solve, trivialised_generator,
                         verify_residuals)
from qcolour.polys import Poly
from qcolour.repmod import Operator, a2_vector_module, build_L
from qcolour.series import QQ, TruncSeries1

CL = ClassicalColouring()
U1 = Poly.variable(("u",), "u")


def classical_solution(order):
    return (TruncSeries1(POLY_U, order, [U1]),
            TruncSeries1.one(POLY_U, order))


def test_rhs_row_examples():
    ccl = congruence(CL, 4)
    assert rhs_row(ccl, -1, 4, 4).is_zero()        # p + 1 out of range
    assert rhs_row(ccl, -1, 4, 1).coeffs[0] == 6   # 2 * 3
    assert rhs_row(ccl, 0, 6, 0).is_zero()


def test_classical_degree_minus_one():
    sol = solve(GqeEquation.build(CL, CL, -1, order=6, p_max=24))
    w0, w1 = classical_solution(6)
    assert sol and sol.support() == 2
    assert sol.entry(0) == w0 and sol.entry(1) == w1
    assert sol.entry(7).is_zero()


def test_classical_degree_zero():
    sol = solve(GqeEquation.build(CL, CL, 0, order=6, p_max=24))
    assert sol and sol.support() == 2
    assert sol.entry(0).is_zero()
    assert sol.entry(1) == TruncSeries1.one(POLY_U, 6)


def test_quantum_h0_part_is_classical():
    q = QuantumColouring(order=6)
    sol = solve(GqeEquation.build(q, q, -1, order=6))
    assert sol
    assert sol.entry(0).coeffs[0] == U1
    assert sol.entry(1).coeffs[0] == Poly.constant(("u",), Fraction(1))
    for p in range(2, sol.support()):
        assert sol.entry(p).coeffs[0].is_zero()


def test_quantum_solution_is_the_textbook_relation():
    # the degree -1 rewriting for the quantum colouring is exactly
    # X+X- = [H] + X- X+: entry 0 is the truncated quantum integer of u
    # and entry 1 is the constant 1
    from qcolour.series import quantum_number_poly
    from qcolour.polys import Poly
    q = QuantumColouring(order=8)
    sol = solve(GqeEquation.build(q, q, -1, order=8))
    u = Poly.variable(("u", "v"), "u")
    hu = quantum_number_poly(u, 8)
    want = hu.map_coeffs(
        lambda c: Poly(("u",), {(e[0],): x for e, x in c.coeffs.items()}),
        ring=POLY_U)
    assert sol.support() == 2
    assert sol.entry(0) == want
    assert sol.entry(1) == TruncSeries1.one(POLY_U, 8)


def test_tail_exhaustion_is_not_a_refutation():
    # cutting the row bound below the vanishing tail is inconclusive
    with pytest.raises(GqeDegreeExhausted):
        solve(GqeEquation.build(CL, CL, -1, order=4, p_max=2))


def test_uniqueness_under_resolve():
    q = QuantumColouring(order=5)
    a = solve(GqeEquation.build(q, q, -1, order=5, p_max=16, n_check=10))
    b = solve(GqeEquation.build(q, q, -1, order=5, p_max=24, n_check=14))
    assert a.support() == b.support()
    for p in range(a.support()):
        assert a.entry(p) == b.entry(p)


def test_congruence_invariance_of_solutions():
    # colouring with psi- = 1 carrying the quantum class
    q = QuantumColouring(order=4)
    cong = congruence(q, 4)
    sol_closed = solve(GqeEquation(cong, cong, -1, 4))
    pointwise = CongruenceClass(4, rule=lambda n, k: cong.value(n, k))
    sol_sampled = solve(GqeEquation(pointwise, pointwise, -1, 4,
                                    p_max=10, n_check=10))
    assert sol_sampled.support() == sol_closed.support()
    for p in range(sol_closed.support()):
        assert sol_sampled.entry(p) == sol_closed.entry(p)


def test_shift_lemma():
    # a solution of degree -1 shifts to one of degree 0 with the product
    # class on the right
    for psi in (CL, QuantumColouring(order=4)):
        c1 = congruence(psi, 4)
        sol = solve(GqeEquation(c1, c1, -1, 4))
        shifted_rhs = c1 * c1
        entries = (TruncSeries1.zero(POLY_U, 4),) + sol.entries
        eq0 = GqeEquation(c1, shifted_rhs, 0, 4)
        assert verify_residuals(eq0, list(entries)) is None


def test_existence_matches_admissibility():
    from qcolour.crystal import check_h_admissible
    one = poly_uv({(0, 0): Fraction(1)})
    cases = [(CL, True), (QuantumColouring(order=4), True),
             (PolySeriesColouring([V, one], [V, one], order=4), False)]
    for psi, expect in cases:
        admissible = check_h_admissible(psi, 4).all_pass()
        result = solve(GqeEquation.build(psi, psi, -1, order=4))
        assert admissible is expect
        assert bool(result) is expect


def test_no_solution_witness():
    one = poly_uv({(0, 0): Fraction(1)})
    pert = PolySeriesColouring([V, one], [V, one], order=5)
    res = solve(GqeEquation.build(pert, pert, -1, order=5))
    assert isinstance(res, NoSolution)
    assert res.h_order == 1 and res.p >= 1


def test_degree_exhaustion_is_distinct():
    # admissible-looking data that is not polynomial in n: 2^n bump
    def rule(n, k):
        base = Fraction(k * (n - k + 1))
        return TruncSeries1(QQ, 3, [base, Fraction(2) ** n])
    cong = CongruenceClass(3, rule=rule)
    with pytest.raises(GqeDegreeExhausted):
        solve(GqeEquation(cong, cong, -1, 3, p_max=6, d_max=8))


def test_deformed_commutator_matches_product():
    for psi in (CL, QuantumColouring(order=6)):
        sol = solve(GqeEquation.build(psi, psi, -1, order=6))
        for n in range(0, 11):
            m = build_L(n, psi, order=6)
            lhs = deformed_commutator_operator(sol, m)
            rhs = m.operator("X0+").compose(m.operator("X0-"))
            assert (lhs - rhs).is_zero(), (psi.variant, n)


def test_commutator_on_lowest_vector():
    q = QuantumColouring(order=5)
    sol = solve(GqeEquation.build(q, q, -1, order=5))
    cong = congruence(q, 5)
    for n in (1, 3, 5):
        m = build_L(n, q, order=5)
        op = deformed_commutator_operator(sol, m)
        assert op.entry(0, 0) == cong.value(n, 1)


def test_trivialised_generator_classical_coefficients():
    q = QuantumColouring(order=6)
    sbar = solve(GqeEquation.build(q, CL, 0, order=6))
    for n in (0, 1, 4, 7):
        m = build_L(n, q, order=6)
        op = trivialised_generator(sbar, m, basis="classical")
        for p in range(1, n + 1):
            assert op.entry(p - 1, p) == \
                TruncSeries1.constant(QQ, Fraction(n - p + 1), 6)
        assert 0 not in op.columns or not op.columns[0]


def test_trivialised_generator_identity_for_classical():
    sbar = solve(GqeEquation.build(CL, CL, 0, order=5))
    m = build_L(5, CL, order=5)
    op = trivialised_generator(sbar, m, basis="module")
    assert (op - m.operator("X0+")).is_zero()


def test_serre_residual_rank2():
    q = QuantumColouring(order=6)
    sbar_q = solve(GqeEquation.build(q, CL, 0, order=6))
    sbar_cl = solve(GqeEquation.build(CL, CL, 0, order=6))
    mq = a2_vector_module("quantum", order=6)
    assert gqe_serre_residual(mq, 0, 1, sbar_q, -1) is None
    assert gqe_serre_residual(mq, 1, 0, sbar_q, -1) is None
    assert gqe_serre_residual(mq, 0, 1, sbar_q, -1, sign=-1) is None
    assert gqe_serre_residual(mq, 0, 1, sbar_cl, -1) is None


def test_serre_residual_zero_module():
    q = QuantumColouring(order=4)
    sbar_q = solve(GqeEquation.build(q, CL, 0, order=4))
    from qcolour.repmod import WeightModule
    from qcolour.rootdata import RootDatum, cartan_by_name
    datum = RootDatum.standard(cartan_by_name("A2"))
    empty = WeightModule(datum, (), (), {
        "X0+": Operator(0), "X0-": Operator(0),
        "X1+": Operator(0), "X1-": Operator(0)}, ring=QQ, order=4)
    assert gqe_serre_residual(empty, 0, 1, sbar_q, -1) is None


def test_sampling_path_on_pointwise_classical():
    cong = congruence(CL, 3)
    pointwise = CongruenceClass(3, rule=lambda n, k: cong.value(n, k))
    sol = solve(GqeEquation(pointwise, pointwise, -1, 3, p_max=8, n_check=8))
    w0, w1 = classical_solution(3)
    assert sol.entry(0) == w0 and sol.entry(1) == w1


def test_full_chain_on_expanded_random_colouring():
    # random table -> admissible expansion -> solvable equations ->
    # classical trivialised action: the whole theory chain on a
    # colouring that is not one of the built-ins
    import random
    from qcolour.crystal import h_admissible_expansion, check_h_admissible
    from qcolour.gqe import deformed_commutator_operator
    rng = random.Random(99)
    cache = {}
    def rule(s, n, k):
        key = (s, n, k)
        if key not in cache:
            cache[key] = Fraction(rng.randrange(1, 9), rng.randrange(1, 4))
        return cache[key]
    depth = 3
    psi = h_admissible_expansion(PointwiseColouring(rule=rule), depth)
    order = depth + 1
    assert check_h_admissible(psi, order).all_pass()
    sol = solve(GqeEquation.build(psi, psi, -1, order=order))
    sbar = solve(GqeEquation.build(psi, CL, 0, order=order))
    assert sol and sbar
    for n in (2, 5):
        m = build_L(n, psi, order=order)
        lhs = deformed_commutator_operator(sol, m)
        rhs = m.operator("X0+").compose(m.operator("X0-"))
        assert (lhs - rhs).is_zero()
        op = trivialised_generator(sbar, m, basis="classical")
        for p in range(1, n + 1):
            assert op.entry(p - 1, p) == \
                TruncSeries1.constant(QQ, Fraction(n - p + 1), order)


def test_congruence_exactness_flag():
    # the truncated product of two h-polynomials is only the full
    # congruence when their degrees cannot reach the cutoff
    from qcolour.crystal import h_admissible_expansion
    import random
    rng = random.Random(5)
    cache = {}
    def rule(s, n, k):
        key = (s, n, k)
        if key not in cache:
            cache[key] = Fraction(rng.randrange(1, 7))
        return cache[key]
    psi = h_admissible_expansion(PointwiseColouring(rule=rule), 3)
    cong = congruence(psi, 4)
    assert not cong.exact
    with pytest.raises(ValueError):
        cong.at_order(6)
    ccl = congruence(CL, 4)
    assert ccl.exact
    assert ccl.at_order(6).value(3, 1).order == 6


def test_zero_congruence_sample_is_diagnosed():
    # a vanishing constant term in a needed factorial aborts with a
    # precise diagnostic instead of dividing through
    from qcolour.gqe import GqeSampleError
    def rule(n, k):
        if (n, k) == (3, 1):
            return TruncSeries1.zero(QQ, 3)
        return TruncSeries1.constant(QQ, Fraction(k * (n - k + 1)), 3)
    bad = CongruenceClass(3, rule=rule)
    clean = congruence(CL, 3)
    with pytest.raises(GqeSampleError):
        solve(GqeEquation(bad, clean, 0, 3, p_max=6))
