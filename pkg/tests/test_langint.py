import pytest

from qcolour.langint import (brace, branch_sign, build_hh_module,
                             commutator_check, divided_power_route,
                             dual_generators, dual_relations_report,
                             eps_cross_check, gen_quantum_number,
                             gen_quantum_number_exp_sum,
                             hp0_slice_matches_quantum, interpolation_poly,
                             power_commutation_residual, quantum_number_laurent,
                             dual_module_decomposition, specialize_eps)
from qcolour.polys import LaurentPoly
from qcolour.scalars import CyclotomicScalar
from qcolour.series import (QQ, TruncSeries1, TruncSeries2,
                            quantum_number_series)

GRID = [(g, g * mult) for g in (1, 2, 3) for mult in (0, 1, 2, 3, 4)]


def test_interpolation_poly_values():
    for g in range(1, 7):
        p = interpolation_poly(g)
        e = CyclotomicScalar.zeta(2 * g)
        for l in range(2 * g):
            assert p(e ** l) == (1 if l % g == 0 else 0), (g, l)


def test_interpolation_poly_symmetries():
    for g in (2, 3, 4):
        p = interpolation_poly(g)
        inv = LaurentPoly("u", {-k: c for k, c in p.coeffs.items()})
        neg = LaurentPoly("u", {k: c * ((-1) ** (k % 2))
                                for k, c in p.coeffs.items()})
        assert p == inv
        assert p == neg        # only even powers appear


def test_interpolation_poly_g1():
    p = interpolation_poly(1)
    assert list(p.coeffs) == [0] and p.coeffs[0] == 1


def test_brace_values():
    for g in (1, 2, 3):
        for a in (0, 1, 2, 5, -3):
            b = brace(a, g, 5)
            assert b.coeffs[0] == 1, (g, a)
    assert brace(0, 3, 4) == TruncSeries1.one(QQ, 4)
    assert brace(2, 1, 4) == TruncSeries1.one(QQ, 4)


def test_gen_quantum_number_basics():
    assert gen_quantum_number(1, 2, 4, 4) == TruncSeries2.one(QQ, (4, 4))
    assert gen_quantum_number(0, 3, 4, 4).is_zero()
    assert gen_quantum_number(-1, 4, 3, 3) == \
        -TruncSeries2.one(QQ, (3, 3))


def test_gen_quantum_number_odd_and_forms_agree():
    for g in (1, 2, 3):
        for a in range(-10, 11):
            x = gen_quantum_number(a, g, 3, 3)
            assert (x + gen_quantum_number(-a, g, 3, 3)).is_zero()
            assert x == gen_quantum_number_exp_sum(a, g, 3, 3)


def test_gen_quantum_number_hp0_slice():
    for g in (1, 2, 3):
        for a in (2, 3, 5):
            s = gen_quantum_number(a, g, 5, 3).specialize_hp0()
            assert s == quantum_number_series(a, 5)


def test_hh_module_slices_and_commutator():
    for g, n in GRID:
        m = build_hh_module("finite", n, g, 5, 3)
        assert hp0_slice_matches_quantum(m).passed, (g, n)
        assert commutator_check(m).passed, (g, n)
    mv = build_hh_module("verma", -3, 2, 4, 3)
    assert commutator_check(mv).passed


def test_hh_module_matches_rank1_module_products():
    # X+X- diagonal at h' = 0 equals the quantum string products
    from qcolour.crystal import QuantumColouring
    from qcolour.repmod import build_L
    for g in (1, 2):
        for n in (1, 3, 5):
            m = build_hh_module("finite", n, g, 6, 3)
            mod = build_L(n, QuantumColouring(order=6), order=6)
            xp = mod.operator("X0+").compose(mod.operator("X0-"))
            for j in range(n):
                got = m.xplus(j + 1).specialize_hp0()
                assert got == xp.entry(j, j)


def test_g1_single_parameter_commutator():
    m = build_hh_module("finite", 2, 1, 4, 4)
    for j in range(m.dim):
        plus = m.xplus(j + 1) if j + 1 <= m.depth else \
            TruncSeries2.zero(QQ, (4, 4))
        comm = plus - m.xplus(j)
        assert comm == gen_quantum_number(m.weight(j), 1, 4, 4), j


def test_eps_module_table():
    em = specialize_eps("finite", 2, 2, 4)
    e = CyclotomicScalar.zeta(4)
    # X+ m_1 = [1]_eps [2]_{eps T} m_0: leading coefficient 2i h'
    c1 = em.xplus(1)
    assert c1.coeffs[0].is_zero()
    assert c1.coeffs[1] == e * 2
    assert em.q_to_h(0) == e ** 2
    assert em.q_sqrt_casimir() == e ** 2 * (e + e ** (-1))
    with pytest.raises(ValueError):
        specialize_eps("finite", 1, 2, 4)


def test_eps_cross_check_on_lattice():
    for g in (1, 2, 3):
        for n in (0, g, 2 * g):
            assert eps_cross_check("finite", n, g, 3).passed, (g, n)
    # the Laurent form specialized at h' = 0 is the classical bracket
    q = quantum_number_laurent(3, 2, 3)
    e = CyclotomicScalar.zeta(4)
    val = q.coeffs[0](e)
    assert val == (e ** 2 + 1 + e ** (-2))


def test_power_commutation_grid():
    for g, n in GRID:
        for kind in ("finite", "verma"):
            rep = power_commutation_residual(kind, n, g, 4)
            assert rep.passed, (kind, n, g, rep.max_nonzero_order)


def test_power_commutation_branch_twist_cases():
    # odd g with even multiplier needs the Casimir branch sign
    assert branch_sign(6, 3) == -1
    assert branch_sign(3, 3) == 1
    assert branch_sign(4, 2) == 1
    r = power_commutation_residual("finite", 6, 3, 3, branch="literal")
    assert not r.passed
    r = power_commutation_residual("finite", 3, 3, 3, branch="literal")
    assert r.passed


def test_power_commutation_fails_off_dual_subspace():
    rep = power_commutation_residual("finite", 3, 3, 4, subspace="all")
    assert not rep.passed


def test_dual_generators_relations():
    for g, n in GRID:
        em = specialize_eps("finite", n, g, 4)
        da = dual_generators(em)
        assert dual_relations_report(da).passed, (g, n)
        if g == 1:
            assert len(da.indices) == n + 1
        assert 0 not in da.raise_coeffs      # highest weight killed


def test_dual_generators_verma():
    em = specialize_eps("verma", 4, 2, 3)
    da = dual_generators(em)
    assert dual_relations_report(da).passed


def test_dual_decomposition_cases():
    cases = [((6, 3), [2]), ((4, 2), [2, 1]), ((0, 2), [0]),
             ((2, 2), [1, 0]), ((3, 1), [3]), ((9, 3), [3])]
    for (n, g), want in cases:
        v, kernel, char = dual_module_decomposition(n, g, 4)
        assert v.passed, (n, g, v.detail)
        assert sorted(kernel) == sorted(want)


def test_dual_decomposition_character_identity():
    # brute-force weight multiset against the string sum, odd g
    for g, n in ((3, 6), (1, 4), (3, 12)):
        _, _, char = dual_module_decomposition(n, g, 3)
        oracle = {}
        for j in range(n + 1):
            if (n - 2 * j) % g == 0:
                w = (n - 2 * j) // g
                oracle[w] = oracle.get(w, 0) + 1
        assert char == oracle


def test_divided_power_route():
    assert divided_power_route(4, 5, 2).passed
    assert divided_power_route(8, 4, 3).passed
    assert divided_power_route(3, 5, 3, d=2).passed


def test_divided_power_k1_reduces_to_commutator():
    # k = k' = 1 is the ordinary quantum commutation relation; the
    # verdict already covers it, this pins the bracket normalization
    from qcolour.crystal import QuantumColouring
    from qcolour.repmod import build_L
    n, order = 4, 5
    m = build_L(n, QuantumColouring(order=order), order=order)
    xp, xm = m.operator("X0+"), m.operator("X0-")
    comm = xp.compose(xm) - xm.compose(xp)
    for j in range(m.dim):
        got = comm.entry(j, j)
        want = quantum_number_series(n - 2 * j, order)
        if got is None:
            assert want.is_zero()
        else:
            assert got == want


def test_finite_is_verma_truncation():
    for g, n in ((2, 4), (3, 3)):
        fin = build_hh_module("finite", n, g, 4, 3)
        ver = build_hh_module("verma", n, g, 4, 3, depth=n + 4)
        for j in range(1, n + 1):
            assert fin.xplus(j) == ver.xplus(j)


def test_higher_order_interpolation_case():
    # one deeper run catches order-scaling slips in the localisation
    rep = power_commutation_residual("finite", 4, 2, 6)
    assert rep.passed
    em = specialize_eps("finite", 6, 3, 6)
    da = dual_generators(em)
    assert dual_relations_report(da).passed
