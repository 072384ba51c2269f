import random

import pytest

from qcolour.rootdata import (GcmError, Isogeny, RootDatum, cartan_by_name,
                              check_cone_avoidance, check_zero_cone_avoidance,
                              check_unique_dominant, finite_type_names,
                              langlands_dual, rank1_isogeny, serre_exponent_set,
                              sharp, shifted_weyl_action, sl2_adjoint_datum,
                              sl2_weight_datum, validate_gcm)


def test_validate_rank1():
    c = validate_gcm([[2]])
    assert c.d == (1,)
    assert c.is_finite_type()


def test_validate_b2_symmetriser_deterministic():
    c = validate_gcm([[2, -1], [-2, 2]])
    assert c.d == (2, 1)
    assert validate_gcm([[2, -2], [-1, 2]]).d == (1, 2)


def test_validate_rejects_positive_offdiagonal():
    with pytest.raises(GcmError) as err:
        validate_gcm([[2, 1], [1, 2]])
    assert err.value.axiom == "offdiagonal"


def test_validate_rejects_bad_diagonal_and_pattern():
    with pytest.raises(GcmError):
        validate_gcm([[1]])
    with pytest.raises(GcmError):
        validate_gcm([[2, -1], [0, 2]])


def test_transpose_stability():
    for nm in ("A2", "B2", "G2", "B3", "F4", "A1xG2"):
        c = cartan_by_name(nm)
        t = c.transpose()
        assert t.symmetrisable
        assert t.transpose().entries == c.entries


def test_non_symmetrisable_detected():
    # a 3-cycle with asymmetric weights cannot be symmetrised
    m = [[2, -1, -2], [-2, 2, -1], [-1, -2, 2]]
    c = validate_gcm(m)
    assert not c.symmetrisable


def test_langlands_dual_a1_self_dual():
    datum = sl2_weight_datum()
    dual, iso = langlands_dual(datum)
    assert dual.cartan.entries == datum.cartan.entries
    assert iso.xi == (1,)


def test_langlands_dual_b2_transposed():
    datum = RootDatum.standard(cartan_by_name("B2"))
    dual, iso = langlands_dual(datum)
    assert dual.cartan.entries == cartan_by_name("C2").entries
    assert sorted(iso.xi) == [1, 2]


def test_langlands_dual_g2():
    datum = RootDatum.standard(cartan_by_name("G2"))
    dual, iso = langlands_dual(datum)
    assert dual.cartan.entries == cartan_by_name("G2").transpose().entries
    assert sorted(iso.xi) == [1, 3]


def test_shifted_action_single_reflection():
    a2 = RootDatum.standard(cartan_by_name("A2"))
    assert shifted_weyl_action(a2, [0], (0, 0)) == \
        tuple(-x for x in a2.roots[0])


def test_shifted_action_composite():
    a2 = RootDatum.standard(cartan_by_name("A2"))
    got = shifted_weyl_action(a2, [0, 1], (0, 0))
    want = tuple(-b - 2 * a for a, b in zip(a2.roots[0], a2.roots[1]))
    assert got == want


def test_shifted_action_involution():
    rng = random.Random(4)
    for nm in ("A2", "B2", "G2"):
        datum = RootDatum.standard(cartan_by_name(nm))
        for _ in range(25):
            lam = tuple(rng.randrange(-5, 6) for _ in range(2))
            assert shifted_weyl_action(datum, [0, 0], lam) == lam
            assert shifted_weyl_action(datum, [1, 1], lam) == lam


def test_shifted_action_needs_finite_type():
    aff = validate_gcm([[2, -2], [-2, 2]])
    datum = RootDatum.standard(aff)
    with pytest.raises(GcmError):
        datum.shifted_reflect(0, (0, 0))


def test_sharp_examples():
    assert sharp((0, 0), 1) == 0 and sharp((0, 0), -1) == 0
    assert sharp((1, -1), 1) == 1 and sharp((1, -1), -1) == 1
    assert sharp((2, 0), 1) == 1 and sharp((2, 0), -1) == 0


def test_sharp_subadditive():
    rng = random.Random(9)
    for _ in range(300):
        n = rng.randrange(1, 5)
        mu = tuple(rng.randrange(-4, 5) for _ in range(n))
        nu = tuple(rng.randrange(-4, 5) for _ in range(n))
        tot = tuple(a + b for a, b in zip(mu, nu))
        assert sharp(tot, 1) <= sharp(mu, 1) + sharp(nu, 1)


def test_serre_set_contains_zero_and_hand_element():
    assert (0, 0) in serre_exponent_set(cartan_by_name("A1xA1"))
    a2 = serre_exponent_set(cartan_by_name("A2"))
    assert (1, -1) in a2
    assert a2 == serre_exponent_set(cartan_by_name("A2"))  # stable across runs


def test_serre_set_needs_rank_two():
    with pytest.raises(ValueError):
        serre_exponent_set(cartan_by_name("A1"))


def test_lemma_checks_all_finite_types_rank_le_4():
    names = [nm for nm in finite_type_names(4)
             if cartan_by_name(nm).rank >= 2]
    assert "B2" in names and "F4" in names and "A1xA1xA1xA1" in names
    for nm in names:
        cm = cartan_by_name(nm)
        assert check_unique_dominant(cm).passed, nm
        assert check_cone_avoidance(cm).passed, nm
        assert check_zero_cone_avoidance(cm).passed, nm


def test_dominance_order_properties():
    rng = random.Random(12)
    datum = RootDatum.standard(cartan_by_name("B2"))
    def leq(m1, m2):
        return all(a <= b for a, b in zip(m1, m2))
    for _ in range(300):
        xs = [tuple(rng.randrange(-3, 4) for _ in range(2))
              for _ in range(3)]
        a, b, c = xs
        assert leq(a, a)
        if leq(a, b) and leq(b, a):
            assert a == b
        if leq(a, b) and leq(b, c):
            assert leq(a, c)


def test_weyl_dimension_examples():
    b2 = RootDatum.standard(cartan_by_name("B2"))
    assert b2.weyl_dimension((1, 0)) == 5
    assert b2.weyl_dimension((0, 1)) == 4
    assert b2.weyl_dimension((0, 0)) == 1
    a2 = RootDatum.standard(cartan_by_name("A2"))
    assert a2.weyl_dimension((1, 1)) == 8


def test_rank1_isogenies():
    iso = rank1_isogeny(2, "adjoint")
    assert iso.preimage((4,)) == (1,)
    assert iso.preimage((2,)) is None
    isow = rank1_isogeny(3, "weight")
    assert isow.apply((2,)) == (6,)
    ide = Isogeny.identity(sl2_weight_datum())
    assert ide.apply((5,)) == (5,)
    assert sl2_adjoint_datum().coroot_pairing(0, (1,)) == 2
