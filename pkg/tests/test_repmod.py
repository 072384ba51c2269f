import random

import pytest

from qcolour.crystal import ClassicalColouring, QuantumColouring, congruence
from qcolour.repmod import (WeightModule, a2_vector_module, add_characters,
                            build_L, character, decompose_into_irreducibles,
                            freudenthal_char, is_weyl_symmetric,
                            isogeny_restrict, restrict_character,
                            verify_ladder_relations)
from qcolour.rootdata import (Isogeny, RootDatum, cartan_by_name,
                              langlands_dual, rank1_isogeny,
                              sl2_weight_datum)
from qcolour.series import QQ, TruncSeries1

CL = ClassicalColouring()
QU = QuantumColouring(order=6)


def test_build_L_trivial():
    m = build_L(0, CL)
    assert m.dim == 1
    assert m.operator("X+").is_zero() and m.operator("X-").is_zero()


def test_build_L_product_examples():
    m = build_L(2, CL)
    assert m.operator("X+").compose(m.operator("X-")).entry(0, 0) == 2
    mq = build_L(1, QU)
    assert mq.operator("X+").compose(mq.operator("X-")).entry(0, 0) == \
        TruncSeries1.one(QQ, 6)


def test_ladder_diagonals_are_congruence_values():
    cong = congruence(QU, 6)
    for n in (1, 3, 5):
        m = build_L(n, QU)
        xp, xm = m.operator("X+"), m.operator("X-")
        plus_minus = xp.compose(xm)
        minus_plus = xm.compose(xp)
        for p in range(n + 1):
            want_pm = cong.value(n, p + 1) if p < n else None
            want_mp = cong.value(n, p) if p > 0 else None
            if p < n:
                assert plus_minus.entry(p, p) == want_pm
            if p > 0:
                assert minus_plus.entry(p, p) == want_mp


def test_relations_pass_and_detect_corruption():
    m = build_L(4, QU)
    assert verify_ladder_relations(m).passed
    bad = WeightModule(m.datum, m.labels,
                       ((99,),) + tuple(m.weights[1:]), m.actions,
                       m.ring, m.order)
    report = verify_ladder_relations(bad)
    assert not report.passed and report.failures


def test_character_examples():
    assert character(build_L(3, CL)) == {(3,): 1, (1,): 1, (-1,): 1, (-3,): 1}
    assert character(build_L(0, CL)) == {(0,): 1}
    a = character(build_L(2, CL))
    b = character(build_L(0, CL))
    assert add_characters(a, b) == {(2,): 1, (0,): 2, (-2,): 1}


def test_isogeny_restrict_examples():
    iso = rank1_isogeny(2, "adjoint")
    m4 = build_L(4, CL)
    r = isogeny_restrict(m4, iso)
    assert [str(x) for x in r.labels] == ["b4,0", "b4,2", "b4,4"]
    assert r.coroot_values(0) == [2, 0, -2]
    assert isogeny_restrict(build_L(3, CL), iso).dim == 0
    ide = Isogeny.identity(sl2_weight_datum())
    assert character(isogeny_restrict(m4, ide)) == character(m4)


def test_isogeny_restrict_powers_act():
    iso = rank1_isogeny(2, "adjoint")
    m = isogeny_restrict(build_L(4, CL), iso)
    assert verify_ladder_relations(m).passed
    # (X-)^2 sends b4,0 to 2 b4,2 classically (1*2)
    assert m.operator("X0-").entry(1, 0) == 2


def test_character_functoriality_random():
    rng = random.Random(17)
    for _ in range(120):
        n = rng.randrange(0, 13)
        xi = rng.choice((1, 2, 3))
        src = rng.choice(("weight", "adjoint"))
        iso = rank1_isogeny(xi, src)
        m = build_L(n, CL)
        assert character(isogeny_restrict(m, iso)) == \
            restrict_character(character(m), iso)


def test_freudenthal_small_examples():
    a1 = RootDatum.standard(cartan_by_name("A1"))
    assert freudenthal_char(a1, (2,)) == {(2,): 1, (0,): 1, (-2,): 1}
    b2 = RootDatum.standard(cartan_by_name("B2"))
    assert sum(freudenthal_char(b2, (1, 0)).values()) == 5
    assert freudenthal_char(b2, (0, 0)) == {(0, 0): 1}
    a2 = RootDatum.standard(cartan_by_name("A2"))
    adj = freudenthal_char(a2, (1, 1))
    assert sum(adj.values()) == 8 and adj[(0, 0)] == 2


def test_freudenthal_rejects_bad_input():
    b2 = RootDatum.standard(cartan_by_name("B2"))
    with pytest.raises(ValueError):
        freudenthal_char(b2, (-1, 0))
    aff = RootDatum.standard(
        __import__("qcolour.rootdata", fromlist=["validate_gcm"])
        .validate_gcm([[2, -2], [-2, 2]]))
    with pytest.raises(ValueError):
        freudenthal_char(aff, (1, 0))


def test_freudenthal_weyl_symmetric_and_total():
    for nm in ("A1", "A2", "B2", "G2"):
        datum = RootDatum.standard(cartan_by_name(nm))
        rank = datum.cartan.rank
        lams = []
        if rank == 1:
            lams = [(h,) for h in range(7)]
        else:
            lams = [(a, b) for a in range(7) for b in range(7 - a)]
        for lam in lams:
            chi = freudenthal_char(datum, lam)
            assert is_weyl_symmetric(datum, chi), (nm, lam)
            assert sum(chi.values()) == datum.weyl_dimension(lam), (nm, lam)


def test_decompose_examples():
    a1 = RootDatum.standard(cartan_by_name("A1"))
    chi = freudenthal_char(a1, (2,))
    assert decompose_into_irreducibles(chi, a1) == {(2,): 1}
    both = add_characters(chi, freudenthal_char(a1, (0,)))
    assert decompose_into_irreducibles(both, a1) == {(2,): 1, (0,): 1}
    with pytest.raises(ValueError):
        decompose_into_irreducibles({(1,): 1}, a1)


def test_langlands_containment_height_4():
    datum = RootDatum.standard(cartan_by_name("B2"))
    dual, iso = langlands_dual(datum)
    for h1 in range(5):
        for h2 in range(5 - h1):
            lam_dual = (h1, h2)
            lam = iso.apply(lam_dual)
            chi = freudenthal_char(datum, lam)
            dec = decompose_into_irreducibles(
                restrict_character(chi, iso), dual)
            assert all(v >= 0 for v in dec.values())
            assert dec.get(lam_dual, 0) >= 1


def test_freudenthal_on_nonstandard_realization():
    # the adjoint rank-1 datum stores weights in root coordinates; the
    # recursion must run on the true coroot pairings
    from qcolour.rootdata import sl2_adjoint_datum
    adj = sl2_adjoint_datum()
    chi = freudenthal_char(adj, (4,))      # 4 alpha, pairing value 8
    assert chi == {(c,): 1 for c in range(-4, 5)}
    assert adj.weyl_dimension((4,)) == 9
    assert decompose_into_irreducibles(chi, adj) == {(4,): 1}


def test_rank1_langlands_dual_char_examples():
    # odd scaling keeps one string, even scaling splits in two
    iso3 = rank1_isogeny(3, "weight")
    chi6 = character(build_L(6, CL))
    assert restrict_character(chi6, iso3) == {(2,): 1, (0,): 1, (-2,): 1}
    iso2 = rank1_isogeny(2, "weight")
    chi4 = character(build_L(4, CL))
    assert restrict_character(chi4, iso2) == \
        {(2,): 1, (1,): 1, (0,): 1, (-1,): 1, (-2,): 1}
    assert restrict_character({(0,): 1}, iso2) == {(0,): 1}


def test_a2_modules():
    for kind in ("classical", "quantum"):
        m = a2_vector_module(kind)
        assert verify_ladder_relations(m).passed
        assert character(m) == {(1, 0): 1, (-1, 1): 1, (0, -1): 1}
