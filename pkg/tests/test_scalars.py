import random
from fractions import Fraction

import pytest

from qcolour.scalars import (CyclotomicScalar, RingMismatch,
                             cyclotomic_polynomial, cyclotomic_qfactorial,
                             quantum_number_cyclotomic)


def test_cyclotomic_polynomial_base_cases():
    assert cyclotomic_polynomial(1) == (-1, 1)
    assert cyclotomic_polynomial(2) == (1, 1)


def test_cyclotomic_polynomial_phi6():
    # divide x^6 - 1 by Phi1 Phi2 Phi3 by hand: x^2 - x + 1
    assert cyclotomic_polynomial(6) == (1, -1, 1)


def test_cyclotomic_polynomial_monic_integer():
    for m in range(1, 30):
        phi = cyclotomic_polynomial(m)
        assert phi[-1] == 1
        assert all(isinstance(c, int) for c in phi)


def test_cyclotomic_polynomial_rejects_nonpositive():
    with pytest.raises(ValueError):
        cyclotomic_polynomial(0)


def test_zeta_powers():
    for g in (1, 2, 3, 5):
        e = CyclotomicScalar.zeta(2 * g)
        assert e ** (2 * g) == 1
        assert e ** g == -1


def test_field_arithmetic_roundtrip():
    e = CyclotomicScalar.zeta(10)
    x = (e ** 3 + 2) / (e - 7)
    assert x * (e - 7) == e ** 3 + 2
    assert (x - x).is_zero()


def test_mixed_order_raises():
    a = CyclotomicScalar.zeta(4)
    b = CyclotomicScalar.zeta(6)
    with pytest.raises(RingMismatch):
        a + b


def test_quantum_number_examples():
    assert quantum_number_cyclotomic(1, 5) == 1
    assert quantum_number_cyclotomic(3, 3).is_zero()
    # eps = exp(i pi / 3): reduce in Q[x]/(x^2 - x + 1)
    assert quantum_number_cyclotomic(2, 3) == 1


def test_quantum_number_vanishes_at_g():
    for g in (2, 3, 4, 6):
        assert quantum_number_cyclotomic(g, g).is_zero()
        assert not quantum_number_cyclotomic(g - 1, g).is_zero()


def test_qfactorial_nonzero():
    for g in (1, 2, 3, 4, 5):
        assert not cyclotomic_qfactorial(g).is_zero()


def test_float_cross_check_random_products():
    # sanity only: exact arithmetic agrees with complex evaluation
    rng = random.Random(11)
    for _ in range(200):
        m = rng.choice((4, 6, 10, 12))
        a = CyclotomicScalar(m, [Fraction(rng.randrange(-5, 6))
                                 for _ in range(3)])
        b = CyclotomicScalar(m, [Fraction(rng.randrange(-5, 6))
                                 for _ in range(3)])
        lhs = (a * b).complex_value()
        rhs = a.complex_value() * b.complex_value()
        assert abs(lhs - rhs) < 1e-10
