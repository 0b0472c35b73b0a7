from fractions import Fraction

import pytest

from bfmoduli.charclasses import (BundleData, ch_adjoint, ch_alternating_sum, ch_lambda,
                                  euler_class, pontryagin_class, todd_pair, todd_tangent)
from bfmoduli.errors import DomainError
from bfmoduli.exact import GradedClass, exp_linear, x1, x2


def coeffs(p):
    return {(a, b): c for (a, b, s), c in p.terms.items()}


def test_ch_lambda_low_degree():
    assert ch_lambda(0) == GradedClass.const(1, 4)
    c1 = coeffs(ch_lambda(1))
    assert c1[(0, 0)] == 4 and c1[(2, 0)] == 1 and c1[(0, 2)] == 1
    c2 = ch_lambda(2)
    assert c2.coeff(0, 0) == 6 and c2.coeff(2, 0) == 2 and c2.coeff(1, 1) == 0
    with pytest.raises(DomainError):
        ch_lambda(3)


def test_ch_lambda_odd_degrees_vanish():
    for p in (1, 2):
        assert all((a + b) % 2 == 0 for (a, b) in coeffs(ch_lambda(p)))


def test_alternating_sum():
    s = ch_alternating_sum()
    assert s.constant == 3
    assert s.coeff(2, 0) == 1 and s.coeff(0, 2) == 1
    assert s.coeff(4, 0) == Fraction(1, 12)
    assert s == s.swap() == s.reflect(1) == s.reflect(2)


def test_todd():
    t = todd_tangent()
    assert t.constant == 1
    assert t.coeff(2, 0) == Fraction(-1, 12)
    assert t.coeff(2, 2) == Fraction(1, 144)
    assert t.coeff(4, 0) == Fraction(1, 240)
    assert t == t.swap() == t.reflect(1)


def test_todd_pair_identity():
    x = x1(4)
    pair = todd_pair(1, 4)
    lhs = (pair * (2 - exp_linear(x) - exp_linear(-x)))
    assert lhs == -(x * x)


def test_euler_pontryagin():
    assert euler_class() == x1(4) * x2(4)
    assert pontryagin_class() == x1(4) ** 2 + x2(4) ** 2


def test_adjoint():
    assert ch_adjoint(BundleData.su(2)) == GradedClass.const(3, 4)
    b = BundleData.su(2, "su2_from_c2")
    assert ch_adjoint(b, 1) == 3 + euler_class() * (-4)
    assert ch_adjoint(BundleData.u1()) == GradedClass.const(1, 4)
    with pytest.raises(DomainError):
        ch_adjoint(BundleData.su(3, "su2_from_c2"), 1)


def test_bundle_data():
    b = BundleData.su(3)
    assert (b.dim_g, b.rank_g) == (8, 2)
    assert BundleData.u1().dim_g == 1 and BundleData.u1().rank_g == 1
    assert BundleData.parse("su2") == BundleData.su(2)
    assert BundleData.parse("u1").is_abelian
    with pytest.raises(DomainError):
        BundleData.parse("so5")
