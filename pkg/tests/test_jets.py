from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bfmoduli.errors import DomainError, OrderError, PoleError
from bfmoduli.jets import (A, B, DiffPoly, FieldSymbol, LieData, Pi, all_zero, bianchi_check,
                           commutator_check, covariant_derivative, curvature, diffeo_identity_check,
                           equal_mod_divergence, eta, field, is_null_lagrangian, levi_civita,
                           partial, total_derivative, variational_derivative)
from strategies import diffpoly

SU2 = LieData.su2()
# antisymmetric in the last two slots only, violates Jacobi
BROKEN = {(1, 2, 3): 1, (1, 3, 2): -1, (2, 3, 1): 2, (2, 1, 3): -2, (3, 1, 2): 1, (3, 2, 1): -1,
          (1, 1, 2): 1, (1, 2, 1): -1}


def test_symbols_and_render():
    s = FieldSymbol("A", (2,), 1, (3, 1))
    assert s.deriv == (1, 3)
    assert str(s) == "A[2,1]_13"
    assert s.differentiate(2).deriv == (1, 2, 3)
    with pytest.raises(OrderError):
        FieldSymbol("A", (1,), 1, (1, 1, 2, 3)).differentiate(1)
    with pytest.raises(IndexError):
        FieldSymbol("A", (5,), 1)
    assert str(A(1, 2) * Pi(1, 3) * 3) == "3*A[1,2]*Pi[1,3]"


def test_leibniz_examples():
    p = A(1, 1) * A(1, 1)
    assert total_derivative(p, 2) == 2 * A(1, 1) * A(1, 1, (2,))
    assert total_derivative(DiffPoly.const(5), 1).is_zero()


def test_euler_operator_examples():
    # d/dA of (d_1 A)^2 is -2 d_1 d_1 A
    p = A(1, 1, (1,)) ** 2
    assert variational_derivative(p, "A", (1,), 1) == -2 * A(1, 1, (1, 1))
    assert variational_derivative(A(2, 1) * Pi(2, 1), "Pi", (2,), 1) == A(2, 1)
    assert variational_derivative(A(1, 1, (1,)), "A", (1,), 1).is_zero()


def test_null_lagrangian():
    assert is_null_lagrangian(total_derivative(A(1, 1) * Pi(2, 2), 3))
    assert not is_null_lagrangian(A(1, 1) * Pi(2, 2))
    assert not is_null_lagrangian(DiffPoly.const(1))
    p = A(1, 1) * Pi(1, 1, (2,))
    assert equal_mod_divergence(p, -A(1, 1, (2,)) * Pi(1, 1))


def test_g2_substitution():
    p = DiffPoly.g2(2) * A(1, 1) + DiffPoly.const(1, -1)
    assert p.subs_g2(2) == 4 * A(1, 1) + Fraction(1, 2)
    with pytest.raises(PoleError):
        p.subs_g2(0)


def test_levi_civita():
    assert levi_civita(1, 2, 3) == 1 and levi_civita(2, 1, 3) == -1 and levi_civita(1, 1, 3) == 0
    assert eta(3, 1, 2) == 1
    assert levi_civita(2, 1, 4, 3) == 1


def test_lie_data():
    assert SU2.jacobi_defect() == 0 and SU2.is_antisymmetric()
    assert SU2.f(1, 2, 3) == 1 and SU2.f(2, 1, 3) == -1
    assert LieData.abelian().is_abelian
    with pytest.raises(DomainError):
        LieData.custom(3, {(1, 2, 3): 1})
    assert LieData.custom(3, BROKEN, check=False).jacobi_defect() > 0


def test_antisymmetric_b():
    assert B(2, 1, 1) == -B(1, 2, 1)
    assert B(1, 1, 1).is_zero()


def test_bianchi():
    assert all_zero(bianchi_check(SU2))
    assert all_zero(bianchi_check(LieData.abelian()))
    bad = LieData.custom(3, BROKEN, check=False)
    assert bad.jacobi_defect() and not all_zero(bianchi_check(bad))


def test_curvature_antisymmetric():
    for mu in range(4):
        for nu in range(4):
            F, G = curvature(mu, nu, SU2), curvature(nu, mu, SU2)
            assert all((f + g).is_zero() for f, g in zip(F, G))


def test_commutator_of_covariant_derivatives():
    v = [field("eps", (), I) for I in SU2.indices]
    assert all_zero(commutator_check(v, 1, 2, SU2))


def test_diffeo_identity():
    assert all_zero(diffeo_identity_check(SU2))
    assert not all_zero(diffeo_identity_check(SU2, drop_commutator=True))
    assert all_zero(diffeo_identity_check(LieData.abelian(), constant_xi=True))


def test_covariant_derivative_abelian_is_partial():
    lie = LieData.abelian(1)
    v = [field("eps", (), 1)]
    assert covariant_derivative(v, 2, lie)[0] == total_derivative(v[0], 2)


@settings(max_examples=200, deadline=None)
@given(diffpoly(max_deriv=1), st.integers(1, 3))
def test_euler_kills_total_derivatives(q, i):
    p = total_derivative(q, i)
    for s in p.symbols():
        assert variational_derivative(p, s.kind, s.idx, s.internal, s.time_order).is_zero()


@settings(max_examples=100, deadline=None)
@given(diffpoly(max_deriv=1), diffpoly(max_deriv=1), st.integers(1, 3), st.integers(1, 3))
def test_leibniz_and_commutativity(p, q, i, j):
    assert total_derivative(p * q, i) == total_derivative(p, i) * q + p * total_derivative(q, i)
    assert total_derivative(total_derivative(p, i), j) == total_derivative(total_derivative(p, j), i)


@given(diffpoly())
def test_partial_of_linear(p):
    s = FieldSymbol("Pi", (1,), 1, (2,))
    assert partial(p * DiffPoly.symbol(s), s) == p + partial(p, s) * DiffPoly.symbol(s)
