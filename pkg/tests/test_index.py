import random
from fractions import Fraction

import pytest

from bfmoduli.charclasses import BundleData
from bfmoduli.errors import DomainError, PoleError
from bfmoduli.index import (Affine, assemble_integrand, h1_from_pipeline, h1_of_lambda, h1_of_m,
                            lambda_of_m, lambda_of_m_printed, regularize)
from bfmoduli.moduli import catalog, get_manifold

SU2 = BundleData.su(2)
PRINTED_35 = "(3/(x1*x2) + x1/x2 + x2/x1 + x1*x2) * (1 - 1/12*x1^2 - 1/12*x2^2)"


def test_paper_integrand():
    q = assemble_integrand("paper")
    assert q.laurent_str() == PRINTED_35
    assert str(q.prefactor) == "3 + 1*x1^2 + 1*x2^2 + 1*x1^2*x2^2"
    assert q.denominator == (1, 1)


def test_full_integrand():
    full, paper = assemble_integrand("full"), assemble_integrand("paper")
    assert full.numerator.coeff(4, 0) == Fraction(1, 80)
    assert full.prefactor.coeff(2, 0) == paper.prefactor.coeff(2, 0) == 1
    with pytest.raises(DomainError):
        assemble_integrand("other")


def test_regularize_symbolic():
    r = regularize(assemble_integrand("paper"))
    assert r.c_euler == Affine(Fraction(1), Fraction(3))
    assert r.c_pontr == Affine(Fraction(0), Fraction(3))
    assert r.at(0) == (1, 0)
    assert str(r.c_euler) == "3*lambda + 1"


def test_regularize_full_mode():
    r = regularize(assemble_integrand("full"))
    assert r.c_euler == Affine(Fraction(41, 48), Fraction(3))
    assert r.c_pontr == Affine(Fraction(0), Fraction(3))


def test_h1_of_lambda_examples():
    s4, cp2 = get_manifold("S4"), get_manifold("CP2")
    assert h1_of_lambda(SU2, s4, 0) == -6
    assert h1_of_lambda(SU2, cp2, Fraction(-1, 3)) == 9
    for mf in catalog():
        assert h1_of_lambda(SU2, mf, 0) == -3 * mf.chi


def test_pipeline_matches_closed_form():
    lam = Affine(Fraction(0), Fraction(1))
    for mf in catalog():
        for b in (SU2, BundleData.su(3), BundleData.u1()):
            assert h1_from_pipeline(b, mf, Fraction(2, 7)) == h1_of_lambda(b, mf, Fraction(2, 7))
    assert lam(5) == 5


def test_h1_of_m_examples():
    assert h1_of_m(SU2, get_manifold("CP2"), 3) == 0
    assert h1_of_m(SU2, get_manifold("K3"), 3) == 36
    with pytest.raises(PoleError):
        h1_of_m(SU2, get_manifold("K3"), -3)
    # large-m behaviour approaches 3 dimG |tau|
    k3 = get_manifold("K3")
    assert abs(h1_of_m(SU2, k3, 10 ** 9) - 3 * 3 * 16) < Fraction(1, 10 ** 6)


def test_zero_crossing_and_tau_sign():
    from bfmoduli.moduli import Manifold
    for mf in catalog():
        if mf.tau:
            assert h1_of_m(SU2, mf, Fraction(mf.chi, abs(mf.tau))) == 0
        flipped = Manifold(mf.name, mf.chi, -mf.tau)
        assert h1_of_m(SU2, flipped, 5) == h1_of_m(SU2, mf, 5)


def test_lambda_of_m():
    assert lambda_of_m(0) == 0 == lambda_of_m_printed(0)
    assert lambda_of_m(3) == Fraction(-1, 6)
    cp2 = get_manifold("CP2")
    assert h1_of_lambda(SU2, cp2, lambda_of_m_printed(3)) != h1_of_m(SU2, cp2, 3)
    with pytest.raises(PoleError):
        lambda_of_m(-3)


def test_lambda_consistency_random():
    rng = random.Random(7)
    mfs = catalog()
    for _ in range(100):
        m = Fraction(rng.randint(-200, 200), rng.randint(1, 30))
        if m == -3:
            continue
        lam = lambda_of_m(m)
        for mf in mfs:
            assert h1_of_lambda(SU2, mf, lam) == h1_of_m(SU2, mf, m)
