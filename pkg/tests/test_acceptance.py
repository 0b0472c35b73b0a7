"""Acceptance suite: one test per numbered criterion, all checks exact.

Reference values below are typed in from the published tables and
sequence, independently of ``bfmoduli.published``.
"""
import random
import time
from fractions import Fraction

import pytest

from bfmoduli.charclasses import BundleData
from bfmoduli.constraints import (algebra_closure, bf_tallies, bfym_tallies, build_system,
                                  consistency_evolution, dof_count, gauge_transformations,
                                  independence_check, independence_relation, make_configs,
                                  printed_independence)
from bfmoduli.exact import GradedClass, exp_linear, series_reciprocal
from bfmoduli.index import (Affine, assemble_integrand, h1_of_lambda, h1_of_m, lambda_of_m,
                            lambda_of_m_printed, regularize)
from bfmoduli.jets import (LieData, all_zero, bianchi_check, diffeo_identity_check,
                           total_derivative, variational_derivative)
from bfmoduli.moduli import catalog, dim2, get_manifold, plotdata, sequence_cp2, table
from bfmoduli.report import lambda_divergences
from bfmoduli.torus import bracket_density, evaluate_average, random_config

import randgen

SU2 = BundleData.su(2)
EMPTY = None


def criterion(n, title):
    return pytest.mark.criterion(n, title)


# printed table entries in dim G units, keyed by catalog name; callables take the family parameter
T1 = {
    "S4": EMPTY, "CP2": 0, "K3": 12, "K3_Z2": 6, "K3_Z2xZ2": 3,
    "S2xSigma_g": lambda g: EMPTY if g == 0 else 2 * (g - 1),
    "E(n)": lambda n: 6 * n,
    "S_d": lambda d: {1: 0, 2: EMPTY}.get(d, d * (2 * d - 5)),
}
T2 = {
    "S4": EMPTY, "CP2": 1, "K3": 24, "K3_Z2": 12, "K3_Z2xZ2": 4,
    "S2xSigma_g": lambda g: EMPTY if g == 0 else Fraction(4, 3) * (g - 1),
    "E(n)": lambda n: 12 * n,
    "S_d": lambda d: {1: 1, 2: EMPTY}.get(d, Fraction(1, 3) * d * (d * d + 4 * (d - 3))),
}
T3 = {
    "S4": EMPTY, "CP2": 2, "K3": 36, "K3_Z2": 18, "K3_Z2xZ2": 9,
    "S2xSigma_g": lambda g: EMPTY if g == 0 else Fraction(2, 3) * (g - 1),
    "E(n)": lambda n: 18 * n,
    "S_d": lambda d: {1: 2, 2: EMPTY}.get(d, Fraction(1, 3) * d * (2 * d * (d + 1) - 13)),
}

SEQUENCE = [None, -9, -6, -5, "-9/2", "-21/5", -4, "-27/7", "-15/4", "-11/3", "-18/5", "-39/11",
            "-7/2", "-45/3", "-24/7", "-17/5", "-27/8", "-57/17", "-10/3", "-63/19", "-33/10",
            "-23/7", "-36/11", "-75/23", "-13/4", "-81/25", "-42/13", "-29/9", "-45/14", "-93/29",
            "-16/5", "-99/31", "-51/16", "-35/11", "-54/17", "-111/35", "-19/6", "-117/37",
            "-60/19", "-41/13", "-63/20", "-129/41", "-22/27", "-135/43", "-69/22", "-47/15",
            "-72/23", "-147/47", "-25/8", "-153/49"]


def printed(tab, row):
    v = tab[row.name]
    v = v(row.param) if callable(v) else v
    return v if v is None else Fraction(v)


def mismatches(m, tab):
    rows, divs = table(m, SU2)
    bad = set()
    for r in rows:
        p = printed(tab, r)
        got = None if r.status == "Empty" else r.h1_units_dimG
        if p != got:
            bad.add((r.name, r.param))
    return rows, divs, bad


@criterion(1, "integrand assembly reproduces the printed expression")
def test_c01_integrand():
    t0 = time.perf_counter()
    q = assemble_integrand("paper")
    assert q.laurent_str() == "(3/(x1*x2) + x1/x2 + x2/x1 + x1*x2) * (1 - 1/12*x1^2 - 1/12*x2^2)"
    assert str(q.prefactor) == "3 + 1*x1^2 + 1*x2^2 + 1*x1^2*x2^2"
    assert str(q.todd) == "1 + (-1/12)*x1^2 + (-1/12)*x2^2"
    assert q.denominator == (1, 1)
    assert time.perf_counter() - t0 < 1


@criterion(2, "regularized index gives h1 = -dimG[(3 lambda + 1) chi + 9 lambda |tau|]")
def test_c02_regularized_index():
    t0 = time.perf_counter()
    coeffs = regularize(assemble_integrand("paper"))
    assert coeffs.c_euler == Affine(Fraction(1), Fraction(3))
    assert coeffs.c_pontr == Affine(Fraction(0), Fraction(3))
    for b in (SU2, BundleData.su(3), BundleData.u1()):
        for mf in catalog():
            idx = coeffs.integrate(mf)
            # h1 = -dimG * index, affine in lambda
            assert -b.dim_g * idx.const == -b.dim_g * mf.chi
            assert -b.dim_g * idx.lam == -b.dim_g * (3 * mf.chi + 9 * abs(mf.tau))
            for lam in (Fraction(0), Fraction(-1, 6), Fraction(5, 7)):
                assert -b.dim_g * idx(lam) == h1_of_lambda(b, mf, lam)
    assert time.perf_counter() - t0 < 1


@criterion(3, "lambda(m) consistency on 100 random m; printed relation reported")
def test_c03_lambda_consistency():
    t0 = time.perf_counter()
    rng = random.Random(3)
    mfs = catalog()
    done = 0
    while done < 100:
        m = Fraction(rng.randint(-300, 300), rng.randint(1, 40))
        if m == -3:
            continue
        for mf in mfs:
            assert h1_of_lambda(SU2, mf, lambda_of_m(m)) == h1_of_m(SU2, mf, m)
        done += 1
    cp2 = get_manifold("CP2")
    assert h1_of_lambda(SU2, cp2, lambda_of_m_printed(3)) != h1_of_m(SU2, cp2, 3)
    divs = lambda_divergences()
    assert len(divs) == 1 and "m/(9+3m)" in divs[0].paper_value
    assert time.perf_counter() - t0 < 5


@criterion(4, "table m=3 matches every printed row")
def test_c04_table1():
    t0 = time.perf_counter()
    rows, divs, bad = mismatches(3, T1)
    assert {r.name for r in rows} == set(T1)
    assert len(T1) == 8
    assert not bad and not divs
    by = {(r.name, r.param): r for r in rows}
    assert by[("S4", None)].status == "Empty"
    assert by[("S2xSigma_g", 0)].status == "Empty"
    assert by[("K3", None)].h1_units_dimG == 12
    assert all(by[("S_d", d)].h1_units_dimG == d * (2 * d - 5) for d in (3, 4, 5))
    assert time.perf_counter() - t0 < 1


@criterion(5, "tables m=6, 15 match except the two documented divergences")
def test_c05_tables_2_3():
    t0 = time.perf_counter()
    rows2, divs2, bad2 = mismatches(6, T2)
    assert bad2 == {("K3_Z2xZ2", None), ("S_d", 3), ("S_d", 4), ("S_d", 5)}
    by = {(r.name, r.param): r for r in rows2}
    assert by[("K3_Z2xZ2", None)].h1_units_dimG == 6
    for d in (3, 4, 5):
        assert by[("S_d", d)].h1_units_dimG == Fraction(d * (d * d + 4 * d - 14), 3)
    assert len(divs2) == 2
    locs = sorted(d.location for d in divs2)
    assert any("K3_Z2xZ2" in x for x in locs) and any("S_d" in x for x in locs)
    k3 = next(d for d in divs2 if "K3_Z2xZ2" in d.location)
    assert k3.paper_value.startswith("4") and k3.derived_value.startswith("6")
    rows3, divs3, bad3 = mismatches(15, T3)
    assert not bad3 and not divs3
    assert time.perf_counter() - t0 < 1


@criterion(6, "CP2 sequence: 48 of 50 printed pairs, n=14 and n=43 diverge")
def test_c06_sequence():
    t0 = time.perf_counter()
    pts = sequence_cp2(50)
    assert [p.n for p in pts] == list(range(1, 51))
    diverging = []
    for p, ref in zip(pts, SEQUENCE):
        ref = None if ref is None else Fraction(ref)
        if p.m != ref:
            diverging.append(p.n)
    assert diverging == [14, 43]
    assert pts[13].m == Fraction(-45, 13) and pts[42].m == Fraction(-22, 7)
    cp2 = get_manifold("CP2")
    for b in (SU2, BundleData.su(3)):
        for p in pts:
            if p.m is not None:
                assert h1_of_m(b, cp2, p.m) == 3 * p.n * b.dim_g
    assert pts[0].m is None  # h1 = 3 dimG |tau| is never reached
    assert time.perf_counter() - t0 < 1


@criterion(7, "2D dimensions")
def test_c07_dim2():
    t0 = time.perf_counter()
    for b in (SU2, BundleData.su(3)):
        for g in range(2, 7):
            assert dim2(g, b).value == (2 * g - 2) * b.dim_g
        assert dim2(1, b).value == 2 * b.rank_g
        assert dim2(0, b).value == 0
    for g in range(0, 7):
        assert dim2(g, BundleData.u1()).value == 2 * g
    assert time.perf_counter() - t0 < 1


@criterion(8, "plot data annotations for CP2")
def test_c08_plotdata():
    t0 = time.perf_counter()
    pd = plotdata(get_manifold("CP2"), SU2, -10, 20, 30)
    assert pd.annotations == ["vertical_asymptote m=-3", "horizontal_asymptote h1=3 dimG",
                              "zero_crossing m=3"]
    assert all(m != -3 for m, _ in pd.rows)
    assert dict(pd.rows)[Fraction(3)] == 0
    assert time.perf_counter() - t0 < 1


@criterion(9, "constraint algebra closes exactly on random torus configs")
def test_c09_closure():
    t0 = time.perf_counter()
    sys_ = build_system()
    cfgs = make_configs(sys_, seed=11, count=5)
    assert all(c.K == 2 for c in cfgs)
    checks = algebra_closure(sys_, cfgs)
    assert len(checks) == 3
    for c in checks:
        assert c.status == "proven_symbolic" and c.configs_used == 5 and c.max_deviation == "0"
    assert time.perf_counter() - t0 < 60


@criterion(10, "consistency, dependency, gauge, diffeomorphism and Bianchi identities vanish")
def test_c10_identities():
    t0 = time.perf_counter()
    lie = LieData.su2()
    sys_ = build_system(lie)
    cfgs = make_configs(sys_, seed=5, count=5)
    assert all(c.status == "proven_symbolic" for c in consistency_evolution(sys_, cfgs))
    assert all_zero(independence_relation(sys_))
    assert not all_zero(printed_independence(sys_))
    assert all_zero(printed_independence(build_system(lie, g2=2)))
    assert independence_check(sys_).ok
    gt = gauge_transformations(sys_)
    assert gt.status == "proven_symbolic"
    assert all_zero(diffeo_identity_check(lie))
    assert all_zero(bianchi_check(lie))
    assert time.perf_counter() - t0 < 30


@criterion(11, "degrees of freedom")
def test_c11_dof():
    for N in (2, 3, 4, 7):
        t = bf_tallies(N)
        assert dof_count(t["pairs"], t["first_class"], t["second_class"]) == 0
        t = bfym_tallies(N)
        assert dof_count(t["pairs"], t["first_class"], t["second_class"]) == 2 * (N * N - 1)


@criterion(12, "property suites: Euler operator, Poisson brackets, ring axioms")
def test_c12_properties():
    t0 = time.perf_counter()
    rng = random.Random(12)
    # Euler operator annihilates total derivatives: 200 cases
    for _ in range(200):
        q = randgen.diffpoly(rng)
        p = total_derivative(q, rng.randint(1, 3))
        for s in p.symbols():
            kind, idx, internal = s.base
            assert variational_derivative(p, kind, idx, internal, s.time_order).is_zero()
    # Poisson bracket antisymmetry and Jacobi: 50 triples
    cfg = random_config(LieData.su2(), {"A": "spatial", "Pi": "spatial", "eps": "scalar"}, seed=12)
    for _ in range(50):
        F, G, H = (randgen.quadratic_density(rng) for _ in range(3))
        assert (bracket_density(F, G) + bracket_density(G, F)).is_zero()
        jac = (bracket_density(F, bracket_density(G, H)) + bracket_density(G, bracket_density(H, F))
               + bracket_density(H, bracket_density(F, G)))
        assert evaluate_average(jac, cfg) == 0
    # ring axioms and exp / reciprocal roundtrips: 500 cases
    one = GradedClass.const(1)
    for _ in range(500):
        p, q, r = randgen.graded(rng), randgen.graded(rng), randgen.graded(rng)
        assert (p * q) * r == p * (q * r)
        assert p * q == q * p
        assert p * (q + r) == p * q + p * r
        form = randgen.linear(rng)
        assert exp_linear(form) * exp_linear(-form) == one
        u = randgen.invertible(rng)
        assert u * series_reciprocal(u) == one
    assert time.perf_counter() - t0 < 60
