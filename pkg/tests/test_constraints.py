import json
from fractions import Fraction

import pytest

from bfmoduli.constraints import (algebra_closure, bf_tallies, build_system, constraint_divergences,
                                  dof_count, extended_action, hamilton_equations,
                                  independence_relation, make_configs, printed_independence,
                                  proportionality, report_json, system_checks, verify)
from bfmoduli.errors import DomainError
from bfmoduli.jets import A, DiffPoly, LieData, all_zero
from bfmoduli.torus import evaluate_average


@pytest.fixture(scope="module")
def su2_checks():
    return verify()


def test_every_check_passes(su2_checks):
    assert len(su2_checks) == 14
    assert all(c.status == "proven_symbolic" for c in su2_checks)


def test_divergence_entries(su2_checks):
    divs = constraint_divergences(su2_checks)
    assert len(divs) == 8
    assert all(d.category == "constraints" for d in divs)
    locs = " | ".join(d.location for d in divs)
    for part in ("dependency", "gauge transformation of Pi", "scalar constraint", "vector constraint"):
        assert part in locs


def test_report_json_roundtrip(su2_checks):
    data = json.loads(report_json(su2_checks))
    assert [d["name"] for d in data] == [c.name for c in su2_checks]
    assert report_json(su2_checks) == report_json(verify())  # deterministic


def test_numeric_coupling():
    checks = verify(g2=Fraction(3, 2), configs=5)
    assert all(c.ok for c in checks)


def test_abelian_closure():
    lie = LieData.abelian(1)
    sys_ = build_system(lie)
    cfgs = make_configs(sys_, seed=2, count=5)
    assert all(c.status == "proven_symbolic" for c in algebra_closure(sys_, cfgs))
    assert all(c.ok for c in system_checks(sys_))
    assert all_zero(independence_relation(sys_))


def test_printed_dependency_only_at_g2_2():
    assert not all_zero(printed_independence(build_system(g2=1)))
    assert all_zero(printed_independence(build_system(g2=2)))


def test_hamiltonian_on_configs():
    sys_ = build_system()
    cfg = make_configs(sys_, seed=1, count=1)[0]
    # H_c vanishes wherever the constraints do, but not on a generic config
    assert evaluate_average(sys_.hamiltonian, cfg) != 0
    assert hamilton_equations(sys_).ok


def test_extended_action_contains_kinetic_term():
    act = extended_action(build_system())
    assert any(s.kind == "A" and s.time_order == 1 for s in act.symbols())


def test_proportionality():
    p = A(1, 1) * 3
    assert proportionality(p * DiffPoly.g2(), p) == DiffPoly.const(1, 1)
    assert proportionality(A(1, 1), A(2, 1)) is None


def test_dof():
    t = bf_tallies(3)
    assert dof_count(t["pairs"], t["first_class"], t["second_class"]) == 0
    assert dof_count(24, 8, 0) == 16
    assert dof_count(3, 1, 1) == Fraction(3, 2)
    with pytest.raises(DomainError):
        dof_count(3, 4, 0)
    with pytest.raises(DomainError):
        dof_count(-1, 0, 0)
