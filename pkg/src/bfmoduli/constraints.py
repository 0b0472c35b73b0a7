"""Dirac analysis of the BF action deformed by a ``g^2 B^B`` term.

Everything is built from the Lagrangian density in components, then checked
both as exact identities between differential polynomials (modulo total
spatial divergences where a smeared statement is meant) and as exact
numbers on random torus configurations.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from itertools import permutations
from typing import Dict, List, Optional, Sequence

from .divergence import Divergence
from .errors import DomainError
from .exact import GaussRat, I as IMAG, as_rat
from .jets import (SPACETIME, SPATIAL, B, B0, A, DiffPoly, FieldSymbol, LieData, Pi, adjoint,
                   all_zero, bracket, covariant_derivative, curvature, diffeo_identity_check,
                   dual_curvature, equal_mod_divergence, eta, field, partial,
                   variational_derivative)
from .torus import (FieldConfig, bracket_density, evaluate_average, random_config)

HALF = GaussRat(Fraction(1, 2))
G2 = DiffPoly.g2(1)
HALF_G2 = G2 * HALF

# Field shapes used by the random configurations of every check.
CONFIG_KINDS = {"A": "spacetime", "Pi": "spatial", "B0": "spatial", "eps": "scalar",
                "eps2": "scalar", "chi": "spatial", "chi2": "spatial"}


@dataclass
class BFSystem:
    lie: LieData
    lagrangian: DiffPoly
    momenta: Dict[tuple, DiffPoly]          # (i, I) -> (i/2) eta^{ijk} B_jk^I
    phi: List[DiffPoly]                     # phi^I = D_k Pi^{kI}
    phi_vec: List[List[DiffPoly]]           # phi^{iI} = g2/2 Pi^{iI} - 1/2 eta^{ijk} F_jk^I
    hamiltonian: DiffPoly                   # -A0 phi + i B0_i phi^i
    generator: DiffPoly                     # eps^I phi^I + epsv_i^I phi^{iI}
    g2: Optional[Fraction] = None           # numeric coupling for config checks

    def at_g2(self, p: DiffPoly) -> DiffPoly:
        return p if self.g2 is None else p.subs_g2(self.g2)

    def config_g2(self) -> Fraction:
        return Fraction(1) if self.g2 is None else self.g2


def _dot(u: Sequence[DiffPoly], v: Sequence[DiffPoly]) -> DiffPoly:
    out = DiffPoly()
    for a, b in zip(u, v):
        out = out + a * b
    return out


def constraint_scalar(lie: LieData) -> List[DiffPoly]:
    out = [DiffPoly() for _ in lie.indices]
    for k in SPATIAL:
        out = [o + d for o, d in zip(out, covariant_derivative(adjoint("Pi", lie, (k,)), k, lie))]
    return out


def constraint_vector(lie: LieData) -> List[List[DiffPoly]]:
    dual = dual_curvature(lie)
    return [[HALF_G2 * Pi(i, I) - dual[i - 1][I - 1] for I in lie.indices] for i in SPATIAL]


def build_lagrangian(lie: LieData) -> DiffPoly:
    """``1/2 eta^{ijk} { i (Adot_k - D_k A_0) B_ij + B0_i (i F_jk + g2/2 B_jk) }``."""
    D_A0 = {k: covariant_derivative(adjoint("A", lie, (0,)), k, lie) for k in SPATIAL}
    F = {(j, k): curvature(j, k, lie) for j in SPATIAL for k in SPATIAL if j != k}
    L = DiffPoly()
    for i, j, k in permutations(SPATIAL):
        e = HALF * eta(i, j, k)
        for I in lie.indices:
            kinetic = (A(k, I, (0,)) - D_A0[k][I - 1]) * B(i, j, I) * IMAG
            mult = B0(i, I) * (F[(j, k)][I - 1] * IMAG + HALF_G2 * B(j, k, I))
            L = L + (kinetic + mult) * e
    return L


def b_from_pi(sym: FieldSymbol) -> Optional[DiffPoly]:
    """``B_jk^I = -i eta^{ijk} Pi^{iI}``, the inverse of the momentum relation."""
    if sym.kind != "B":
        return None
    j, k = sym.idx
    return sum((Pi(i, sym.internal) * (-IMAG * eta(i, j, k)) for i in SPATIAL if eta(i, j, k)),
               DiffPoly())


def build_system(lie: LieData | None = None, g2=None) -> BFSystem:
    lie = lie or LieData.su2()
    L = build_lagrangian(lie)
    momenta = {}
    for i in SPATIAL:
        for I in lie.indices:
            momenta[(i, I)] = sum((B(j, k, I) * (IMAG * HALF * eta(i, j, k))
                                   for j in SPATIAL for k in SPATIAL if eta(i, j, k)), DiffPoly())
    phi = constraint_scalar(lie)
    phi_vec = constraint_vector(lie)
    H = DiffPoly()
    for I in lie.indices:
        H = H - A(0, I) * phi[I - 1]
        for i in SPATIAL:
            H = H + B0(i, I) * phi_vec[i - 1][I - 1] * IMAG
    gen = _dot(adjoint("eps", lie), phi)
    for i in SPATIAL:
        gen = gen + _dot(adjoint("epsv", lie, (i,)), phi_vec[i - 1])
    return BFSystem(lie, L, momenta, phi, phi_vec, H, gen, None if g2 is None else as_rat(g2))


# smeared constraints -------------------------------------------------------

def smeared_phi(sys: BFSystem, kind: str = "eps") -> DiffPoly:
    return _dot(adjoint(kind, sys.lie), sys.phi)


def smeared_phi_vec(sys: BFSystem, kind: str = "chi") -> DiffPoly:
    out = DiffPoly()
    for i in SPATIAL:
        out = out + _dot(adjoint(kind, sys.lie, (i,)), sys.phi_vec[i - 1])
    return out


def _smear_bracket_vec(sys: BFSystem, u_kind: str, v_kind: str) -> DiffPoly:
    """``phi_i[[u, v_i]]`` with ``u`` scalar-smearing and ``v`` vector-smearing."""
    out = DiffPoly()
    for i in SPATIAL:
        w = bracket(adjoint(u_kind, sys.lie), adjoint(v_kind, sys.lie, (i,)), sys.lie)
        out = out + _dot(w, sys.phi_vec[i - 1])
    return out


# reports -------------------------------------------------------------------

@dataclass
class Check:
    name: str
    status: str
    configs_used: int = 0
    max_deviation: str = "0"
    divergences: List[Divergence] = dc_field(default_factory=list)
    details: Dict[str, str] = dc_field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.status in ("proven_symbolic", "exact_on_configs")

    def to_dict(self) -> dict:
        return {"name": self.name, "status": self.status, "configs_used": self.configs_used,
                "max_deviation": self.max_deviation,
                "divergences": [d.to_dict() for d in self.divergences],
                "details": dict(self.details)}


def make_configs(sys: BFSystem, seed: int = 0, count: int = 5) -> List[FieldConfig]:
    return [random_config(sys.lie, CONFIG_KINDS, seed + n, sys.config_g2()) for n in range(count)]


def _max_abs(values) -> GaussRat:
    worst = GaussRat(0)
    for v in values:
        if v.norm() > worst.norm():
            worst = v
    return worst


def _config_deviation(diff: DiffPoly, configs: Sequence[FieldConfig]) -> GaussRat:
    return _max_abs(evaluate_average(diff, c) for c in configs)


def _status(symbolic: Optional[bool], deviation: GaussRat) -> str:
    if symbolic is False or deviation:
        return "failed"
    return "proven_symbolic" if symbolic else "exact_on_configs"


def _relation(sys: BFSystem, name: str, lhs: DiffPoly, rhs: DiffPoly,
              configs: Sequence[FieldConfig], symbolic: bool = True) -> Check:
    diff = lhs - rhs
    proven = equal_mod_divergence(sys.at_g2(lhs), sys.at_g2(rhs)) if symbolic else None
    dev = _config_deviation(diff, configs)
    return Check(name, _status(proven, dev), len(configs), str(dev))


def algebra_closure(sys: BFSystem, configs: Sequence[FieldConfig], symbolic: bool = True) -> List[Check]:
    """The three smeared bracket relations of the constraint algebra."""
    pe, pe2 = smeared_phi(sys, "eps"), smeared_phi(sys, "eps2")
    pc, pc2 = smeared_phi_vec(sys, "chi"), smeared_phi_vec(sys, "chi2")
    rhs1 = _dot(bracket(adjoint("eps", sys.lie), adjoint("eps2", sys.lie), sys.lie), sys.phi)
    rhs2 = _smear_bracket_vec(sys, "eps", "chi")
    return [
        _relation(sys, "closure {phi,phi}", bracket_density(pe, pe2), rhs1, configs, symbolic),
        _relation(sys, "closure {phi,phi_i}", bracket_density(pe, pc), rhs2, configs, symbolic),
        _relation(sys, "closure {phi_i,phi_j}", bracket_density(pc, pc2), DiffPoly(), configs, symbolic),
    ]


def consistency_rhs(sys: BFSystem, printed: bool = False):
    """Right-hand sides of the time evolution of both constraints, smeared
    with ``eps`` and ``chi``.  ``printed`` selects the published form
    ``f^{IJK}[A0^J phi^K - phi^{iJ} B0_i^K]`` and ``f^{IJK} A0^J phi^{iK}``."""
    lie = sys.lie
    r1, r2 = DiffPoly(), DiffPoly()
    for (a, b, c), val in lie.f_items:
        eps, A0 = field("eps", (), a), A(0, b)
        if printed:
            r1 = r1 + eps * A0 * sys.phi[c - 1] * val
        else:
            r1 = r1 - eps * A0 * sys.phi[c - 1] * val
        for i in SPATIAL:
            pv = sys.phi_vec[i - 1]
            if printed:
                r1 = r1 - eps * pv[b - 1] * B0(i, c) * val
                r2 = r2 + field("chi", (i,), a) * A0 * pv[c - 1] * val
            else:
                r1 = r1 - eps * pv[b - 1] * B0(i, c) * (IMAG * val)
                r2 = r2 - field("chi", (i,), a) * A0 * pv[c - 1] * val
    return r1, r2


def consistency_evolution(sys: BFSystem, configs: Sequence[FieldConfig], symbolic: bool = True) -> List[Check]:
    lhs1 = bracket_density(smeared_phi(sys), sys.hamiltonian)
    lhs2 = bracket_density(smeared_phi_vec(sys), sys.hamiltonian)
    d1, d2 = consistency_rhs(sys)
    p1, p2 = consistency_rhs(sys, printed=True)
    c1 = _relation(sys, "evolution of phi", lhs1, d1, configs, symbolic)
    c2 = _relation(sys, "evolution of phi_i", lhs2, d2, configs, symbolic)
    if _config_deviation(lhs1 - p1, configs):
        c1.divergences.append(Divergence(
            "time evolution of the scalar constraint",
            "f^{IJK}[A0^J phi^K - phi^{iJ} B0_i^K]",
            "-f^{IJK}[A0^J phi^K + i phi^{iJ} B0_i^K]", "constraints"))
    if _config_deviation(lhs2 - p2, configs):
        c2.divergences.append(Divergence(
            "time evolution of the vector constraint",
            "f^{IJK} A0^J phi^{iK}", "-f^{IJK} A0^J phi^{iK}", "constraints"))
    c1.details["note"] = c2.details["note"] = "both sides vanish on the constraint surface"
    return [c1, c2]


def system_checks(sys: BFSystem) -> List[Check]:
    """Momenta, Hamiltonian and zero-coupling limit, all symbolic."""
    lie, L = sys.lie, sys.lagrangian
    ok_momenta = all(partial(L, FieldSymbol("A", (i,), I, (0,))) == sys.momenta[(i, I)]
                     for i in SPATIAL for I in lie.indices)
    L_pi = L.substitute(b_from_pi)
    kinetic = sum((A(i, I, (0,)) * Pi(i, I) for i in SPATIAL for I in lie.indices), DiffPoly())
    H_derived = kinetic - L_pi
    ok_H = equal_mod_divergence(H_derived, sys.hamiltonian)
    ok_lin = _multiplier_linear(sys)
    ok_limit = all(sys.phi_vec[i - 1][I - 1].subs_g2(0) == -dual_curvature(lie)[i - 1][I - 1]
                   for i in SPATIAL for I in lie.indices)
    st = lambda b: "proven_symbolic" if b else "failed"  # noqa: E731
    return [Check("momenta from the Lagrangian", st(ok_momenta)),
            Check("canonical Hamiltonian up to divergence", st(ok_H)),
            Check("Hamiltonian is linear in constraints", st(ok_lin)),
            Check("zero-coupling limit gives flatness", st(ok_limit))]


def _multiplier_linear(sys: BFSystem) -> bool:
    H = sys.hamiltonian
    rebuilt = DiffPoly()
    for I in sys.lie.indices:
        c = partial(H, FieldSymbol("A", (0,), I))
        if c != -sys.phi[I - 1]:
            return False
        rebuilt = rebuilt + A(0, I) * c
        for i in SPATIAL:
            c = partial(H, FieldSymbol("B0", (i,), I))
            if c != sys.phi_vec[i - 1][I - 1] * IMAG:
                return False
            rebuilt = rebuilt + B0(i, I) * c
    return rebuilt == H


def independence_relation(sys: BFSystem) -> List[DiffPoly]:
    """``D_i phi^{iI} - g2/2 phi^I`` per internal index."""
    lie = sys.lie
    out = [-HALF_G2 * p for p in sys.phi]
    for i in SPATIAL:
        out = [o + d for o, d in zip(out, covariant_derivative(sys.phi_vec[i - 1], i, lie))]
    return [sys.at_g2(p) for p in out]


def printed_independence(sys: BFSystem) -> List[DiffPoly]:
    """``D_i phi^{iI} - phi^I`` as published."""
    out = [-p for p in sys.phi]
    for i in SPATIAL:
        out = [o + d for o, d in zip(out, covariant_derivative(sys.phi_vec[i - 1], i, sys.lie))]
    return [sys.at_g2(p) for p in out]


def independence_check(sys: BFSystem) -> Check:
    ok = all_zero(independence_relation(sys))
    c = Check("constraint dependency via Bianchi", "proven_symbolic" if ok else "failed")
    if not all_zero(printed_independence(sys)):
        c.divergences.append(Divergence("dependency among the vector constraints",
                                        "D_i phi^{iI} = phi^I", "D_i phi^{iI} = (g^2/2) phi^I",
                                        "constraints"))
    return c


@dataclass
class GaugeTransformations:
    delta_A: Dict[tuple, DiffPoly]
    delta_Pi: Dict[tuple, DiffPoly]
    delta_A0: Dict[int, DiffPoly]
    delta_B0: Dict[tuple, DiffPoly]


def _normalize_eps_vec(p: DiffPoly) -> DiffPoly:
    """``eps_i -> (2/g2) eps_i``."""
    two_over = DiffPoly.const(2, -1)
    return p.substitute(lambda s: field(s.kind, s.idx, s.internal) * two_over if s.kind == "epsv" else None)


def derive_gauge_transformations(sys: BFSystem, normalize: bool = True) -> GaugeTransformations:
    G = sys.generator
    if normalize:
        G = _normalize_eps_vec(G)
    lie = sys.lie
    dA = {(i, I): variational_derivative(G, "Pi", (i,), I) for i in SPATIAL for I in lie.indices}
    dP = {(i, I): -variational_derivative(G, "A", (i,), I) for i in SPATIAL for I in lie.indices}
    # multipliers have no conjugate momenta, so the generator cannot move them
    dA0 = {I: DiffPoly() for I in lie.indices}
    dB0 = {(i, I): DiffPoly() for i in SPATIAL for I in lie.indices}
    return GaugeTransformations(dA, dP, dA0, dB0)


def printed_gauge_transformations(lie: LieData, eps_vec_factor: DiffPoly | None = None):
    """``-D_i eps + eps_i`` and ``f eps Pi + eta^{ijk} D_j eps_k`` (factor on the last term)."""
    factor = eps_vec_factor if eps_vec_factor is not None else DiffPoly.const(1)
    D_eps = {i: covariant_derivative(adjoint("eps", lie), i, lie) for i in SPATIAL}
    dA, dP = {}, {}
    for i in SPATIAL:
        f_term = bracket(adjoint("eps", lie), adjoint("Pi", lie, (i,)), lie)
        curl = [DiffPoly() for _ in lie.indices]
        for j in SPATIAL:
            for k in SPATIAL:
                e = eta(i, j, k)
                if e:
                    Dj = covariant_derivative(adjoint("epsv", lie, (k,)), j, lie)
                    curl = [c + d * e for c, d in zip(curl, Dj)]
        for I in lie.indices:
            dA[(i, I)] = -D_eps[i][I - 1] + field("epsv", (i,), I)
            dP[(i, I)] = f_term[I - 1] + curl[I - 1] * factor
    return dA, dP


def gauge_transformations(sys: BFSystem) -> Check:
    lie = sys.lie
    raw = derive_gauge_transformations(sys, normalize=False)
    norm = derive_gauge_transformations(sys, normalize=True)
    pA, pP = printed_gauge_transformations(lie)
    _, pP_fixed = printed_gauge_transformations(lie, DiffPoly.const(2, -1))
    ok_A = all((norm.delta_A[k] - pA[k]).is_zero() for k in pA)
    ok_P_fixed = all((norm.delta_Pi[k] - pP_fixed[k]).is_zero() for k in pP)
    ok_P_printed = all((norm.delta_Pi[k] - pP[k]).is_zero() for k in pP)
    ok_rest = all(p.is_zero() for p in norm.delta_A0.values()) and all(p.is_zero() for p in norm.delta_B0.values())
    raw_A_ok = all((raw.delta_A[(i, I)] - (pA[(i, I)] - field("epsv", (i,), I)
                                            + HALF_G2 * field("epsv", (i,), I))).is_zero()
                   for i in SPATIAL for I in lie.indices)
    ok_diffeo = _diffeo_from_gauge(norm, lie)
    ok = ok_A and ok_P_fixed and ok_rest and raw_A_ok and ok_diffeo
    c = Check("gauge transformations from the generator", "proven_symbolic" if ok else "failed")
    c.details = {"delta_A_matches_after_normalization": str(ok_A),
                 "unnormalized_delta_A_has_g2/2": str(raw_A_ok),
                 "delta_Pi_matches_with_2/g2": str(ok_P_fixed),
                 "lie_derivative_from_field_dependent_parameters": str(ok_diffeo)}
    if not ok_P_printed:
        c.divergences.append(Divergence(
            "gauge transformation of Pi after rescaling eps_i by 2/g^2",
            "f^{IJK} eps^J Pi^{iK} + eta^{ijk} D_j eps_k^I",
            "f^{IJK} eps^J Pi^{iK} + (2/g^2) eta^{ijk} D_j eps_k^I", "constraints"))
    return c


def _diffeo_from_gauge(gt: GaugeTransformations, lie: LieData) -> bool:
    """Substitute ``eps = -xi.A``, ``eps_i = xi^mu F_{mu i}`` into the derived
    ``delta A_i`` and compare with the Lie derivative of ``A_i``."""
    F = {(mu, i): curvature(mu, i, lie) for mu in SPACETIME for i in SPATIAL}

    def rule(s: FieldSymbol):
        if s.kind == "eps":
            return sum((-field("xi", (mu,)) * A(mu, s.internal) for mu in SPACETIME), DiffPoly())
        if s.kind == "epsv":
            i = s.idx[0]
            return sum((field("xi", (mu,)) * F[(mu, i)][s.internal - 1] for mu in SPACETIME), DiffPoly())
        return None

    for i in SPATIAL:
        for I in lie.indices:
            lhs = gt.delta_A[(i, I)].substitute(rule)
            lie_d = sum((field("xi", (mu,)) * A(i, I, (mu,)) + field("xi", (mu,), 0, (i,)) * A(mu, I)
                         for mu in SPACETIME), DiffPoly())
            if not (lhs - lie_d).is_zero():
                return False
    return all_zero(diffeo_identity_check(lie))


def proportionality(p: DiffPoly, q: DiffPoly) -> Optional[DiffPoly]:
    """A monomial ``c * g2^k`` with ``p == c * g2^k * q``, or None."""
    if q.is_zero():
        return DiffPoly() if p.is_zero() else None
    if p.is_zero():
        return None
    (gq, fq), cq = next(iter(sorted(q.terms.items(), key=lambda kv: str(kv[0]))))
    for (gp, fp), cp in p.terms.items():
        if fp == fq:
            ratio = DiffPoly.const(cp / cq, gp - gq)
            return ratio if p == ratio * q else None
    return None


def extended_action(sys: BFSystem) -> DiffPoly:
    """``Pi Adot - H_c``, the phase-space action density."""
    kin = sum((A(i, I, (0,)) * Pi(i, I) for i in SPATIAL for I in sys.lie.indices), DiffPoly())
    return kin - sys.hamiltonian


def printed_extended_action(sys: BFSystem) -> DiffPoly:
    """``Adot Pi + A0 D_i Pi^i + 1/2 eta B0_i F_jk + Pi^i B0_i`` as published."""
    lie = sys.lie
    dual = dual_curvature(lie)
    out = DiffPoly()
    for I in lie.indices:
        out = out + A(0, I) * sys.phi[I - 1]
        for i in SPATIAL:
            out = out + A(i, I, (0,)) * Pi(i, I) + B0(i, I) * dual[i - 1][I - 1] + Pi(i, I) * B0(i, I)
    return out


def printed_hamiltonian_literal(sys: BFSystem) -> DiffPoly:
    """Published extended Hamiltonian with its ``eta^{ijk} F_ij`` contraction taken literally."""
    lie = sys.lie
    out = DiffPoly()
    F = {(i, j): curvature(i, j, lie) for i in SPATIAL for j in SPATIAL}
    for I in lie.indices:
        out = out - A(0, I) * sys.phi[I - 1]
        for i in SPATIAL:
            inner = -G2 * Pi(i, I)
            for j in SPATIAL:
                for k in SPATIAL:
                    e = eta(i, j, k)
                    if e:
                        inner = inner + F[(i, j)][I - 1] * e
            out = out - B0(i, I) * inner * (IMAG * HALF)
    return out


def printed_motion_equations(sys: BFSystem) -> Dict[str, List[DiffPoly]]:
    """Left-hand sides of the published equations of motion, each ``= 0``."""
    lie = sys.lie
    dual = dual_curvature(lie)
    out = {"A0": [], "B0": [], "A": [], "Pi": []}
    for I in lie.indices:
        out["A0"].append(sys.phi[I - 1])
    for i in SPATIAL:
        curl = [DiffPoly() for _ in lie.indices]
        for j in SPATIAL:
            for k in SPATIAL:
                e = eta(i, j, k)
                if e:
                    Dj = covariant_derivative(adjoint("B0", lie, (k,)), j, lie)
                    curl = [c + d * e for c, d in zip(curl, Dj)]
        DA0 = covariant_derivative(adjoint("A", lie, (0,)), i, lie)
        for I in lie.indices:
            out["B0"].append(dual[i - 1][I - 1] - HALF_G2 * Pi(i, I))
            out["A"].append(curl[I - 1])
            out["Pi"].append(DA0[I - 1] - A(i, I, (0,)) + HALF_G2 * B0(i, I) * IMAG)
    return out


def derived_motion_equations(action: DiffPoly, lie: LieData) -> Dict[str, List[DiffPoly]]:
    """Euler-Lagrange expressions of a phase-space action density (time included)."""
    var = lambda kind, idx, I: variational_derivative(action, kind, idx, I, dirs=SPACETIME)  # noqa: E731
    out = {"A0": [var("A", (0,), I) for I in lie.indices], "B0": [], "A": [], "Pi": []}
    for i in SPATIAL:
        for I in lie.indices:
            out["B0"].append(var("B0", (i,), I))
            out["A"].append(var("A", (i,), I))
            out["Pi"].append(var("Pi", (i,), I))
    return out


def hamilton_equations(sys: BFSystem) -> Check:
    lie, H = sys.lie, sys.hamiltonian
    adot_ok = True
    for i in SPATIAL:
        DA0 = covariant_derivative(adjoint("A", lie, (0,)), i, lie)
        for I in lie.indices:
            expected = DA0[I - 1] + HALF_G2 * B0(i, I) * IMAG
            if variational_derivative(H, "Pi", (i,), I) != expected:
                adot_ok = False
    limit_ok = all(variational_derivative(H, "Pi", (i,), I).subs_g2(0)
                   == covariant_derivative(adjoint("A", lie, (0,)), i, lie)[I - 1]
                   for i in SPATIAL for I in lie.indices)
    derived = derived_motion_equations(extended_action(sys), lie)
    printed = printed_motion_equations(sys)
    c = Check("Hamilton and Euler-Lagrange equations", "proven_symbolic")
    c.details["Adot = D_i A0 + i g2/2 B0_i"] = str(adot_ok)
    c.details["g2=0 limit is pure gauge"] = str(limit_ok)
    for name in ("A0", "B0", "Pi"):
        ratios = [proportionality(d, p) for d, p in zip(derived[name], printed[name])]
        good = all(r is not None for r in ratios) and len({str(r) for r in ratios}) == 1
        c.details[f"variation {name} proportional to printed"] = str(ratios[0]) if good else "no"
        if not good:
            c.status = "failed"
    # the A_i line: its B0 part matches, the momentum rate and A0 terms are absent in print
    dA, pA = derived["A"], printed["A"]
    b0_ratios = [proportionality(d.containing("B0"), p) for d, p in zip(dA, pA)]
    b0_ok = all(r is not None for r in b0_ratios) and len({str(r) for r in b0_ratios}) == 1
    c.details["variation A: B0 part proportional to printed"] = str(b0_ratios[0]) if b0_ok else "no"
    if not b0_ok or not (adot_ok and limit_ok):
        c.status = "failed"
    if any(proportionality(d, p) is None for d, p in zip(dA, pA)):
        c.divergences.append(Divergence(
            "equation from varying A_i",
            "eta^{ijk} D_j B0_k = 0",
            "-Pidot^{iI} - f^{IJK} A0^J Pi^{iK} + i eta^{ijk} D_j B0_k^I = 0",
            "constraints"))
    # extended action and Hamiltonian as printed
    if not (printed_extended_action(sys) - extended_action(sys)).is_zero():
        c.divergences.append(Divergence(
            "extended action",
            "Adot Pi + A0 D_i Pi^i + 1/2 eta^{ijk} B0_i F_jk + Pi^i B0_i",
            "Adot Pi + A0 D_i Pi^i + (i/2) eta^{ijk} B0_i F_jk - i (g^2/2) Pi^i B0_i",
            "constraints"))
    if not equal_mod_divergence(printed_hamiltonian_literal(sys), H):
        c.divergences.append(Divergence(
            "extended Hamiltonian index contraction",
            "-(i/2) B0_i (eta^{ijk} F_ij - g^2 Pi^i)",
            "-(i/2) B0_i (eta^{ijk} F_jk - g^2 Pi^i), equal to the canonical Hamiltonian",
            "constraints"))
    return c


def phase_space_action_check(sys: BFSystem) -> Check:
    """Compare the published first-order action with ``Pi Adot - H_c``."""
    lie = sys.lie
    dual = dual_curvature(lie)
    printed = DiffPoly()
    for I in lie.indices:
        printed = printed - A(0, I) * sys.phi[I - 1]
        for i in SPATIAL:
            printed = (printed + Pi(i, I) * A(i, I, (0,)) - B0(i, I) * dual[i - 1][I - 1] * IMAG
                       + HALF_G2 * Pi(i, I) * B0(i, I) * IMAG)
    derived = extended_action(sys)
    L_pi = sys.lagrangian.substitute(b_from_pi)
    ok = equal_mod_divergence(L_pi, derived)
    c = Check("first-order action from the Lagrangian", "proven_symbolic" if ok else "failed")
    if not equal_mod_divergence(printed, derived):
        c.divergences.append(Divergence(
            "first-order action after inserting the momenta",
            "Pi Adot - A0 D_k Pi^k - (i/2) eta B0_i F_jk + i (g^2/2) Pi^i B0_i",
            "Pi Adot + A0 D_k Pi^k + (i/2) eta B0_i F_jk - i (g^2/2) Pi^i B0_i",
            "constraints"))
    return c


def dof_count(canonical_pairs_per_point: int, first_class: int, second_class: int) -> Fraction:
    """Physical degrees of freedom per point."""
    p, f, s = canonical_pairs_per_point, first_class, second_class
    if min(p, f, s) < 0:
        raise DomainError("counts must be nonnegative")
    if 2 * f + s > 2 * p:
        raise DomainError("more constraints than phase-space variables")
    return Fraction(2 * p - 2 * f - s, 2)


def bf_tallies(N: int) -> dict:
    """Canonical pairs and independent first-class constraints for SU(N)."""
    d = N * N - 1
    return {"pairs": 3 * d, "first_class_total": 4 * d, "dependent": d,
            "first_class": 3 * d, "second_class": 0}


def bfym_tallies(N: int) -> dict:
    """Yang-Mills-like counting: the Hodge term makes B0 auxiliary, leaving Gauss's law."""
    d = N * N - 1
    return {"pairs": 3 * d, "first_class": d, "second_class": 0}


def verify(g2=None, seed: int = 0, configs: int = 5, lie: LieData | None = None) -> List[Check]:
    """Run every check in a fixed order."""
    sys = build_system(lie or LieData.su2(), g2)
    cfgs = make_configs(sys, seed, configs)
    checks = system_checks(sys)
    checks.append(phase_space_action_check(sys))
    checks += algebra_closure(sys, cfgs)
    checks += consistency_evolution(sys, cfgs)
    checks.append(independence_check(sys))
    checks.append(gauge_transformations(sys))
    checks.append(hamilton_equations(sys))
    t = bf_tallies(2)
    dof = dof_count(t["pairs"], t["first_class"], t["second_class"])
    checks.append(Check("degrees of freedom", "proven_symbolic" if dof == 0 else "failed",
                        details={"dof": str(dof)}))
    return checks


def report_json(checks: Sequence[Check]) -> str:
    return json.dumps([c.to_dict() for c in checks], indent=2, ensure_ascii=False)


def constraint_divergences(checks: Sequence[Check]) -> List[Divergence]:
    return [d for c in checks for d in c.divergences]
