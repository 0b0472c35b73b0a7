"""Index integrand assembly, xi-regularization and the h1 dimension formulas.

The integrand is a quotient ``numerator / (x1 x2)``.  Its regular part is
read off directly; the terms carrying a pole are shifted ``x -> x + xi``,
weighted by ``lambda * xi^4`` and sent to ``xi -> 0``.  ``lambda`` is kept
symbolic: every coefficient is affine in it.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Tuple

from .charclasses import (NUMERATOR_TRUNCATION, BundleData, ch_alternating_sum,
                          todd_tangent)
from .errors import DomainError, PoleError
from .exact import GaussRat, GradedClass, as_rat, x1, x2, xi_limit, xi_shift

MODES = ("paper", "full")
EULER = (1, 1)  # the Euler class x1*x2 as a denominator monomial


@dataclass(frozen=True)
class Affine:
    """``const + lam * lambda`` over the rationals."""

    const: Fraction = Fraction(0)
    lam: Fraction = Fraction(0)

    def __call__(self, value) -> Fraction:
        return self.const + self.lam * as_rat(value)

    def __add__(self, other: "Affine") -> "Affine":
        return Affine(self.const + other.const, self.lam + other.lam)

    def __str__(self):
        if not self.lam:
            return str(self.const)
        lam = "lambda" if self.lam == 1 else f"{self.lam}*lambda"
        if not self.const:
            return lam
        sign = "-" if self.const < 0 else "+"
        return f"{lam} {sign} {abs(self.const)}"


@dataclass(frozen=True)
class FourFormCoeffs:
    """A 4-form ``c_euler * x1 x2 + c_pontr * (x1^2 + x2^2)``."""

    c_euler: Affine
    c_pontr: Affine

    def at(self, lam) -> Tuple[Fraction, Fraction]:
        return self.c_euler(lam), self.c_pontr(lam)

    def integrate(self, manifold, lam=None) -> Affine | Fraction:
        """Integrate over a closed 4-manifold.

        Uses the integral of e = chi and of p1 = 3 tau, with |tau| in place
        of tau to follow the published dimension formula.
        """
        chi, t = Fraction(manifold.chi), Fraction(3 * abs(manifold.tau))
        total = Affine(self.c_euler.const * chi + self.c_pontr.const * t,
                       self.c_euler.lam * chi + self.c_pontr.lam * t)
        return total if lam is None else total(lam)


@dataclass(frozen=True)
class Integrand:
    """``prefactor * todd / (x1 x2)``, prefactor being the Chern-character sum.

    In ``paper`` mode the prefactor is the published expansion
    ``3 + x1^2 + x2^2 + x1^2 x2^2`` and the Todd class is cut to
    ``1 - (x1^2 + x2^2)/12``.  In ``full`` mode both are the exact series.
    """

    mode: str
    prefactor: GradedClass
    todd: GradedClass
    denominator: Tuple[int, int] = EULER

    @property
    def numerator(self) -> GradedClass:
        return self.prefactor * self.todd

    def laurent_terms(self, poly: GradedClass | None = None) -> Dict[Tuple[int, int], GaussRat]:
        poly = self.numerator if poly is None else poly
        da, db = self.denominator
        return {(a - da, b - db): c for (a, b, s), c in poly.terms.items()}

    def buckets(self, adjoint: GradedClass | None = None) -> Tuple[GradedClass, GradedClass]:
        """Split the numerator into (regular, singular) parts.

        ``paper`` mode sorts by the poles of the prefactor alone, so every
        Todd correction of a singular term stays singular.  ``full`` mode
        sorts each term of the complete product.
        """
        da, db = self.denominator
        adj = adjoint if adjoint is not None else GradedClass.const(1, self.prefactor.truncation)

        def split(poly):
            reg = {k: c for k, c in poly.terms.items() if k[0] >= da and k[1] >= db}
            sing = {k: c for k, c in poly.terms.items() if k not in reg}
            t = poly.truncation
            return GradedClass(reg, t), GradedClass(sing, t)

        if self.mode == "paper":
            reg, sing = split(self.prefactor)
            return reg * self.todd * adj, sing * self.todd * adj
        return split(self.numerator * adj)

    def __str__(self):
        return f"({self.prefactor}) / (x1*x2) * ({self.todd})"

    def laurent_str(self) -> str:
        """Prefactor divided out term by term, e.g. ``3/(x1*x2) + x1/x2 + ...``."""
        return f"({_laurent(self.prefactor, self.denominator)}) * ({_laurent(self.todd, (0, 0))})"


def _mono(a: int, b: int) -> str:
    parts = [f"x{v}" if e == 1 else f"x{v}^{e}" for v, e in ((1, a), (2, b)) if e]
    return "*".join(parts)


def _laurent(p: GradedClass, denominator: Tuple[int, int]) -> str:
    da, db = denominator
    out = []
    for (a, b, s), c in sorted(p.terms.items(), key=lambda kv: (kv[0][0] + kv[0][1], -kv[0][0])):
        c = c.to_real()
        num, den = _mono(max(a - da, 0), max(b - db, 0)), _mono(max(da - a, 0), max(db - b, 0))
        if "*" in den:
            den = f"({den})"
        mag = abs(c)
        if num:
            body = num if mag == 1 else f"{mag}*{num}"
        else:
            body = str(mag.numerator if not den else mag)
            if den and mag.denominator != 1:
                body = f"({mag})"
        if den:
            body = f"{body}/{den}"
        out.append(("- " if c < 0 else "+ ") + body)
    text = " ".join(out)
    return text[2:] if text.startswith("+ ") else "-" + text[2:]


def assemble_integrand(mode: str = "paper") -> Integrand:
    if mode not in MODES:
        raise DomainError(f"integrand mode must be one of {MODES}")
    t = NUMERATOR_TRUNCATION
    u, v = x1(t), x2(t)
    if mode == "paper":
        prefactor = 3 + u * u + v * v + u * u * v * v
        todd = 1 - (u * u + v * v) * GaussRat(Fraction(1, 12))
        return Integrand(mode, prefactor, todd)
    return Integrand(mode, ch_alternating_sum(t), todd_tangent(t))


def _four_form(part: GradedClass) -> Tuple[Fraction, Fraction]:
    """Coefficients (of x1x2, of x1^2 + x2^2) of a symmetric 4-form."""
    p = part.degree_part(2)
    for (a, b, s) in p.terms:
        if s:
            raise DomainError("4-form still depends on xi")
    ce = p.coeff(1, 1).to_real()
    c1, c2 = p.coeff(2, 0).to_real(), p.coeff(0, 2).to_real()
    if c1 != c2:
        raise DomainError("4-form is not a combination of the Euler and Pontryagin classes")
    return ce, c1


def regularize(q: Integrand, lam=None, adjoint: GradedClass | None = None) -> FourFormCoeffs:
    """4-form part of the integrand after the weighted xi-limit.

    With ``lam=None`` the coefficients stay affine in lambda; otherwise they
    are evaluated.
    """
    regular, singular = q.buckets(adjoint)
    reg_e, reg_p = _four_form(regular.divide_monomial(*q.denominator))
    shifted = xi_shift(singular, q.denominator, truncation=2)
    limit = xi_limit(shifted.degree_part(2), 4)
    sing_e, sing_p = _four_form(limit)
    out = FourFormCoeffs(Affine(reg_e, sing_e), Affine(reg_p, sing_p))
    if lam is None:
        return out
    e, p = out.at(lam)
    return FourFormCoeffs(Affine(e), Affine(p))


def h1_of_lambda(b: BundleData, m_fold, lam) -> Fraction:
    """Closed form ``-dim G [(3 lambda + 1) chi + 9 lambda |tau|]``."""
    lam = as_rat(lam)
    return -b.dim_g * ((3 * lam + 1) * m_fold.chi + 9 * lam * abs(m_fold.tau))


def h1_from_pipeline(b: BundleData, m_fold, lam, mode: str = "paper", c2_value=0) -> Fraction:
    """``-Index`` computed through integrand, regularization and integration."""
    from .charclasses import ch_adjoint

    adj = ch_adjoint(b, c2_value)
    coeffs = regularize(assemble_integrand(mode), adjoint=adj)
    return -coeffs.integrate(m_fold, lam)


def _check_m(m) -> Fraction:
    m = as_rat(m)
    if m == -3:
        raise PoleError("m = -3 is a pole")
    return m


def h1_of_m(b: BundleData, m_fold, m) -> Fraction:
    """``dim G * 3 (m |tau| - chi) / (3 + m)``."""
    m = _check_m(m)
    return b.dim_g * 3 * (m * abs(m_fold.tau) - m_fold.chi) / (3 + m)


def lambda_of_m(m) -> Fraction:
    """Solve ``3 lambda + 1 = alpha`` and ``-9 lambda = alpha m`` for lambda."""
    m = _check_m(m)
    return -m / (9 + 3 * m)


def lambda_of_m_printed(m) -> Fraction:
    """The published relation ``m / (9 + 3m)``; kept for the divergence report."""
    m = _check_m(m)
    return m / (9 + 3 * m)
