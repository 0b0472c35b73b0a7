"""Characteristic-class ingredients in the splitting variables x1, x2.

The complexified tangent bundle of the 4-manifold is treated as split into
two conjugate pairs of line bundles with first Chern classes +-x1, +-x2.
Functions default to x-degree 4 because the index integrand divides by the
Euler class x1*x2 before the 4-form part is read off.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .exact import GaussRat, GradedClass, exp_linear, series_reciprocal, x1, x2

NUMERATOR_TRUNCATION = 4


@dataclass(frozen=True)
class BundleData:
    """Gauge group data: ``su(N)`` for N >= 2, or ``u1``."""

    gauge_group: str
    N: int | None = None
    p1_ad_mode: str = "drop"

    def __post_init__(self):
        if self.gauge_group not in ("su", "u1"):
            raise DomainError(f"unknown gauge group {self.gauge_group!r}")
        if self.gauge_group == "su" and (self.N is None or self.N < 2):
            raise DomainError("SU(N) needs N >= 2")
        if self.p1_ad_mode not in ("drop", "su2_from_c2"):
            raise DomainError(f"unknown p1_ad_mode {self.p1_ad_mode!r}")

    @classmethod
    def su(cls, N: int, p1_ad_mode: str = "drop") -> "BundleData":
        return cls("su", N, p1_ad_mode)

    @classmethod
    def u1(cls) -> "BundleData":
        return cls("u1", None)

    @classmethod
    def parse(cls, text: str) -> "BundleData":
        """Parse ``su2``, ``su3``, ``SU(4)``, ``u1``."""
        t = text.strip().lower().replace("(", "").replace(")", "")
        if t in ("u1",):
            return cls.u1()
        if t.startswith("su") and t[2:].isdigit():
            return cls.su(int(t[2:]))
        raise DomainError(f"cannot parse gauge group {text!r}")

    @property
    def dim_g(self) -> int:
        return 1 if self.gauge_group == "u1" else self.N * self.N - 1

    @property
    def rank_g(self) -> int:
        return 1 if self.gauge_group == "u1" else self.N - 1

    @property
    def is_abelian(self) -> bool:
        return self.gauge_group == "u1"

    def __str__(self):
        return "U(1)" if self.is_abelian else f"SU({self.N})"


def _sum(classes):
    out = classes[0]
    for c in classes[1:]:
        out = out + c
    return out


def ch_lambda(p: int, truncation: int = NUMERATOR_TRUNCATION) -> GradedClass:
    """Chern character of the p-th exterior power of the complexified cotangent bundle."""
    u, v = x1(truncation), x2(truncation)
    one = GradedClass.const(1, truncation)
    if p == 0:
        return one
    if p == 1:
        return _sum([exp_linear(u), exp_linear(-u), exp_linear(v), exp_linear(-v)])
    if p == 2:
        return 2 * one + _sum([exp_linear(u + v), exp_linear(u - v),
                               exp_linear(-u + v), exp_linear(-u - v)])
    raise DomainError(f"exterior power p={p} not in {{0, 1, 2}}")


def ch_alternating_sum(truncation: int = NUMERATOR_TRUNCATION) -> GradedClass:
    return ch_lambda(0, truncation) - ch_lambda(1, truncation) + ch_lambda(2, truncation)


def todd_pair(var: int, truncation: int = NUMERATOR_TRUNCATION) -> GradedClass:
    """Todd factor of one conjugate pair, ``-x^2 / (2 - e^x - e^-x)``.

    The denominator vanishes to second order, so it is built two degrees
    higher, divided exactly by ``-x^2`` and then inverted.
    """
    x = x1(truncation + 2) if var == 1 else x2(truncation + 2)
    denom = 2 - exp_linear(x) - exp_linear(-x)
    a, b = (2, 0) if var == 1 else (0, 2)
    unit = -denom.divide_monomial(a, b)
    return series_reciprocal(unit.with_truncation(truncation))


def todd_tangent(truncation: int = NUMERATOR_TRUNCATION) -> GradedClass:
    return todd_pair(1, truncation) * todd_pair(2, truncation)


def euler_class(truncation: int = NUMERATOR_TRUNCATION) -> GradedClass:
    return x1(truncation) * x2(truncation)


def pontryagin_class(truncation: int = NUMERATOR_TRUNCATION) -> GradedClass:
    u, v = x1(truncation), x2(truncation)
    return u * u + v * v


def ch_adjoint(b: BundleData, c2_value=0, truncation: int = NUMERATOR_TRUNCATION) -> GradedClass:
    """``dim G + p1(ad)/2``.

    In ``su2_from_c2`` mode the first Pontryagin class of the adjoint bundle
    is ``-8 c2(E)``; the integrated ``c2_value`` then multiplies the unit
    4-form ``x1*x2``.  In ``drop`` mode only the rank survives.
    """
    dim = GradedClass.const(b.dim_g, truncation)
    if b.p1_ad_mode == "drop":
        return dim
    if b.gauge_group != "su" or b.N != 2:
        raise DomainError("p1(ad) = -8 c2(E) holds for SU(2) bundles only")
    p1_ad = GaussRat(-8 * Fraction(c2_value))
    return dim + euler_class(truncation) * (p1_ad * GaussRat(Fraction(1, 2)))
