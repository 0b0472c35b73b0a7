"""Exact coefficient arithmetic and the truncated graded ring.

Rationals are :class:`fractions.Fraction`.  :class:`GaussRat` adds an exact
imaginary unit on top.  :class:`GradedClass` is a polynomial in two formal
2-form variables ``x1, x2`` with Laurent powers of a regulator ``xi``,
truncated at a fixed total ``x``-degree.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb
from numbers import Rational
from typing import Dict, Iterable, Mapping, Tuple, Union

from .errors import DomainError, NotInvertible, SingularLimit, WindowError

Rat = Fraction
DEFAULT_TRUNCATION = 2
DEFAULT_WINDOW = (-6, 6)

Exponent = Tuple[int, int, int]


def as_rat(value) -> Fraction:
    """Coerce ints, Fractions and ``'p/q'`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


class GaussRat:
    """Exact Gaussian rational ``re + im*i``."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else as_rat(re)
        self.im = im if type(im) is Fraction else as_rat(im)

    @classmethod
    def coerce(cls, value) -> "GaussRat":
        if isinstance(value, GaussRat):
            return value
        if isinstance(value, complex):
            raise TypeError("floating complex numbers are not exact")
        return cls(value, 0)

    def __add__(self, other):
        if not isinstance(other, GaussRat):
            try:
                other = GaussRat.coerce(other)
            except TypeError:
                return NotImplemented
        return GaussRat(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussRat(-self.re, -self.im)

    def __sub__(self, other):
        if not isinstance(other, GaussRat):
            try:
                other = GaussRat.coerce(other)
            except TypeError:
                return NotImplemented
        return GaussRat(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        return GaussRat.coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, GaussRat):
            try:
                other = GaussRat.coerce(other)
            except TypeError:
                return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return GaussRat(a * c, b)
        return GaussRat(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = GaussRat.coerce(other)
        n = other.norm()
        if not n:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return self * other.conjugate() * GaussRat(1 / n)

    def __rtruediv__(self, other):
        return GaussRat.coerce(other) / self

    def __pow__(self, k: int):
        if k < 0:
            return GaussRat(1) / self ** (-k)
        out, base = GaussRat(1), self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def conjugate(self) -> "GaussRat":
        return GaussRat(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        if isinstance(other, GaussRat):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussRat({self})"

    def __str__(self):
        if not self.im:
            return str(self.re)
        im = "i" if self.im == 1 else "-i" if self.im == -1 else f"{self.im}*i"
        if not self.re:
            return im
        if im.startswith("-"):
            return f"{self.re}{im}"
        return f"{self.re}+{im}"

    def to_real(self) -> Fraction:
        if self.im:
            raise DomainError(f"{self} is not real")
        return self.re


I = GaussRat(0, 1)
ZERO = GaussRat(0)
ONE = GaussRat(1)

Scalar = Union[int, Fraction, GaussRat]


def _render_key(e: Exponent):
    """Total x-degree, then x1 before x2, then regulator terms after plain ones."""
    a, b, s = e
    return a + b, -a, abs(s), s


def _coeff_str(c: GaussRat) -> str:
    if c.im == 0 and c.re.denominator == 1 and c.re >= 0:
        return str(c.re)
    return f"({c})"


class GradedClass:
    """Truncated polynomial in ``x1, x2`` with a Laurent regulator ``xi``.

    ``terms`` maps exponent triples ``(a, b, s)`` (powers of x1, x2, xi) to
    Gaussian rational coefficients.  Terms with ``a + b > truncation`` are
    discarded, zero coefficients are never stored, and every regulator
    exponent must stay inside ``window``.
    """

    __slots__ = ("terms", "truncation", "window")

    def __init__(self, terms: Mapping[Exponent, Scalar] | None = None,
                 truncation: int = DEFAULT_TRUNCATION,
                 window: Tuple[int, int] = DEFAULT_WINDOW):
        self.truncation = truncation
        self.window = tuple(window)
        clean: Dict[Exponent, GaussRat] = {}
        lo, hi = self.window
        for (a, b, s), c in (terms or {}).items():
            if a < 0 or b < 0:
                raise DomainError(f"negative x-exponent in {(a, b, s)}")
            if a + b > truncation:
                continue
            c = GaussRat.coerce(c)
            if not c:
                continue
            if not lo <= s <= hi:
                raise WindowError(f"xi^{s} outside window [{lo}, {hi}]")
            key = (a, b, s)
            if key in clean:
                c = clean[key] + c
                if not c:
                    del clean[key]
                    continue
            clean[key] = c
        self.terms = clean

    # construction helpers
    @classmethod
    def const(cls, c: Scalar = 1, truncation: int = DEFAULT_TRUNCATION,
              window=DEFAULT_WINDOW) -> "GradedClass":
        return cls({(0, 0, 0): c}, truncation, window)

    @classmethod
    def monomial(cls, a: int, b: int, s: int = 0, c: Scalar = 1,
                 truncation: int = DEFAULT_TRUNCATION, window=DEFAULT_WINDOW) -> "GradedClass":
        return cls({(a, b, s): c}, truncation, window)

    def _like(self, terms) -> "GradedClass":
        return GradedClass(terms, self.truncation, self.window)

    def _lift(self, other) -> "GradedClass":
        if isinstance(other, GradedClass):
            if other.window != self.window:
                raise WindowError("incompatible xi windows")
            return other
        return GradedClass.const(other, self.truncation, self.window)

    # ring structure
    def __add__(self, other):
        other = self._lift(other)
        terms = dict(self.terms)
        for k, c in other.terms.items():
            terms[k] = terms[k] + c if k in terms else c
        return GradedClass(terms, min(self.truncation, other.truncation), self.window)

    __radd__ = __add__

    def __neg__(self):
        return self._like({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, GradedClass):
            c = GaussRat.coerce(other)
            return self._like({k: v * c for k, v in self.terms.items()})
        other = self._lift(other)
        trunc = min(self.truncation, other.truncation)
        out: Dict[Exponent, GaussRat] = {}
        for (a1, b1, s1), c1 in self.terms.items():
            for (a2, b2, s2), c2 in other.terms.items():
                a, b = a1 + a2, b1 + b2
                if a + b > trunc:
                    continue
                key = (a, b, s1 + s2)
                out[key] = out[key] + c1 * c2 if key in out else c1 * c2
        return GradedClass(out, trunc, self.window)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            return series_reciprocal(self) ** (-k)
        out = GradedClass.const(1, self.truncation, self.window)
        for _ in range(k):
            out = out * self
        return out

    def __truediv__(self, other):
        if isinstance(other, GradedClass):
            return self * series_reciprocal(other)
        return self * (GaussRat(1) / GaussRat.coerce(other))

    def __eq__(self, other):
        if isinstance(other, GradedClass):
            return self.terms == other.terms
        if isinstance(other, (int, Fraction, GaussRat)):
            return self.terms == GradedClass.const(other).terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    # inspection
    def coeff(self, a: int, b: int, s: int = 0) -> GaussRat:
        return self.terms.get((a, b, s), ZERO)

    @property
    def constant(self) -> GaussRat:
        return self.coeff(0, 0, 0)

    def degree_part(self, d: int) -> "GradedClass":
        """Homogeneous component of x-degree ``d`` (form degree ``2d``)."""
        return self._like({k: c for k, c in self.terms.items() if k[0] + k[1] == d})

    def with_truncation(self, truncation: int) -> "GradedClass":
        return GradedClass(self.terms, truncation, self.window)

    def swap(self) -> "GradedClass":
        """Exchange x1 and x2."""
        return self._like({(b, a, s): c for (a, b, s), c in self.terms.items()})

    def reflect(self, var: int) -> "GradedClass":
        """Substitute x_var -> -x_var."""
        out = {}
        for (a, b, s), c in self.terms.items():
            e = a if var == 1 else b
            out[(a, b, s)] = -c if e % 2 else c
        return self._like(out)

    def divide_monomial(self, a: int, b: int) -> "GradedClass":
        """Exact division by ``x1^a x2^b``; every term must be divisible."""
        out = {}
        for (p, q, s), c in self.terms.items():
            if p < a or q < b:
                raise DomainError(f"x1^{p}x2^{q} is not divisible by x1^{a}x2^{b}")
            out[(p - a, q - b, s)] = c
        return GradedClass(out, self.truncation - a - b, self.window)

    def __repr__(self):
        return f"GradedClass({self})"

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (a, b, s) in sorted(self.terms, key=_render_key):
            c = self.terms[(a, b, s)]
            factors = []
            if a:
                factors.append(f"x1^{a}")
            if b:
                factors.append(f"x2^{b}")
            if s:
                factors.append(f"xi^{s}")
            if factors:
                parts.append(_coeff_str(c) + "*" + "*".join(factors))
            else:
                parts.append(_coeff_str(c))
        return " + ".join(parts)


def x1(truncation: int = DEFAULT_TRUNCATION, window=DEFAULT_WINDOW) -> GradedClass:
    return GradedClass.monomial(1, 0, 0, 1, truncation, window)


def x2(truncation: int = DEFAULT_TRUNCATION, window=DEFAULT_WINDOW) -> GradedClass:
    return GradedClass.monomial(0, 1, 0, 1, truncation, window)


def xi(power: int = 1, truncation: int = DEFAULT_TRUNCATION, window=DEFAULT_WINDOW) -> GradedClass:
    return GradedClass.monomial(0, 0, power, 1, truncation, window)


def ring_add(p: GradedClass, q: GradedClass) -> GradedClass:
    return p + q


def ring_mul(p: GradedClass, q: GradedClass) -> GradedClass:
    return p * q


def exp_linear(form: GradedClass) -> GradedClass:
    """``exp`` of a linear form in x1, x2, truncated at the form's degree.

    Raises DomainError if ``form`` has anything but degree-one, xi-free terms.
    """
    for (a, b, s) in form.terms:
        if a + b != 1 or s != 0:
            raise DomainError("exp_linear needs a linear combination of x1, x2")
    out = GradedClass.const(1, form.truncation, form.window)
    power = out
    for k in range(1, form.truncation + 1):
        power = power * form
        out = out + power * GaussRat(Fraction(1, _factorial(k)))
    return out


def _factorial(k: int) -> int:
    out = 1
    for j in range(2, k + 1):
        out *= j
    return out


def series_reciprocal(p: GradedClass) -> GradedClass:
    """Reciprocal of a truncated series with invertible constant term.

    The part of ``p`` of x-degree zero must be a single nonzero constant;
    the remainder is then nilpotent and the geometric series terminates.
    """
    c = p.constant
    for (a, b, s) in p.terms:
        if a + b == 0 and s != 0:
            raise NotInvertible("x-degree-zero part depends on xi")
    if not c:
        raise NotInvertible("zero constant term")
    inv_c = GaussRat(1) / c
    nil = (p - GradedClass.const(c, p.truncation, p.window)) * inv_c
    out = GradedClass.const(1, p.truncation, p.window)
    power = out
    for k in range(1, p.truncation + 1):
        power = power * nil
        if not power:
            break
        out = out + (power if k % 2 == 0 else -power)
    return out * inv_c


def _shift_power(e: int, truncation: int):
    """Expansion of ``(x + xi)^e`` as ``{k: (coefficient, xi exponent)}``."""
    if e >= 0:
        return {k: (comb(e, k), e - k) for k in range(0, min(e, truncation) + 1)}
    n = -e
    # generalized binomial: C(-n, k) = (-1)^k C(n + k - 1, k)
    return {k: ((-1) ** k * comb(n + k - 1, k), e - k) for k in range(truncation + 1)}


def xi_shift(p: GradedClass, denominator: Tuple[int, int] = (0, 0),
             truncation: int | None = None) -> GradedClass:
    """Substitute ``x_i -> x_i + xi`` in ``p / (x1^da x2^db)``.

    Negative powers are expanded as geometric series in ``x/xi``.  The result
    is truncated at ``truncation`` (default: the truncation of ``p`` minus the
    degree of the denominator, i.e. the degree of the quotient).
    """
    da, db = denominator
    if truncation is None:
        truncation = p.truncation - da - db
    out: Dict[Exponent, GaussRat] = {}
    for (a, b, s), c in p.terms.items():
        sa = _shift_power(a - da, truncation)
        sb = _shift_power(b - db, truncation)
        for ka, (ca, ea) in sa.items():
            for kb, (cb, eb) in sb.items():
                if ka + kb > truncation:
                    continue
                key = (ka, kb, s + ea + eb)
                v = c * (ca * cb)
                out[key] = out[key] + v if key in out else v
    return GradedClass(out, truncation, p.window)


def xi_limit(p: GradedClass, multiplier_power: int) -> GradedClass:
    """The ``xi^0`` part of ``p * xi^multiplier_power``.

    Raises SingularLimit if a negative regulator power survives.
    """
    out = {}
    for (a, b, s), c in p.terms.items():
        t = s + multiplier_power
        if t < 0:
            raise SingularLimit(f"term x1^{a} x2^{b} xi^{t} diverges as xi -> 0")
        if t == 0:
            out[(a, b, 0)] = c
    return GradedClass(out, p.truncation, p.window)


def sum_classes(classes: Iterable[GradedClass]) -> GradedClass:
    classes = list(classes)
    out = classes[0]
    for c in classes[1:]:
        out = out + c
    return out
