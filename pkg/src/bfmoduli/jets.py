"""Differential polynomials over a jet space of gauge fields.

A :class:`FieldSymbol` is one jet coordinate: a field component with a
sorted multi-index of formal derivatives (direction 0 is time, 1..3 are
spatial).  A :class:`DiffPoly` is a finite sum of products of jet
coordinates with Gaussian-rational coefficients and an integer power of a
formal commuting symbol ``g2`` (the squared coupling).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations, product
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple

from .errors import DomainError, OrderError, PoleError
from .exact import GaussRat, as_rat

MAX_ORDER = 4
SPATIAL = (1, 2, 3)
SPACETIME = (0, 1, 2, 3)

# Canonical ordering of field kinds; unknown kinds sort afterwards by name.
KIND_ORDER = ("A", "Pi", "B", "B0", "eps", "epsv", "xi", "chi")


@dataclass(frozen=True)
class FieldSymbol:
    """``kind[idx..., internal]`` differentiated along ``deriv``.

    ``internal == 0`` means the field carries no Lie-algebra index.
    """

    kind: str
    idx: Tuple[int, ...] = ()
    internal: int = 0
    deriv: Tuple[int, ...] = ()

    def __post_init__(self):
        if any(not 0 <= d <= 3 for d in self.idx + self.deriv):
            raise IndexError(f"index out of range in {self.kind}{self.idx}{self.deriv}")
        if self.internal < 0:
            raise IndexError("internal index must be >= 0")
        if tuple(sorted(self.deriv)) != self.deriv:
            object.__setattr__(self, "deriv", tuple(sorted(self.deriv)))

    @property
    def base(self) -> Tuple[str, Tuple[int, ...], int]:
        return self.kind, self.idx, self.internal

    @property
    def time_order(self) -> int:
        return self.deriv.count(0)

    @property
    def spatial_deriv(self) -> Tuple[int, ...]:
        return tuple(d for d in self.deriv if d)

    def differentiate(self, direction: int, max_order: int = MAX_ORDER) -> "FieldSymbol":
        if len(self.deriv) + 1 > max_order:
            raise OrderError(f"derivative order above {max_order} for {self}")
        return FieldSymbol(self.kind, self.idx, self.internal, tuple(sorted(self.deriv + (direction,))))

    def sort_key(self):
        rank = KIND_ORDER.index(self.kind) if self.kind in KIND_ORDER else len(KIND_ORDER)
        return rank, self.kind, self.internal, self.idx, self.deriv

    def __lt__(self, other: "FieldSymbol"):
        return self.sort_key() < other.sort_key()

    def __str__(self):
        inner = [str(i) for i in self.idx] + ([str(self.internal)] if self.internal else [])
        s = f"{self.kind}[{','.join(inner)}]" if inner else self.kind
        if self.deriv:
            s += "_" + "".join(str(d) for d in self.deriv)
        return s


Key = Tuple[int, Tuple[FieldSymbol, ...]]


def _as_coeff(c) -> GaussRat:
    return c if isinstance(c, GaussRat) else GaussRat.coerce(c)


class DiffPoly:
    """Canonical sum of monomials ``coeff * g2^k * prod(factors)``."""

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[Key, object] | None = None):
        self.terms: Dict[Key, GaussRat] = {}
        for key, c in (terms or {}).items():
            c = _as_coeff(c)
            if c:
                g, factors = key
                k = (g, tuple(sorted(factors)))
                s = self.terms.get(k)
                s = c if s is None else s + c
                if s:
                    self.terms[k] = s
                else:
                    self.terms.pop(k, None)

    # constructors
    @classmethod
    def const(cls, c, g2_power: int = 0) -> "DiffPoly":
        return cls({(g2_power, ()): c})

    @classmethod
    def symbol(cls, sym: FieldSymbol, coeff=1) -> "DiffPoly":
        return cls({(0, (sym,)): coeff})

    @classmethod
    def g2(cls, power: int = 1) -> "DiffPoly":
        return cls.const(1, power)

    @classmethod
    def _raw(cls, terms: Dict[Key, GaussRat]) -> "DiffPoly":
        p = cls.__new__(cls)
        p.terms = terms
        return p

    # arithmetic
    def _acc(self, other: "DiffPoly", sign: int) -> "DiffPoly":
        out = dict(self.terms)
        for k, c in other.terms.items():
            s = out.get(k)
            s = (c if sign > 0 else -c) if s is None else (s + c if sign > 0 else s - c)
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return DiffPoly._raw(out)

    @staticmethod
    def _lift(x) -> "DiffPoly":
        if isinstance(x, DiffPoly):
            return x
        return DiffPoly.const(x)

    def __add__(self, other):
        try:
            return self._acc(self._lift(other), 1)
        except TypeError:
            return NotImplemented

    __radd__ = __add__

    def __sub__(self, other):
        try:
            return self._acc(self._lift(other), -1)
        except TypeError:
            return NotImplemented

    def __rsub__(self, other):
        return self._lift(other) - self

    def __neg__(self):
        return DiffPoly._raw({k: -c for k, c in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, DiffPoly):
            try:
                c = _as_coeff(other)
            except TypeError:
                return NotImplemented
            if not c:
                return DiffPoly()
            return DiffPoly._raw({k: v * c for k, v in self.terms.items()})
        out: Dict[Key, GaussRat] = {}
        for (g1, f1), c1 in self.terms.items():
            for (g2, f2), c2 in other.terms.items():
                k = (g1 + g2, tuple(sorted(f1 + f2)))
                s = out.get(k)
                s = c1 * c2 if s is None else s + c1 * c2
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return DiffPoly._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = DiffPoly.const(1)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction, GaussRat)):
            other = DiffPoly.const(other)
        if not isinstance(other, DiffPoly):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __len__(self):
        return len(self.terms)

    # inspection
    def symbols(self) -> set:
        return {s for (_, fs) in self.terms for s in fs}

    def fields(self) -> set:
        """Distinct ``(base, time_order)`` pairs; each is an independent field
        for spatial variational calculus."""
        return {(s.base, s.time_order) for s in self.symbols()}

    def select(self, pred: Callable[[Tuple[FieldSymbol, ...]], bool]) -> "DiffPoly":
        return DiffPoly._raw({k: c for k, c in self.terms.items() if pred(k[1])})

    def containing(self, kind: str) -> "DiffPoly":
        return self.select(lambda fs: any(f.kind == kind for f in fs))

    def max_g2_power(self) -> int:
        return max((g for g, _ in self.terms), default=0)

    # transformations
    def subs_g2(self, value) -> "DiffPoly":
        value = as_rat(value)
        out = DiffPoly()
        for (g, fs), c in self.terms.items():
            if g < 0 and value == 0:
                raise PoleError("negative power of g2 at g2 = 0")
            out = out + DiffPoly({(0, fs): c * GaussRat(value ** g)})
        return out

    def substitute(self, rule: Callable[[FieldSymbol], Optional["DiffPoly"]],
                   max_order: int = MAX_ORDER) -> "DiffPoly":
        """Replace undifferentiated fields by ``rule(base_symbol)``; derivatives
        of a replaced field become total derivatives of its replacement."""
        cache: Dict[FieldSymbol, DiffPoly] = {}

        def image(sym: FieldSymbol) -> DiffPoly:
            if sym not in cache:
                rep = rule(FieldSymbol(sym.kind, sym.idx, sym.internal))
                if rep is None:
                    cache[sym] = DiffPoly.symbol(sym)
                else:
                    for d in sym.deriv:
                        rep = total_derivative(rep, d, max_order)
                    cache[sym] = rep
            return cache[sym]

        out = DiffPoly()
        for (g, fs), c in self.terms.items():
            term = DiffPoly({(g, ()): c})
            for s in fs:
                term = term * image(s)
            out = out + term
        return out

    def total_derivative(self, direction: int, max_order: int = MAX_ORDER) -> "DiffPoly":
        return total_derivative(self, direction, max_order)

    def partial(self, sym: FieldSymbol) -> "DiffPoly":
        return partial(self, sym)

    # rendering
    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for (g, fs), c in sorted(self.terms.items(), key=lambda kv: (kv[0][0], [f.sort_key() for f in kv[0][1]])):
            body = []
            if g:
                body.append("g2" if g == 1 else f"g2^{g}")
            i = 0
            while i < len(fs):
                j = i
                while j < len(fs) and fs[j] == fs[i]:
                    j += 1
                body.append(str(fs[i]) + (f"^{j - i}" if j - i > 1 else ""))
                i = j
            if not body:
                parts.append(str(c) if c.im == 0 else f"({c})")
                continue
            if c == 1:
                lead = ""
            elif c == -1:
                lead = "-"
            elif c.im == 0:
                lead = f"{c}*"
            else:
                lead = f"({c})*"
            parts.append(lead + "*".join(body))
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self):
        return f"DiffPoly({self})"


ZERO_POLY = DiffPoly()


def total_derivative(p: DiffPoly, direction: int, max_order: int = MAX_ORDER) -> DiffPoly:
    """Exact Leibniz-rule derivative along ``direction`` (0 = time)."""
    if direction not in SPACETIME:
        raise IndexError(f"direction {direction} not in 0..3")
    out: Dict[Key, GaussRat] = {}
    for (g, fs), c in p.terms.items():
        for pos, f in enumerate(fs):
            if pos and fs[pos - 1] == f:
                continue  # equal factors: handled together via multiplicity
            mult = fs.count(f)
            rest = fs[:pos] + fs[pos + 1:]
            k = (g, tuple(sorted(rest + (f.differentiate(direction, max_order),))))
            v = c * mult
            s = out.get(k)
            s = v if s is None else s + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
    return DiffPoly._raw(out)


def partial(p: DiffPoly, sym: FieldSymbol) -> DiffPoly:
    """Ordinary partial derivative with respect to one jet coordinate."""
    out: Dict[Key, GaussRat] = {}
    for (g, fs), c in p.terms.items():
        n = fs.count(sym)
        if not n:
            continue
        i = fs.index(sym)
        k = (g, fs[:i] + fs[i + 1:])
        out[k] = out.get(k, GaussRat(0)) + c * n
    return DiffPoly(out)


def variational_derivative(p: DiffPoly, kind: str, idx: Tuple[int, ...] = (), internal: int = 0,
                           time_order: int = 0, dirs: Sequence[int] = SPATIAL,
                           max_order: int = MAX_ORDER) -> DiffPoly:
    """Euler operator ``sum_alpha (-D)^alpha dp/dphi_alpha``.

    ``alpha`` runs over derivative multi-indices built from ``dirs``.  With
    the default spatial ``dirs``, a field's time derivatives of order
    ``time_order`` form the independent field being varied.
    """
    dirs = tuple(dirs)
    out = DiffPoly()
    for s in p.symbols():
        if s.base != (kind, tuple(idx), internal):
            continue
        if 0 in dirs:
            alpha = s.deriv
        else:
            if s.time_order != time_order:
                continue
            alpha = s.spatial_deriv
        if any(d not in dirs for d in alpha):
            continue
        term = partial(p, s)
        for d in alpha:
            term = -total_derivative(term, d, max_order)
        out = out + term
    return out


def is_null_lagrangian(p: DiffPoly, dirs: Sequence[int] = SPATIAL) -> bool:
    """True when ``p`` is a total divergence: no constant term and every
    Euler operator vanishes."""
    if any(not fs for (_, fs) in p.terms):
        return False
    spacetime = 0 in tuple(dirs)
    seen = set()
    for s in p.symbols():
        key = s.base if spacetime else (s.base, s.time_order)
        if key in seen:
            continue
        seen.add(key)
        kind, idx, internal = s.base
        t = 0 if spacetime else s.time_order
        if not variational_derivative(p, kind, idx, internal, t, dirs).is_zero():
            return False
    return True


def equal_mod_divergence(p: DiffPoly, q: DiffPoly, dirs: Sequence[int] = SPATIAL) -> bool:
    return is_null_lagrangian(p - q, dirs)


# Lie algebra data ----------------------------------------------------------

def levi_civita(*ix: int) -> int:
    """Sign of the permutation ``ix`` of ``1..n``, 0 on repeated entries."""
    n = len(ix)
    if sorted(ix) != list(range(1, n + 1)):
        return 0
    sign, seen = 1, list(ix)
    for i in range(n):
        while seen[i] != i + 1:
            j = seen[i] - 1
            seen[i], seen[j] = seen[j], seen[i]
            sign = -sign
    return sign


def eta(i: int, j: int, k: int) -> int:
    """Spatial Levi-Civita symbol with eta^{123} = 1."""
    return levi_civita(i, j, k)


@dataclass(frozen=True)
class LieData:
    """Real structure constants ``f^{IJK}`` on internal indices ``1..dim``."""

    dim: int
    f_items: Tuple[Tuple[Tuple[int, int, int], Fraction], ...]
    name: str = "custom"

    def __post_init__(self):
        object.__setattr__(self, "_f", dict(self.f_items))

    def f(self, i: int, j: int, k: int) -> Fraction:
        return self._f.get((i, j, k), Fraction(0))

    @property
    def indices(self) -> range:
        return range(1, self.dim + 1)

    @property
    def is_abelian(self) -> bool:
        return not self._f

    def jacobi_defect(self) -> Fraction:
        """Largest |f^{IJM} f^{MKL} + cyclic(IJK)| over all index values."""
        worst = Fraction(0)
        r = self.indices
        for a, b, c, l in product(r, r, r, r):
            s = sum(self.f(a, b, m) * self.f(m, c, l) + self.f(b, c, m) * self.f(m, a, l)
                    + self.f(c, a, m) * self.f(m, b, l) for m in r)
            worst = max(worst, abs(s))
        return worst

    def is_antisymmetric(self) -> bool:
        r = self.indices
        for a, b, c in product(r, r, r):
            v = self.f(a, b, c)
            if any(v != sgn * self.f(*p) for p, sgn in _perm_signs(a, b, c)):
                return False
        return True

    @classmethod
    def custom(cls, dim: int, f: Mapping[Tuple[int, int, int], object], name: str = "custom",
               check: bool = True) -> "LieData":
        items = tuple(sorted((k, as_rat(v)) for k, v in f.items() if as_rat(v)))
        out = cls(dim, items, name)
        for (a, b, c) in dict(items):
            if not all(1 <= x <= dim for x in (a, b, c)):
                raise IndexError(f"structure-constant index out of range: {(a, b, c)}")
        if check:
            if not out.is_antisymmetric():
                raise DomainError("structure constants must be totally antisymmetric")
            if out.jacobi_defect():
                raise DomainError("structure constants violate the Jacobi identity")
        return out

    @classmethod
    def su2(cls) -> "LieData":
        f = {p: levi_civita(*p) for p in permutations((1, 2, 3))}
        return cls.custom(3, f, "su2")

    @classmethod
    def abelian(cls, dim: int = 3) -> "LieData":
        return cls(dim, (), f"u1^{dim}" if dim > 1 else "u1")


def _perm_signs(a, b, c):
    return (((b, c, a), 1), ((c, a, b), 1), ((b, a, c), -1), ((a, c, b), -1), ((c, b, a), -1))


# field constructors --------------------------------------------------------

def field(kind: str, idx: Tuple[int, ...] = (), internal: int = 0, deriv: Tuple[int, ...] = ()) -> DiffPoly:
    return DiffPoly.symbol(FieldSymbol(kind, tuple(idx), internal, tuple(deriv)))


def A(mu: int, I: int, deriv: Tuple[int, ...] = ()) -> DiffPoly:
    return field("A", (mu,), I, deriv)


def Pi(i: int, I: int, deriv: Tuple[int, ...] = ()) -> DiffPoly:
    return field("Pi", (i,), I, deriv)


def B0(i: int, I: int) -> DiffPoly:
    return field("B0", (i,), I)


def B(j: int, k: int, I: int) -> DiffPoly:
    """Antisymmetric spatial 2-form component, stored with ``j < k``."""
    if j == k:
        return DiffPoly()
    if j < k:
        return field("B", (j, k), I)
    return -field("B", (k, j), I)


def adjoint(kind: str, lie: LieData, idx: Tuple[int, ...] = ()) -> List[DiffPoly]:
    """The vector ``[kind[idx, I] for I in 1..dim]``."""
    return [field(kind, idx, I) for I in lie.indices]


def _vec_check(v: Sequence[DiffPoly], lie: LieData):
    if len(v) != lie.dim:
        raise IndexError(f"adjoint vector has {len(v)} components, expected {lie.dim}")


def bracket(u: Sequence[DiffPoly], v: Sequence[DiffPoly], lie: LieData) -> List[DiffPoly]:
    """``[u, v]^K = f^{IJK} u^I v^J``."""
    _vec_check(u, lie)
    _vec_check(v, lie)
    out = [DiffPoly() for _ in lie.indices]
    for (a, b, c), val in lie.f_items:
        out[c - 1] = out[c - 1] + u[a - 1] * v[b - 1] * val
    return out


def covariant_derivative(v: Sequence[DiffPoly], direction: int, lie: LieData,
                         max_order: int = MAX_ORDER) -> List[DiffPoly]:
    """``(D_mu v)^I = d_mu v^I + f^{IJK} A_mu^J v^K``."""
    _vec_check(v, lie)
    out = [total_derivative(x, direction, max_order) for x in v]
    for (a, b, c), val in lie.f_items:
        out[a - 1] = out[a - 1] + A(direction, b) * v[c - 1] * val
    return out


def curvature(mu: int, nu: int, lie: LieData) -> List[DiffPoly]:
    """``F_{mu nu}^I = d_mu A_nu - d_nu A_mu + f^{IJK} A_mu^J A_nu^K``."""
    out = []
    for I in lie.indices:
        p = A(nu, I, (mu,)) - A(mu, I, (nu,)) if mu != nu else DiffPoly()
        out.append(p)
    for (a, b, c), val in lie.f_items:
        out[a - 1] = out[a - 1] + A(mu, b) * A(nu, c) * val
    return out


def dual_curvature(lie: LieData) -> List[List[DiffPoly]]:
    """``[i][I] -> 1/2 eta^{ijk} F_jk^I``."""
    half = GaussRat(Fraction(1, 2))
    F = {(j, k): curvature(j, k, lie) for j in SPATIAL for k in SPATIAL if j != k}
    out = []
    for i in SPATIAL:
        comp = [DiffPoly() for _ in lie.indices]
        for (j, k), Fjk in F.items():
            e = eta(i, j, k)
            if e:
                comp = [x + y * (half * e) for x, y in zip(comp, Fjk)]
        out.append(comp)
    return out


def bianchi_check(lie: LieData) -> List[DiffPoly]:
    """``eta^{ijk} D_i F_jk^I``, one entry per internal index."""
    total = [DiffPoly() for _ in lie.indices]
    for i, j, k in permutations(SPATIAL):
        e = eta(i, j, k)
        DF = covariant_derivative(curvature(j, k, lie), i, lie)
        total = [t + d * e for t, d in zip(total, DF)]
    return total


def commutator_check(v: Sequence[DiffPoly], i: int, j: int, lie: LieData) -> List[DiffPoly]:
    """``[D_i, D_j] v - [F_ij, v]``; zero when ``f`` obeys Jacobi."""
    lhs = [a - b for a, b in zip(covariant_derivative(covariant_derivative(v, j, lie), i, lie),
                                 covariant_derivative(covariant_derivative(v, i, lie), j, lie))]
    rhs = bracket(curvature(i, j, lie), v, lie)
    return [a - b for a, b in zip(lhs, rhs)]


def _xi(mu: int) -> DiffPoly:
    return field("xi", (mu,))


def diffeo_identity_check(lie: LieData, drop_commutator: bool = False,
                          constant_xi: bool = False) -> List[List[DiffPoly]]:
    """Gauge transformation of ``A_i`` with field-dependent parameters minus the
    Lie derivative of ``A_i``, for every ``i`` and internal index.

    Parameters ``eps^I = -xi^mu A_mu^I`` and ``eps_i^I = xi^mu F_{mu i}^I``.
    ``drop_commutator`` removes the ``f A_i (xi.A)`` piece of ``D_i eps``.
    ``constant_xi`` treats ``xi`` as constant, so its derivatives vanish.
    """
    out = []
    for i in SPATIAL:
        eps = [DiffPoly() for _ in lie.indices]
        eps_i = [DiffPoly() for _ in lie.indices]
        for mu in SPACETIME:
            F = curvature(mu, i, lie)
            for I in lie.indices:
                eps[I - 1] = eps[I - 1] - _xi(mu) * A(mu, I)
                eps_i[I - 1] = eps_i[I - 1] + _xi(mu) * F[I - 1]
        if drop_commutator:
            D_eps = [total_derivative(e, i) for e in eps]
        else:
            D_eps = covariant_derivative(eps, i, lie)
        delta = [-d + e for d, e in zip(D_eps, eps_i)]
        lie_deriv = [DiffPoly() for _ in lie.indices]
        for mu in SPACETIME:
            for I in lie.indices:
                lie_deriv[I - 1] = (lie_deriv[I - 1] + _xi(mu) * A(i, I, (mu,))
                                    + field("xi", (mu,), 0, (i,)) * A(mu, I))
        diff = [a - b for a, b in zip(delta, lie_deriv)]
        if constant_xi:
            diff = [d.select(lambda fs: not any(f.kind == "xi" and f.deriv for f in fs)) for d in diff]
        out.append(diff)
    return out


def all_zero(polys: Iterable) -> bool:
    for p in polys:
        if isinstance(p, DiffPoly):
            if not p.is_zero():
                return False
        elif not all_zero(p):
            return False
    return True
