"""Exact trigonometric-polynomial fields on the 3-torus.

A :class:`TrigPoly` is stored in the exponential basis ``sum c_k e^{i k.x}``
with Gaussian-rational ``c_k``; cos/sin coefficients are a view on that.
Averages over the torus are normalized, so ``<f>`` is simply ``c_0`` and
every smeared quantity stays rational.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple

import numpy as np

from .errors import ConfigError, DomainError
from .exact import GaussRat, I as IMAG, as_rat
from .jets import (SPATIAL, DiffPoly, FieldSymbol, LieData, variational_derivative)

Wave = Tuple[int, int, int]
DEFAULT_K = 2
HALF = GaussRat(Fraction(1, 2))
HALF_I = GaussRat(0, Fraction(-1, 2))  # 1/(2i)


def _canonical(k: Wave) -> bool:
    for c in k:
        if c:
            return c > 0
    return True


def _neg(k: Wave) -> Wave:
    return (-k[0], -k[1], -k[2])


class TrigPoly:
    __slots__ = ("c",)

    def __init__(self, coeffs: Mapping[Wave, object] | None = None):
        self.c: Dict[Wave, GaussRat] = {}
        for k, v in (coeffs or {}).items():
            v = GaussRat.coerce(v)
            if v:
                k = tuple(int(x) for x in k)
                s = self.c.get(k)
                s = v if s is None else s + v
                if s:
                    self.c[k] = s
                else:
                    self.c.pop(k, None)

    @classmethod
    def const(cls, v) -> "TrigPoly":
        return cls({(0, 0, 0): v})

    @classmethod
    def from_cos_sin(cls, pairs: Mapping[Wave, Tuple[object, object]]) -> "TrigPoly":
        """``sum a_k cos(k.x) + b_k sin(k.x)`` over canonically oriented ``k``."""
        out: Dict[Wave, GaussRat] = {}
        for k, (a, b) in pairs.items():
            k = tuple(int(x) for x in k)
            if not _canonical(k):
                raise DomainError(f"wavevector {k} is not canonically oriented")
            a, b = GaussRat.coerce(a), GaussRat.coerce(b)
            if k == (0, 0, 0):
                if b:
                    raise DomainError("sin coefficient at k = 0 must vanish")
                out[k] = out.get(k, GaussRat(0)) + a
                continue
            for kk, v in ((k, a * HALF + b * HALF_I), (_neg(k), a * HALF - b * HALF_I)):
                out[kk] = out.get(kk, GaussRat(0)) + v
        return cls(out)

    def cos_sin(self) -> Dict[Wave, Tuple[GaussRat, GaussRat]]:
        """Inverse of :meth:`from_cos_sin`."""
        out = {}
        for k in sorted(set(k if _canonical(k) else _neg(k) for k in self.c)):
            if k == (0, 0, 0):
                out[k] = (self.c[k], GaussRat(0))
                continue
            p, m = self.c.get(k, GaussRat(0)), self.c.get(_neg(k), GaussRat(0))
            out[k] = (p + m, (p - m) * IMAG)
        return out

    def __add__(self, other):
        other = other if isinstance(other, TrigPoly) else TrigPoly.const(other)
        out = dict(self.c)
        for k, v in other.c.items():
            s = out.get(k)
            s = v if s is None else s + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return TrigPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return TrigPoly._raw({k: -v for k, v in self.c.items()})

    def __sub__(self, other):
        return self + (-other if isinstance(other, TrigPoly) else -GaussRat.coerce(other))

    def __mul__(self, other):
        if not isinstance(other, TrigPoly):
            v = GaussRat.coerce(other)
            return TrigPoly._raw({k: c * v for k, c in self.c.items()}) if v else TrigPoly()
        out: Dict[Wave, GaussRat] = {}
        for k1, a in self.c.items():
            for k2, b in other.c.items():
                k = (k1[0] + k2[0], k1[1] + k2[1], k1[2] + k2[2])
                s = out.get(k)
                s = a * b if s is None else s + a * b
                if s:
                    out[k] = s
                else:
                    out.pop(k, None)
        return TrigPoly._raw(out)

    __rmul__ = __mul__

    @classmethod
    def _raw(cls, c):
        t = cls.__new__(cls)
        t.c = c
        return t

    def diff(self, direction: int) -> "TrigPoly":
        if direction not in SPATIAL:
            raise DomainError("torus fields only have spatial derivatives")
        d = direction - 1
        return TrigPoly._raw({k: v * GaussRat(0, k[d]) for k, v in self.c.items() if k[d]})

    def average(self) -> GaussRat:
        return self.c.get((0, 0, 0), GaussRat(0))

    def degree(self) -> int:
        return max((max(abs(x) for x in k) for k in self.c), default=0)

    def __eq__(self, other):
        if not isinstance(other, TrigPoly):
            other = TrigPoly.const(other)
        return self.c == other.c

    __hash__ = None

    def __call__(self, x: Sequence[float]) -> complex:
        """Float point evaluation, for cross-checks only."""
        return sum(complex(float(v.re), float(v.im)) * complex(math.cos(s), math.sin(s))
                   for k, v in self.c.items()
                   for s in [k[0] * x[0] + k[1] * x[1] + k[2] * x[2]])

    def __repr__(self):
        return f"TrigPoly({ {k: str(v) for k, v in sorted(self.c.items())} })"


def trig_mul(p: TrigPoly, q: TrigPoly) -> TrigPoly:
    return p * q


def trig_diff(p: TrigPoly, direction: int) -> TrigPoly:
    return p.diff(direction)


def average(p: TrigPoly) -> GaussRat:
    return p.average()


def average_product(p: TrigPoly, q: TrigPoly) -> GaussRat:
    """``<p q>`` without forming the full product."""
    total = GaussRat(0)
    for k, a in p.c.items():
        b = q.c.get(_neg(k))
        if b is not None:
            total = total + a * b
    return total


# field configurations ------------------------------------------------------

def _base_key(kind: str, idx: Tuple[int, ...], internal: int) -> str:
    return str(FieldSymbol(kind, idx, internal))


@dataclass
class FieldConfig:
    """An exact TrigPoly for every field base, plus the value of ``g2``."""

    fields: Dict[Tuple[str, Tuple[int, ...], int], TrigPoly]
    g2: Fraction = Fraction(1)
    seed: Optional[int] = None
    K: int = DEFAULT_K
    _cache: Dict[FieldSymbol, TrigPoly] = field(default_factory=dict, repr=False, compare=False)

    def value(self, sym: FieldSymbol) -> TrigPoly:
        hit = self._cache.get(sym)
        if hit is not None:
            return hit
        try:
            t = self.fields[sym.base]
        except KeyError:
            raise ConfigError(f"no assignment for {_base_key(*sym.base)}") from None
        for d in sym.deriv:
            t = t.diff(d)
        self._cache[sym] = t
        return t

    def with_fields(self, extra: Mapping) -> "FieldConfig":
        merged = dict(self.fields)
        merged.update(extra)
        return FieldConfig(merged, self.g2, self.seed, self.K)

    def to_json(self) -> str:
        out = {"seed": self.seed, "K": self.K, "g2": str(self.g2), "fields": []}
        for (kind, idx, internal), t in sorted(self.fields.items()):
            modes = [[list(k), [str(a.re), str(a.im)], [str(b.re), str(b.im)]]
                     for k, (a, b) in t.cos_sin().items()]
            out["fields"].append({"kind": kind, "idx": list(idx), "internal": internal, "modes": modes})
        return json.dumps(out, indent=1)

    @classmethod
    def from_json(cls, text: str) -> "FieldConfig":
        d = json.loads(text)
        fields = {}
        for f in d["fields"]:
            pairs = {tuple(k): (GaussRat(*a), GaussRat(*b)) for k, a, b in f["modes"]}
            fields[(f["kind"], tuple(f["idx"]), int(f["internal"]))] = TrigPoly.from_cos_sin(pairs)
        return cls(fields, as_rat(d["g2"]), d.get("seed"), int(d.get("K", DEFAULT_K)))


def field_bases(lie: LieData, kinds: Mapping[str, str]) -> List[Tuple[str, Tuple[int, ...], int]]:
    """Expand ``{kind: shape}`` with shape in ``spatial``, ``spacetime``, ``scalar``,
    ``pair``, ``spacetime_plain`` into concrete field bases."""
    out = []
    for kind, shape in kinds.items():
        if shape == "spatial":
            out += [(kind, (i,), I) for i in SPATIAL for I in lie.indices]
        elif shape == "spacetime":
            out += [(kind, (mu,), I) for mu in (0, 1, 2, 3) for I in lie.indices]
        elif shape == "scalar":
            out += [(kind, (), I) for I in lie.indices]
        elif shape == "pair":
            out += [(kind, (j, k), I) for j in SPATIAL for k in SPATIAL if j < k for I in lie.indices]
        elif shape == "spacetime_plain":
            out += [(kind, (mu,), 0) for mu in (0, 1, 2, 3)]
        else:
            raise DomainError(f"unknown field shape {shape!r}")
    return out


def random_waves(rng: np.random.Generator, K: int = DEFAULT_K, modes: int = 3) -> List[Wave]:
    """Distinct canonically oriented nonzero wavevectors with entries in [-K, K]."""
    waves: List[Wave] = []
    while len(waves) < modes:
        k = tuple(int(x) for x in rng.integers(-K, K + 1, size=3))
        if k == (0, 0, 0):
            continue
        k = k if _canonical(k) else _neg(k)
        if k not in waves:
            waves.append(k)
    return waves


def random_trig(rng: np.random.Generator, waves: Sequence[Wave],
                max_num: int = 5, max_den: int = 4) -> TrigPoly:
    """Real TrigPoly with small random rational cos/sin coefficients on
    ``waves`` plus a constant mode."""

    def r():
        return Fraction(int(rng.integers(-max_num, max_num + 1)), int(rng.integers(1, max_den + 1)))

    pairs = {(0, 0, 0): (r(), 0)}
    for k in waves:
        pairs[k] = (r(), r())
    return TrigPoly.from_cos_sin(pairs)


def random_config(lie: LieData, kinds: Mapping[str, str], seed: int, g2=1,
                  K: int = DEFAULT_K, modes: int = 3) -> FieldConfig:
    """Seeded random configuration; all fields share one random set of
    wavevectors so that products have overlapping spectra."""
    rng = np.random.default_rng(seed)
    waves = random_waves(rng, K, modes)
    fields = {b: random_trig(rng, waves) for b in field_bases(lie, kinds)}
    return FieldConfig(fields, as_rat(g2), seed, K)


# evaluation ----------------------------------------------------------------

def evaluate(p: DiffPoly, cfg: FieldConfig) -> TrigPoly:
    """Substitute every jet coordinate by the matching derivative of its TrigPoly."""
    out = TrigPoly()
    for (g, fs), c in p.terms.items():
        coeff = c * GaussRat(cfg.g2 ** g) if g else c
        if not coeff:
            continue
        term = TrigPoly.const(coeff)
        for s in fs:
            term = term * cfg.value(s)
        out = out + term
    return out


def evaluate_average(p: DiffPoly, cfg: FieldConfig) -> GaussRat:
    """``<p>`` at ``cfg``; the last factor of each monomial is only paired."""
    total = GaussRat(0)
    for (g, fs), c in p.terms.items():
        coeff = c * GaussRat(cfg.g2 ** g) if g else c
        if not coeff:
            continue
        if not fs:
            total = total + coeff
            continue
        head = TrigPoly.const(coeff)
        for s in fs[:-1]:
            head = head * cfg.value(s)
        total = total + average_product(head, cfg.value(fs[-1]))
    return total


@dataclass(frozen=True)
class SmearedFunctional:
    """``F = < density >`` over the torus."""

    density: DiffPoly
    label: str = ""

    def __call__(self, cfg: FieldConfig) -> GaussRat:
        return evaluate_average(self.density, cfg)




def canonical_fields(p: DiffPoly, pair=("A", "Pi")) -> List[Tuple[Tuple[int, ...], int]]:
    """Spatial (idx, internal) labels of undifferentiated-in-time canonical fields in ``p``."""
    q, m = pair
    labels = set()
    for s in p.symbols():
        if s.kind in (q, m) and s.time_order == 0 and len(s.idx) == 1 and s.idx[0] in SPATIAL:
            labels.add((s.idx, s.internal))
    return sorted(labels)


def bracket_density(F: DiffPoly, G: DiffPoly, pair=("A", "Pi")) -> DiffPoly:
    """Density of ``{F, G}``: sum of dF/dq dG/dp - dG/dq dF/dp over canonical labels."""
    q, m = pair
    labels = set(canonical_fields(F, pair)) | set(canonical_fields(G, pair))
    out = DiffPoly()
    for idx, internal in sorted(labels):
        dFq = variational_derivative(F, q, idx, internal)
        dGp = variational_derivative(G, m, idx, internal)
        dGq = variational_derivative(G, q, idx, internal)
        dFp = variational_derivative(F, m, idx, internal)
        out = out + dFq * dGp - dGq * dFp
    return out


def poisson_bracket(F: SmearedFunctional, G: SmearedFunctional, cfg: FieldConfig) -> GaussRat:
    return evaluate_average(bracket_density(F.density, G.density), cfg)


def bracket_functional(F: SmearedFunctional, G: SmearedFunctional) -> SmearedFunctional:
    """``{F, G}`` re-expressed as a smeared functional, for nested brackets."""
    return SmearedFunctional(bracket_density(F.density, G.density), f"{{{F.label},{G.label}}}")


def pointwise_float(p: DiffPoly, cfg: FieldConfig, x: Sequence[float]) -> complex:
    """Independent float evaluation: each jet coordinate is differentiated
    analytically mode by mode, then the monomials are multiplied as floats."""
    total = 0j
    for (g, fs), c in p.terms.items():
        val = complex(float(c.re), float(c.im)) * float(cfg.g2) ** g
        for s in fs:
            base = cfg.fields.get(s.base)
            if base is None:
                raise ConfigError(f"no assignment for {_base_key(*s.base)}")
            acc = 0j
            for k, v in base.c.items():
                phase = k[0] * x[0] + k[1] * x[1] + k[2] * x[2]
                fac = complex(float(v.re), float(v.im)) * complex(math.cos(phase), math.sin(phase))
                for d in s.deriv:
                    fac *= 1j * k[d - 1]
                acc += fac
            val *= acc
        total += val
    return total
