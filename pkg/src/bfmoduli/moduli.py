"""Manifold catalog and virtual dimensions of flat-connection moduli spaces."""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Dict, List, Optional, Sequence, Tuple

from . import published
from .charclasses import BundleData
from .divergence import Divergence, dedupe
from .errors import CatalogError, DomainError, PoleError
from .index import h1_of_m
from .exact import as_rat

CRITERIA = ("universal_only", "s4_restriction")
ENV_CATALOG = "BF_MODULI_CATALOG"
SCHEMA = "bfmoduli-catalog"
TABLE_MS = (3, 6, 15)


@dataclass(frozen=True)
class Manifold:
    name: str
    chi: int
    tau: int
    family_param: Optional[int] = None

    @property
    def label(self) -> str:
        return self.name if self.family_param is None else f"{self.name}[{self.family_param}]"


def _poly_eval(coeffs: Sequence, x) -> Fraction:
    return sum((Fraction(c) * Fraction(x) ** k for k, c in enumerate(coeffs)), Fraction(0))


@dataclass(frozen=True)
class CatalogEntry:
    """A fixed manifold or a one-parameter family with polynomial chi, tau.

    ``chi = sum(chi_poly[k] p^k) / chi_den`` and likewise for tau; both
    quotients must be integers for every admissible parameter.
    """

    name: str
    chi_poly: Tuple[int, ...]
    tau_poly: Tuple[int, ...]
    chi_den: int = 1
    tau_den: int = 1
    param: Optional[str] = None
    param_min: int = 0
    table_params: Tuple[int, ...] = ()
    source: str = ""

    @property
    def is_family(self) -> bool:
        return self.param is not None

    def _value(self, poly, den, p) -> int:
        q = _poly_eval(poly, p) / den
        if q.denominator != 1:
            raise CatalogError(f"{self.name}: non-integer invariant {q} at {self.param}={p}")
        return int(q)

    def instantiate(self, p: Optional[int] = None) -> Manifold:
        if not self.is_family:
            if p is not None:
                raise DomainError(f"{self.name} takes no parameter")
            return Manifold(self.name, self._value(self.chi_poly, 1, 0), self._value(self.tau_poly, 1, 0))
        if p is None:
            raise DomainError(f"{self.name} needs parameter {self.param}")
        if p < self.param_min:
            raise DomainError(f"{self.name}: {self.param} must be >= {self.param_min}")
        return Manifold(self.name, self._value(self.chi_poly, self.chi_den, p),
                        self._value(self.tau_poly, self.tau_den, p), p)

    def members(self) -> List[Manifold]:
        if not self.is_family:
            return [self.instantiate()]
        return [self.instantiate(p) for p in self.table_params]

    @classmethod
    def from_json(cls, d: dict) -> "CatalogEntry":
        try:
            name = d["name"]

            def poly(v):
                if isinstance(v, int):
                    return (v,), 1
                return tuple(int(c) for c in v["poly"]), int(v.get("den", 1))

            chi, chi_den = poly(d["chi"])
            tau, tau_den = poly(d["tau"])
        except (KeyError, TypeError, ValueError) as exc:
            raise CatalogError(f"bad catalog entry {d!r}: {exc}") from exc
        param = d.get("param")
        if param is None and (len(chi) > 1 or len(tau) > 1):
            raise CatalogError(f"{name}: polynomial invariants need a 'param'")
        entry = cls(name, chi, tau, chi_den, tau_den, param, int(d.get("param_min", 0)),
                    tuple(d.get("table_params", ())), d.get("source", ""))
        entry.members()  # raises if a tabulated member has non-integer invariants
        return entry


def _read_catalog_file(path) -> List[CatalogEntry]:
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    return _parse_catalog(data, str(path))


def _parse_catalog(data, where: str) -> List[CatalogEntry]:
    if not isinstance(data, dict) or data.get("schema") != SCHEMA:
        raise CatalogError(f"{where}: not a {SCHEMA} document")
    if data.get("version") != 1:
        raise CatalogError(f"{where}: unsupported catalog version {data.get('version')!r}")
    return [CatalogEntry.from_json(d) for d in data.get("manifolds", [])]


def builtin_catalog() -> List[CatalogEntry]:
    text = resources.files("bfmoduli").joinpath("data/catalog.json").read_text(encoding="utf-8")
    return _parse_catalog(json.loads(text), "builtin catalog")


def load_catalog(path=None) -> Dict[str, CatalogEntry]:
    """Built-in entries, overridden or extended by ``path`` (or ``$BF_MODULI_CATALOG``)."""
    entries = {e.name: e for e in builtin_catalog()}
    path = path or os.environ.get(ENV_CATALOG)
    if path:
        for e in _read_catalog_file(path):
            entries[e.name] = e
    return entries


def catalog(path=None) -> List[Manifold]:
    """Every tabulated manifold, families expanded over their default parameters."""
    return [m for e in load_catalog(path).values() for m in e.members()]


def get_manifold(name: str, param: Optional[int] = None, entries=None) -> Manifold:
    entries = entries if entries is not None else load_catalog()
    if name not in entries:
        raise DomainError(f"unknown manifold {name!r}; known: {', '.join(entries)}")
    return entries[name].instantiate(param)


@dataclass(frozen=True)
class DimResult:
    """Virtual dimension; ``value`` is in units of dim G for 4D results."""

    status: str  # "Value" or "Empty"
    value: Optional[Fraction]
    raw: Fraction
    integer_admissible: bool
    m_used: Optional[Fraction] = None
    criteria: str = "universal_only"
    admissible: bool = True
    note: str = ""

    @property
    def is_empty(self) -> bool:
        return self.status == "Empty"


def dim2(genus: int, b: BundleData) -> DimResult:
    """Dimension of flat connections on a closed genus-g surface (absolute)."""
    if genus < 0:
        raise DomainError("genus must be >= 0")
    if genus == 0:
        value, note = 0, "single point"
    elif b.is_abelian:
        value, note = 2 * genus, "torus of holonomies"
    elif genus == 1:
        value, note = 2 * b.rank_g, "commuting holonomies"
    else:
        value, note = (2 * genus - 2) * b.dim_g, ""
    v = Fraction(value)
    return DimResult("Value", v, v, True, note=note)


def dim4(m_fold: Manifold, b: BundleData, m, criteria: str = "universal_only") -> DimResult:
    if criteria not in CRITERIA:
        raise DomainError(f"criteria must be one of {CRITERIA}")
    m = as_rat(m)
    raw = h1_of_m(b, m_fold, m)
    units = raw / b.dim_g
    if raw < 0:
        status, value = "Empty", None
    else:
        status, value = "Value", units
    admissible = status == "Value" and (criteria == "universal_only" or m > -3)
    integer_ok = raw >= 0 and raw.denominator == 1
    return DimResult(status, value, raw, integer_ok, m, criteria, admissible)


def h1_units_of_m(m_fold: Manifold, m) -> Fraction:
    """h1 / dim G, which does not depend on the group."""
    return h1_of_m(BundleData.u1(), m_fold, m)


def m_of_h1(m_fold: Manifold, b: BundleData, h1) -> Fraction:
    """Invert ``h1(m)`` on a fixed manifold."""
    h1 = as_rat(h1)
    den = 3 * b.dim_g * abs(m_fold.tau) - h1
    if den == 0:
        raise PoleError("h1 = 3 dim G |tau| is the horizontal asymptote")
    return 3 * (b.dim_g * m_fold.chi + h1) / den


# tables --------------------------------------------------------------------

@dataclass(frozen=True)
class TableRow:
    name: str
    param: Optional[int]
    chi: int
    tau: int
    m: Fraction
    h1_units_dimG: Fraction
    status: str
    paper_value: str
    divergence_flag: bool

    COLUMNS = ("name", "param", "chi", "tau", "m", "h1_units_dimG", "status",
               "paper_value", "divergence_flag")

    def as_strings(self) -> List[str]:
        return [self.name, "" if self.param is None else str(self.param), str(self.chi),
                str(self.tau), str(self.m), str(self.h1_units_dimG), self.status,
                self.paper_value, "1" if self.divergence_flag else "0"]


def _piece(name: str, m: int, p: Optional[int]):
    for lo, hi, value, text in published.TABLES[m].get(name, ()):
        if (lo is None or p is None or p >= lo) and (hi is None or p is None or p <= hi):
            return lo, hi, value, text
    return None


def _printed_at(value, p) -> Optional[Fraction]:
    return None if value == published.EMPTY else _poly_eval(value, p or 0)


def poly_text(coeffs: Sequence[Fraction], var: str) -> str:
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = Fraction(coeffs[k])
        if not c:
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        coef = str(c) if (k == 0 or abs(c) != 1) else ("-" if c < 0 else "")
        if mono and coef not in ("", "-"):
            coef += "*"
        parts.append(f"{coef}{mono}")
    return " + ".join(parts).replace("+ -", "- ") if parts else "0"


def _derived_poly(entry: CatalogEntry, m: int, sign: int) -> List[Fraction]:
    """h1/dimG = 3(m |tau| - chi)/(3+m) as a polynomial in the family parameter."""
    n = max(len(entry.chi_poly), len(entry.tau_poly))
    chi = [Fraction(c, entry.chi_den) for c in entry.chi_poly] + [Fraction(0)] * (n - len(entry.chi_poly))
    tau = [Fraction(c, entry.tau_den) for c in entry.tau_poly] + [Fraction(0)] * (n - len(entry.tau_poly))
    k = Fraction(3, 3 + m)
    return [k * (m * sign * t - c) for c, t in zip(chi, tau)]


def table(m, b: BundleData, entries=None) -> Tuple[List[TableRow], List[Divergence]]:
    """Regenerate a characteristic-number table and compare with the printed one."""
    m = as_rat(m)
    entries = entries if entries is not None else load_catalog()
    rows: List[TableRow] = []
    divs: List[Divergence] = []
    printed_table = m.denominator == 1 and int(m) in published.TABLES
    for entry in entries.values():
        for mf in entry.members():
            r = dim4(mf, b, m)
            units = r.raw / b.dim_g
            piece = _piece(entry.name, int(m), mf.family_param) if printed_table else None
            flag, paper_text = False, ""
            if piece is not None:
                lo, hi, value, text = piece
                paper_text = text
                printed = _printed_at(value, mf.family_param)
                if printed is None:
                    flag = not r.is_empty
                else:
                    flag = r.is_empty or units != printed
                    paper_text = str(printed)
                if flag:
                    divs.append(_table_divergence(entry, int(m), piece, mf, units, r))
            rows.append(TableRow(entry.name, mf.family_param, mf.chi, mf.tau, m, units,
                                 r.status, paper_text, flag))
    return rows, dedupe(divs)


def _table_divergence(entry, m, piece, mf, units, r) -> Divergence:
    lo, hi, value, text = piece
    where = f"table m={m}, row {entry.name}"
    if entry.is_family and (lo is None or hi is None or lo != hi):
        sign = -1 if mf.tau < 0 else 1
        derived = poly_text(_derived_poly(entry, m, sign), entry.param)
        rng = f"{entry.param}>={lo}" if hi is None else f"{lo}<={entry.param}<={hi}"
        return Divergence(f"{where} ({rng})", f"{text} dimG", f"({derived}) dimG", "table")
    derived = "empty" if r.is_empty else f"{units} dimG"
    return Divergence(where, f"{text} dimG", derived, "table")


def table_divergences(b: BundleData | None = None, entries=None) -> List[Divergence]:
    b = b or BundleData.su(2)
    out: List[Divergence] = []
    for m in TABLE_MS:
        out += table(m, b, entries)[1]
    return out


# sequence ------------------------------------------------------------------

@dataclass(frozen=True)
class SequencePoint:
    n: int
    m: Optional[Fraction]  # None is the point at infinity

    def as_pair(self) -> str:
        return f"({'inf' if self.m is None else self.m}, {self.n})"


def sequence_cp2(n_max: int) -> List[SequencePoint]:
    """m values giving h1 = n * 3 dim G on CP2."""
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    cp2 = get_manifold("CP2")
    b = BundleData.u1()
    out = []
    for n in range(1, n_max + 1):
        try:
            m = m_of_h1(cp2, b, 3 * n)
        except PoleError:
            m = None
        out.append(SequencePoint(n, m))
    return out


def sequence_divergences(points: List[SequencePoint] | None = None) -> List[Divergence]:
    points = points if points is not None else sequence_cp2(len(published.SEQUENCE))
    out = []
    for pt in points:
        text = published.SEQUENCE.get(pt.n)
        if text is None:
            continue
        printed = None if text == "inf" else Fraction(text)
        if printed != pt.m:
            out.append(Divergence(f"CP2 sequence n={pt.n}", f"({text}, {pt.n})",
                                  pt.as_pair(), "sequence"))
    return out


# plot data -----------------------------------------------------------------

@dataclass
class PlotData:
    manifold: Manifold
    rows: List[Tuple[Fraction, Fraction]] = field(default_factory=list)
    annotations: List[str] = field(default_factory=list)

    def to_tsv(self, float_col: bool = False) -> str:
        lines = [f"# annotation: {a}" for a in self.annotations]
        lines.append("m\th1_units_dimG" + ("\th1_float" if float_col else ""))
        for m, h in self.rows:
            cells = [str(m), str(h)] + ([repr(float(h))] if float_col else [])
            lines.append("\t".join(cells))
        return "\n".join(lines) + "\n"


def plotdata(m_fold: Manifold, b: BundleData, m_from, m_to, steps: int) -> PlotData:
    """Sample h1(m) in dim G units on an even grid, skipping the pole."""
    lo, hi = as_rat(m_from), as_rat(m_to)
    if steps < 1:
        raise DomainError("steps must be >= 1")
    if hi < lo:
        raise DomainError("m_to must not be below m_from")
    out = PlotData(m_fold)
    t = abs(m_fold.tau)
    out.annotations.append("vertical_asymptote m=-3")
    out.annotations.append(f"horizontal_asymptote h1={3 * t} dimG")
    if t:
        out.annotations.append(f"zero_crossing m={Fraction(m_fold.chi, t)}")
    for k in range(steps + 1):
        m = lo + (hi - lo) * k / steps
        if m == -3:
            continue
        out.rows.append((m, h1_of_m(b, m_fold, m) / b.dim_g))
    return out
