"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 domain error, 3 success with a
non-empty divergence report under ``--strict-paper``.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import List, Optional, Sequence

from .charclasses import BundleData
from .divergence import Divergence, to_json
from .errors import BFModuliError
from .exact import as_rat
from .index import MODES, h1_from_pipeline, lambda_of_m
from .moduli import (CRITERIA, TABLE_MS, TableRow, dim2, dim4, get_manifold, load_catalog,
                     plotdata, sequence_cp2, sequence_divergences, table)

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_DIVERGENT = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise UsageError(message)


def _rat(text: str):
    try:
        return as_rat(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from exc


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--catalog", help="extra catalog JSON (default: $BF_MODULI_CATALOG)")
    common.add_argument("--strict-paper", action="store_true",
                        help="exit 3 when results disagree with printed values")
    common.add_argument("--format", choices=("text", "csv", "json", "tsv"), default=None)

    group = _Parser(add_help=False)
    group.add_argument("--group", default="su2", help="su2, su3, ..., or u1")

    p = _Parser(prog="bfmoduli", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    s = sub.add_parser("dim2", parents=[common, group], help="flat connections on a surface")
    s.add_argument("--genus", type=int, required=True)

    s = sub.add_parser("dim4", parents=[common, group], help="virtual dimension on a 4-manifold")
    s.add_argument("--manifold", required=True)
    s.add_argument("--param", type=int)
    s.add_argument("--m", type=_rat, required=True)
    s.add_argument("--criteria", choices=CRITERIA, default="universal_only")
    s.add_argument("--integrand-mode", choices=MODES, default="paper")

    s = sub.add_parser("table", parents=[common, group], help="characteristic-number table")
    s.add_argument("--m", type=int, choices=TABLE_MS, required=True)

    s = sub.add_parser("sequence", parents=[common], help="CP2 m-sequence")
    s.add_argument("--n-max", type=int, required=True)

    s = sub.add_parser("plotdata", parents=[common, group], help="sampled h1(m) curve")
    s.add_argument("--manifold", required=True)
    s.add_argument("--param", type=int)
    s.add_argument("--from", dest="m_from", type=_rat, required=True)
    s.add_argument("--to", dest="m_to", type=_rat, required=True)
    s.add_argument("--steps", type=int, required=True)
    s.add_argument("--float-col", action="store_true")

    s = sub.add_parser("constraints", parents=[common], help="constraint analysis")
    s.add_argument("action", choices=("verify",))
    s.add_argument("--g2", type=_rat)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--configs", type=int, default=5)
    s.add_argument("--group", default="su2", choices=("su2", "u1"))

    s = sub.add_parser("divergences", parents=[common, group], help="printed-vs-derived report")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--configs", type=int, default=5)
    s.add_argument("--no-constraints", action="store_true")
    return p


def _yes(b: bool) -> str:
    return "true" if b else "false"


def _cmd_dim2(args, out) -> List[Divergence]:
    r = dim2(args.genus, BundleData.parse(args.group))
    if args.format == "json":
        out.write(json.dumps({"genus": args.genus, "group": args.group, "dim": str(r.value),
                              "note": r.note}) + "\n")
    else:
        out.write(f"{r.value} ({r.note})\n" if r.note else f"{r.value}\n")
    return []


def _cmd_dim4(args, out) -> List[Divergence]:
    b = BundleData.parse(args.group)
    entries = load_catalog(args.catalog)
    mf = get_manifold(args.manifold, args.param, entries)
    r = dim4(mf, b, args.m, args.criteria)
    h1 = r.raw
    if args.integrand_mode != "paper":
        h1 = h1_from_pipeline(b, mf, lambda_of_m(args.m), args.integrand_mode)
    rec = {"manifold": mf.label, "chi": mf.chi, "tau": mf.tau, "m": str(args.m), "group": str(b),
           "h1": str(h1), "h1_units_dimG": str(h1 / b.dim_g), "status": "Empty" if h1 < 0 else "Value",
           "integer_admissible": (h1 >= 0 and h1.denominator == 1),
           "admissible": r.admissible if args.integrand_mode == "paper" else h1 >= 0,
           "criteria": args.criteria, "integrand_mode": args.integrand_mode}
    if args.format == "json":
        out.write(json.dumps(rec) + "\n")
    else:
        out.write(f"h1 = {rec['h1']}\n")
        for k in ("h1_units_dimG", "status", "integer_admissible", "admissible", "criteria", "integrand_mode"):
            v = rec[k]
            out.write(f"{k} = {_yes(v) if isinstance(v, bool) else v}\n")
    return []


def rows_to_csv(rows: Sequence[TableRow]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(TableRow.COLUMNS)
    for r in rows:
        w.writerow(r.as_strings())
    return buf.getvalue()


def _cmd_table(args, out) -> List[Divergence]:
    rows, divs = table(args.m, BundleData.parse(args.group), load_catalog(args.catalog))
    if args.format == "json":
        out.write(json.dumps({"rows": [dict(zip(TableRow.COLUMNS, r.as_strings())) for r in rows],
                              "divergences": [d.to_dict() for d in divs]},
                             indent=2, ensure_ascii=False) + "\n")
    else:
        out.write(rows_to_csv(rows))
    return divs


def _cmd_sequence(args, out) -> List[Divergence]:
    pts = sequence_cp2(args.n_max)
    fmt = args.format or "text"
    if fmt == "json":
        out.write(json.dumps([{"m": None if p.m is None else str(p.m), "n": p.n} for p in pts]) + "\n")
    elif fmt in ("csv", "tsv"):
        sep = "," if fmt == "csv" else "\t"
        out.write(f"m{sep}n\n")
        for p in pts:
            out.write(f"{'inf' if p.m is None else p.m}{sep}{p.n}\n")
    else:
        for p in pts:
            out.write(p.as_pair() + "\n")
    return sequence_divergences(pts)


def _cmd_plotdata(args, out) -> List[Divergence]:
    b = BundleData.parse(args.group)
    mf = get_manifold(args.manifold, args.param, load_catalog(args.catalog))
    out.write(plotdata(mf, b, args.m_from, args.m_to, args.steps).to_tsv(args.float_col))
    return []


def _cmd_constraints(args, out) -> List[Divergence]:
    from .constraints import constraint_divergences, report_json, verify
    from .jets import LieData

    lie = LieData.su2() if args.group == "su2" else LieData.abelian(1)
    checks = verify(args.g2, args.seed, args.configs, lie)
    out.write(report_json(checks) + "\n")
    if not all(c.ok for c in checks):
        raise BFModuliError("a constraint check failed: " + ", ".join(c.name for c in checks if not c.ok))
    return constraint_divergences(checks)


def _cmd_divergences(args, out) -> List[Divergence]:
    from .report import all_divergences

    divs = all_divergences(BundleData.parse(args.group), not args.no_constraints,
                           args.seed, args.configs)
    if args.format in (None, "json"):
        out.write(to_json(divs) + "\n")
    else:
        for d in divs:
            out.write(f"[{d.category}] {d.location}: printed {d.paper_value}; derived {d.derived_value}\n")
    return divs


COMMANDS = {"dim2": _cmd_dim2, "dim4": _cmd_dim4, "table": _cmd_table, "sequence": _cmd_sequence,
            "plotdata": _cmd_plotdata, "constraints": _cmd_constraints,
            "divergences": _cmd_divergences}


def run(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except UsageError:
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return EXIT_OK if not exc.code else EXIT_USAGE
    if args.command in ("constraints",) and args.configs < 1:
        sys.stderr.write("bfmoduli: --configs must be >= 1\n")
        return EXIT_USAGE
    try:
        divs = COMMANDS[args.command](args, out)
    except (BFModuliError, ValueError, ZeroDivisionError, KeyError) as exc:
        sys.stderr.write(f"bfmoduli: {type(exc).__name__}: {exc}\n")
        return EXIT_DOMAIN
    if args.strict_paper and divs:
        sys.stderr.write(f"bfmoduli: {len(divs)} divergence(s) from printed values\n")
        return EXIT_DIVERGENT
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
