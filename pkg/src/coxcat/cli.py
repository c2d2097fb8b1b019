"""Command line front end: group summaries, orbit tables and the verification harness.

Exit codes: 0 success, 1 some identity failed, 2 usage, parse or tier error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import factor
from .coxeter import TypeParseError, is_heavy, parse_type
from .scalars import UniPoly
from .verify import SUITES, run_checks
from .workspace import load


class UsageError(Exception):
    pass


def _num(x):
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else str(x)
    return x


def _coeffs(p: UniPoly) -> list:
    return [_num(c) for c in p.coeffs]


def _resolve(args) -> str:
    """Canonical type string after parsing and the tier check."""
    text = args.type_opt or args.type_pos
    if not text:
        raise UsageError("no group type given")
    try:
        ctype = parse_type(text)
    except TypeParseError as exc:
        raise UsageError(f"cannot parse type {text!r}: {exc}") from exc
    tier = args.tier or os.environ.get("COXCAT_TIER", "default")
    if tier not in ("default", "heavy"):
        raise UsageError(f"unknown tier {tier!r}")
    if is_heavy(ctype) and tier != "heavy":
        raise UsageError(f"{ctype} needs --tier heavy")
    return str(ctype)


def group_info(group: str) -> dict:
    ws = load(group)
    W = ws.system
    hs = W.component_coxeter_numbers()
    return {
        "schema": 1,
        "group": group,
        "rank": W.rank,
        "order": W.order,
        "reflections": W.num_positive,
        "coxeter_number": hs[0] if len(hs) == 1 else hs,
        "exponents": ws.lattice.exponents(),
        "bipartition": {"plus": sorted(W.plus), "minus": sorted(W.minus)},
    }


def group_tables(group: str, m: int) -> dict:
    ws = load(group)
    lat, nc = ws.lattice, ws.nc
    cx = ws.complex(m)
    kap, kapp = nc.kappa(m), nc.kappa(m, plus=True)
    gam, gamp = cx.gamma(), cx.gamma(plus=True)
    orbits = []
    for row, o in zip(lat.orbit_table(), lat.orbits):
        i = o.index
        orbits.append({
            "label": row["label"],
            "dim": row["dim"],
            "orbit_size": row["size"],
            "coxeter_type": row["coxeter_type"],
            "os_exponents": row["os_exponents"],
            "nu": row["nu"],
            "normalizer_index": row["normalizer_index"],
            "kappa": kap[i],
            "kappa_plus": kapp[i],
            "gamma": gam[i],
            "gamma_plus": gamp[i],
            "phi_coeffs": _coeffs(factor.phi(nc, i)),
        })
    return {
        "schema": 1,
        "group": group,
        "m": m,
        "orbits": orbits,
        "f_vector": cx.f_vector(),
        "h_vector": cx.h_vector(),
        "facets": cx.facets(),
        "positive_facets": cx.facets(plus=True),
    }


def _dump_json(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=False) + "\n"


def _tables_csv(tables: list[dict]) -> str:
    buf = io.StringIO()
    cols = ["group", "m", "label", "dim", "orbit_size", "coxeter_type", "os_exponents", "nu",
            "normalizer_index", "kappa", "kappa_plus", "gamma", "gamma_plus", "phi_coeffs"]
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(cols)
    for t in tables:
        for row in t["orbits"]:
            rec = {"group": t["group"], "m": t["m"], **row}
            writer.writerow([json.dumps(rec[c]) if isinstance(rec[c], list) else rec[c] for c in cols])
    return buf.getvalue()


def _tables_text(tables: list[dict]) -> str:
    lines = []
    for t in tables:
        lines.append(f"{t['group']}  m={t['m']}  facets={t['facets']}  positive_facets={t['positive_facets']}")
        lines.append(f"  f={t['f_vector']}  h={t['h_vector']}")
        lines.append(f"  {'label':<12}{'dim':>4}{'kappa':>10}{'kappa+':>10}{'gamma':>10}{'gamma+':>10}  phi")
        for r in t["orbits"]:
            lines.append(f"  {r['label']:<12}{r['dim']:>4}{r['kappa']:>10}{r['kappa_plus']:>10}"
                         f"{r['gamma']:>10}{r['gamma_plus']:>10}  {r['phi_coeffs']}")
    return "\n".join(lines) + "\n"


def _info_text(info: dict) -> str:
    return "".join(f"{k}: {v}\n" for k, v in info.items() if k != "schema")


def _info_csv(info: dict) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    keys = [k for k in info if k != "schema"]
    writer.writerow(keys)
    writer.writerow([json.dumps(info[k]) if isinstance(info[k], (list, dict)) else info[k] for k in keys])
    return buf.getvalue()


def _verify_render(results, fmt: str, group: str, ms) -> str:
    rows = [r.as_dict() for r in results]
    if fmt == "json":
        return _dump_json({"schema": 1, "group": group, "m": list(ms),
                           "passed": all(r.passed for r in results), "results": rows})
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["suite", "identity", "group", "m", "status", "counterexample"])
        for r in rows:
            ce = r.get("counterexample")
            writer.writerow([r["suite"], r["identity"], r["group"], "" if r["m"] is None else r["m"],
                             r["status"], "" if ce is None else json.dumps(ce)])
        return buf.getvalue()
    lines = []
    for r in rows:
        m = "" if r["m"] is None else f" m={r['m']}"
        line = f"{r['status'].upper():<5}{r['suite']:<16}{r['identity']}{m}"
        if "counterexample" in r:
            line += "  " + json.dumps(r["counterexample"])
        lines.append(line)
    return "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("type_pos", nargs="?", metavar="TYPE", help="group type such as A3, B2xA1 or I2(5)")
    common.add_argument("--type", dest="type_opt", metavar="TYPE")
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--tier", choices=("default", "heavy"), default=None,
                        help="allow heavy groups (default taken from COXCAT_TIER)")
    common.add_argument("--out", metavar="PATH", help="write output here instead of stdout")

    with_m = argparse.ArgumentParser(add_help=False)
    with_m.add_argument("--m", dest="m", type=int, nargs="+", action="extend", metavar="M",
                        help="Fuss parameter; repeatable")

    parser = argparse.ArgumentParser(prog="coxcat", description="Fuss-Catalan enumeration for finite Coxeter groups")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("info", parents=[common], help="rank, order, Coxeter number, exponents")
    sub.add_parser("tables", parents=[common, with_m], help="per-orbit enumeration tables")
    v = sub.add_parser("verify", parents=[common, with_m], help="run identity checks")
    v.add_argument("--suite", nargs="+", action="extend", choices=SUITES + ("all",), metavar="SUITE",
                   help="one or more of: " + ", ".join(SUITES + ("all",)))
    v.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    return parser


def run(argv=None) -> tuple[int, str]:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return (0 if exc.code == 0 else 2), ""
    group = _resolve(args)
    ms = tuple(args.m) if getattr(args, "m", None) else (1,)
    if any(m < 1 for m in ms):
        raise UsageError("m must be positive")
    status = 0
    if args.command == "info":
        info = group_info(group)
        text = {"json": _dump_json, "csv": _info_csv, "text": _info_text}[args.format](info)
    elif args.command == "tables":
        tables = [group_tables(group, m) for m in ms]
        if args.format == "json":
            text = _dump_json(tables[0] if len(tables) == 1 else tables)
        elif args.format == "csv":
            text = _tables_csv(tables)
        else:
            text = _tables_text(tables)
    else:
        suites = tuple(args.suite or ("all",))
        results = run_checks(load(group), suites, ms, inject_fault=args.inject_fault)
        text = _verify_render(results, args.format, group, ms)
        if not all(r.passed for r in results):
            status = 1
            for r in results:
                if not r.passed:
                    print(f"failed: {r.suite}: {r.identity} (m={r.m})", file=sys.stderr)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        text = ""
    return status, text


def main(argv=None) -> int:
    try:
        status, text = run(argv)
    except UsageError as exc:
        print(f"coxcat: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
