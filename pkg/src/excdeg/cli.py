"""Command-line front end.

Commands: phi, ppd, catalog, verify, table2, nagell.
Exit codes: 0 all pass, 1 any fail, 2 usage/config error,
3 vacuous-only clause encountered with --strict.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .catalog import FAMILIES, CatalogError, ConstraintError, load_catalog
from .cyclotomic import cyclotomic, eval_poly, poly_str
from .degree_algebra import PrimePower
from .verifier import (FAIL, PASS, VACUOUS, VerificationReport,
                       global_clauses, nagell_search, reports_to_json,
                       verify_clause, verify_family, verify_table2)
from .zsigmondy import ppd

Q_MAX_ENV = "EXCDEG_Q_MAX"

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_VACUOUS = 0, 1, 2, 3


def _default_q_max() -> int:
    raw = os.environ.get(Q_MAX_ENV)
    if raw is None:
        return 64
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"invalid {Q_MAX_ENV}={raw!r}; expected an integer")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="excdeg",
                                 description="degree-data verification toolkit")
    sub = ap.add_subparsers(dest="command", required=True)

    p_phi = sub.add_parser("phi", help="print a cyclotomic polynomial and its value")
    p_phi.add_argument("n", type=int)
    p_phi.add_argument("q", type=int)

    p_ppd = sub.add_parser("ppd", help="smallest primitive prime divisor of q^n-1")
    p_ppd.add_argument("n", type=int)
    p_ppd.add_argument("q", type=int)

    p_cat = sub.add_parser("catalog", help="dump a family catalog")
    p_cat.add_argument("--family", required=True, choices=FAMILIES)
    p_cat.add_argument("--catalog", help="external catalog file (same schema)")
    p_cat.add_argument("--output", choices=("text", "json"), default="text")

    p_ver = sub.add_parser("verify", help="run verification suites")
    p_ver.add_argument("--family", choices=FAMILIES, action="append")
    p_ver.add_argument("--q-max", type=int, default=None)
    p_ver.add_argument("--clause", help="run a single clause id")
    p_ver.add_argument("--output", choices=("text", "json"), default="text")
    p_ver.add_argument("--jobs", type=int, default=1)
    p_ver.add_argument("--catalog", help="external catalog file (same schema)")
    p_ver.add_argument("--strict", action="store_true",
                       help="treat vacuous-only clauses as failures")
    p_ver.add_argument("--x-max", type=int, default=100_000)
    p_ver.add_argument("--m-max", type=int, default=30)

    p_t2 = sub.add_parser("table2", help="check the sporadic coprime pairs")
    p_t2.add_argument("--output", choices=("text", "json"), default="text")

    p_ng = sub.add_parser("nagell", help="search x^2+x+1 = y^m")
    p_ng.add_argument("--x-max", type=int, default=100_000)
    p_ng.add_argument("--m-max", type=int, default=30)
    p_ng.add_argument("--all-x", action="store_true",
                      help="drop the prime-power restriction on x")
    return ap


def _emit_reports(reports: list[VerificationReport], output: str) -> None:
    if output == "json":
        print(reports_to_json(reports))
        return
    for r in reports:
        verdict = r.verdict
        print(f"{r.clause:32s} {verdict:8s} "
              f"({sum(1 for s in r.samples if s.verdict == PASS)} pass, "
              f"{sum(1 for s in r.samples if s.verdict == VACUOUS)} vacuous, "
              f"{sum(1 for s in r.samples if s.verdict == FAIL)} fail)")
        if verdict == FAIL:
            for s in r.samples:
                if s.verdict == FAIL:
                    print(f"    q={s.q.value}: {s.witnesses}")


def _exit_code(reports, strict: bool) -> int:
    if any(r.verdict == FAIL for r in reports):
        return EXIT_FAIL
    if strict and any(r.verdict == VACUOUS for r in reports):
        return EXIT_VACUOUS
    return EXIT_OK


def cmd_verify(args) -> int:
    q_max = args.q_max if args.q_max is not None else _default_q_max()
    reports: list[VerificationReport] = []
    globals_by_id = {c.id: c for c in global_clauses()}
    if args.clause and args.clause in globals_by_id:
        clause = globals_by_id[args.clause]
        if clause.category == "diophantine":
            payload = dict(clause.payload,
                           x_max=args.x_max, m_max=args.m_max)
            clause = type(clause)(clause.id, clause.category, clause.source,
                                  None, payload)
        sample = verify_clause(clause, PrimePower(2, 1))
        reports.append(VerificationReport(clause.id, clause.source, None,
                                          (sample,), scope_note="q-independent claim"))
    else:
        families = args.family or list(FAMILIES)
        for fam in families:
            cat = load_catalog(fam, args.catalog)
            if q_max < cat.q_floor:
                print(f"error: q_max {q_max} below {fam} floor {cat.q_floor}",
                      file=sys.stderr)
                return EXIT_USAGE
            reports.extend(verify_family(fam, q_max, args.clause, args.jobs))
        if args.clause and not reports:
            print(f"error: unknown clause {args.clause!r}", file=sys.stderr)
            return EXIT_USAGE
        if not args.family and not args.clause:
            for c in global_clauses():
                sample = verify_clause(c, PrimePower(2, 1))
                reports.append(VerificationReport(
                    c.id, c.source, None, (sample,),
                    scope_note="q-independent claim"))
    _emit_reports(reports, args.output)
    return _exit_code(reports, args.strict)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "phi":
            if args.n < 1 or args.q < 2:
                print("error: need n >= 1 and q >= 2", file=sys.stderr)
                return EXIT_USAGE
            poly = cyclotomic(args.n)
            print(f"{poly_str(poly)} = {eval_poly(poly, args.q)}")
            return EXIT_OK
        if args.command == "ppd":
            res = ppd(args.n, args.q)
            print(str(res))
            return EXIT_OK
        if args.command == "catalog":
            cat = load_catalog(args.family, args.catalog)
            if args.output == "json":
                print(json.dumps({
                    "family": cat.family, "q_floor": cat.q_floor,
                    "a_H": cat.a_H, "b_H": cat.b_H, "c_H": cat.c_H,
                    "top_phi": list(cat.top_phi),
                    "entries": [{"label": e.label, "kind": e.kind,
                                 "version": e.version, "degree": str(e.degree),
                                 "source": e.source} for e in cat.entries],
                }, indent=2, sort_keys=True))
            else:
                print(f"{cat.family}: q >= {cat.q_floor}, a={cat.a_H}, "
                      f"b={cat.b_H}, c={cat.c_H}, top_phi={list(cat.top_phi)}")
                for e in cat.entries:
                    print(f"  [{e.version:6s}] {e.label:32s} {e.degree}  ({e.source})")
            return EXIT_OK
        if args.command == "verify":
            return cmd_verify(args)
        if args.command == "table2":
            report = verify_table2()
            _emit_reports([report], args.output)
            return EXIT_OK if report.verdict == PASS else EXIT_FAIL
        if args.command == "nagell":
            sols = nagell_search(args.x_max, args.m_max, not args.all_x)
            for x, y, m in sols:
                print(f"{x}^2+{x}+1 = {y}^{m}")
            print(f"{len(sols)} solution(s)")
            return EXIT_OK
    except (CatalogError, ConstraintError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
