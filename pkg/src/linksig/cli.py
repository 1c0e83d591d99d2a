"""Command line interface: ``linksig {invariants,signature,check,campaign,random,localdiag}``."""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from .circle import Kind, trace_factor_of
from .fixtures import dump_matrix, load_fixture, load_matrix_file
from .localdiag import diagonalize_localized, hermitian_laurent, jump_from_diagonal
from .report import invariants_json, step_function_csv, step_function_json, step_function_svg
from .seifert import SeifertError, link_invariants, random_seifert
from .signature import signature_function
from .verify import THEOREMS, run_campaign, run_checks, shadow_comparison, analyze


def _load(spec: str):
    """A path to a matrix file, or ``fixture:NAME`` for a bundled matrix."""
    if spec.startswith("fixture:"):
        name = spec.split(":", 1)[1]
        return name, load_fixture(name)
    return load_matrix_file(spec)


def _emit(obj) -> None:
    json.dump(obj, sys.stdout, indent=2, ensure_ascii=False)
    sys.stdout.write("\n")


def cmd_invariants(args) -> int:
    name, S = _load(args.file)
    _emit(invariants_json(S, link_invariants(S), name))
    return 0


def cmd_signature(args) -> int:
    name, S = _load(args.file)
    inv = link_invariants(S)
    sf = signature_function(S, samples_per_arc=args.samples_per_arc, inv=inv)
    shadow = None
    if args.shadow:
        shadow = shadow_comparison(S, analyze(S, args.samples_per_arc))
    _emit(step_function_json(sf, name, shadow))
    if args.csv:
        Path(args.csv).write_text(step_function_csv(sf), encoding="utf-8")
    if args.svg:
        step_function_svg(sf, args.svg, title=name)
    return 0


def cmd_check(args) -> int:
    name, S = _load(args.file)
    theorems = [t.strip() for t in args.theorems.split(",") if t.strip()]
    unknown = sorted(set(theorems) - set(THEOREMS))
    if unknown:
        raise SystemExit(f"unknown theorem ids: {', '.join(unknown)} (choose from {', '.join(THEOREMS)})")
    reports = run_checks(S, theorems, samples_per_arc=args.samples_per_arc)
    ok = all(r.overall for r in reports if r.applicable)
    _emit({"schema": 1, "name": name, "overall": "pass" if ok else "fail",
           "reports": [r.to_json() for r in reports]})
    return 0 if ok else 1


def cmd_campaign(args) -> int:
    summary = run_campaign(args.count, args.size_bound, args.seed, entry_bound=args.entry_bound,
                           samples_per_arc=args.samples_per_arc, fault=args.inject_fault, jobs=args.jobs)
    _emit(summary.to_json())
    return 0 if summary.ok else 1


def cmd_random(args) -> int:
    S = random_seifert(args.genus, args.components, args.bound, args.seed, congruence=args.congruence)
    sys.stdout.write(dump_matrix(S, f"random_g{args.genus}_mu{args.components}_s{args.seed}") + "\n")
    return 0


def cmd_localdiag(args) -> int:
    name, S = _load(args.file)
    sf = signature_function(S)
    W = hermitian_laurent(S)
    out = []
    for p in sf.critical_points:
        if p.is_boundary:
            continue
        d = diagonalize_localized(W, trace_factor_of(p))
        entry = {"point": p.to_json(), "diagonal_form": d.to_json()}
        if p.kind is Kind.RATIONAL_COS:
            j = jump_from_diagonal(d, p)
            entry["predicted_jumps"] = {"ju_minus": j.ju_minus, "ju_plus": j.ju_plus}
        out.append(entry)
    _emit({"schema": 1, "name": name, "points": out})
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="linksig", description="Exact signature functions of links from Seifert matrices.")
    ap.add_argument("-v", "--verbose", action="store_true")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="higher Alexander polynomials, A_L, h, invariant factors")
    p.add_argument("file", help="matrix JSON file, or fixture:NAME")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("signature", help="the signature step function")
    p.add_argument("file")
    p.add_argument("--svg", metavar="OUT.svg")
    p.add_argument("--csv", metavar="OUT.csv")
    p.add_argument("--samples-per-arc", type=int, default=1)
    p.add_argument("--shadow", action="store_true", help="include the float64 eigenvalue diagnostic")
    p.set_defaults(func=cmd_signature)

    p = sub.add_parser("check", help="run theorem checkers on one matrix")
    p.add_argument("file")
    p.add_argument("--theorems", default=",".join(THEOREMS))
    p.add_argument("--samples-per-arc", type=int, default=1)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("campaign", help="random property campaign")
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--size-bound", type=int, default=10, help="largest matrix size 2g + mu - 1")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--entry-bound", type=int, default=2)
    p.add_argument("--samples-per-arc", type=int, default=2)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--inject-fault", choices=THEOREMS, help="negate one theorem's checks (harness self-test)")
    p.set_defaults(func=cmd_campaign)

    p = sub.add_parser("random", help="print a random Seifert matrix")
    p.add_argument("--genus", type=int, required=True)
    p.add_argument("--components", type=int, required=True)
    p.add_argument("--bound", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--congruence", action="store_true", help="scramble by a random unimodular congruence")
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("localdiag", help="dump localized diagonal forms at interior critical points")
    p.add_argument("file")
    p.set_defaults(func=cmd_localdiag)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING)
    try:
        return args.func(args)
    except (SeifertError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"linksig: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
