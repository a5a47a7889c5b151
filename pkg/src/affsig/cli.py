"""Command line front end.

Exit status: 0 when every check passes, 1 when the tool ran but found a
verification mismatch, 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from affsig.designs import (Design, DesignError, DesignParams, build_affine_geometry,
                            build_hadamard_paley, build_hadamard_sylvester,
                            hadamard_to_affine_design, incidence_matrix, is_admissible,
                            validate_affine)
from affsig.distance import DistanceError, bfs_distances, to_csv
from affsig.exact_linalg import char_poly, inertia
from affsig.spectra import (signature_from_factors, theorem1_signature, theorem2_charpoly,
                            verify_design)

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2

SOURCE_HELP = "ag M P [K] | sylvester T | paley Q | file PATH"


class UsageError(Exception):
    pass


def _int(tok: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise UsageError(f"expected an integer, got {tok!r}") from None


def load_source(tokens: list[str]) -> Design:
    kind, args = tokens[0], tokens[1:]
    if kind == "ag":
        if len(args) not in (2, 3):
            raise UsageError("ag takes M P [K]")
        m, p = _int(args[0]), _int(args[1])
        k = _int(args[2]) if len(args) == 3 else 1
        try:
            return build_affine_geometry(m, p, k)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if kind == "sylvester":
        if len(args) != 1:
            raise UsageError("sylvester takes T")
        try:
            return hadamard_to_affine_design(build_hadamard_sylvester(_int(args[0])))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if kind == "paley":
        if len(args) != 1:
            raise UsageError("paley takes Q")
        try:
            return hadamard_to_affine_design(build_hadamard_paley(_int(args[0])))
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    if kind == "file":
        if len(args) != 1:
            raise UsageError("file takes PATH")
        return Design.load(args[0])
    raise UsageError(f"unknown source {kind!r} (expected {SOURCE_HELP})")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def cmd_build(args) -> int:
    d = load_source(args.source[0])
    _emit(d.to_json() + "\n", args.out)
    return EXIT_OK


def cmd_validate(args) -> int:
    p = validate_affine(load_source(args.source[0]))
    _emit(_dump(p.to_dict()), args.out)
    return EXIT_OK


def cmd_distmat(args) -> int:
    d = load_source(args.source[0])
    validate_affine(d)
    _emit(to_csv(bfs_distances(incidence_matrix(d))), args.out)
    return EXIT_OK


def cmd_charpoly(args) -> int:
    d = load_source(args.source[0])
    p = validate_affine(d)
    computed = char_poly(bfs_distances(incidence_matrix(d)))
    theorem = theorem2_charpoly(p.n, p.mu)
    _emit(_dump({"params": p.to_dict(), "computed": computed.to_json(),
                 "theorem2": theorem.to_json(), "equal": computed == theorem}), args.out)
    return EXIT_OK if computed == theorem else EXIT_MISMATCH


def cmd_signature(args) -> int:
    d = load_source(args.source[0])
    p = validate_affine(d)
    sig = inertia(bfs_distances(incidence_matrix(d)))
    fac = signature_from_factors(p.n, p.mu)
    printed = theorem1_signature(p.n, p.mu)
    _emit(_dump({"params": p.to_dict(),
                 "computed": list(sig.as_tuple()),
                 "from_factors": list(fac.as_tuple()),
                 "theorem1_printed": list(printed.as_tuple()),
                 "matches_factors": sig == fac,
                 "matches_printed": sig == printed}), args.out)
    return EXIT_OK if sig == fac == printed else EXIT_MISMATCH


def cmd_verify(args) -> int:
    reports = []
    for tokens in args.source:
        d = load_source(tokens)
        reports.append((" ".join(tokens), verify_design(d)))
    reports.sort(key=lambda item: (item[1].params.as_tuple(), item[0]))
    if len(reports) == 1:
        body = reports[0][1].to_dict()
    else:
        body = {"reports": [dict(source=src, **r.to_dict()) for src, r in reports]}
    _emit(_dump(body), args.out)
    return EXIT_OK if all(r.passed for _, r in reports) else EXIT_MISMATCH


def sweep(n_max: int, mu_max: int) -> dict:
    rows, discrepancies = [], []
    for n in range(2, n_max + 1):
        for mu in range(1, mu_max + 1):
            if not is_admissible(n, mu):
                rows.append({"n": n, "mu": mu, "admissible": False})
                continue
            p = DesignParams.from_n_mu(n, mu)
            fac = signature_from_factors(n, mu)
            printed = theorem1_signature(n, mu)
            agree = fac == printed
            rows.append({"n": n, "mu": mu, "admissible": True, "v_plus_b": p.v + p.b,
                         "from_factors": list(fac.as_tuple()),
                         "theorem1_printed": list(printed.as_tuple()), "agree": agree})
            if not agree:
                discrepancies.append([n, mu])
    checked = sum(1 for r in rows if r["admissible"])
    return {"n_max": n_max, "mu_max": mu_max, "rows": rows,
            "agreements": checked - len(discrepancies), "discrepancies": discrepancies}


def _sweep_table(result: dict) -> str:
    lines = [f"{'n':>3} {'mu':>3} {'v+b':>5}  {'from factors':<16} {'printed':<16} status"]
    for r in result["rows"]:
        if not r["admissible"]:
            lines.append(f"{r['n']:>3} {r['mu']:>3} {'-':>5}  {'-':<16} {'-':<16} inadmissible")
            continue
        lines.append(f"{r['n']:>3} {r['mu']:>3} {r['v_plus_b']:>5}  "
                     f"{str(tuple(r['from_factors'])):<16} "
                     f"{str(tuple(r['theorem1_printed'])):<16} "
                     f"{'agree' if r['agree'] else 'DISCREPANCY'}")
    lines.append(f"agreements: {result['agreements']}, "
                 f"discrepancies: {len(result['discrepancies'])}")
    return "\n".join(lines) + "\n"


def cmd_sweep(args) -> int:
    if args.n_max < 2 or args.mu_max < 1:
        raise UsageError("need --n-max >= 2 and --mu-max >= 1")
    result = sweep(args.n_max, args.mu_max)
    _emit(_sweep_table(result) if args.format == "text" else _dump(result), args.out)
    return EXIT_MISMATCH if result["discrepancies"] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="affsig",
        description="Exact distance spectra of affine resolvable design incidence graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    def with_source(name, func, help, multi=False):
        sp = sub.add_parser(name, help=help)
        sp.add_argument("--source", nargs="+", required=True, metavar="TOKEN",
                        action="append" if multi else "store", help=SOURCE_HELP)
        sp.add_argument("--out", help="write to this file instead of stdout")
        sp.set_defaults(func=func, multi=multi)
        return sp

    with_source("build", cmd_build, "write the canonical design JSON")
    with_source("validate", cmd_validate, "check the affine axioms and print parameters")
    with_source("distmat", cmd_distmat, "distance matrix as CSV")
    with_source("charpoly", cmd_charpoly, "characteristic polynomial vs the closed form")
    with_source("signature", cmd_signature, "exact inertia vs both predictions")
    with_source("verify", cmd_verify, "full verification report", multi=True)

    sw = sub.add_parser("sweep", help="factor-derived vs printed signatures over a grid")
    sw.add_argument("--n-max", type=int, required=True)
    sw.add_argument("--mu-max", type=int, required=True)
    sw.add_argument("--format", choices=("json", "text"), default="json")
    sw.add_argument("--out")
    sw.set_defaults(func=cmd_sweep, multi=False)
    return parser


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if hasattr(args, "source") and not args.multi:
        args.source = [args.source]
    try:
        return args.func(args)
    except (UsageError, DesignError, DistanceError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
