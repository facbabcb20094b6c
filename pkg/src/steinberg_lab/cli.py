"""Command line driver: verification suites, set printing, table emission."""

from __future__ import annotations

import argparse
import json
import sys as _sys

from . import cochain, sorth, suites, tables
from .errors import InvalidRank, NotApplicable
from .rootsys import apply_word, build

USAGE_ERROR = 2
CHECK_ERROR = 1


def _fail_usage(message):
    print(f"error: {message}", file=_sys.stderr)
    raise SystemExit(USAGE_ERROR)


def _is_prime_power(n):
    for p in range(2, n + 1):
        if p * p > n:
            break
        if n % p == 0:
            while n % p == 0:
                n //= p
            return n == 1
    return True  # n itself prime (or 1)


def cmd_sigma_a(args):
    try:
        system = build(args.family, args.rank)
    except InvalidRank as exc:
        _fail_usage(str(exc))
    out = {"type": f"{args.family}{args.rank}"}
    sa = sorth.sigma_a(system)
    out["members"] = [list(m) for m in sa.members]
    out["size"] = len(sa)
    try:
        table = sorth.so_set(system, tables.sigma_a_table(system))
    except NotApplicable:
        witness = sorth.satisfies_c1(system, sa)
        out["note"] = "every nonempty strongly orthogonal set satisfies (C1); no classified set exists"
        out["c1_witness"] = {
            "alpha": list(witness.alpha),
            "beta": list(witness.beta),
        }
        _emit(out, args.format)
        return 0
    res = sorth.is_conjugate_subset_of(system, sa, table)
    verified = res.status == "yes" and all(
        system.pos_rep(apply_word(system, res.word, m)) in {system.pos_rep(t) for t in table.members}
        for m in sa.members
    )
    out["matches_table"] = verified
    out["certificate_reflections"] = [list(r) for r in res.word]
    out["certificate_method"] = res.method
    _emit(out, args.format)
    return 0 if verified else CHECK_ERROR


def cmd_verify(args):
    if args.q % 2 == 0 or args.q < 3:
        _fail_usage("q must be an odd integer >= 3")
    if not _is_prime_power(args.q):
        print(f"warning: q = {args.q} is not a prime power", file=_sys.stderr)
    names = list(suites.SUITES) if args.suite == "all" else [args.suite]
    reports = []
    for name in sorted(names):
        try:
            reports.append(suites.run_suite(name, q=args.q, radius=args.radius))
        except Exception as exc:  # keep emitting the partial report
            crashed = suites.SuiteReport(name)
            crashed.add("suite-crashed", f"{type(exc).__name__}: {exc}", False, True, "derived")
            reports.append(crashed)
    payload = {"reports": [r.to_dict() for r in reports]}
    text = json.dumps(payload, indent=2, sort_keys=True)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    for rep in reports:
        for c in rep.checks:
            print(f"{rep.suite:10s} {c.status:4s} {c.id}: {c.value} (expected {c.expected})")
    ok = all(r.ok for r in reports)
    print("all checks passed" if ok else "FAILURES present")
    return 0 if ok else CHECK_ERROR


def _sign_rows():
    rows = []
    for fam, rank in suites.SIGN_CALCULUS_TYPES:
        system = build(fam, rank)
        solved = cochain.solved_character(system)
        reference = cochain.eic_character(system)
        rows.append(
            {
                "type": f"{fam}{rank}",
                "computed": solved.values_on_basis(),
                "reference": reference.values_on_basis(),
                "match": solved == reference,
            }
        )
    return rows


def _sract_rows():
    rows = []
    for fam, rank in suites.SIGN_CALCULUS_TYPES:
        system = build(fam, rank)
        members = tables.sign_basis(system)
        for k in range(rank):
            action = cochain.coroot_action(system, members, cochain._coroot_coweight(system, k))
            rows.append(
                {
                    "type": f"{fam}{rank}",
                    "coroot": k + 1,
                    "action": str(action),
                    "char_value": cochain.solved_character(system).value(action),
                    "match": cochain.solved_character(system).value(action) == 1,
                }
            )
    return rows


def _r1r2_rows():
    rows = []
    for fam, rank in [("A", 3), ("A", 5), ("A", 7), ("D", 5), ("D", 7), ("E", 6)]:
        rr = cochain.r1_r2(build(fam, rank))
        rows.append(
            {
                "type": f"{fam}{rank}",
                "r1": rr.r1,
                "r2": rr.r2,
                "match": rr.r1 == 2 * rr.r2,
            }
        )
    return rows


def cmd_tables(args):
    if args.eic:
        rows = _sign_rows()
    elif args.sract:
        rows = _sract_rows()
    elif args.r1r2:
        rows = _r1r2_rows()
    else:
        _fail_usage("choose one of --eic, --sract, --r1r2")
    _emit_rows(rows, args.format)
    return 0


def _emit(obj, fmt):
    if fmt == "json":
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        for key in sorted(obj):
            print(f"{key}: {obj[key]}")


def _emit_rows(rows, fmt):
    if fmt == "json":
        print(json.dumps(rows, indent=2, sort_keys=True))
        return
    if not rows:
        return
    keys = list(rows[0])
    if fmt == "csv":
        print(",".join(keys))
        for row in rows:
            print(",".join(str(row[k]) for k in keys))
        return
    # markdown
    print("| " + " | ".join(keys) + " |")
    print("|" + "|".join(["---"] * len(keys)) + "|")
    for row in rows:
        print("| " + " | ".join(str(row[k]) for k in keys) + " |")


def make_parser():
    parser = argparse.ArgumentParser(
        prog="steinberg-lab",
        description="Exact verification suites for apartment and cochain combinatorics",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_sigma = sub.add_parser("sigma-a", help="print the classified strongly orthogonal set")
    p_sigma.add_argument("family", choices=list("ABCDEFG"))
    p_sigma.add_argument("rank", type=int)
    p_sigma.add_argument("--format", choices=["json", "text"], default="text")
    p_sigma.set_defaults(func=cmd_sigma_a)

    p_verify = sub.add_parser("verify", help="run a verification suite")
    p_verify.add_argument(
        "suite",
        choices=sorted(suites.SUITES) + ["all"],
    )
    p_verify.add_argument("--q", type=int, default=3)
    p_verify.add_argument("--radius", type=int, default=None)
    p_verify.add_argument("--json", metavar="PATH", default=None)
    p_verify.set_defaults(func=cmd_verify)

    p_tables = sub.add_parser("tables", help="emit computed tables with a match column")
    group = p_tables.add_mutually_exclusive_group(required=True)
    group.add_argument("--eic", action="store_true")
    group.add_argument("--sract", action="store_true")
    group.add_argument("--r1r2", action="store_true")
    p_tables.add_argument("--format", choices=["json", "csv", "markdown"], default="json")
    p_tables.set_defaults(func=cmd_tables)
    return parser


def main(argv=None):
    parser = make_parser()
    args = parser.parse_args(argv)  # argparse exits with 2 on usage errors
    try:
        code = args.func(args)
    except InvalidRank as exc:
        _fail_usage(str(exc))
    raise SystemExit(code)


if __name__ == "__main__":
    main()
