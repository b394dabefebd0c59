"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .census import CensusReport, GroupDescriptor, LocalFieldParams, census_k2
from .numtheory import is_prime, psi
from .rep_theory import MetacyclicGroup, enumerate_irreducibles, rep_dimension


class UsageError(Exception):
    pass


# report serialisation


def report_to_dict(report: CensusReport) -> dict:
    rows = []
    for desc, count in report.rows:
        group = {"kind": desc.kind, "c": desc.c}
        if desc.split is not None:
            group["split"] = desc.split
        group["order"] = desc.order
        rows.append({"group": group, "count": str(count)})
    return {
        "p": report.p,
        "e_k": report.e_K,
        "f_k": report.f_K,
        "n": report.n,
        "f_k_parity": "even" if report.f_K_even else "odd",
        "rows": rows,
        "total_classes": str(report.total_classes),
        "total_extensions": str(report.total_extensions),
    }


def render_json(report: CensusReport) -> str:
    return json.dumps(report_to_dict(report), indent=2)


def parse_json(text: str) -> CensusReport:
    data = json.loads(text)
    p = data["p"]
    rows = []
    for row in data["rows"]:
        g = row["group"]
        desc = GroupDescriptor(g["kind"], g["c"], g.get("split"), p=p)
        if desc.order != g["order"]:
            raise ValueError(f"inconsistent order for {g}")
        rows.append((desc, int(row["count"])))
    return CensusReport(
        p=p,
        n=data["n"],
        f_K_even=data["f_k_parity"] == "even",
        rows=tuple(rows),
        total_classes=int(data["total_classes"]),
        total_extensions=int(data["total_extensions"]),
        e_K=data["e_k"],
        f_K=data["f_k"],
    )


def render_table(report: CensusReport) -> str:
    head = f"p={report.p}"
    if report.e_K is not None:
        head += f", e_K={report.e_K}, f_K={report.f_K}"
    head += f", n={report.n} (f_K {'even' if report.f_K_even else 'odd'})"
    labels = [desc.label() for desc, _ in report.rows]
    width = max([len(x) for x in labels] + [len("group")])
    lines = [head, f"{'group':<{width}}  count"]
    for label, (_, count) in zip(labels, report.rows):
        lines.append(f"{label:<{width}}  {count}")
    lines.append(f"total classes: {report.total_classes}, total extensions: {report.total_extensions}")
    return "\n".join(lines)


# commands


def _prime(p: int) -> int:
    if not is_prime(p):
        raise UsageError(f"{p} is not prime")
    return p


def _positive(name: str, value: int) -> int:
    if value < 1:
        raise UsageError(f"{name} must be a positive integer, got {value}")
    return value


def cmd_census(args) -> int:
    K = LocalFieldParams(_prime(args.p), _positive("--ek", args.ek), _positive("--fk", args.fk))
    report = census_k2(K, all_rows=args.all_rows)
    print(render_json(report) if args.format == "json" else render_table(report))
    return 0


def cmd_reps(args) -> int:
    p = _prime(args.p)
    try:
        H = MetacyclicGroup.from_field(p, _positive("--e", args.e), _positive("--f", args.f),
                                       _positive("--fk", args.fk))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    cols = ("t", "a", "b", "r", "s", "w", "dim_fp", "d", "mult/n")
    lines = ["  ".join(f"{c:>6}" for c in cols)]
    for c in enumerate_irreducibles(H):
        dim = rep_dimension(c, H.f_K)
        if args.dim is not None and dim != args.dim:
            continue
        values = (c.t, c.a, c.b, c.r, c.s, c.w, dim, c.def_field_degree, c.s)
        lines.append("  ".join(f"{v:>6}" for v in values))
    print("\n".join(lines))
    return 0


def cmd_psi(args) -> int:
    print(psi(_positive("a", args.a), _positive("b", args.b)))
    return 0


def cmd_verify(args) -> int:
    from .oracles import run_suite

    outcomes = run_suite(args.suite, _positive("--max-p", args.max_p))
    for out in outcomes:
        print(out.summary())
        for inputs, expected, got in out.failures[:10]:
            print(f"  {inputs}: expected {expected}, got {got}")
    return 0 if all(o.passed for o in outcomes) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="p2census",
        description="Degree-p^2 extensions of p-adic fields with no intermediate field.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("census", help="count isomorphism classes by Galois group")
    c.add_argument("-p", type=int, required=True)
    c.add_argument("--ek", type=int, default=1, help="absolute ramification index of K")
    c.add_argument("--fk", type=int, default=1, help="absolute inertia degree of K")
    c.add_argument("--format", choices=("table", "json"), default="table")
    c.add_argument("--all-rows", action="store_true", help="keep groups with zero count")
    c.set_defaults(func=cmd_census)

    r = sub.add_parser("reps", help="irreducible representations of a split tame group")
    r.add_argument("-p", type=int, required=True)
    r.add_argument("--e", type=int, required=True, help="order of the inertia generator")
    r.add_argument("--f", type=int, required=True, help="order of the Frobenius lift")
    r.add_argument("--fk", type=int, default=1)
    r.add_argument("--dim", type=int, default=None, help="only show this F_p-dimension")
    r.set_defaults(func=cmd_reps)

    s = sub.add_parser("psi", help="number of elements of order a in Z/a x Z/b")
    s.add_argument("a", type=int)
    s.add_argument("b", type=int)
    s.set_defaults(func=cmd_psi)

    v = sub.add_parser("verify", help="run brute-force oracle suites")
    v.add_argument("--suite", choices=("psi", "lambda", "groups", "census", "all"), default="all")
    v.add_argument("--max-p", type=int, default=7)
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"p2census: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
