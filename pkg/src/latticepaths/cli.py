"""Command line interface.

Exit codes: 0 success, 1 unexpected identity failure, 2 usage error,
3 oracle budget exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import closedform as cf
from . import identities as ids
from .core import CountMatrix, CountTriangle, DomainError
from .oracle import (
    HV,
    HVD,
    BudgetExceeded,
    Constraint,
    count_paths,
    list_paths,
    path_string,
)
from .tables import catalan_triangle, delannoy_table, rect_table, schroder_triangle

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3

FAMILIES = ("rect", "catalan", "delannoy", "schroder")
TRIANGULAR = {"catalan", "schroder"}
DEFAULT_ERRATA_BOUND = 20


class UsageError(Exception):
    pass


def build_table(family: str, size: int) -> CountMatrix | CountTriangle:
    if family == "rect":
        return rect_table(size, size)
    if family == "delannoy":
        return delannoy_table(size, size)
    if family == "catalan":
        return catalan_triangle(size)
    return schroder_triangle(size)


def table_to_json(family: str, table) -> str:
    kind = "triangle" if isinstance(table, CountTriangle) else "square"
    doc = {
        "family": family,
        "size": len(table.entries),
        "kind": kind,
        "rows": [[str(x) for x in row] for row in table],
    }
    return json.dumps(doc, indent=2) + "\n"


def table_to_csv(table) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    if isinstance(table, CountTriangle):
        w.writerow(["p", "q", "value"])
        for p, row in enumerate(table):
            for q, v in enumerate(row):
                w.writerow([p, q, v])
    else:
        w.writerows(table)
    return buf.getvalue()


def table_to_md(table) -> str:
    n_cols = max(len(row) for row in table)
    lines = [
        "| p\\q | " + " | ".join(str(j) for j in range(n_cols)) + " |",
        "|---" * (n_cols + 1) + "|",
    ]
    for i, row in enumerate(table):
        cells = [str(v) for v in row] + [""] * (n_cols - len(row))
        lines.append(f"| {i} | " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


def matrix_to_text(m: CountMatrix) -> str:
    width = max(len(str(x)) for row in m for x in row)
    return "\n".join(" ".join(str(x).rjust(width) for x in row) for row in m)


def _positive_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {v}")
    return v


def _nonneg_int(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be >= 0, got {v}")
    return v


def cmd_table(args) -> tuple[str, int]:
    table = build_table(args.family, args.size)
    render = {"csv": table_to_csv, "md": table_to_md}.get(args.format)
    text = render(table) if render else table_to_json(args.family, table)
    return text, EXIT_OK


def compute_value(family: str, p: int, q: int, method: str) -> int:
    if family in TRIANGULAR and q > p:
        raise UsageError(f"{family} needs q <= p, got p={p}, q={q}")
    if method == "recurrence":
        if family in TRIANGULAR:
            return build_table(family, p + 1)[p, q]
        return build_table(family, max(p, q) + 1)[p, q]
    if method == "closed":
        return {
            "rect": cf.b_closed,
            "catalan": cf.c_closed,
            "delannoy": lambda a, b: cf.g_closed(a, b, "twopow_r666"),
            "schroder": lambda a, b: cf.r_closed(a, b, "weighted_h4"),
        }[family](p, q)
    steps = HVD if family in ("delannoy", "schroder") else HV
    constraint = Constraint.SUBDIAGONAL if family in TRIANGULAR else Constraint.UNRESTRICTED
    return count_paths((p, q), steps, constraint).count


def cmd_value(args) -> tuple[str, int]:
    return f"{compute_value(args.family, args.p, args.q, args.method)}\n", EXIT_OK


def _report_text(r: ids.VerificationReport) -> str:
    ident = ids.REGISTRY.get(r.identity_id)
    tag = " (errata-expected)" if ident is not None and ident.errata_expected else ""
    lines = [f"{r.identity_id}: {r.status}{tag}, {r.cases_checked} cases"]
    for c in r.counterexamples:
        params = ", ".join(str(x) for x in c.params)
        lines.append(
            f"  ({params}): lhs={ids.format_value(c.lhs)} rhs={ids.format_value(c.rhs)}"
        )
    if r.failures > len(r.counterexamples):
        lines.append(f"  ... {r.failures - len(r.counterexamples)} more")
    return "\n".join(lines)


def _report_json(r: ids.VerificationReport) -> dict:
    doc = r.as_dict()
    doc["errata_expected"] = r.identity_id in ids.ERRATA_EXPECTED
    return doc


def cmd_verify(args) -> tuple[str, int]:
    keys = list(ids.REGISTRY) if args.identity == "all" else [args.identity]
    for k in keys:
        if k not in ids.REGISTRY:
            raise UsageError(f"unknown identity {k!r}")
    reports = [ids.verify(k, args.bound) for k in keys]
    ok = ids.all_expected(reports)
    if args.format == "json":
        doc = {
            "bound": args.bound,
            "ok": ok,
            "reports": [_report_json(r) for r in reports],
        }
        text = json.dumps(doc, indent=2) + "\n"
    else:
        text = "\n".join(_report_text(r) for r in reports) + "\n"
    return text, EXIT_OK if ok else EXIT_FAILED


def cmd_decompose(args) -> tuple[str, int]:
    d = ids.decompose(args.matrix, args.n)
    report = ids.verify_decomposition(args.matrix, args.n)
    names = ["P", "D", "P^T"] if args.matrix == "K" else ["P", "P^T"]
    if args.format == "json":
        doc = {
            "matrix": args.matrix,
            "n": args.n,
            "factors": {
                name: [[str(x) for x in row] for row in f]
                for name, f in zip(names, d.factors)
            },
            "product": [[str(x) for x in row] for row in d.product],
            "table": [[str(x) for x in row] for row in d.table],
            "status": report.status,
        }
        text = json.dumps(doc, indent=2) + "\n"
    else:
        parts = [f"{name}_{args.n} =\n{matrix_to_text(f)}" for name, f in zip(names, d.factors)]
        parts.append(f"{' * '.join(names)} =\n{matrix_to_text(d.product)}")
        parts.append(f"{args.matrix}_{args.n} (table) =\n{matrix_to_text(d.table)}")
        parts.append(report.status)
        text = "\n\n".join(parts) + "\n"
    return text, EXIT_OK if report.verified else EXIT_FAILED


def cmd_enumerate(args) -> tuple[str, int]:
    steps = HVD if args.steps == "hvd" else HV
    constraint = Constraint(args.constraint)
    total = count_paths((args.p, args.q), steps, constraint).count
    listing = list_paths((args.p, args.q), steps, constraint, args.limit)
    lines = [path_string(path) or "(empty)" for path in listing.paths]
    if listing.truncated:
        lines.append(f"... showing {len(listing.paths)} of {total}")
    lines.append(f"count {total}")
    return "\n".join(lines) + "\n", EXIT_OK


def errata_reports(bound: int = DEFAULT_ERRATA_BOUND) -> list[ids.VerificationReport]:
    return [r for r in ids.verify_all(bound) if not r.verified]


def cmd_errata(args) -> tuple[str, int]:
    refuted = errata_reports(args.bound)
    if args.format == "json":
        entries = []
        for r in refuted:
            ident = ids.REGISTRY[r.identity_id]
            doc = _report_json(r)
            doc["anchor"] = ident.anchor
            doc["description"] = ident.description
            doc["domain"] = ident.domain_text
            doc["minimal_counterexample"] = (
                r.counterexamples[0].as_dict() if r.counterexamples else None
            )
            entries.append(doc)
        text = json.dumps({"bound": args.bound, "errata": entries}, indent=2) + "\n"
    else:
        out = [f"# Errata (identities refuted with bound {args.bound})", ""]
        if not refuted:
            out.append("No identity was refuted.")
        for r in refuted:
            ident = ids.REGISTRY[r.identity_id]
            status = "expected" if ident.errata_expected else "UNEXPECTED"
            out += [
                f"## {r.identity_id} ({status})",
                "",
                f"- Statement: `{ident.anchor}`",
                f"- Description: {ident.description}",
                f"- Domain: {ident.domain_text}",
                f"- Cases checked: {r.cases_checked}, failing: {r.failures}",
            ]
            if ident.note:
                out.append(f"- Note: {ident.note}")
            out += ["", "| params | lhs | rhs |", "|---|---|---|"]
            for c in r.counterexamples:
                params = ", ".join(str(x) for x in c.params)
                out.append(
                    f"| {params} | {ids.format_value(c.lhs)} | {ids.format_value(c.rhs)} |"
                )
            out.append("")
        text = "\n".join(out).rstrip("\n") + "\n"
    ok = ids.all_expected(refuted)
    return text, EXIT_OK if ok else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="latticepaths",
        description="Exact lattice path counts, matrix decompositions and identity checks.",
    )
    parser.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="print one of the four count tables")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("--size", type=_positive_int, required=True)
    p.add_argument("--format", choices=("csv", "json", "md"), default="csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("value", help="print a single count")
    p.add_argument("--family", choices=FAMILIES, required=True)
    p.add_argument("-p", type=_nonneg_int, required=True)
    p.add_argument("-q", type=_nonneg_int, required=True)
    p.add_argument("--method", choices=("recurrence", "closed", "oracle"), default="recurrence")
    p.set_defaults(func=cmd_value)

    p = sub.add_parser("verify", help="check identities with exact arithmetic")
    p.add_argument("--identity", default="all", help="registry key or 'all'")
    p.add_argument("--bound", type=_positive_int, default=20)
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("decompose", help="show Q = P P^T or K = P D P^T")
    p.add_argument("--matrix", choices=("Q", "K"), required=True)
    p.add_argument("--n", type=_positive_int, required=True)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("enumerate", help="list explicit paths (R, D, X = diagonal)")
    p.add_argument("-p", type=_nonneg_int, required=True)
    p.add_argument("-q", type=_nonneg_int, required=True)
    p.add_argument("--steps", choices=("hv", "hvd"), default="hv")
    p.add_argument("--constraint", choices=("none", "subdiagonal"), default="none")
    p.add_argument("--limit", type=_positive_int, default=20)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("errata", help="report identities that fail as printed")
    p.add_argument("--format", choices=("json", "md"), default="md")
    p.add_argument("--bound", type=_positive_int, default=DEFAULT_ERRATA_BOUND)
    p.set_defaults(func=cmd_errata)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        text, code = args.func(args)
    except (UsageError, DomainError) as exc:
        print(f"latticepaths: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"latticepaths: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
