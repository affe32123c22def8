"""Command line front end.

Subcommands: formula, search, verify, construct, check, solutions.

Exit codes: 0 success, 1 a checked property is false, 2 domain error,
3 budget exhausted or formula/search mismatch, 64 usage error, 65 parse
error.  The environment variable RSCHUR_MAX_NODES overrides the default
search node budget when --max-nodes is not given.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass

from .colorings import (
    coloring_to_json,
    construct_rainbow_lower,
    construct_weak_lower,
    has_t_colored_solution,
    max_solution_colors,
    parse_coloring,
    surplus_count,
)
from .equations import enumerate_solutions
from .errors import (
    BudgetExceeded,
    ColoringParseError,
    DomainError,
    OutsideTheoremDomain,
)
from .formulas import (
    ProblemParams,
    compute_by_formula,
    formula_description,
    formula_value,
)
from .search import DEFAULT_MAX_NODES, SearchBudget, search_rs

EXIT_OK = 0
EXIT_PROPERTY_FALSE = 1
EXIT_DOMAIN = 2
EXIT_BUDGET_OR_MISMATCH = 3
EXIT_USAGE = 64
EXIT_PARSE = 65

ENV_MAX_NODES = "RSCHUR_MAX_NODES"


@dataclass
class VerificationRow:
    """One (m, t, n) comparison between the closed form and the oracle."""

    m: int
    t: int
    n: int
    formula_value: int | None
    search_value: int | None
    agree: bool | None  # None when the two are not comparable
    witness_path: str | None
    nodes: int
    millis: int


class _Parser(argparse.ArgumentParser):
    """argparse with usage failures mapped to exit code 64."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _rs_name(m: int, t: int) -> str:
    return f"RS_{m}" if t == m else f"RS_{{{t},{m}}}"


def _resolve_budget(args) -> SearchBudget:
    max_nodes = getattr(args, "max_nodes", None)
    if max_nodes is None:
        raw = os.environ.get(ENV_MAX_NODES)
        if raw is not None:
            try:
                max_nodes = int(raw)
            except ValueError:
                raise DomainError(
                    f"{ENV_MAX_NODES} must be an integer, got {raw!r}"
                ) from None
        else:
            max_nodes = DEFAULT_MAX_NODES
    return SearchBudget(
        max_nodes=max_nodes,
        time_limit=getattr(args, "time_limit", None),
        threads=getattr(args, "threads", 1),
    )


def _note_exploratory(m: int, t: int, n: int) -> None:
    if t == 2 and n < 2 * m - 4:
        print(
            f"note: no closed form covers t = 2 with n < 2m - 4 = {2 * m - 4}; "
            "this search result is exploratory",
            file=sys.stderr,
        )


def cmd_formula(args) -> int:
    t = args.t if args.t is not None else args.m
    ProblemParams(args.m, t, args.n)
    number = compute_by_formula(args.m, args.n, t)
    print(f"{_rs_name(args.m, t)}({args.n}) = {number.value}")
    print(f"method: {number.method.value}")
    print(f"formula: {formula_description(args.m, t)}")
    return EXIT_OK


def cmd_search(args) -> int:
    t = args.t if args.t is not None else args.m
    ProblemParams(args.m, t, args.n)
    budget = _resolve_budget(args)
    result = search_rs(args.m, t, args.n, budget)
    name = _rs_name(args.m, t)
    if result.value is None:
        print(
            f"{name}({args.n}) is undefined: no solution of E_{args.m} in "
            f"[1, {args.n}] can show {t} distinct colors"
        )
        return EXIT_OK
    print(f"{name}({args.n}) = {result.value}")
    print(f"method: {result.method.value}")
    print(f"nodes explored: {result.nodes}")
    print(f"elapsed: {result.elapsed * 1000.0:.0f} ms")
    _note_exploratory(args.m, t, args.n)
    witness = result.witness
    if witness is not None:
        print(f"witness with {witness.r} colors: {list(witness.colors)}")
        if args.out:
            with open(args.out, "w", encoding="utf-8") as handle:
                handle.write(coloring_to_json(witness) + "\n")
            print(f"witness written to {args.out}")
    return EXIT_OK


_TSV_COLUMNS = ("m", "t", "n", "formula", "search", "agree", "nodes", "millis")


def _row_cells(row: VerificationRow) -> list[str]:
    def show(value) -> str:
        if value is None:
            return ""
        if isinstance(value, bool):
            return "true" if value else "false"
        return str(value)

    return [
        show(v)
        for v in (
            row.m,
            row.t,
            row.n,
            row.formula_value,
            row.search_value,
            row.agree,
            row.nodes,
            row.millis,
        )
    ]


def cmd_verify(args) -> int:
    t = args.t if args.t is not None else args.m
    ProblemParams(args.m, t, max(args.n_from, 1))
    if args.n_from < 1 or args.n_from > args.n_to:
        print(
            f"rschur verify: error: need 1 <= --n-from <= --n-to, "
            f"got {args.n_from}..{args.n_to}",
            file=sys.stderr,
        )
        return EXIT_USAGE
    budget = _resolve_budget(args)
    rows: list[VerificationRow] = []
    any_skipped = False
    exploratory = False
    for n in range(args.n_from, args.n_to + 1):
        try:
            fvalue = formula_value(args.m, n, t)
        except DomainError:
            fvalue = None
        started = time.monotonic()
        nodes = 0
        svalue = None
        try:
            result = search_rs(args.m, t, n, budget)
            svalue = result.value
            nodes = result.nodes or 0
        except BudgetExceeded as exc:
            any_skipped = True
            nodes = exc.nodes
        millis = int((time.monotonic() - started) * 1000)
        agree = (fvalue == svalue) if fvalue is not None and svalue is not None else None
        if fvalue is None and svalue is not None:
            exploratory = True
        rows.append(
            VerificationRow(args.m, t, n, fvalue, svalue, agree, None, nodes, millis)
        )
    if args.format == "tsv":
        print("\t".join(_TSV_COLUMNS))
        for row in rows:
            print("\t".join(_row_cells(row)))
    else:
        for row in rows:
            doc = {
                "m": row.m,
                "t": row.t,
                "n": row.n,
                "formula": row.formula_value,
                "search": row.search_value,
                "agree": row.agree,
                "witness_path": row.witness_path,
                "nodes": row.nodes,
                "millis": row.millis,
                "exploratory": row.formula_value is None and row.search_value is not None,
            }
            print(json.dumps(doc, sort_keys=True))
    if exploratory:
        print(
            "note: rows without a formula value are oracle-only (no closed form "
            "applies at that n)",
            file=sys.stderr,
        )
    if any_skipped or any(row.agree is False for row in rows):
        return EXIT_BUDGET_OR_MISMATCH
    return EXIT_OK


def cmd_construct(args) -> int:
    t = args.t if args.t is not None else args.m
    ProblemParams(args.m, t, args.n)
    if t == args.m:
        coloring = construct_rainbow_lower(args.m, args.n)
    else:
        coloring = construct_weak_lower(t, args.m, args.n)
    target = formula_value(args.m, args.n, t)
    found, witness = has_t_colored_solution(coloring, args.m, t)
    if found:
        print(
            f"self-check failed: constructed coloring contains {witness} "
            f"with >= {t} colors",
            file=sys.stderr,
        )
        return EXIT_PROPERTY_FALSE
    head = sum(1 for c in coloring.colors if c == 1)
    document = coloring_to_json(coloring)
    summary = [
        f"n: {coloring.n}",
        f"classes: block [1, {head}]"
        + (f" plus singletons {head + 1}..{coloring.n}" if head < coloring.n else ""),
        f"colors used: {coloring.r} (one below {_rs_name(args.m, t)}({args.n}) = {target})",
        f"self-check: no solution shows >= {t} distinct colors",
    ]
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(document + "\n")
        summary.append(f"coloring written to {args.out}")
        print("\n".join(summary))
    else:
        print("\n".join(summary), file=sys.stderr)
        print(document)
    return EXIT_OK


def cmd_check(args) -> int:
    t = args.t if args.t is not None else args.m
    ProblemParams(args.m, t, 1)
    try:
        with open(args.coloring, "r", encoding="utf-8") as handle:
            text = handle.read()
    except OSError as exc:
        raise ColoringParseError(f"cannot read {args.coloring}: {exc}") from exc
    coloring = parse_coloring(text)
    maximum, _ = max_solution_colors(coloring, args.m)
    found, witness = has_t_colored_solution(coloring, args.m, t)
    print(f"n: {coloring.n}")
    print(f"colors used: {coloring.r}")
    print(f"surplus integers: {surplus_count(coloring)}")
    print(f"max colors over solutions: {maximum}")
    if found:
        print(f"witness with >= {t} colors: {witness}")
        return EXIT_OK
    print(f"no solution shows >= {t} distinct colors")
    return EXIT_PROPERTY_FALSE


def cmd_solutions(args) -> int:
    count = 0
    for sol in enumerate_solutions(args.m, args.n, args.distinct):
        print(sol)
        count += 1
    print(f"count: {count}")
    return EXIT_OK


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="rschur",
        description=(
            "Rainbow Schur numbers: closed forms, extremal colorings, and "
            "exhaustive verification over exact colorings of [1, n]."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    budget_flags = argparse.ArgumentParser(add_help=False)
    budget_flags.add_argument(
        "--max-nodes",
        type=int,
        default=None,
        help=f"search node budget (default {DEFAULT_MAX_NODES}, or ${ENV_MAX_NODES})",
    )
    budget_flags.add_argument(
        "--time-limit", type=float, default=None, help="wall clock limit in seconds"
    )
    budget_flags.add_argument(
        "--threads", type=int, default=1, help="worker processes for subtree search"
    )

    instance_flags = argparse.ArgumentParser(add_help=False)
    instance_flags.add_argument("--m", type=int, required=True, help="equation size, m >= 3")
    instance_flags.add_argument(
        "--t", type=int, default=None, help="distinct-color target (default m, the rainbow case)"
    )

    p = sub.add_parser(
        "formula",
        parents=[instance_flags],
        help="evaluate the closed form",
    )
    p.add_argument("--n", type=int, required=True, help="interval endpoint")
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser(
        "search",
        parents=[instance_flags, budget_flags],
        help="compute the value by exhaustive search",
    )
    p.add_argument("--n", type=int, required=True, help="interval endpoint")
    p.add_argument("--out", default=None, help="write the witness coloring as JSON")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser(
        "verify",
        parents=[instance_flags, budget_flags],
        help="compare formula and search over a range of n",
    )
    p.add_argument("--n-from", type=int, required=True)
    p.add_argument("--n-to", type=int, required=True)
    p.add_argument("--format", choices=("tsv", "jsonl"), default="tsv")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser(
        "construct",
        parents=[instance_flags],
        help="emit the extremal coloring with one color fewer than the value",
    )
    p.add_argument("--n", type=int, required=True, help="interval endpoint")
    p.add_argument("--out", default=None, help="write the coloring as JSON")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser(
        "check",
        parents=[instance_flags],
        help="inspect a coloring file for t-colored solutions",
    )
    p.add_argument("coloring", help="path to a coloring (JSON or one text row)")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("solutions", help="list the solutions of E_m in [1, n]")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--distinct", action="store_true", help="only strictly increasing summands")
    p.set_defaults(func=cmd_solutions)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except OutsideTheoremDomain as exc:
        print(f"rschur: outside the proven domain: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ColoringParseError as exc:
        print(f"rschur: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DomainError as exc:
        print(f"rschur: domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except BudgetExceeded as exc:
        print(
            f"rschur: {exc} (nodes explored: {exc.nodes}, "
            f"frontier: {list(exc.frontier)})",
            file=sys.stderr,
        )
        return EXIT_BUDGET_OR_MISMATCH


if __name__ == "__main__":
    sys.exit(main())
