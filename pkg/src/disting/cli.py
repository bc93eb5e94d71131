"""Command-line interface.

Every subcommand writes its result to stdout and diagnostics to stderr.
Exit codes: 0 on success, 2 on invalid input, 3 when a work budget or an
enumeration cap is exceeded.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .actions import NaturalAction, build_wreath_group
from .colorings import (
    DEFAULT_BUDGET,
    count_distinguishing_colorings,
    distinguishing_number,
)
from .errors import CapExceededError
from .formulas import (
    an_wreath_number,
    direct_product_distinguishing_number,
    fk,
    grid_feasible,
    sn_wreath_number,
    table_values,
    wreath_distinguishing_number,
)
from .grids import (
    DEFAULT_ORACLE_BUDGET,
    GridColoring,
    construct,
    feasible_oracle,
    verify,
)
from .groups import (
    DEFAULT_MAX_ELEMENTS,
    alternating_group,
    parse_generator_file,
    symmetric_group,
)

_ACTION_HELP = "sym:N, alt:N, or gens:FILE (generator file with a 'degree N' line)"


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--max-elements",
        type=int,
        default=DEFAULT_MAX_ELEMENTS,
        help="cap on enumerated group elements",
    )
    parser.add_argument(
        "--budget",
        type=int,
        default=None,
        help="cap on brute-force work (element-coloring or subset checks)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="disting",
        description="Distinguishing numbers of finite permutation group actions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("fk", help="grid feasibility threshold f_k(m)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    _add_common(p)

    p = sub.add_parser(
        "direct", help="distinguishing number of the m-by-n grid action"
    )
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    _add_common(p)

    p = sub.add_parser("table", help="table of grid distinguishing numbers")
    p.add_argument("--max", type=int, required=True, dest="max_mn")
    _add_common(p)

    p = sub.add_parser("grid", help="construct / verify / test grid colorings")
    gsub = p.add_subparsers(dest="grid_command", required=True)

    g = gsub.add_parser("construct", help="build a distinguishing k-coloring")
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument("--format", choices=("text", "json"), default="text")
    _add_common(g)

    g = gsub.add_parser("verify", help="check a serialized grid coloring")
    g.add_argument("--file", required=True)
    _add_common(g)

    g = gsub.add_parser("feasible", help="does a distinguishing k-coloring exist?")
    g.add_argument("--m", type=int, required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--k", type=int, required=True)
    g.add_argument(
        "--oracle",
        action="store_true",
        help="decide by subset enumeration instead of the window formula",
    )
    _add_common(g)

    p = sub.add_parser(
        "wreath", help="distinguishing number of a wreath product action"
    )
    p.add_argument("--inner", required=True, help=_ACTION_HELP)
    p.add_argument("--outer", required=True, help=_ACTION_HELP)
    p.add_argument(
        "--brute",
        action="store_true",
        help="materialize the wreath group and search instead of using the formula",
    )
    _add_common(p)

    p = sub.add_parser("count", help="number of distinguishing r-colorings")
    p.add_argument("--action", required=True, help=_ACTION_HELP)
    p.add_argument("--r", type=int, required=True)
    _add_common(p)

    p = sub.add_parser(
        "distnum", help="brute-force distinguishing number of an action"
    )
    p.add_argument("--action", required=True, help=_ACTION_HELP)
    _add_common(p)

    return parser


def _parse_action_spec(spec: str) -> tuple[str, str]:
    kind, sep, arg = spec.partition(":")
    if not sep or kind not in ("sym", "alt", "gens") or not arg:
        raise ValueError(
            f"action spec must look like sym:N, alt:N or gens:FILE, got {spec!r}"
        )
    return kind, arg


def _load_action(spec: str, max_elements: int) -> NaturalAction:
    kind, arg = _parse_action_spec(spec)
    if kind == "sym":
        return NaturalAction(symmetric_group(int(arg), max_elements))
    if kind == "alt":
        return NaturalAction(alternating_group(int(arg), max_elements))
    text = Path(arg).read_text()
    return NaturalAction(parse_generator_file(text, max_elements))


def _load_grid(path: str) -> GridColoring:
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        return GridColoring.from_json(text)
    return GridColoring.from_text(text)


def format_table(max_mn: int) -> str:
    values = table_values(max_mn)
    cell_width = max(len(str(v)) for row in values for v in row)
    cell_width = max(cell_width, len(str(max_mn)))
    label_width = max(len("m,n"), len(str(max_mn)))
    lines = [
        "m,n".rjust(label_width)
        + "".join(" " + str(j).rjust(cell_width) for j in range(1, max_mn + 1))
    ]
    for m, row in enumerate(values, start=1):
        lines.append(
            str(m).rjust(label_width)
            + "".join(" " + str(v).rjust(cell_width) for v in row)
        )
    return "\n".join(lines)


def _outer_distinguishing_number(spec: str, max_elements: int, budget: int) -> int:
    kind, arg = _parse_action_spec(spec)
    if kind == "sym":
        n = int(arg)
        if n < 1:
            raise ValueError("sym:N needs N >= 1")
        return n
    if kind == "alt":
        n = int(arg)
        if n < 1:
            raise ValueError("alt:N needs N >= 1")
        return n - 1 if n >= 3 else 1
    return distinguishing_number(_load_action(spec, max_elements), budget)


def _wreath_by_formula(args, budget: int) -> int:
    d = _outer_distinguishing_number(args.outer, args.max_elements, budget)
    kind, arg = _parse_action_spec(args.inner)
    if kind == "sym":
        return sn_wreath_number(int(arg), d)
    if kind == "alt":
        return an_wreath_number(int(arg), d)
    inner = _load_action(args.inner, args.max_elements)
    return wreath_distinguishing_number(
        lambda r: count_distinguishing_colorings(inner, r, budget),
        d,
        inner.order(),
    )


def _dispatch(args: argparse.Namespace) -> str:
    budget = args.budget if args.budget is not None else DEFAULT_BUDGET

    if args.command == "fk":
        return str(fk(args.k, args.m))

    if args.command == "direct":
        return str(direct_product_distinguishing_number(args.m, args.n))

    if args.command == "table":
        if args.max_mn < 1:
            raise ValueError("--max must be >= 1")
        return format_table(args.max_mn)

    if args.command == "grid":
        if args.grid_command == "construct":
            grid = construct(args.m, args.n, args.k)
            return grid.to_json() if args.format == "json" else grid.to_text()
        if args.grid_command == "verify":
            return "true" if verify(_load_grid(args.file)) else "false"
        if args.grid_command == "feasible":
            if args.oracle:
                oracle_budget = (
                    args.budget if args.budget is not None else DEFAULT_ORACLE_BUDGET
                )
                ok = feasible_oracle(args.m, args.n, args.k, oracle_budget)
            else:
                ok = grid_feasible(args.m, args.n, args.k)
            return "true" if ok else "false"

    if args.command == "wreath":
        if args.brute:
            inner = _load_action(args.inner, args.max_elements)
            outer = _load_action(args.outer, args.max_elements)
            wreath = build_wreath_group(inner, outer, args.max_elements)
            return str(distinguishing_number(wreath, budget))
        return str(_wreath_by_formula(args, budget))

    if args.command == "count":
        action = _load_action(args.action, args.max_elements)
        return str(count_distinguishing_colorings(action, args.r, budget))

    if args.command == "distnum":
        action = _load_action(args.action, args.max_elements)
        return str(distinguishing_number(action, budget))

    raise AssertionError(f"unhandled command {args.command!r}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        output = _dispatch(args)
    except CapExceededError as exc:
        print(f"disting: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"disting: {exc}", file=sys.stderr)
        return 2
    print(output)
    return 0


def run() -> None:
    sys.exit(main())
