"""Command-line frontend.

Subcommands: count, table, series, root, alpha, walks, eigen, uh, bijection,
verify.  Output formats are text (default), json, and csv; machine formats
are byte-deterministic (no timestamps), integer quantities are emitted as
decimal strings, and floats use their shortest round-trip representation.

Exit codes: 0 success, 1 verification failure or method disagreement,
2 usage error, 3 size guard exceeded.  Size guards only loosen when
--unsafe-limits is given.  Every flag has an environment-variable mirror
named PLANETREES_<FLAG> (e.g. PLANETREES_FORMAT); explicit flags win.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import asymptotics, bijection, series, spectral, trees, ulam_harris, verify
from .errors import LimitError, TreeParseError, WalkError

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_GUARD = 3

ENV_PREFIX = "PLANETREES_"


@dataclass
class RunConfig:
    """Resolved global options shared by all subcommands."""

    format: str = "text"
    tol: float = 1e-10
    max_n: int | None = None
    max_k: int | None = None
    unsafe_limits: bool = False
    order: int | None = None

    def enumeration_guards(self) -> dict[str, int]:
        """Effective guards for brute-force tree enumeration."""
        guards = {}
        if self.unsafe_limits:
            if self.max_n is not None:
                guards["max_nodes"] = self.max_n
            if self.max_k is not None:
                guards["max_labels"] = self.max_k
        else:
            if self.max_n is not None:
                guards["max_nodes"] = min(self.max_n, trees.ENUMERATION_NODE_LIMIT)
            if self.max_k is not None:
                guards["max_labels"] = min(self.max_k, trees.ENUMERATION_LABEL_LIMIT)
        return guards


def _env(name: str, default=None):
    return os.environ.get(ENV_PREFIX + name.upper().replace("-", "_"), default)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--format",
        choices=("text", "json", "csv"),
        default=_env("format", "text"),
        help="output format (default text; env PLANETREES_FORMAT)",
    )
    common.add_argument(
        "--tol",
        type=float,
        default=float(_env("tol", "1e-10")),
        help="tolerance for iterative numerics (env PLANETREES_TOL)",
    )
    common.add_argument(
        "--max-n",
        type=int,
        default=_int_env("max_n"),
        help="range/guard override for node counts (env PLANETREES_MAX_N)",
    )
    common.add_argument(
        "--max-k",
        type=int,
        default=_int_env("max_k"),
        help="range/guard override for label bounds (env PLANETREES_MAX_K)",
    )
    common.add_argument(
        "--unsafe-limits",
        action="store_true",
        default=_env("unsafe_limits", "") not in ("", "0", "false"),
        help="allow --max-n/--max-k to loosen the built-in size guards",
    )

    parser = argparse.ArgumentParser(
        prog="planetrees",
        description="Counts, bijections, growth constants, and eigenvalue "
        "bounds for plane trees with strictly decreasing labels.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", parents=[common], help="count decreasing trees")
    p.add_argument("n", type=int, help="number of nodes")
    p.add_argument("k", type=int, help="label bound")
    p.add_argument(
        "--method",
        choices=("series", "compositions", "enumerate"),
        default=_env("method", "series"),
    )
    p.add_argument(
        "--all-methods",
        action="store_true",
        help="run every method, print all values, exit 1 on disagreement",
    )

    p = sub.add_parser("table", parents=[common], help="grid of counts")

    p = sub.add_parser("series", parents=[common], help="counting series coefficients")
    p.add_argument("k", type=int, help="label bound")
    p.add_argument("order", type=int, help="truncation order (number of coefficients)")

    p = sub.add_parser("root", parents=[common], help="certified root brackets")
    p.add_argument("k", type=int, help="largest chain index to report")

    p = sub.add_parser("alpha", parents=[common], help="growth constants")
    p.add_argument("k", type=int, help="largest label bound to report")

    p = sub.add_parser("walks", parents=[common], help="closed root walk counts")
    p.add_argument("k", type=int, help="leaning-tree order")
    p.add_argument("--max-len", type=int, default=12, help="largest walk length (even)")
    p.add_argument("--list", action="store_true", help="list the walks (guarded)")

    p = sub.add_parser("eigen", parents=[common], help="largest-eigenvalue report")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--leaning", type=int, metavar="K", help="use the order-K leaning tree")
    group.add_argument("tree", nargs="?", help="tree in bracket notation")
    p.add_argument("--trace-n", type=int, default=10, help="half-length for walk growth")

    p = sub.add_parser("uh", parents=[common], help="Ulam-Harris number of a tree")
    p.add_argument("tree", help="tree in bracket notation (labels ignored)")

    p = sub.add_parser("bijection", parents=[common], help="walk/tree bijection")
    p.add_argument("direction", choices=("p", "w"), help="p: walk -> tree, w: tree -> walk")
    p.add_argument("input", help="walk tokens for p, bracket tree for w")
    p.add_argument(
        "--order",
        type=int,
        default=_int_env("order"),
        help="leaning-tree order (required for direction p)",
    )

    p = sub.add_parser("verify", parents=[common], help="run the verification suite")
    p.add_argument(
        "scope",
        nargs="?",
        default="all",
        choices=("all",) + verify.SCOPES,
        help="which checks to run",
    )
    return parser


def _int_env(name: str) -> int | None:
    raw = _env(name)
    return int(raw) if raw is not None else None


# ------------------------------------------------------------- rendering --


def _fmt_float(x: float) -> str:
    return repr(float(x))


def emit_table(config: RunConfig, columns: list[str], rows: list[list[str]]) -> None:
    if config.format == "json":
        payload = [dict(zip(columns, row)) for row in rows]
        print(json.dumps(payload, sort_keys=True, indent=2))
    elif config.format == "csv":
        print(",".join(columns))
        for row in rows:
            print(",".join(row))
    else:
        widths = [
            max(len(col), *(len(row[i]) for row in rows)) if rows else len(col)
            for i, col in enumerate(columns)
        ]
        print("  ".join(col.ljust(widths[i]) for i, col in enumerate(columns)).rstrip())
        for row in rows:
            print("  ".join(cell.ljust(widths[i]) for i, cell in enumerate(row)).rstrip())


def emit_object(config: RunConfig, pairs: list[tuple[str, str]]) -> None:
    if config.format == "json":
        print(json.dumps(dict(pairs), sort_keys=True, indent=2))
    elif config.format == "csv":
        print(",".join(key for key, _ in pairs))
        print(",".join(value for _, value in pairs))
    else:
        for key, value in pairs:
            print(f"{key}: {value}")


# -------------------------------------------------------------- commands --


def cmd_count(args, config: RunConfig) -> int:
    methods = {
        "series": lambda: series.count_trees(args.n, args.k),
        "compositions": lambda: series.count_trees_by_compositions(args.n, args.k),
        "enumerate": lambda: len(
            trees.enumerate_decreasing_trees(args.n, args.k, **config.enumeration_guards())
        ),
    }
    if args.all_methods:
        values: list[tuple[str, str]] = []
        numbers = set()
        for name, fn in methods.items():
            if name == "enumerate":
                try:
                    value = fn()
                except LimitError:
                    values.append((name, "skipped (guard)"))
                    continue
            else:
                value = fn()
            numbers.add(value)
            values.append((name, str(value)))
        emit_object(config, values)
        return EXIT_OK if len(numbers) == 1 else EXIT_VERIFY_FAILED
    value = methods[args.method]()
    if config.format in ("json", "csv"):
        emit_object(config, [("n", str(args.n)), ("k", str(args.k)), ("count", str(value))])
    else:
        print(value)
    return EXIT_OK


def cmd_table(args, config: RunConfig) -> int:
    max_n = config.max_n if config.max_n is not None else 8
    max_k = config.max_k if config.max_k is not None else 6
    if max_n < 1 or max_k < 1:
        raise ValueError("--max-n and --max-k must be positive")
    columns = ["n"] + [f"k={k}" for k in range(1, max_k + 1)]
    rows = []
    for n in range(1, max_n + 1):
        rows.append([str(n)] + [str(series.count_trees(n, k)) for k in range(1, max_k + 1)])
    emit_table(config, columns, rows)
    return EXIT_OK


def cmd_series(args, config: RunConfig) -> int:
    s = series.gk_series(args.k, args.order)
    if config.format == "csv":
        print(",".join(str(c) for c in s.coeffs))
    else:
        # the canonical exchange format: a JSON array of decimal strings
        print(series.series_to_json(s))
    return EXIT_OK


def cmd_root(args, config: RunConfig) -> int:
    if args.k < 1:
        raise ValueError("k must be positive")
    columns = ["k", "lower_bound", "lo", "hi", "upper_bound", "width"]
    rows = []
    for k in range(1, args.k + 1):
        bracket = asymptotics.zstar(k)
        rows.append(
            [
                str(k),
                _fmt_float(asymptotics.zstar_lower_bound(k)),
                _fmt_float(bracket.lo),
                _fmt_float(bracket.hi),
                _fmt_float(asymptotics.zstar_upper_bound(k)),
                _fmt_float(bracket.width),
            ]
        )
    emit_table(config, columns, rows)
    return EXIT_OK


def cmd_alpha(args, config: RunConfig) -> int:
    if args.k < 2:
        raise ValueError("growth constants are defined for k >= 2")
    columns = ["k", "alpha", "c", "alpha_lower", "alpha_upper"]
    rows = []
    for k in range(2, args.k + 1):
        lower, upper = asymptotics.alpha_bounds(k)
        rows.append(
            [
                str(k),
                _fmt_float(asymptotics.alpha(k)),
                _fmt_float(asymptotics.ck(k)),
                _fmt_float(lower),
                _fmt_float(upper),
            ]
        )
    emit_table(config, columns, rows)
    return EXIT_OK


def cmd_walks(args, config: RunConfig) -> int:
    if args.max_len < 0 or args.max_len % 2:
        raise ValueError("--max-len must be even and nonnegative")
    if args.list:
        walks = enumerate_guarded_walks(args, config)
        columns = ["length", "walk"]
        rows = [[str(len(w)), bijection.format_walk(w)] for w in walks]
        emit_table(config, columns, rows)
        return EXIT_OK
    tree = trees.leaning_tree(args.k)
    table = spectral.walk_count_table(tree, args.max_len)
    columns = ["length", "count"]
    rows = [[str(length), str(table[length])] for length in sorted(table)]
    emit_table(config, columns, rows)
    return EXIT_OK


def enumerate_guarded_walks(args, config: RunConfig) -> list[bijection.Walk]:
    guards = {}
    if config.unsafe_limits:
        guards = {"max_length": max(args.max_len, 12), "max_order": max(args.k, 6)}
    walks: list[bijection.Walk] = []
    for length in range(0, args.max_len + 1, 2):
        walks.extend(bijection.enumerate_closed_walks(args.k, length, **guards))
    return walks


def cmd_eigen(args, config: RunConfig) -> int:
    if args.leaning is not None:
        tree = trees.leaning_tree(args.leaning)
        source = f"leaning:{args.leaning}"
    else:
        tree = trees.parse_tree(args.tree)
        source = trees.format_tree(tree)
    size = trees.node_count(tree)
    delta = trees.max_degree(tree)
    lam = spectral.lambda1_power_iteration(tree, config.tol) if size > 1 else 0.0
    low, high = spectral.stevanovic_bounds(delta) if delta >= 1 else (0.0, 0.0)
    uh = ulam_harris.uh_min(tree).uh
    leaning_bound = spectral.leaning_eigen_bound(uh, config.tol)
    pairs = [
        ("tree", source),
        ("nodes", str(size)),
        ("max_degree", str(delta)),
        ("lambda1", _fmt_float(lam)),
        ("degree_lower", _fmt_float(low)),
        ("degree_upper", _fmt_float(high)),
        ("uh", str(uh)),
        ("uh_bound", _fmt_float(leaning_bound)),
    ]
    if size > 1:
        half = max(1, args.trace_n)
        estimate = spectral.walk_growth_estimate(tree, half)
        pairs.append(("walk_growth", _fmt_float(estimate)))
        pairs.append(("walk_growth_halflen", str(half)))
    emit_object(config, pairs)
    return EXIT_OK


def cmd_uh(args, config: RunConfig) -> int:
    tree = trees.parse_tree(args.tree)
    report = ulam_harris.uh_min(tree)
    ordered = ulam_harris.uh_ordered(tree)
    emit_object(
        config,
        [
            ("uh", str(report.uh)),
            ("uh_as_given", str(ordered.uh)),
            ("witness", trees.format_tree(report.witness)),
            ("labels", " ".join(str(x) for x in report.labels)),
        ],
    )
    return EXIT_OK


def cmd_bijection(args, config: RunConfig) -> int:
    if args.direction == "p":
        order = args.order if args.order is not None else config.order
        if order is None:
            raise ValueError("direction p requires --order")
        walk = bijection.parse_walk(args.input, order)
        tree = bijection.build_tree_from_walk(walk)
        if config.format == "text":
            print(trees.format_tree(tree))
        else:
            emit_object(config, [("tree", trees.format_tree(tree))])
    else:
        tree = trees.parse_tree(args.input)
        walk = bijection.build_walk_from_tree(tree)
        if config.format == "text":
            print(bijection.format_walk(walk))
        else:
            emit_object(
                config,
                [("order", str(walk.order)), ("walk", bijection.format_walk(walk))],
            )
    return EXIT_OK


def cmd_verify(args, config: RunConfig) -> int:
    results = verify.run_checks(args.scope)
    columns = ["status", "scope", "check", "detail"]
    rows = []
    for r in results:
        status = "pass" if r.passed else ("known-fail" if r.advisory else "FAIL")
        rows.append([status, r.scope, r.name, r.detail])
    if config.format == "text":
        for r in results:
            status = "pass" if r.passed else ("known-fail" if r.advisory else "FAIL")
            print(f"[{status:>10s}] {r.scope:9s} {r.name:30s} {r.elapsed:7.2f}s  {r.detail}")
        verdict = "OK" if verify.overall_passed(results) else "FAILED"
        print(f"verify {args.scope}: {verdict}")
    else:
        # machine formats stay byte-deterministic: no elapsed times
        emit_table(config, columns, rows)
    return EXIT_OK if verify.overall_passed(results) else EXIT_VERIFY_FAILED


_HANDLERS = {
    "count": cmd_count,
    "table": cmd_table,
    "series": cmd_series,
    "root": cmd_root,
    "alpha": cmd_alpha,
    "walks": cmd_walks,
    "eigen": cmd_eigen,
    "uh": cmd_uh,
    "bijection": cmd_bijection,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = RunConfig(
        format=args.format,
        tol=args.tol,
        max_n=args.max_n,
        max_k=args.max_k,
        unsafe_limits=args.unsafe_limits,
        order=getattr(args, "order", None),
    )
    if config.tol <= 0:
        parser.error("--tol must be positive")
    try:
        return _HANDLERS[args.command](args, config)
    except LimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except (TreeParseError, WalkError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
