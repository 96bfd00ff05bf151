"""Command-line interface.

Subcommands: decompose (closed formulas), oracle (brute force),
compare (both, with a diff), table (classification table for the
depth-two shapes), lr (a single Littlewood-Richardson coefficient).
Output is deterministic: identical invocations print identical bytes.
Timings, when requested, go to stderr.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .errors import (
    InvalidShapeError,
    PartitionParseError,
    ResourceBoundError,
    UnsupportedShapeError,
)
from .expansions import SchurExpansion, total_dimension
from .formulas import (
    TABLE_NU_KINDS,
    omega_dual,
    phi_hook,
    phi_one_column,
    phi_one_row,
    phi_two_column,
    phi_two_row,
    table_multiplicity,
    table_row_class,
)
from .lr import lr_coefficient
from .oracle import oracle_plethysm_e2, oracle_plethysm_s2
from .partitions import (
    Partition,
    format_partition,
    generate_partitions,
    parse_partition,
)

_METHODS = ("auto", "two-row", "two-column", "hook-first", "hook-second", "base")


@dataclass(frozen=True)
class DecompositionReport:
    """Everything one comparison run produced."""

    nu: Partition
    method: str
    formula_result: SchurExpansion
    oracle_result: SchurExpansion | None = None
    timings: Mapping[str, float] = field(default_factory=dict)

    @property
    def diff(self) -> dict[Partition, tuple[int, int]]:
        """lam -> (formula, oracle) for every label where they differ."""
        if self.oracle_result is None:
            return {}
        labels = set(self.formula_result.support())
        labels.update(self.oracle_result.support())
        out = {}
        for lam in sorted(labels, reverse=True):
            a = self.formula_result[lam]
            b = self.oracle_result[lam]
            if a != b:
                out[lam] = (a, b)
        return out

    @property
    def agree(self) -> bool:
        return not self.diff


def _select_method(nu: Partition) -> str:
    if not nu:
        return "base"
    if len(nu) <= 2:
        return "two-row"
    if nu[0] <= 2:
        return "two-column"
    if nu[1] <= 1:
        return "hook-first"
    raise UnsupportedShapeError(
        f"{format_partition(nu)} has more than two rows, more than two "
        "columns, and is not a hook"
    )


def _apply_method(nu: Partition, method: str) -> tuple[SchurExpansion, str]:
    if method == "auto":
        method = _select_method(nu)
    n = sum(nu)
    if method == "base":
        if len(nu) <= 1:
            return phi_one_row(n), "one-row"
        if nu[0] == 1:
            return phi_one_column(n), "one-column"
        raise InvalidShapeError(
            f"base form needs a single row or column, got {format_partition(nu)}"
        )
    if method == "two-row":
        if len(nu) > 2:
            raise UnsupportedShapeError(
                f"{format_partition(nu)} has more than two rows"
            )
        return phi_two_row(n, nu[1] if len(nu) == 2 else 0), "two-row"
    if method == "two-column":
        if nu and nu[0] > 2:
            raise UnsupportedShapeError(
                f"{format_partition(nu)} has more than two columns"
            )
        return phi_two_column(n, sum(1 for p in nu if p == 2)), "two-column"
    # hook-first / hook-second
    if len(nu) >= 2 and nu[1] > 1:
        raise UnsupportedShapeError(f"{format_partition(nu)} is not a hook")
    variant = "first" if method == "hook-first" else "second"
    return phi_hook(n, max(len(nu) - 1, 0), variant), method


def _oracle_cap() -> int | None:
    raw = os.environ.get("FOULKES_MAX_N")
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise PartitionParseError(
            f"FOULKES_MAX_N must be an integer, got {raw!r}"
        ) from None


def _term_lines(exp: SchurExpansion) -> list[str]:
    return [f"  {format_partition(lam)}  {mult}" for lam, mult in exp.items()]


def _terms_payload(exp: SchurExpansion) -> list[dict]:
    return [{"lambda": list(lam), "mult": mult} for lam, mult in exp.items()]


def _render_expansion(
    nu: Partition, inner: str, method: str, exp: SchurExpansion, fmt: str
) -> str:
    if fmt == "json":
        payload = {
            "nu": list(nu),
            "inner": inner,
            "terms": _terms_payload(exp),
            "method": method,
        }
        return json.dumps(payload) + "\n"
    if fmt == "csv":
        lines = ["lambda;mult;table1_class"]
        lines.extend(f"{format_partition(lam)};{mult};" for lam, mult in exp.items())
        return "\n".join(lines) + "\n"
    lines = [
        f"nu: {format_partition(nu)}",
        f"inner: {inner}",
        f"method: {method}",
        "terms:",
    ]
    lines.extend(_term_lines(exp))
    lines.append(f"constituents: {len(exp)}")
    lines.append(f"multiplicity: {sum(m for _, m in exp.items())}")
    lines.append(f"dimension: {total_dimension(exp)}")
    return "\n".join(lines) + "\n"


def _render_compare(report: DecompositionReport, inner: str, fmt: str) -> str:
    diff = report.diff
    if fmt == "json":
        payload = {
            "nu": list(report.nu),
            "inner": inner,
            "method": report.method,
            "agree": report.agree,
            "formula_terms": _terms_payload(report.formula_result),
            "oracle_terms": _terms_payload(report.oracle_result),
            "diff": [
                {"lambda": list(lam), "formula": a, "oracle": b}
                for lam, (a, b) in diff.items()
            ],
        }
        return json.dumps(payload) + "\n"
    lines = [
        f"nu: {format_partition(report.nu)}",
        f"inner: {inner}",
        f"method: {report.method}",
        f"status: {'agree' if report.agree else 'disagree'}",
    ]
    if diff:
        lines.append("diff:")
        lines.extend(
            f"  {format_partition(lam)}  formula={a}  oracle={b}"
            for lam, (a, b) in diff.items()
        )
    lines.append(f"constituents: {len(report.formula_result)}")
    return "\n".join(lines) + "\n"


def _print_timings(timings: Mapping[str, float]) -> None:
    rendered = " ".join(f"{k}={v:.6f}s" for k, v in timings.items())
    print(f"timings: {rendered}", file=sys.stderr)


def _cmd_decompose(args: argparse.Namespace) -> int:
    nu = parse_partition(args.nu)
    t0 = time.perf_counter()
    result, method = _apply_method(nu, args.method)
    elapsed = time.perf_counter() - t0
    inner = "s2"
    if args.dual:
        result = omega_dual(result)
        inner = "e2"
    sys.stdout.write(_render_expansion(nu, inner, method, result, args.format))
    if args.timings:
        _print_timings({"formula": elapsed})
    return 0


def _cmd_oracle(args: argparse.Namespace) -> int:
    nu = parse_partition(args.nu)
    fn = oracle_plethysm_s2 if args.inner == "s2" else oracle_plethysm_e2
    t0 = time.perf_counter()
    result = fn(nu, max_weight=_oracle_cap())
    elapsed = time.perf_counter() - t0
    sys.stdout.write(_render_expansion(nu, args.inner, "oracle", result, args.format))
    if args.timings:
        _print_timings({"oracle": elapsed})
    return 0


def _cmd_compare(args: argparse.Namespace) -> int:
    nu = parse_partition(args.nu)
    t0 = time.perf_counter()
    formula, method = _apply_method(nu, args.method)
    t1 = time.perf_counter()
    inner = "s2"
    if args.dual:
        formula = omega_dual(formula)
        inner = "e2"
        reference = oracle_plethysm_e2(nu, max_weight=_oracle_cap())
    else:
        reference = oracle_plethysm_s2(nu, max_weight=_oracle_cap())
    t2 = time.perf_counter()
    report = DecompositionReport(
        nu=nu,
        method=method,
        formula_result=formula,
        oracle_result=reference,
        timings={"formula": t1 - t0, "oracle": t2 - t1},
    )
    sys.stdout.write(_render_compare(report, inner, args.format))
    if args.timings:
        _print_timings(report.timings)
    return 0 if report.agree else 1


def _table_reference(n: int, kind: str) -> SchurExpansion:
    if kind == "n-2,1,1":
        return phi_hook(n, 2, "first")
    return phi_two_row(n, 2)


def _cmd_table(args: argparse.Namespace) -> int:
    n = args.n
    kind = args.kind
    if kind == "n-2,1,1":
        if n < 3:
            raise InvalidShapeError("kind 'n-2,1,1' needs n >= 3")
        nu = (n - 2, 1, 1) if n > 3 else (1, 1, 1)
    else:
        if n < 4:
            raise InvalidShapeError("kind 'n-2,2' needs n >= 4")
        nu = (n - 2, 2)
    rows = []
    for lam in generate_partitions(2 * n):
        mult = table_multiplicity(lam, kind, n)
        if mult:
            rows.append((lam, mult, table_row_class(lam)))
    mismatches = []
    if args.verify:
        reference = _table_reference(n, kind)
        for lam in generate_partitions(2 * n):
            expected = reference[lam]
            got = table_multiplicity(lam, kind, n)
            if expected != got:
                mismatches.append((lam, got, expected))
    ok = not mismatches
    if args.format == "json":
        payload: dict = {
            "n": n,
            "kind": kind,
            "nu": list(nu),
            "rows": [
                {"lambda": list(lam), "mult": mult, "class": cls}
                for lam, mult, cls in rows
            ],
        }
        if args.verify:
            payload["verified"] = ok
            payload["mismatches"] = [
                {"lambda": list(lam), "table": got, "formula": expected}
                for lam, got, expected in mismatches
            ]
        sys.stdout.write(json.dumps(payload) + "\n")
    elif args.format == "csv":
        header = "lambda;mult;table1_class" + (";verified" if args.verify else "")
        lines = [header]
        for lam, mult, cls in rows:
            line = f"{format_partition(lam)};{mult};{cls}"
            if args.verify:
                line += ";ok" if ok else ";check"
            lines.append(line)
        sys.stdout.write("\n".join(lines) + "\n")
    else:
        lines = [
            f"n: {n}",
            f"kind: {kind}",
            f"nu: {format_partition(nu)}",
            "rows:",
        ]
        lines.extend(
            f"  {format_partition(lam)}  {mult}  {cls}" for lam, mult, cls in rows
        )
        if args.verify:
            if ok:
                lines.append(f"verified: {len(rows)}/{len(rows)}")
            else:
                lines.append("verified: MISMATCH")
                lines.extend(
                    f"  {format_partition(lam)}  table={got}  formula={expected}"
                    for lam, got, expected in mismatches
                )
        sys.stdout.write("\n".join(lines) + "\n")
    return 0 if ok else 1


def _cmd_lr(args: argparse.Namespace) -> int:
    lam = parse_partition(args.lam)
    mu = parse_partition(args.mu)
    nu = parse_partition(args.nu)
    value = lr_coefficient(lam, mu, nu)
    if args.format == "json":
        payload = {
            "lambda": list(lam),
            "mu": list(mu),
            "nu": list(nu),
            "coefficient": value,
        }
        sys.stdout.write(json.dumps(payload) + "\n")
    else:
        sys.stdout.write(f"{value}\n")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="foulkes",
        description=(
            "Decompose the plethysms s_nu(s_(2)) and s_nu(s_(1,1)) into "
            "Schur functions, exactly."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    d = sub.add_parser("decompose", help="evaluate a closed formula for nu")
    d.add_argument("nu", help="partition, e.g. 3,1 or 2^2,1 or - for empty")
    d.add_argument("--method", choices=_METHODS, default="auto")
    d.add_argument("--dual", action="store_true", help="expand s_nu(s_(1,1)) instead")
    d.add_argument("--format", choices=("text", "json", "csv"), default="text")
    d.add_argument("--timings", action="store_true", help="print timings to stderr")
    d.set_defaults(handler=_cmd_decompose)

    o = sub.add_parser("oracle", help="expand by brute force, no closed formula")
    o.add_argument("nu")
    o.add_argument("--inner", choices=("s2", "e2"), default="s2")
    o.add_argument("--format", choices=("text", "json", "csv"), default="text")
    o.add_argument("--timings", action="store_true")
    o.set_defaults(handler=_cmd_oracle)

    c = sub.add_parser("compare", help="run formula and oracle, diff the results")
    c.add_argument("nu")
    c.add_argument("--method", choices=_METHODS, default="auto")
    c.add_argument("--dual", action="store_true")
    c.add_argument("--format", choices=("text", "json"), default="text")
    c.add_argument("--timings", action="store_true")
    c.set_defaults(handler=_cmd_compare)

    t = sub.add_parser("table", help="closed multiplicity table for depth-two nu")
    t.add_argument("n", type=int)
    t.add_argument("--kind", choices=TABLE_NU_KINDS, required=True)
    t.add_argument("--verify", action="store_true", help="cross-check the formula")
    t.add_argument("--format", choices=("text", "json", "csv"), default="text")
    t.set_defaults(handler=_cmd_table)

    lr = sub.add_parser("lr", help="one Littlewood-Richardson coefficient")
    lr.add_argument("lam", metavar="lambda")
    lr.add_argument("mu")
    lr.add_argument("nu")
    lr.add_argument("--format", choices=("text", "json"), default="text")
    lr.set_defaults(handler=_cmd_lr)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except PartitionParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (InvalidShapeError, UnsupportedShapeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceBoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
