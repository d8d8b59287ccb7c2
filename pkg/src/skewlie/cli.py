"""Command-line front end.

Commands: decompose, form, chartab, verify, group-info.
Exit codes: 0 success, 1 input/config error, 2 mathematical check failure.
All numeric JSON values are exact "p/q" strings.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .errors import ComputationError, SpecError
from .forms import form_report
from .groups import DEFAULT_MAX_ORDER, build_group, exponent, square_root_count, conjugacy_classes
from .involutions import Involution
from .serialize import dumps
from .verify import run_verification
from .wedderburn import character_table, decomposition_report

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CHECK = 2

ENV_SEED = "SKEWLIE_SEED"
ENV_MAX_ORDER = "SKEWLIE_MAX_ORDER"


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise SpecError(f"environment variable {name}={raw!r} is not an integer") from None


def _resolve_group(spec: str, max_order: int):
    if spec.lstrip().startswith("{"):
        return build_group(json.loads(spec), max_order)
    path = Path(spec)
    if spec.endswith(".json") and path.exists():
        return build_group(json.loads(path.read_text()), max_order)
    return build_group(spec, max_order)


def _resolve_involution(group, spec: str) -> Involution:
    if spec == "canonical":
        return Involution.canonical(group).validate()
    if spec.lstrip().startswith("{"):
        return Involution.from_json(group, json.loads(spec)).validate()
    path = Path(spec)
    if spec.endswith(".json") and path.exists():
        return Involution.from_json(group, json.loads(path.read_text())).validate()
    raise SpecError(f"unrecognized involution spec {spec!r}")


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _component_lines(report) -> list[str]:
    lines = [f"group {report.group.name}: |G| = {report.group.order}"]
    for c in report.components:
        pair = f" paired with {c.paired_with}" if c.paired_with is not None else ""
        lines.append(
            f"  component {c.component_id}: dim_q={c.dim_q} n={c.degree_n} "
            f"[Z:Q]={c.center_degree} kind={c.kind} type={c.type} "
            f"skew={c.skew_dim_q}{pair}"
        )
    lines.append(
        f"  totals: components={report.sum_components} skew_dim={report.skew_dim}"
    )
    lines.append("  checks: " + " ".join(f"{k}={v}" for k, v in report.checks.items()))
    return lines


def cmd_decompose(args) -> int:
    group = _resolve_group(args.group, args.max_order)
    inv = _resolve_involution(group, args.involution)
    table = character_table(group, prime=args.dixon_prime)
    report = decomposition_report(group, inv, table=table)
    if args.format == "json":
        _emit(dumps(report.to_json()), args.out)
    else:
        _emit("\n".join(_component_lines(report)) + "\n", args.out)
    return EXIT_OK if report.all_checks_pass else EXIT_CHECK


def cmd_form(args) -> int:
    group = _resolve_group(args.group, args.max_order)
    inv = _resolve_involution(group, args.involution)
    report = form_report(inv, seed=args.seed)
    if args.format == "json":
        _emit(dumps(report), args.out)
    else:
        lines = [
            f"group {group.name}: {report['symmetry']} form on the regular module",
            "  checks: " + " ".join(f"{k}={v}" for k, v in report["checks"].items()),
        ]
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if all(report["checks"].values()) else EXIT_CHECK


def cmd_chartab(args) -> int:
    group = _resolve_group(args.group, args.max_order)
    table = character_table(group, prime=args.dixon_prime)
    if args.format == "json":
        _emit(dumps(table.to_json()), args.out)
    else:
        header = "class sizes: " + " ".join(str(s) for s in table.classes.sizes())
        rows = [header]
        for i, row in enumerate(table.values):
            cells = " ".join(f"{str(v):>10s}" for v in row)
            rows.append(f"chi_{i} (deg {table.degrees[i]}): {cells}")
        _emit("\n".join(rows) + "\n", args.out)
    return EXIT_OK


def cmd_group_info(args) -> int:
    group = _resolve_group(args.group, args.max_order)
    cd = conjugacy_classes(group)
    info = {
        "name": group.name,
        "order": group.order,
        "exponent": exponent(group),
        "abelian": group.is_abelian(),
        "class_sizes": list(cd.sizes()),
        "square_roots_of_identity": square_root_count(group),
    }
    if args.format == "json":
        _emit(dumps(info), args.out)
    else:
        _emit("\n".join(f"{k}: {v}" for k, v in info.items()) + "\n", args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    selector = args.catalog
    summary = run_verification(
        selector=selector,
        seed=args.seed,
        max_order=args.max_order_filter,
        include_fixtures=selector is None,
    )
    if not summary.lines:
        sys.stderr.write("empty selection\n")
        return EXIT_INPUT
    if args.format == "json":
        _emit(dumps(summary.to_json()), args.out)
    else:
        lines = []
        for line in summary.lines:
            status = "pass" if line.ok else "FAIL"
            detail = f"  {line.detail}" if line.detail and not line.ok else ""
            lines.append(f"{status}  {line.group:32s} {line.name}{detail}")
        lines.append(
            f"{len(summary.lines) - len(summary.failures())}/{len(summary.lines)} checks passed"
        )
        _emit("\n".join(lines) + "\n", args.out)
    return EXIT_OK if summary.all_pass else EXIT_CHECK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="skewlie",
        description="Exact skew-symmetric decomposition of rational group algebras.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, involution=False):
        p.add_argument("--group", required=True,
                       help='group spec: "dicyclic:2", inline JSON, or a .json path')
        if involution:
            p.add_argument("--involution", default="canonical",
                           help='"canonical", inline JSON, or a .json path')
        p.add_argument("--out", default=None, help="output path (default stdout)")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--dixon-prime", type=int, default=None)
        p.add_argument("--max-order", type=int, default=None)

    common(sub.add_parser("decompose", help="component classification report"), involution=True)
    common(sub.add_parser("form", help="adjoint bilinear form on the regular module"), involution=True)
    common(sub.add_parser("chartab", help="exact character table"))
    common(sub.add_parser("group-info", help="order, exponent, classes"))

    pv = sub.add_parser("verify", help="run the identity suite over the built-in catalog")
    pv.add_argument("--catalog", default=None, help="selector, e.g. dicyclic:2")
    pv.add_argument("--out", default=None)
    pv.add_argument("--format", choices=("json", "text"), default="text")
    pv.add_argument("--seed", type=int, default=None)
    pv.add_argument("--max-order", type=int, default=None)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.seed is None:
            args.seed = _env_int(ENV_SEED, 0)
        env_cap = _env_int(ENV_MAX_ORDER, DEFAULT_MAX_ORDER)
        if args.command == "verify":
            args.max_order_filter = args.max_order
            return cmd_verify(args)
        args.max_order = args.max_order if args.max_order is not None else env_cap
        if args.command == "decompose":
            return cmd_decompose(args)
        if args.command == "form":
            return cmd_form(args)
        if args.command == "chartab":
            return cmd_chartab(args)
        if args.command == "group-info":
            return cmd_group_info(args)
        parser.error(f"unknown command {args.command!r}")
    except (SpecError, json.JSONDecodeError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_INPUT
    except ComputationError as exc:
        sys.stderr.write(f"check failure: {exc}\n")
        return EXIT_CHECK
    return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
