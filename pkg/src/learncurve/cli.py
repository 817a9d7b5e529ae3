"""Command-line front door for the scenario engine.

Subcommands: ``project``, ``target``, ``lcoh``, ``sweep``, ``figure``,
``presets``, ``serve``. Results go to stdout as an aligned table, or to
``--out`` as RFC 4180 CSV / JSON records (byte-identical across runs).
Exit codes: 0 success, 1 validation or domain error (message on stderr),
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from pathlib import Path

from .figures import FIGURE_IDS, FigureDataset, emit_figure_dataset
from .presets import load_catalog
from .scenario_io import ScenarioWarning, read_scenario_file
from .tables import (
    COMPONENT_STRUCTURE_TOKENS,
    STACK_STRUCTURE_TOKENS,
    lcoh_dataset,
    project_dataset,
    resolve_at,
    resolve_structure,
    sweep_dataset,
    target_dataset,
)
from .types import DomainError, Scenario, ValidationError


def _add_scenario_args(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--preset", help="name of a built-in or user preset")
    source.add_argument("--scenario", help="path to a scenario JSON file")
    parser.add_argument(
        "--lax",
        action="store_true",
        help="warn on unknown scenario keys instead of rejecting them",
    )


def _add_output_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--out", help="write results to this file instead of stdout")
    parser.add_argument(
        "--format",
        choices=("csv", "json"),
        help="serialization for --out or stdout (default: csv for --out, table otherwise)",
    )


def _resolve_scenario(args) -> Scenario:
    if args.preset:
        return load_catalog().scenario(args.preset)
    return read_scenario_file(args.scenario, strict=not args.lax)


def _load_state_doc(path: str) -> dict:
    text = Path(path).read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(
            f"invalid JSON in {path} at line {exc.lineno} column {exc.colno}: {exc.msg}"
        ) from None


def _print_table(dataset: FigureDataset, stream=None) -> None:
    stream = stream or sys.stdout

    def fmt(cell):
        return cell if isinstance(cell, str) else format(cell, ".6g")

    table = [list(dataset.columns)] + [[fmt(c) for c in row] for row in dataset.rows]
    widths = [max(len(line[i]) for line in table) for i in range(len(dataset.columns))]
    for index, line in enumerate(table):
        print("  ".join(cell.ljust(w) for cell, w in zip(line, widths)).rstrip(), file=stream)
        if index == 0:
            print("  ".join("-" * w for w in widths), file=stream)


def _emit(dataset: FigureDataset, args) -> None:
    if args.out:
        fmt = args.format or "csv"
        text = dataset.to_csv() if fmt == "csv" else dataset.to_json()
        with open(args.out, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    elif args.format == "csv":
        sys.stdout.write(dataset.to_csv())
    elif args.format == "json":
        sys.stdout.write(dataset.to_json() + "\n")
    else:
        _print_table(dataset)


def cmd_project(args) -> int:
    scenario = _resolve_scenario(args)
    structure = resolve_structure(args.structure, scenario, "stack")
    at = resolve_at(
        scenario,
        total_added_gw=args.at_total,
        state_doc=_load_state_doc(args.at_file) if args.at_file else None,
        label=args.at_label,
    )
    _emit(project_dataset(scenario, structure, at), args)
    return 0


def cmd_target(args) -> int:
    scenario = _resolve_scenario(args)
    dataset = target_dataset(
        scenario,
        target_cost=args.target_cost,
        variant=args.variant,
        region=args.region,
        category=args.category,
        structure=args.structure,
    )
    _emit(dataset, args)
    return 0


def cmd_lcoh(args) -> int:
    scenario = _resolve_scenario(args)
    dataset = lcoh_dataset(
        scenario,
        capex=args.capex,
        utilization=args.utilization,
        wacc=args.wacc,
        lifetime_years=args.lifetime,
        specific_energy=args.specific_energy,
    )
    _emit(dataset, args)
    return 0


def cmd_sweep(args) -> int:
    scenario = _resolve_scenario(args)
    dataset = sweep_dataset(
        scenario,
        to_gw=args.to,
        points=args.points,
        from_gw=args.from_gw,
        variant=args.variant,
        region=args.region,
        category=args.category,
        structure=args.structure,
    )
    _emit(dataset, args)
    return 0


def cmd_figure(args) -> int:
    scenario = _resolve_scenario(args)
    dataset = emit_figure_dataset(args.id, scenario)
    if not args.out and args.format is None:
        sys.stdout.write(dataset.to_csv())
        return 0
    _emit(dataset, args)
    return 0


def cmd_presets(args) -> int:
    catalog = load_catalog()
    if args.json:
        payload = {
            name: {
                "description": preset.description,
                "provenance": dict(preset.provenance),
                "scenario": preset.doc(),
            }
            for name, preset in catalog.presets.items()
        }
        print(json.dumps(payload, indent=2))
        return 0
    for name, preset in catalog.presets.items():
        print(f"{name}: {preset.description}")
    return 0


def cmd_serve(args) -> int:
    from .service import serve

    return serve(
        host=args.host,
        port=args.port,
        cors_origins=args.cors_origin or [],
        ui_dir=args.ui_dir,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="learncurve",
        description="Project electrolysis capital costs under alternative learning structures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("project", help="project stack or component costs at a deployment state")
    _add_scenario_args(p)
    p.add_argument(
        "--structure",
        help="learning structure token (stack: %s; component: %s)"
        % ("|".join(STACK_STRUCTURE_TOKENS), "|".join(COMPONENT_STRUCTURE_TOKENS)),
    )
    at = p.add_mutually_exclusive_group()
    at.add_argument(
        "--at-total",
        type=float,
        dest="at_total",
        help="added GW split evenly across the four stack variants (and regions)",
    )
    at.add_argument("--at-file", dest="at_file", help="JSON file with an explicit deployment state")
    at.add_argument("--at-label", dest="at_label", help="use the named pathway entry")
    _add_output_args(p)
    p.set_defaults(func=cmd_project)

    p = sub.add_parser("target", help="capacity and investment required to reach a cost target")
    _add_scenario_args(p)
    subject = p.add_mutually_exclusive_group(required=True)
    subject.add_argument("--variant", help="stack variant token, e.g. western_pem")
    subject.add_argument("--region", help="region token for a BoP/EPC target, e.g. us")
    p.add_argument(
        "--category",
        choices=("bop", "epc"),
        help="with --region: solve one category (default: combined BoP+EPC)",
    )
    p.add_argument("--structure", help="learning structure token")
    p.add_argument(
        "--target-cost",
        type=float,
        required=True,
        dest="target_cost",
        help="target cost in USD/kW",
    )
    _add_output_args(p)
    p.set_defaults(func=cmd_target)

    p = sub.add_parser("lcoh", help="capex contribution to levelized hydrogen cost")
    _add_scenario_args(p)
    p.add_argument("--capex", type=float, required=True, help="capital cost in USD/kW")
    p.add_argument("--utilization", type=float, required=True, help="capacity factor in (0, 1]")
    p.add_argument("--wacc", type=float, help="override the scenario's cost of capital")
    p.add_argument("--lifetime", type=int, help="override the scenario's lifetime in years")
    p.add_argument(
        "--specific-energy",
        type=float,
        dest="specific_energy",
        help="override the scenario's kWh per kg of hydrogen",
    )
    _add_output_args(p)
    p.set_defaults(func=cmd_lcoh)

    p = sub.add_parser("sweep", help="cost trajectory over a family-deployment axis")
    _add_scenario_args(p)
    subject = p.add_mutually_exclusive_group(required=True)
    subject.add_argument("--variant", help="stack variant token")
    subject.add_argument("--region", help="region token (requires --category)")
    p.add_argument("--category", choices=("bop", "epc"))
    p.add_argument("--structure", help="learning structure token")
    p.add_argument(
        "--from",
        type=float,
        dest="from_gw",
        help="axis start in GW (default: current family base)",
    )
    p.add_argument("--to", type=float, required=True, help="axis end in GW")
    p.add_argument("--points", type=int, default=25, help="number of axis points (default 25)")
    _add_output_args(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("figure", help="emit a benchmark figure dataset")
    _add_scenario_args(p)
    p.add_argument("--id", required=True, choices=FIGURE_IDS, help="dataset id")
    _add_output_args(p)
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("presets", help="list available presets")
    p.add_argument("--json", action="store_true", help="full documents with provenance notes")
    p.set_defaults(func=cmd_presets)

    p = sub.add_parser("serve", help="run the HTTP API")
    p.add_argument("--host", default="127.0.0.1", help="bind address (default loopback)")
    p.add_argument("--port", type=int, default=8000)
    p.add_argument(
        "--cors-origin",
        action="append",
        dest="cors_origin",
        help="allow this origin for cross-origin requests (repeatable)",
    )
    p.add_argument("--ui-dir", dest="ui_dir", help="serve this directory of static files at /")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # argparse prints its own usage message
        return int(exc.code or 0)
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", ScenarioWarning)
            code = args.func(args)
        for warning in caught:
            if issubclass(warning.category, ScenarioWarning):
                print(f"warning: {warning.message}", file=sys.stderr)
        return code
    except (ValidationError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except FileNotFoundError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
