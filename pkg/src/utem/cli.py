"""Batch command-line front end.

Subcommands mirror the methodology steps: evaluate one scenario, size its
redundancy, compare or quadrant-classify a directory of scenarios, and
predict deployment timing from a cost series. Exit codes: 0 success, 1 input
error, 2 evaluation failure.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import List, Optional, Sequence, Tuple

from . import engine, forecast
from .model import CompositeAccess, EvaluationError
from .scenario_io import (
    DocumentError,
    emit_results,
    forecast_to_dict,
    import_external_outputs,
    parse_preferences,
    parse_requirements,
    parse_scenario,
)

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_EVALUATION = 2


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on usage errors; the contract here is 1.
    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


def _build_parser() -> _Parser:
    parser = _Parser(prog="utem", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: _Parser, scenarios_dir: bool = False) -> None:
        if scenarios_dir:
            p.add_argument("--scenarios-dir", required=True, help="directory of scenario documents")
        else:
            p.add_argument("--scenario", required=True, help="scenario document path")
        p.add_argument("--requirements", required=True, help="requirements document path")
        p.add_argument("--preferences", required=True, help="preferences document path")
        p.add_argument("--overlay", help="external-model output overlay document")
        p.add_argument(
            "--format",
            choices=("json", "csv", "table"),
            default=None,
            help="output format (default: $UTEM_FORMAT or table)",
        )

    p_eval = sub.add_parser("evaluate", help="characterize, score and size one scenario")
    add_common(p_eval)

    p_red = sub.add_parser("redundancy", help="redundancy verdict for one scenario")
    add_common(p_red)

    p_cmp = sub.add_parser("compare", help="rank every scenario in a directory")
    add_common(p_cmp, scenarios_dir=True)
    p_cmp.add_argument("--metric", choices=("f1", "f2"), default="f1")

    p_quad = sub.add_parser("quadrant", help="cost/benefit quadrants for a directory")
    add_common(p_quad, scenarios_dir=True)
    p_quad.add_argument("--metric", choices=("f1", "f2"), default="f1")

    p_pred = sub.add_parser("predict", help="efficiency evolution and saturation year")
    p_pred.add_argument("--f1", type=float, help="fixed performance figure (fraction)")
    p_pred.add_argument("--scenario", help="scenario to take the performance figure from")
    p_pred.add_argument("--requirements", help="requirements document (with --scenario)")
    p_pred.add_argument("--preferences", help="preferences document (with --scenario)")
    p_pred.add_argument(
        "--cost-series", required=True,
        help='JSON file mapping years to first-year cost, e.g. {"2013": 1000}',
    )
    p_pred.add_argument("--epsilon", type=float, default=forecast.DEFAULT_EPSILON)
    p_pred.add_argument("--format", choices=("json", "csv", "table"), default=None)
    return parser


def _chosen_format(args: argparse.Namespace) -> str:
    if args.format:
        return args.format
    return os.environ.get("UTEM_FORMAT", "table")


def _read(path: str, what: str) -> bytes:
    try:
        return Path(path).read_bytes()
    except OSError as exc:
        raise DocumentError(f"cannot read {what} {path}: {exc}") from exc


def _load_inputs(args: argparse.Namespace):
    req = parse_requirements(_read(args.requirements, "requirements"))
    weights = parse_preferences(_read(args.preferences, "preferences"))
    return req, weights


def _load_scenario(path: str, overlay_path: Optional[str]) -> CompositeAccess:
    composite = parse_scenario(_read(path, "scenario"))
    if overlay_path:
        composite = import_external_outputs(composite, _read(overlay_path, "overlay"))
    return composite


def _load_scenarios_dir(args: argparse.Namespace) -> List[Tuple[str, CompositeAccess]]:
    directory = Path(args.scenarios_dir)
    if not directory.is_dir():
        raise DocumentError(f"not a directory: {directory}")
    scenarios = []
    for path in sorted(directory.glob("*.json")):
        composite = _load_scenario(str(path), args.overlay)
        scenarios.append((composite.name, composite))
    if not scenarios:
        raise DocumentError(f"no scenario documents in {directory}")
    return scenarios


def _emit(result, args: argparse.Namespace) -> None:
    sys.stdout.write(emit_results(result, _chosen_format(args)).decode("utf-8"))


def _cmd_evaluate(args: argparse.Namespace) -> int:
    req, weights = _load_inputs(args)
    composite = _load_scenario(args.scenario, args.overlay)
    result = engine.evaluate(composite, req, weights)
    _emit(result, args)
    return EXIT_OK


def _cmd_redundancy(args: argparse.Namespace) -> int:
    req, weights = _load_inputs(args)
    composite = _load_scenario(args.scenario, args.overlay)
    result = engine.evaluate(composite, req, weights)
    _emit(result, args)
    return EXIT_OK if result.redundancy.ok else EXIT_EVALUATION


def _cmd_compare(args: argparse.Namespace) -> int:
    req, weights = _load_inputs(args)
    table = engine.compare(_load_scenarios_dir(args), req, weights, metric=args.metric)
    _emit(table, args)
    return EXIT_OK


def _cmd_quadrant(args: argparse.Namespace) -> int:
    req, weights = _load_inputs(args)
    table = engine.compare(_load_scenarios_dir(args), req, weights, metric=args.metric)
    _emit(engine.quadrants_for(table, args.metric), args)
    return EXIT_OK


def _cmd_predict(args: argparse.Namespace) -> int:
    if args.f1 is None:
        if not (args.scenario and args.requirements and args.preferences):
            raise DocumentError("predict needs --f1, or --scenario with --requirements/--preferences")
        req, weights = _load_inputs(args)
        composite = _load_scenario(args.scenario, None)
        f1_value = engine.evaluate(composite, req, weights).f1
    else:
        f1_value = args.f1
    try:
        raw = json.loads(_read(args.cost_series, "cost series"))
        costs = sorted((int(year), float(cost)) for year, cost in raw.items())
    except (ValueError, AttributeError) as exc:
        raise DocumentError(f"bad cost series document: {exc}") from exc
    points = forecast.f2_series(f1_value, costs)
    try:
        saturation = forecast.saturation_year(points, epsilon=args.epsilon)
    except ValueError as exc:
        raise DocumentError(str(exc)) from exc
    _emit(forecast_to_dict(f1_value, points, saturation, args.epsilon), args)
    return EXIT_OK


_COMMANDS = {
    "evaluate": _cmd_evaluate,
    "redundancy": _cmd_redundancy,
    "compare": _cmd_compare,
    "quadrant": _cmd_quadrant,
    "predict": _cmd_predict,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except DocumentError as exc:
        print(f"utem: input error: {exc}", file=sys.stderr)
        for path, message in getattr(exc, "violations", [])[:20]:
            print(f"  {path}: {message}", file=sys.stderr)
        return EXIT_INPUT
    except (EvaluationError, ValueError) as exc:
        print(f"utem: evaluation failed: {exc}", file=sys.stderr)
        return EXIT_EVALUATION


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
