"""Normalization, the F1/F2 figures of merit, ranking and quadrant classification.

F1 is the weighted sum of range-normalized output parameters over the sum of
positive weights; it can be negative or exceed 1. F2 divides F1 by the
weighted raw cost denominator, so it reads as performance per euro
(displayed as percent per thousand euros).
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Dict, Mapping, Optional, Sequence, Tuple, Union

from .model import (
    CharacterizationVector,
    Contribution,
    EvaluationError,
    PreferenceWeights,
    Range,
    RequirementsProfile,
    TriState,
    parameter_value,
)

F2_DISPLAY_SCALE = 100_000  # fraction/EUR -> percent per kEUR


def normalize(value: Union[float, int, TriState], rng: Range) -> float:
    """Map a raw output value onto the requirement range: 0 at u_min, 1 at u_max."""
    if rng.width == 0:
        raise EvaluationError(f"zero-width range [{rng.u_min}, {rng.u_max}]")
    if isinstance(value, TriState):
        if value is TriState.TRUE:
            numeric = 1.0
        elif value is TriState.FALSE:
            numeric = 0.0
        else:
            numeric = rng.u_min
    else:
        numeric = float(value)
    return (numeric - rng.u_min) / rng.width


def contributions(
    vector: CharacterizationVector,
    req: RequirementsProfile,
    weights: PreferenceWeights,
) -> Dict[str, Contribution]:
    """Per-parameter weighted terms: normalized for `a`, raw for `b`."""
    terms: Dict[str, Contribution] = {}
    for param in sorted(set(weights.a) | set(weights.b)):
        a_w = weights.a.get(param, 0.0)
        b_w = weights.b.get(param, 0.0)
        value = parameter_value(vector, param)
        a_term = 0.0
        if a_w != 0.0:
            a_term = a_w * normalize(value, req.ranges[param])
        b_term = 0.0
        if b_w != 0.0:
            raw = 0.0 if isinstance(value, TriState) else float(value)
            b_term = b_w * raw
        terms[param] = Contribution(a_term=a_term, b_term=b_term)
    return terms


def f1(
    vector: CharacterizationVector,
    req: RequirementsProfile,
    weights: PreferenceWeights,
    terms: Optional[Mapping[str, Contribution]] = None,
) -> float:
    """Weighted normalized performance relative to the requirements profile."""
    if weights.positive_a_sum <= 0:
        raise EvaluationError("sum of positive a weights must be > 0")
    if terms is None:
        terms = contributions(vector, req, weights)
    return sum(c.a_term for c in terms.values()) / weights.positive_a_sum


def f2(
    vector: CharacterizationVector,
    req: RequirementsProfile,
    weights: PreferenceWeights,
    terms: Optional[Mapping[str, Contribution]] = None,
) -> float:
    """Performance per weighted cost unit (fraction per euro)."""
    if terms is None:
        terms = contributions(vector, req, weights)
    denominator = sum(c.b_term for c in terms.values())
    if denominator == 0:
        raise EvaluationError("cost denominator is zero")
    return f1(vector, req, weights, terms) / denominator


@dataclass(frozen=True)
class RankingRow:
    name: str
    vector: CharacterizationVector
    f1: float
    f2: float
    r: Optional[int]


@dataclass(frozen=True)
class RankingTable:
    metric: str
    rows: Tuple[RankingRow, ...]


def compare(entries: Sequence[Tuple[str, "RankingRow"]] , metric: str = "f1") -> RankingTable:
    """Sort named results descending by f1 or f2; ties break alphabetically."""
    if metric not in ("f1", "f2"):
        raise ValueError(f"metric must be 'f1' or 'f2', got {metric!r}")
    rows = [row for _, row in entries]
    rows.sort(key=lambda row: (-getattr(row, metric), row.name))
    return RankingTable(metric=metric, rows=tuple(rows))


class Quadrant(enum.Enum):
    HIGH_MERIT_LOW_COST = "+performance -cost"
    LOW_MERIT_LOW_COST = "-performance -cost"
    HIGH_MERIT_HIGH_COST = "+performance +cost"
    LOW_MERIT_HIGH_COST = "-performance +cost"
    DISCARDED = "discarded"


@dataclass(frozen=True)
class QuadrantResult:
    merit_threshold: Optional[float]
    cost_threshold: Optional[float]
    assignments: Mapping[str, Quadrant]


def quadrant_classify(points: Sequence[Tuple[str, float, float]]) -> QuadrantResult:
    """Classify (name, figure, cost) points into cost/benefit quadrants.

    Non-positive figures are discarded. Both thresholds sit at the middle of
    the surviving range; membership is inclusive on the favorable side, so a
    single surviving point lands in the optimal quadrant.
    """
    if not points:
        raise ValueError("need at least one point")
    assignments: Dict[str, Quadrant] = {}
    survivors = [(name, figure, cost) for name, figure, cost in points if figure > 0]
    for name, figure, cost in points:
        if figure <= 0:
            assignments[name] = Quadrant.DISCARDED
    if not survivors:
        return QuadrantResult(None, None, assignments)

    figures = [figure for _, figure, _ in survivors]
    costs = [cost for _, _, cost in survivors]
    merit_thr = min(figures) + (max(figures) - min(figures)) / 2.0
    cost_thr = min(costs) + (max(costs) - min(costs)) / 2.0

    for name, figure, cost in survivors:
        high = figure >= merit_thr
        cheap = cost <= cost_thr
        if high and cheap:
            assignments[name] = Quadrant.HIGH_MERIT_LOW_COST
        elif cheap:
            assignments[name] = Quadrant.LOW_MERIT_LOW_COST
        elif high:
            assignments[name] = Quadrant.HIGH_MERIT_HIGH_COST
        else:
            assignments[name] = Quadrant.LOW_MERIT_HIGH_COST
    return QuadrantResult(merit_thr, cost_thr, assignments)
