"""Evaluation pipeline: characterize, score, size redundancy.

This is the single entry point the CLI, the HTTP service and the tests share,
so every surface reports identical numbers for identical inputs.
"""
from __future__ import annotations

from typing import List, Sequence, Tuple

from . import merit
from .characterization import parallel_characterize, series_characterize
from .model import (
    CharacterizationVector,
    CompositeAccess,
    EvaluationResult,
    PreferenceWeights,
    RequirementsProfile,
    validate_composite,
    validate_profile,
)
from .redundancy import min_redundancy
from .scenario_io import ValidationFailure


def characterize(composite: CompositeAccess, req: RequirementsProfile) -> CharacterizationVector:
    """Reduce the whole composition (series chains, then parallel) to one vector."""
    branch_vectors: List[Tuple[CharacterizationVector, bool]] = []
    for branch in composite.branches:
        if branch.chain is not None:
            vector = series_characterize(branch.chain, req)
        else:
            vector = branch.vector
        branch_vectors.append((vector, branch.backup_mode))
    if len(branch_vectors) == 1 and not branch_vectors[0][1]:
        return branch_vectors[0][0]
    return parallel_characterize(branch_vectors, interest_rate_k=composite.interest_rate_k)


def evaluate(
    composite: CompositeAccess,
    req: RequirementsProfile,
    weights: PreferenceWeights,
) -> EvaluationResult:
    """Full evaluation of one scenario against a profile and preference weights."""
    violations = validate_composite(composite) + validate_profile(req, weights)
    if violations:
        raise ValidationFailure(
            f"invalid inputs: {violations[0]}", [(v.path, v.message) for v in violations]
        )
    vector = characterize(composite, req)
    terms = merit.contributions(vector, req, weights)
    f1 = merit.f1(vector, req, weights, terms)
    f2 = merit.f2(vector, req, weights, terms)
    verdict = min_redundancy(vector, req)
    return EvaluationResult(
        vector=vector, contributions=terms, f1=f1, f2=f2, redundancy=verdict
    )


def compare(
    scenarios: Sequence[Tuple[str, CompositeAccess]],
    req: RequirementsProfile,
    weights: PreferenceWeights,
    metric: str = "f1",
) -> merit.RankingTable:
    """Evaluate several scenarios under one profile and rank them."""
    rows = []
    for name, composite in scenarios:
        result = evaluate(composite, req, weights)
        rows.append(
            (
                name,
                merit.RankingRow(
                    name=name,
                    vector=result.vector,
                    f1=result.f1,
                    f2=result.f2,
                    r=result.redundancy.overall_r,
                ),
            )
        )
    return merit.compare(rows, metric=metric)


def quadrants_for(table: merit.RankingTable, metric: str) -> merit.QuadrantResult:
    """Quadrant classification of a ranking's figure-vs-first-year-cost points."""
    figure_scale = 100.0 if metric == "f1" else merit.F2_DISPLAY_SCALE
    points = [
        (row.name, getattr(row, metric) * figure_scale, row.vector.cost_first_year)
        for row in table.rows
    ]
    return merit.quadrant_classify(points)
