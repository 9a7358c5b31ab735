"""Cost-driven evolution of the efficiency figure and saturation detection.

The technical profile (F1) is held constant while the yearly cost per user
evolves; the deployment-decision point is where the efficiency curve's slope
collapses relative to its own peak.
"""
from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

DEFAULT_EPSILON = 0.1


def f2_series(
    f1: float, cost_per_year: Sequence[Tuple[int, float]]
) -> List[Tuple[int, float]]:
    """Efficiency figure per labeled year for a fixed performance figure."""
    series: List[Tuple[int, float]] = []
    for year, cost in cost_per_year:
        if cost <= 0:
            raise ValueError(f"cost for year {year} must be > 0, got {cost}")
        series.append((year, f1 / cost))
    return series


def saturation_year(
    series: Sequence[Tuple[int, float]], epsilon: float = DEFAULT_EPSILON
) -> Optional[int]:
    """First year whose slope drops to epsilon times the peak slope, or None.

    A flat or declining curve has no positive peak slope and therefore no
    saturation point under this criterion.
    """
    if len(series) < 3:
        raise ValueError(f"need at least 3 points, got {len(series)}")
    years = [year for year, _ in series]
    if any(b <= a for a, b in zip(years, years[1:])):
        raise ValueError("years must be strictly increasing")
    slopes = [
        (year, value - prev_value)
        for (_, prev_value), (year, value) in zip(series, series[1:])
    ]
    peak = max(slope for _, slope in slopes)
    if peak <= 0:
        return None
    # Relative slack keeps boundary cases stable under uniform scaling.
    band = epsilon * peak
    for year, slope in slopes:
        if slope <= band * (1.0 + 1e-9):
            return year
    return None
