"""Series and parallel submodels: reduce compositions to one equivalent vector.

The series submodel collapses a chain of elements (index 0 at the end user)
into a single equivalent access; the parallel submodel aggregates already
characterized branches. Both are pure functions over immutable inputs.
"""
from __future__ import annotations

from typing import Iterable, Sequence, Tuple

from . import finance
from .model import (
    AccessChain,
    AccessElement,
    CharacterizationVector,
    EnvSupport,
    EvaluationError,
    RequirementsProfile,
    TriState,
)


def effective_unit_bandwidth(element: AccessElement, direction: str, weather_on: bool) -> float:
    """Per-user bandwidth of one element after redundancy, weather and sharing."""
    if direction == "rx":
        unit, loss = element.bw_rx_unit, element.weather_rx_loss
    elif direction == "tx":
        unit, loss = element.bw_tx_unit, element.weather_tx_loss
    else:
        raise ValueError(f"direction must be 'rx' or 'tx', got {direction!r}")
    delta = loss if (weather_on and element.wireless) else 0.0
    return element.redundancy_n * max(0.0, unit - delta) / (element.users * element.concurrency)


def element_availability(element: AccessElement) -> float:
    """Availability of the element including its internal parallel replicas."""
    return 1.0 - (1.0 - element.availability) ** element.redundancy_n


def _tri_and(values: Iterable[TriState]) -> TriState:
    seen = False
    for value in values:
        if value.is_na:
            continue
        seen = True
        if value is TriState.FALSE:
            return TriState.FALSE
    return TriState.TRUE if seen else TriState.NA


def _tri_or(values: Iterable[TriState]) -> TriState:
    seen = False
    for value in values:
        if value.is_na:
            continue
        seen = True
        if value is TriState.TRUE:
            return TriState.TRUE
    return TriState.FALSE if seen else TriState.NA


def _sum_series(series: Iterable[Sequence[float]], period: int) -> Tuple[float, ...]:
    totals = [0.0] * period
    for values in series:
        for i, v in enumerate(values):
            totals[i] += v
    return tuple(totals)


def series_characterize(chain: AccessChain, req: RequirementsProfile) -> CharacterizationVector:
    """Equivalent vector of a validated chain under the profile's weather flags."""
    elements = chain.elements
    if not elements:
        raise EvaluationError("cannot characterize an empty chain")
    weather_on = req.weather_on

    bw_rx = min(effective_unit_bandwidth(e, "rx", weather_on) for e in elements)
    bw_tx = min(effective_unit_bandwidth(e, "tx", weather_on) for e in elements)

    availability = 1.0
    for e in elements:
        availability *= element_availability(e)

    distances = [e.distance_m for e in elements]
    dist_to_ap = next((d for d in distances if d is not None), 0.0)
    dist_total = sum(d for d in distances if d is not None)

    # The user->AP segment ends at the first distance-bearing element; LOS of
    # that segment and of the remainder are reported separately.
    ap_index = next((i for i, d in enumerate(distances) if d is not None), len(elements) - 1)
    los_user_ap = _tri_or(e.los_needed for e in elements[: ap_index + 1])
    los_ap_node = _tri_or(e.los_needed for e in elements[ap_index + 1 :])

    arpu = _sum_series((e.arpu for e in elements), chain.study_period_t)
    capex = _sum_series((e.capex for e in elements), chain.study_period_t)
    opex = _sum_series((e.opex for e in elements), chain.study_period_t)

    env = elements[0].env_support
    for e in elements[1:]:
        env = env.intersect(e.env_support)

    return CharacterizationVector(
        bw_rx_avg=bw_rx,
        bw_tx_avg=bw_tx,
        availability=availability,
        dist_to_ap_m=dist_to_ap,
        dist_total_m=dist_total,
        arpu=arpu,
        capex=capex,
        opex=opex,
        npv=finance.npv(arpu, capex, opex, chain.interest_rate_k),
        net_cash_flow=finance.net_cash_flow(arpu, capex, opex),
        payback_years=finance.payback_period(arpu, capex, opex),
        cost_first_year=capex[0] + opex[0],
        qos_capable=_tri_and(e.qos_capable for e in elements),
        los_user_ap=los_user_ap,
        los_ap_node=los_ap_node,
        license_needed=_tri_or(e.license_needed for e in elements),
        ubiquity=elements[0].ubiquity,
        health_risk=max(e.health_risk for e in elements),
        env_support=env,
        wireless_any=any(e.wireless for e in elements),
    )


def parallel_characterize(
    branches: Sequence[Tuple[CharacterizationVector, bool]],
    *,
    interest_rate_k: float = 0.0,
) -> CharacterizationVector:
    """Aggregate parallel branches; backup branches add availability and cost but no bandwidth."""
    if not branches:
        raise EvaluationError("parallel composition needs at least one branch")
    if all(backup for _, backup in branches):
        raise EvaluationError("parallel composition needs at least one non-backup branch")

    vectors = [v for v, _ in branches]
    aggregate = [v for v, backup in branches if not backup]

    unavailability = 1.0
    for v in vectors:
        unavailability *= 1.0 - v.availability

    period = len(vectors[0].arpu)
    arpu = _sum_series((v.arpu for v in vectors), period)
    capex = _sum_series((v.capex for v in vectors), period)
    opex = _sum_series((v.opex for v in vectors), period)

    env = vectors[0].env_support
    for v in vectors[1:]:
        env = env.intersect(v.env_support)

    return CharacterizationVector(
        bw_rx_avg=sum(v.bw_rx_avg for v in aggregate),
        bw_tx_avg=sum(v.bw_tx_avg for v in aggregate),
        availability=1.0 - unavailability,
        dist_to_ap_m=min(v.dist_to_ap_m for v in vectors),
        dist_total_m=min(v.dist_total_m for v in vectors),
        arpu=arpu,
        capex=capex,
        opex=opex,
        npv=finance.npv(arpu, capex, opex, interest_rate_k),
        net_cash_flow=finance.net_cash_flow(arpu, capex, opex),
        payback_years=finance.payback_period(arpu, capex, opex),
        cost_first_year=capex[0] + opex[0],
        qos_capable=_tri_and(v.qos_capable for v in vectors),
        los_user_ap=_tri_or(v.los_user_ap for v in vectors),
        los_ap_node=_tri_or(v.los_ap_node for v in vectors),
        license_needed=_tri_or(v.license_needed for v in vectors),
        ubiquity=_tri_and(v.ubiquity for v in vectors),
        health_risk=max(v.health_risk for v in vectors),
        env_support=env,
        wireless_any=any(v.wireless_any for v in vectors),
    )
