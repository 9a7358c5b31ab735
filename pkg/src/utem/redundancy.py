"""Minimum number of identical aggregate-mode copies meeting a requirements profile.

Bandwidth parameters are sized against the profile's u_min, availability
against its u_max; everything else is a pass/fail compliance check on a
single access, since extra copies cannot improve it.
"""
from __future__ import annotations

import math
from typing import Dict, Optional

from .model import (
    CharacterizationVector,
    ParamVerdict,
    Range,
    RedundancyVerdict,
    RequirementsProfile,
    TriState,
    VerdictKind,
)

R_MAX = 1000
_CEIL_SLACK = 1e-12  # guards against off-by-one at exact multiples


class UnreachableRequirement(Exception):
    """The requirement cannot be met by any number of copies."""


def min_copies_for_bandwidth(bw: float, target: float) -> int:
    """Copies needed so that aggregated bandwidth reaches the target."""
    if target <= 0:
        raise ValueError(f"target must be > 0, got {target}")
    if bw <= 0:
        raise UnreachableRequirement(f"zero bandwidth cannot reach {target}")
    return max(1, math.ceil(target / bw - _CEIL_SLACK))


def min_copies_for_availability(a: float, target: float) -> int:
    """Copies needed so that 1-(1-a)^r reaches the target probability."""
    if not 0.0 <= target < 1.0:
        raise ValueError(f"target must be in [0,1), got {target}")
    if a >= target or a >= 1.0:
        return 1
    if a <= 0.0:
        raise UnreachableRequirement(f"zero availability cannot reach {target}")
    ratio = math.log(1.0 - target) / math.log(1.0 - a)
    return max(1, math.ceil(ratio - _CEIL_SLACK))


def _flag_allowed(value: TriState, rng: Optional[Range]) -> bool:
    # u_max >= 1 means the customer tolerates the flag; otherwise a TRUE flag fails.
    allowed = rng is None or rng.u_max >= 1.0
    return allowed or not value.is_true


def min_redundancy(
    vector: CharacterizationVector, req: RequirementsProfile
) -> RedundancyVerdict:
    """Per-parameter verdicts and the overall minimum copy count R."""
    per_param: Dict[str, ParamVerdict] = {}
    blocking = []
    copies = [1]

    def numeric(param: str, worker) -> None:
        try:
            r = worker()
        except UnreachableRequirement as exc:
            per_param[param] = ParamVerdict(VerdictKind.FAILS, reason=str(exc))
            blocking.append(param)
        else:
            per_param[param] = ParamVerdict(VerdictKind.COPIES, copies=r)
            copies.append(r)

    def check(param: str, ok: bool, reason: str) -> None:
        if ok:
            per_param[param] = ParamVerdict(VerdictKind.COMPLIES)
        else:
            per_param[param] = ParamVerdict(VerdictKind.FAILS, reason=reason)
            blocking.append(param)

    rx_rng = req.ranges.get("bw_rx_avg")
    tx_rng = req.ranges.get("bw_tx_avg")
    avail_rng = req.ranges.get("availability")

    if rx_rng is not None and rx_rng.u_min > 0:
        numeric("bw_rx_avg", lambda: min_copies_for_bandwidth(vector.bw_rx_avg, rx_rng.u_min))
    else:
        per_param["bw_rx_avg"] = ParamVerdict(VerdictKind.COPIES, copies=1)
    if tx_rng is not None and tx_rng.u_min > 0:
        numeric("bw_tx_avg", lambda: min_copies_for_bandwidth(vector.bw_tx_avg, tx_rng.u_min))
    else:
        per_param["bw_tx_avg"] = ParamVerdict(VerdictKind.COPIES, copies=1)
    if avail_rng is not None and avail_rng.u_max < 1.0:
        numeric(
            "availability",
            lambda: min_copies_for_availability(vector.availability, avail_rng.u_max),
        )
    elif avail_rng is not None and vector.availability < 1.0:
        # u_max = 1 is unreachable for any imperfect access, whatever r.
        per_param["availability"] = ParamVerdict(
            VerdictKind.FAILS, reason="perfect availability required"
        )
        blocking.append("availability")
    else:
        per_param["availability"] = ParamVerdict(VerdictKind.COPIES, copies=1)

    # Non-improvable parameters: replication cannot change these, so the single
    # access must comply. Distances must reach at least the minimum need;
    # exceeding the studied maximum is harmless extra reach.
    for param, value in (
        ("dist_to_ap_m", vector.dist_to_ap_m),
        ("dist_total_m", vector.dist_total_m),
    ):
        rng = req.ranges.get(param)
        check(param, rng is None or value >= rng.u_min, f"distance {value} below {rng.u_min if rng else 0}")

    qos_rng = req.ranges.get("qos_capable")
    qos_required = qos_rng is not None and qos_rng.u_max >= 1.0
    check("qos_capable", not qos_required or vector.qos_capable.is_true, "QoS capability required")

    check(
        "los_user_ap",
        _flag_allowed(vector.los_user_ap, req.ranges.get("los_user_ap")),
        "line of sight to the access point not allowed",
    )
    check(
        "los_ap_node",
        _flag_allowed(vector.los_ap_node, req.ranges.get("los_ap_node")),
        "line of sight to the access node not allowed",
    )
    check(
        "license_needed",
        _flag_allowed(vector.license_needed, req.ranges.get("license_needed")),
        "licensed spectrum not allowed",
    )
    check(
        "ubiquity",
        not req.ubiquity_required or vector.ubiquity.is_true,
        "ubiquity at the customer premises required",
    )

    health_rng = req.ranges.get("health_risk")
    check(
        "health_risk",
        health_rng is None or vector.health_risk <= health_rng.u_max,
        f"health risk {vector.health_risk} above tolerance",
    )
    check(
        "env_support",
        vector.env_support.supports(req.target_geotype),
        f"target geotype {req.target_geotype.value} not covered",
    )

    r = max(copies)
    failure_reason = None
    if r > R_MAX:
        blocking.append("r_max")
        failure_reason = f"required copies {r} exceed cap {R_MAX}"
    else:
        cost_rng = req.ranges.get("cost_first_year")
        if cost_rng is not None and r * vector.cost_first_year > cost_rng.u_max:
            per_param["cost_first_year"] = ParamVerdict(
                VerdictKind.FAILS, reason=f"cost exceeded at R={r}"
            )
            blocking.append("cost_first_year")
            failure_reason = "cost exceeded at R"
        else:
            per_param["cost_first_year"] = ParamVerdict(VerdictKind.COMPLIES)

    if blocking:
        return RedundancyVerdict(
            per_param=per_param,
            overall_r=None,
            blocking=tuple(blocking),
            failure_reason=failure_reason or "requirements not satisfiable by replication",
        )
    return RedundancyVerdict(per_param=per_param, overall_r=r)
