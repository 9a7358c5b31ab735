"""Economic output parameters computed from per-year money vectors.

Yearly net flow is arpu - capex - opex. Year 1 is discounted by one full
period, i.e. the first study year contributes flow/(1+k).
"""
from __future__ import annotations

from typing import Optional, Sequence

IRR_LOW = -0.9999
IRR_HIGH = 10.0
IRR_NPV_TOL = 1e-6  # EUR


def _net_flows(arpu: Sequence[float], capex: Sequence[float], opex: Sequence[float]) -> list:
    if not (len(arpu) == len(capex) == len(opex)):
        raise ValueError(
            f"money series lengths differ: arpu={len(arpu)} capex={len(capex)} opex={len(opex)}"
        )
    return [a - c - o for a, c, o in zip(arpu, capex, opex)]


def net_cash_flow(arpu: Sequence[float], capex: Sequence[float], opex: Sequence[float]) -> float:
    """Undiscounted sum of yearly net flows."""
    return sum(_net_flows(arpu, capex, opex))


def npv(
    arpu: Sequence[float], capex: Sequence[float], opex: Sequence[float], k: float
) -> float:
    """Net present value at yearly interest rate k (> -1)."""
    if k <= -1.0:
        raise ValueError(f"interest rate must be > -1, got {k}")
    flows = _net_flows(arpu, capex, opex)
    return sum(flow / (1.0 + k) ** year for year, flow in enumerate(flows, start=1))


def irr(
    arpu: Sequence[float], capex: Sequence[float], opex: Sequence[float]
) -> Optional[float]:
    """Rate where npv crosses zero, or None when no such rate is bracketed.

    A sign change in the yearly net flows is required for an internal rate to
    exist at all; bisection then runs on (-0.9999, 10].
    """
    flows = _net_flows(arpu, capex, opex)
    signs = [f for f in flows if f != 0.0]
    if not signs or all(f > 0 for f in signs) or all(f < 0 for f in signs):
        return None

    def npv_at(rate: float) -> float:
        return sum(flow / (1.0 + rate) ** year for year, flow in enumerate(flows, start=1))

    lo, hi = IRR_LOW, IRR_HIGH
    f_lo, f_hi = npv_at(lo), npv_at(hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if f_lo * f_hi > 0:
        return None
    for _ in range(200):
        mid = (lo + hi) / 2.0
        f_mid = npv_at(mid)
        if abs(f_mid) < IRR_NPV_TOL:
            return mid
        if f_lo * f_mid < 0:
            hi = mid
        else:
            lo, f_lo = mid, f_mid
    return (lo + hi) / 2.0


def payback_period(
    arpu: Sequence[float], capex: Sequence[float], opex: Sequence[float]
) -> Optional[int]:
    """First year (1-based) whose cumulative net flow is non-negative; None if never."""
    cumulative = 0.0
    for year, flow in enumerate(_net_flows(arpu, capex, opex), start=1):
        cumulative += flow
        if cumulative >= 0:
            return year
    return None


def estimate_opex_from_availability(capex_element: float, availability: float) -> float:
    """Yearly operating expense estimate: unavailability times the element's capex."""
    if not 0.0 <= availability <= 1.0:
        raise ValueError(f"availability must be in [0,1], got {availability}")
    return (1.0 - availability) * capex_element
