"""Domain types shared by the evaluation engine.

Everything here is immutable after construction; values can be shared freely
across threads. Validation is data, not control flow: ``validate_chain`` and
``validate_profile`` return lists of :class:`Violation` instead of raising.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Mapping, Optional, Sequence, Tuple, Union


class EvaluationError(Exception):
    """Raised when an evaluation cannot produce a result (not for bad documents)."""


class TriState(enum.Enum):
    """Explicit three-valued flag; NA is a real value, never a missing field."""

    TRUE = "true"
    FALSE = "false"
    NA = "na"

    @property
    def is_true(self) -> bool:
        return self is TriState.TRUE

    @property
    def is_na(self) -> bool:
        return self is TriState.NA

    @classmethod
    def of(cls, value: Union[bool, str, "TriState", None]) -> "TriState":
        if isinstance(value, TriState):
            return value
        if value is None:
            return cls.NA
        if isinstance(value, bool):
            return cls.TRUE if value else cls.FALSE
        return cls(str(value).lower())


class Geotype(enum.Enum):
    DENSE_URBAN = "dense_urban"
    URBAN = "urban"
    SUBURBAN = "suburban"
    RURAL = "rural"


GEOTYPE_ORDER: Tuple[Geotype, ...] = (
    Geotype.DENSE_URBAN,
    Geotype.URBAN,
    Geotype.SUBURBAN,
    Geotype.RURAL,
)


@dataclass(frozen=True)
class EnvSupport:
    """Which coverage environments an element (or access) can serve."""

    dense_urban: bool = True
    urban: bool = True
    suburban: bool = True
    rural: bool = True

    def supports(self, geotype: Geotype) -> bool:
        return getattr(self, geotype.value)

    def as_tuple(self) -> Tuple[bool, bool, bool, bool]:
        return (self.dense_urban, self.urban, self.suburban, self.rural)

    @classmethod
    def from_tuple(cls, flags: Sequence[bool]) -> "EnvSupport":
        return cls(*(bool(f) for f in flags))

    def intersect(self, other: "EnvSupport") -> "EnvSupport":
        return EnvSupport(
            self.dense_urban and other.dense_urban,
            self.urban and other.urban,
            self.suburban and other.suburban,
            self.rural and other.rural,
        )


@dataclass(frozen=True)
class AccessElement:
    """One column of the input matrix: a single component of an access chain."""

    name: str
    function: str = ""
    bw_rx_unit: float = 0.0
    bw_tx_unit: float = 0.0
    availability: float = 1.0
    distance_m: Optional[float] = None
    qos_capable: TriState = TriState.NA
    redundancy_n: int = 1
    los_needed: TriState = TriState.NA
    license_needed: TriState = TriState.NA
    freq_band_ghz: Optional[float] = None
    users: int = 1
    concurrency: float = 1.0
    wireless: bool = False
    env_support: EnvSupport = EnvSupport()
    weather_rx_loss: float = 0.0
    weather_tx_loss: float = 0.0
    ubiquity: TriState = TriState.NA
    health_risk: int = 0
    arpu: Tuple[float, ...] = ()
    capex: Tuple[float, ...] = ()
    opex: Tuple[float, ...] = ()


@dataclass(frozen=True)
class AccessChain:
    """Ordered series of elements, index 0 closest to the end user."""

    scenario_name: str
    elements: Tuple[AccessElement, ...]
    study_period_t: int
    interest_rate_k: float


@dataclass(frozen=True)
class CharacterizationVector:
    """Equivalent technical + economic parameters of one access."""

    bw_rx_avg: float
    bw_tx_avg: float
    availability: float
    dist_to_ap_m: float
    dist_total_m: float
    arpu: Tuple[float, ...]
    capex: Tuple[float, ...]
    opex: Tuple[float, ...]
    npv: float
    net_cash_flow: float
    payback_years: Optional[int]
    cost_first_year: float
    qos_capable: TriState
    los_user_ap: TriState
    los_ap_node: TriState
    license_needed: TriState
    ubiquity: TriState
    health_risk: int
    env_support: EnvSupport
    wireless_any: bool


@dataclass(frozen=True)
class Branch:
    """One parallel branch: either a chain to characterize or a precomputed vector."""

    backup_mode: bool = False
    chain: Optional[AccessChain] = None
    vector: Optional[CharacterizationVector] = None

    def __post_init__(self) -> None:
        if (self.chain is None) == (self.vector is None):
            raise ValueError("branch needs exactly one of chain or vector")


@dataclass(frozen=True)
class CompositeAccess:
    name: str
    branches: Tuple[Branch, ...]
    study_period_t: int
    interest_rate_k: float


@dataclass(frozen=True)
class Range:
    u_min: float
    u_max: float

    @property
    def width(self) -> float:
        return self.u_max - self.u_min


@dataclass(frozen=True)
class RequirementsProfile:
    """Customer requirement ranges plus evaluation context flags."""

    ranges: Mapping[str, Range]
    target_geotype: Geotype = Geotype.SUBURBAN
    consider_rain: bool = False
    consider_fog: bool = False
    consider_snow: bool = False
    ubiquity_required: bool = False

    @property
    def weather_on(self) -> bool:
        return self.consider_rain or self.consider_fog or self.consider_snow


@dataclass(frozen=True)
class PreferenceWeights:
    """Per-parameter weights: `a` scores normalized performance, `b` builds the cost denominator."""

    a: Mapping[str, float]
    b: Mapping[str, float]
    positive_a_sum: float

    @classmethod
    def from_maps(cls, a: Mapping[str, float], b: Mapping[str, float]) -> "PreferenceWeights":
        return cls(a=dict(a), b=dict(b), positive_a_sum=sum(w for w in a.values() if w > 0))


@dataclass(frozen=True)
class Contribution:
    a_term: float
    b_term: float


class VerdictKind(enum.Enum):
    COPIES = "copies"
    COMPLIES = "complies"
    FAILS = "fails"


@dataclass(frozen=True)
class ParamVerdict:
    kind: VerdictKind
    copies: Optional[int] = None
    reason: Optional[str] = None


@dataclass(frozen=True)
class RedundancyVerdict:
    """Per-parameter sizing/compliance results and the overall minimum copy count."""

    per_param: Mapping[str, ParamVerdict]
    overall_r: Optional[int]
    blocking: Tuple[str, ...] = ()
    failure_reason: Optional[str] = None

    @property
    def ok(self) -> bool:
        return self.overall_r is not None


@dataclass(frozen=True)
class EvaluationResult:
    vector: CharacterizationVector
    contributions: Mapping[str, Contribution]
    f1: float
    f2: float
    redundancy: RedundancyVerdict


@dataclass(frozen=True)
class Violation:
    path: str
    message: str

    def __str__(self) -> str:  # pragma: no cover - repr convenience
        return f"{self.path}: {self.message}"


# Scalar output parameters that ranges/weights may address, with their unit class.
# Unit classes: mbps, probability, meters, eur, bool, level.
PARAMETER_UNITS: Mapping[str, str] = {
    "bw_rx_avg": "mbps",
    "bw_tx_avg": "mbps",
    "availability": "probability",
    "dist_to_ap_m": "meters",
    "dist_total_m": "meters",
    "cost_first_year": "eur",
    "npv": "eur",
    "net_cash_flow": "eur",
    "qos_capable": "bool",
    "los_user_ap": "bool",
    "los_ap_node": "bool",
    "license_needed": "bool",
    "ubiquity": "bool",
    "health_risk": "level",
}

MONEY_PARAMETERS = frozenset(k for k, unit in PARAMETER_UNITS.items() if unit == "eur")


def parameter_value(vector: CharacterizationVector, param: str):
    """Raw value of a scoreable parameter (tri-states stay tri-states)."""
    return getattr(vector, param)


def _check_money_series(
    violations: list, path: str, name: str, series: Sequence[float], period: int
) -> None:
    if len(series) != period:
        violations.append(
            Violation(path + "." + name, f"series length {len(series)} != study period {period}")
        )
    for i, v in enumerate(series):
        if not math.isfinite(v) or v < 0:
            violations.append(Violation(f"{path}.{name}[{i}]", f"must be >= 0, got {v}"))


def validate_element(element: AccessElement, path: str, period: int) -> list:
    violations: list = []
    if not 0.0 <= element.availability <= 1.0:
        violations.append(
            Violation(path + ".availability", f"must be in [0,1], got {element.availability}")
        )
    if not 0.0 < element.concurrency <= 1.0:
        violations.append(
            Violation(path + ".concurrency", f"must be in (0,1], got {element.concurrency}")
        )
    for name in ("bw_rx_unit", "bw_tx_unit", "weather_rx_loss", "weather_tx_loss"):
        value = getattr(element, name)
        if not math.isfinite(value) or value < 0:
            violations.append(Violation(f"{path}.{name}", f"must be >= 0, got {value}"))
    if element.distance_m is not None and (
        not math.isfinite(element.distance_m) or element.distance_m < 0
    ):
        violations.append(Violation(path + ".distance_m", f"must be >= 0, got {element.distance_m}"))
    if element.redundancy_n < 1:
        violations.append(Violation(path + ".redundancy_n", f"must be >= 1, got {element.redundancy_n}"))
    if element.users < 1:
        violations.append(Violation(path + ".users", f"must be >= 1, got {element.users}"))
    if element.health_risk not in (0, 1, 2, 3):
        violations.append(Violation(path + ".health_risk", f"must be 0..3, got {element.health_risk}"))
    for name in ("arpu", "capex", "opex"):
        _check_money_series(violations, path, name, getattr(element, name), period)
    return violations


def validate_chain(chain: AccessChain, path: str = "chain") -> list:
    """Every invariant violation in the chain; empty list means valid. Never raises."""
    violations: list = []
    if not chain.elements:
        violations.append(Violation(path + ".elements", "chain needs at least one element"))
    if chain.study_period_t < 1:
        violations.append(
            Violation(path + ".study_period_t", f"must be >= 1, got {chain.study_period_t}")
        )
    if chain.interest_rate_k <= -1.0:
        violations.append(
            Violation(path + ".interest_rate_k", f"must be > -1, got {chain.interest_rate_k}")
        )
    for i, element in enumerate(chain.elements):
        violations.extend(validate_element(element, f"{path}.elements[{i}]", chain.study_period_t))
    return violations


def validate_composite(composite: CompositeAccess) -> list:
    violations: list = []
    if not composite.branches:
        violations.append(Violation("branches", "composite needs at least one branch"))
        return violations
    if all(branch.backup_mode for branch in composite.branches):
        violations.append(Violation("branches", "at least one branch must not be in backup mode"))
    for i, branch in enumerate(composite.branches):
        if branch.chain is not None:
            if branch.chain.study_period_t != composite.study_period_t:
                violations.append(
                    Violation(
                        f"branches[{i}].study_period_t",
                        "study period differs from composite",
                    )
                )
            violations.extend(validate_chain(branch.chain, f"branches[{i}]"))
        else:
            vec = branch.vector
            for name in ("arpu", "capex", "opex"):
                _check_money_series(
                    violations, f"branches[{i}]", name, getattr(vec, name), composite.study_period_t
                )
            if not 0.0 <= vec.availability <= 1.0:
                violations.append(
                    Violation(f"branches[{i}].availability", f"must be in [0,1], got {vec.availability}")
                )
    return violations


def validate_profile(req: RequirementsProfile, weights: PreferenceWeights) -> list:
    """Range sanity plus the divisions the merit figures are about to perform."""
    violations: list = []
    for param, rng in req.ranges.items():
        if param not in PARAMETER_UNITS:
            violations.append(Violation(f"ranges.{param}", "unknown output parameter"))
            continue
        if rng.u_min > rng.u_max:
            violations.append(
                Violation(f"ranges.{param}", f"u_min {rng.u_min} > u_max {rng.u_max}")
            )
    for param, weight in weights.a.items():
        if param not in PARAMETER_UNITS:
            violations.append(Violation(f"a.{param}", "unknown output parameter"))
            continue
        if weight == 0:
            continue
        rng = req.ranges.get(param)
        if rng is None:
            violations.append(Violation(f"a.{param}", "weighted parameter has no requirement range"))
        elif rng.width == 0:
            violations.append(
                Violation(f"ranges.{param}", "zero-width range on a weighted parameter")
            )
    unit_seen = None
    for param, weight in weights.b.items():
        if param not in PARAMETER_UNITS:
            violations.append(Violation(f"b.{param}", "unknown output parameter"))
            continue
        if weight == 0:
            continue
        unit = PARAMETER_UNITS[param]
        if unit_seen is None:
            unit_seen = unit
        elif unit != unit_seen:
            violations.append(
                Violation(f"b.{param}", f"mixed units in cost denominator ({unit} vs {unit_seen})")
            )
    if weights.positive_a_sum <= 0:
        violations.append(Violation("a", "sum of positive a weights must be > 0"))
    return violations
