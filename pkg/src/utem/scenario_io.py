"""On-disk document formats: scenarios, requirements, preferences, overlays, results.

All documents are UTF-8 JSON with a decimal point and no thousands
separators. Tri-states travel as the strings "true"/"false"/"na" so they stay
distinguishable from booleans. Money is stored at full precision; rounding to
two decimals happens only in the human-readable table format.
"""
from __future__ import annotations

import dataclasses
import io
import json
import csv as csv_module
from typing import Any, Dict, List, Mapping, Optional, Sequence, Tuple, Union

import jsonschema

from .forecast import DEFAULT_EPSILON
from .merit import (
    F2_DISPLAY_SCALE,
    Quadrant,
    QuadrantResult,
    RankingRow,
    RankingTable,
)
from .model import (
    AccessChain,
    AccessElement,
    Branch,
    CharacterizationVector,
    CompositeAccess,
    Contribution,
    EnvSupport,
    EvaluationResult,
    Geotype,
    ParamVerdict,
    PreferenceWeights,
    Range,
    RedundancyVerdict,
    RequirementsProfile,
    TriState,
    VerdictKind,
    PARAMETER_UNITS,
    validate_composite,
    validate_profile,
)


class DocumentError(Exception):
    """A document could not be used; `violations` holds path/message pairs."""

    def __init__(self, message: str, violations: Optional[Sequence[Tuple[str, str]]] = None):
        super().__init__(message)
        self.violations: List[Tuple[str, str]] = list(violations or [])


class SchemaError(DocumentError):
    """Structural problem: malformed JSON or JSON-schema violation."""


class ValidationFailure(DocumentError):
    """Well-formed document that breaks a semantic invariant."""


_TRISTATE = {"enum": ["true", "false", "na"]}
_MONEY_SERIES = {"type": "array", "items": {"type": "number", "minimum": 0}}
_NONNEG = {"type": "number", "minimum": 0}

_ELEMENT_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["name", "bw_rx_unit", "bw_tx_unit", "availability", "arpu", "capex", "opex"],
    "properties": {
        "name": {"type": "string"},
        "function": {"type": "string"},
        "bw_rx_unit": _NONNEG,
        "bw_tx_unit": _NONNEG,
        "availability": {"type": "number", "minimum": 0, "maximum": 1},
        "distance_m": {"type": ["number", "null"], "minimum": 0},
        "qos_capable": _TRISTATE,
        "redundancy_n": {"type": "integer", "minimum": 1},
        "los_needed": _TRISTATE,
        "license_needed": _TRISTATE,
        "freq_band_ghz": {"type": ["number", "null"], "minimum": 0},
        "users": {"type": "integer", "minimum": 1},
        "concurrency": {"type": "number", "exclusiveMinimum": 0, "maximum": 1},
        "wireless": {"type": "boolean"},
        "env_support": {
            "type": "array",
            "items": {"type": "boolean"},
            "minItems": 4,
            "maxItems": 4,
        },
        "weather_rx_loss": _NONNEG,
        "weather_tx_loss": _NONNEG,
        "ubiquity": _TRISTATE,
        "health_risk": {"type": "integer", "minimum": 0, "maximum": 3},
        "arpu": _MONEY_SERIES,
        "capex": _MONEY_SERIES,
        "opex": _MONEY_SERIES,
    },
}

_VECTOR_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": [
        "bw_rx_avg", "bw_tx_avg", "availability", "dist_to_ap_m", "dist_total_m",
        "arpu", "capex", "opex",
    ],
    "properties": {
        "bw_rx_avg": _NONNEG,
        "bw_tx_avg": _NONNEG,
        "availability": {"type": "number", "minimum": 0, "maximum": 1},
        "dist_to_ap_m": _NONNEG,
        "dist_total_m": _NONNEG,
        "arpu": _MONEY_SERIES,
        "capex": _MONEY_SERIES,
        "opex": _MONEY_SERIES,
        "qos_capable": _TRISTATE,
        "los_user_ap": _TRISTATE,
        "los_ap_node": _TRISTATE,
        "license_needed": _TRISTATE,
        "ubiquity": _TRISTATE,
        "health_risk": {"type": "integer", "minimum": 0, "maximum": 3},
        "env_support": {
            "type": "array",
            "items": {"type": "boolean"},
            "minItems": 4,
            "maxItems": 4,
        },
        "wireless_any": {"type": "boolean"},
    },
}

SCENARIO_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "Access scenario",
    "type": "object",
    "additionalProperties": False,
    "required": ["name", "study_period_t", "interest_rate_k", "branches"],
    "properties": {
        "name": {"type": "string"},
        "study_period_t": {"type": "integer", "minimum": 1},
        "interest_rate_k": {"type": "number", "exclusiveMinimum": -1},
        "branches": {
            "type": "array",
            "minItems": 1,
            "items": {
                "type": "object",
                "additionalProperties": False,
                "properties": {
                    "backup_mode": {"type": "boolean"},
                    "elements": {"type": "array", "minItems": 1, "items": _ELEMENT_SCHEMA},
                    "vector": _VECTOR_SCHEMA,
                },
                "oneOf": [{"required": ["elements"]}, {"required": ["vector"]}],
            },
        },
    },
}

_RANGE_SCHEMA = {
    "type": "object",
    "additionalProperties": False,
    "required": ["u_min", "u_max"],
    "properties": {"u_min": {"type": "number"}, "u_max": {"type": "number"}},
}

REQUIREMENTS_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "Customer requirements profile",
    "type": "object",
    "additionalProperties": False,
    "required": ["ranges"],
    "properties": {
        "ranges": {
            "type": "object",
            "propertyNames": {"enum": sorted(PARAMETER_UNITS)},
            "additionalProperties": _RANGE_SCHEMA,
        },
        "target_geotype": {"enum": [g.value for g in Geotype]},
        "consider_rain": {"type": "boolean"},
        "consider_fog": {"type": "boolean"},
        "consider_snow": {"type": "boolean"},
        "ubiquity_required": {"type": "boolean"},
    },
}

PREFERENCES_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "User preference weights",
    "type": "object",
    "additionalProperties": False,
    "required": ["a", "b"],
    "properties": {
        "a": {
            "type": "object",
            "propertyNames": {"enum": sorted(PARAMETER_UNITS)},
            "additionalProperties": {"type": "number"},
        },
        "b": {
            "type": "object",
            "propertyNames": {"enum": sorted(PARAMETER_UNITS)},
            "additionalProperties": {"type": "number"},
        },
    },
}

OVERLAY_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "External-model output overlay",
    "type": "object",
    "additionalProperties": False,
    "required": ["patches"],
    "properties": {
        "patches": {
            "type": "array",
            "items": {
                "type": "object",
                "additionalProperties": False,
                "required": ["branch", "element", "field", "value"],
                "properties": {
                    "branch": {"type": "integer", "minimum": 0},
                    "element": {"type": "integer", "minimum": 0},
                    "field": {"enum": ["arpu", "capex", "opex", "distance_m"]},
                    "value": {
                        "anyOf": [
                            {"type": "number", "minimum": 0},
                            _MONEY_SERIES,
                        ]
                    },
                },
            },
        }
    },
}


def _as_dict(document: Union[bytes, str, Mapping[str, Any]], what: str) -> Dict[str, Any]:
    if isinstance(document, Mapping):
        return dict(document)
    try:
        if isinstance(document, bytes):
            document = document.decode("utf-8")
        data = json.loads(document)
    except (UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise SchemaError(f"malformed {what} document: {exc}") from exc
    if not isinstance(data, dict):
        raise SchemaError(f"{what} document must be a JSON object")
    return data


def _check_schema(data: Mapping[str, Any], schema: Mapping[str, Any], what: str) -> None:
    validator = jsonschema.Draft202012Validator(schema)
    errors = sorted(validator.iter_errors(data), key=lambda e: list(e.absolute_path))
    if errors:
        violations = [(e.json_path, e.message) for e in errors]
        first = errors[0]
        raise SchemaError(f"invalid {what} document: {first.json_path}: {first.message}", violations)


def _tri(value: Optional[str], default: str = "na") -> TriState:
    return TriState(value if value is not None else default)


def _element_from_dict(data: Mapping[str, Any]) -> AccessElement:
    return AccessElement(
        name=data["name"],
        function=data.get("function", ""),
        bw_rx_unit=float(data["bw_rx_unit"]),
        bw_tx_unit=float(data["bw_tx_unit"]),
        availability=float(data["availability"]),
        distance_m=None if data.get("distance_m") is None else float(data["distance_m"]),
        qos_capable=_tri(data.get("qos_capable")),
        redundancy_n=int(data.get("redundancy_n", 1)),
        los_needed=_tri(data.get("los_needed")),
        license_needed=_tri(data.get("license_needed")),
        freq_band_ghz=None if data.get("freq_band_ghz") is None else float(data["freq_band_ghz"]),
        users=int(data.get("users", 1)),
        concurrency=float(data.get("concurrency", 1.0)),
        wireless=bool(data.get("wireless", False)),
        env_support=EnvSupport.from_tuple(data.get("env_support", (True, True, True, True))),
        weather_rx_loss=float(data.get("weather_rx_loss", 0.0)),
        weather_tx_loss=float(data.get("weather_tx_loss", 0.0)),
        ubiquity=_tri(data.get("ubiquity")),
        health_risk=int(data.get("health_risk", 0)),
        arpu=tuple(float(v) for v in data["arpu"]),
        capex=tuple(float(v) for v in data["capex"]),
        opex=tuple(float(v) for v in data["opex"]),
    )


def _vector_from_branch_dict(data: Mapping[str, Any]) -> CharacterizationVector:
    arpu = tuple(float(v) for v in data["arpu"])
    capex = tuple(float(v) for v in data["capex"])
    opex = tuple(float(v) for v in data["opex"])
    return CharacterizationVector(
        bw_rx_avg=float(data["bw_rx_avg"]),
        bw_tx_avg=float(data["bw_tx_avg"]),
        availability=float(data["availability"]),
        dist_to_ap_m=float(data["dist_to_ap_m"]),
        dist_total_m=float(data["dist_total_m"]),
        arpu=arpu,
        capex=capex,
        opex=opex,
        npv=0.0,
        net_cash_flow=0.0,
        payback_years=None,
        cost_first_year=(capex[0] + opex[0]) if capex and opex else 0.0,
        qos_capable=_tri(data.get("qos_capable")),
        los_user_ap=_tri(data.get("los_user_ap")),
        los_ap_node=_tri(data.get("los_ap_node")),
        license_needed=_tri(data.get("license_needed")),
        ubiquity=_tri(data.get("ubiquity")),
        health_risk=int(data.get("health_risk", 0)),
        env_support=EnvSupport.from_tuple(data.get("env_support", (True, True, True, True))),
        wireless_any=bool(data.get("wireless_any", False)),
    )


def parse_scenario(document: Union[bytes, str, Mapping[str, Any]]) -> CompositeAccess:
    """Parse and fully validate a scenario document."""
    data = _as_dict(document, "scenario")
    _check_schema(data, SCENARIO_SCHEMA, "scenario")
    period = int(data["study_period_t"])
    rate = float(data["interest_rate_k"])
    branches = []
    for branch_data in data["branches"]:
        backup = bool(branch_data.get("backup_mode", False))
        if "elements" in branch_data:
            chain = AccessChain(
                scenario_name=data["name"],
                elements=tuple(_element_from_dict(e) for e in branch_data["elements"]),
                study_period_t=period,
                interest_rate_k=rate,
            )
            branches.append(Branch(backup_mode=backup, chain=chain))
        else:
            branches.append(
                Branch(backup_mode=backup, vector=_vector_from_branch_dict(branch_data["vector"]))
            )
    composite = CompositeAccess(
        name=data["name"], branches=tuple(branches), study_period_t=period, interest_rate_k=rate
    )
    violations = validate_composite(composite)
    if violations:
        raise ValidationFailure(
            f"scenario violates invariants: {violations[0]}",
            [(v.path, v.message) for v in violations],
        )
    return composite


def parse_requirements(document: Union[bytes, str, Mapping[str, Any]]) -> RequirementsProfile:
    data = _as_dict(document, "requirements")
    _check_schema(data, REQUIREMENTS_SCHEMA, "requirements")
    ranges = {
        param: Range(float(r["u_min"]), float(r["u_max"])) for param, r in data["ranges"].items()
    }
    return RequirementsProfile(
        ranges=ranges,
        target_geotype=Geotype(data.get("target_geotype", "suburban")),
        consider_rain=bool(data.get("consider_rain", False)),
        consider_fog=bool(data.get("consider_fog", False)),
        consider_snow=bool(data.get("consider_snow", False)),
        ubiquity_required=bool(data.get("ubiquity_required", False)),
    )


def parse_preferences(document: Union[bytes, str, Mapping[str, Any]]) -> PreferenceWeights:
    data = _as_dict(document, "preferences")
    _check_schema(data, PREFERENCES_SCHEMA, "preferences")
    return PreferenceWeights.from_maps(
        {k: float(v) for k, v in data["a"].items()},
        {k: float(v) for k, v in data["b"].items()},
    )


def check_profile(req: RequirementsProfile, weights: PreferenceWeights) -> None:
    violations = validate_profile(req, weights)
    if violations:
        raise ValidationFailure(
            f"profile violates invariants: {violations[0]}",
            [(v.path, v.message) for v in violations],
        )


def import_external_outputs(
    composite: CompositeAccess, overlay: Union[bytes, str, Mapping[str, Any]]
) -> CompositeAccess:
    """Substitute money vectors or distances produced by an external model."""
    data = _as_dict(overlay, "overlay")
    _check_schema(data, OVERLAY_SCHEMA, "overlay")
    branches = list(composite.branches)
    for i, patch in enumerate(data["patches"]):
        b, e, field, value = patch["branch"], patch["element"], patch["field"], patch["value"]
        path = f"$.patches[{i}]"
        if b >= len(branches):
            raise ValidationFailure(f"{path}.branch: no branch {b}", [(path, f"no branch {b}")])
        branch = branches[b]
        if branch.chain is None:
            raise ValidationFailure(
                f"{path}: branch {b} is a precomputed vector, not patchable",
                [(path, "branch holds no elements")],
            )
        elements = list(branch.chain.elements)
        if e >= len(elements):
            raise ValidationFailure(f"{path}.element: no element {e}", [(path, f"no element {e}")])
        if field == "distance_m":
            if not isinstance(value, (int, float)):
                raise ValidationFailure(
                    f"{path}.value: distance must be a number", [(path, "not a number")]
                )
            elements[e] = dataclasses.replace(elements[e], distance_m=float(value))
        else:
            if not isinstance(value, list):
                raise ValidationFailure(
                    f"{path}.value: {field} must be a series", [(path, "not a series")]
                )
            if len(value) != composite.study_period_t:
                raise ValidationFailure(
                    f"{path}.value: series length {len(value)} != study period"
                    f" {composite.study_period_t}",
                    [(path, "length mismatch")],
                )
            elements[e] = dataclasses.replace(
                elements[e], **{field: tuple(float(v) for v in value)}
            )
        branches[b] = dataclasses.replace(
            branch, chain=dataclasses.replace(branch.chain, elements=tuple(elements))
        )
    return dataclasses.replace(composite, branches=tuple(branches))


# ---------------------------------------------------------------------------
# Serialization back to documents


def _element_to_dict(element: AccessElement) -> Dict[str, Any]:
    return {
        "name": element.name,
        "function": element.function,
        "bw_rx_unit": element.bw_rx_unit,
        "bw_tx_unit": element.bw_tx_unit,
        "availability": element.availability,
        "distance_m": element.distance_m,
        "qos_capable": element.qos_capable.value,
        "redundancy_n": element.redundancy_n,
        "los_needed": element.los_needed.value,
        "license_needed": element.license_needed.value,
        "freq_band_ghz": element.freq_band_ghz,
        "users": element.users,
        "concurrency": element.concurrency,
        "wireless": element.wireless,
        "env_support": list(element.env_support.as_tuple()),
        "weather_rx_loss": element.weather_rx_loss,
        "weather_tx_loss": element.weather_tx_loss,
        "ubiquity": element.ubiquity.value,
        "health_risk": element.health_risk,
        "arpu": list(element.arpu),
        "capex": list(element.capex),
        "opex": list(element.opex),
    }


def scenario_to_dict(composite: CompositeAccess) -> Dict[str, Any]:
    branches = []
    for branch in composite.branches:
        entry: Dict[str, Any] = {"backup_mode": branch.backup_mode}
        if branch.chain is not None:
            entry["elements"] = [_element_to_dict(e) for e in branch.chain.elements]
        else:
            v = branch.vector
            entry["vector"] = {
                "bw_rx_avg": v.bw_rx_avg,
                "bw_tx_avg": v.bw_tx_avg,
                "availability": v.availability,
                "dist_to_ap_m": v.dist_to_ap_m,
                "dist_total_m": v.dist_total_m,
                "arpu": list(v.arpu),
                "capex": list(v.capex),
                "opex": list(v.opex),
                "qos_capable": v.qos_capable.value,
                "los_user_ap": v.los_user_ap.value,
                "los_ap_node": v.los_ap_node.value,
                "license_needed": v.license_needed.value,
                "ubiquity": v.ubiquity.value,
                "health_risk": v.health_risk,
                "env_support": list(v.env_support.as_tuple()),
                "wireless_any": v.wireless_any,
            }
        branches.append(entry)
    return {
        "name": composite.name,
        "study_period_t": composite.study_period_t,
        "interest_rate_k": composite.interest_rate_k,
        "branches": branches,
    }


def requirements_to_dict(req: RequirementsProfile) -> Dict[str, Any]:
    return {
        "ranges": {
            param: {"u_min": rng.u_min, "u_max": rng.u_max}
            for param, rng in req.ranges.items()
        },
        "target_geotype": req.target_geotype.value,
        "consider_rain": req.consider_rain,
        "consider_fog": req.consider_fog,
        "consider_snow": req.consider_snow,
        "ubiquity_required": req.ubiquity_required,
    }


def preferences_to_dict(weights: PreferenceWeights) -> Dict[str, Any]:
    return {"a": dict(weights.a), "b": dict(weights.b)}


def to_json_bytes(data: Mapping[str, Any]) -> bytes:
    return (json.dumps(data, indent=2, allow_nan=False) + "\n").encode("utf-8")


# ---------------------------------------------------------------------------
# Result emission

VERDICT_ROW_ORDER = (
    "bw_rx_avg", "bw_tx_avg", "availability", "dist_to_ap_m", "dist_total_m",
    "cost_first_year", "qos_capable", "los_user_ap", "los_ap_node",
    "license_needed", "ubiquity", "health_risk", "env_support",
)


def _tri_or_value(value: Any) -> Any:
    if isinstance(value, TriState):
        return value.value
    return value


def vector_to_dict(vector: CharacterizationVector) -> Dict[str, Any]:
    return {
        "bw_rx_avg": vector.bw_rx_avg,
        "bw_tx_avg": vector.bw_tx_avg,
        "availability": vector.availability,
        "dist_to_ap_m": vector.dist_to_ap_m,
        "dist_total_m": vector.dist_total_m,
        "arpu": list(vector.arpu),
        "capex": list(vector.capex),
        "opex": list(vector.opex),
        "npv": vector.npv,
        "net_cash_flow": vector.net_cash_flow,
        "payback_years": vector.payback_years,
        "cost_first_year": vector.cost_first_year,
        "qos_capable": vector.qos_capable.value,
        "los_user_ap": vector.los_user_ap.value,
        "los_ap_node": vector.los_ap_node.value,
        "license_needed": vector.license_needed.value,
        "ubiquity": vector.ubiquity.value,
        "health_risk": vector.health_risk,
        "env_support": list(vector.env_support.as_tuple()),
        "wireless_any": vector.wireless_any,
    }


def vector_from_dict(data: Mapping[str, Any]) -> CharacterizationVector:
    return CharacterizationVector(
        bw_rx_avg=data["bw_rx_avg"],
        bw_tx_avg=data["bw_tx_avg"],
        availability=data["availability"],
        dist_to_ap_m=data["dist_to_ap_m"],
        dist_total_m=data["dist_total_m"],
        arpu=tuple(data["arpu"]),
        capex=tuple(data["capex"]),
        opex=tuple(data["opex"]),
        npv=data["npv"],
        net_cash_flow=data["net_cash_flow"],
        payback_years=data["payback_years"],
        cost_first_year=data["cost_first_year"],
        qos_capable=TriState(data["qos_capable"]),
        los_user_ap=TriState(data["los_user_ap"]),
        los_ap_node=TriState(data["los_ap_node"]),
        license_needed=TriState(data["license_needed"]),
        ubiquity=TriState(data["ubiquity"]),
        health_risk=data["health_risk"],
        env_support=EnvSupport.from_tuple(data["env_support"]),
        wireless_any=data["wireless_any"],
    )


def verdict_to_dict(verdict: RedundancyVerdict) -> Dict[str, Any]:
    per_param = {}
    for param in VERDICT_ROW_ORDER:
        if param not in verdict.per_param:
            continue
        pv = verdict.per_param[param]
        per_param[param] = {"kind": pv.kind.value, "copies": pv.copies, "reason": pv.reason}
    for param, pv in verdict.per_param.items():
        if param not in per_param:
            per_param[param] = {"kind": pv.kind.value, "copies": pv.copies, "reason": pv.reason}
    return {
        "per_param": per_param,
        "overall": verdict.overall_r,
        "blocking": list(verdict.blocking),
        "failure_reason": verdict.failure_reason,
    }


def verdict_from_dict(data: Mapping[str, Any]) -> RedundancyVerdict:
    per_param = {
        param: ParamVerdict(VerdictKind(pv["kind"]), copies=pv["copies"], reason=pv["reason"])
        for param, pv in data["per_param"].items()
    }
    return RedundancyVerdict(
        per_param=per_param,
        overall_r=data["overall"],
        blocking=tuple(data["blocking"]),
        failure_reason=data["failure_reason"],
    )


def result_to_dict(result: EvaluationResult) -> Dict[str, Any]:
    return {
        "vector": vector_to_dict(result.vector),
        "contributions": {
            param: {"a_term": c.a_term, "b_term": c.b_term}
            for param, c in result.contributions.items()
        },
        "f1": result.f1,
        "f1_percent": result.f1 * 100.0,
        "f2_per_eur": result.f2,
        "f2_pct_per_keur": result.f2 * F2_DISPLAY_SCALE,
        "redundancy": verdict_to_dict(result.redundancy),
    }


def result_from_dict(data: Mapping[str, Any]) -> EvaluationResult:
    return EvaluationResult(
        vector=vector_from_dict(data["vector"]),
        contributions={
            param: Contribution(c["a_term"], c["b_term"])
            for param, c in data["contributions"].items()
        },
        f1=data["f1"],
        f2=data["f2_per_eur"],
        redundancy=verdict_from_dict(data["redundancy"]),
    )


def ranking_to_dict(table: RankingTable) -> Dict[str, Any]:
    return {
        "metric": table.metric,
        "rows": [
            {
                "name": row.name,
                "vector": vector_to_dict(row.vector),
                "f1": row.f1,
                "f1_percent": row.f1 * 100.0,
                "f2_per_eur": row.f2,
                "f2_pct_per_keur": row.f2 * F2_DISPLAY_SCALE,
                "r": row.r,
            }
            for row in table.rows
        ],
    }


def quadrant_to_dict(result: QuadrantResult) -> Dict[str, Any]:
    return {
        "merit_threshold": result.merit_threshold,
        "cost_threshold": result.cost_threshold,
        "assignments": {name: q.value for name, q in sorted(result.assignments.items())},
    }


def _fmt(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return format(value, ".12g")
    if value is None:
        return ""
    return str(value)


def _fmt_money(value: float) -> str:
    return f"{value:,.2f}"


def _scalar_rows(result: EvaluationResult) -> List[Tuple[str, Any]]:
    v = result.vector
    rows: List[Tuple[str, Any]] = [
        ("bw_rx_avg", v.bw_rx_avg),
        ("bw_tx_avg", v.bw_tx_avg),
        ("availability", v.availability),
        ("dist_to_ap_m", v.dist_to_ap_m),
        ("dist_total_m", v.dist_total_m),
    ]
    for year, value in enumerate(v.arpu, start=1):
        rows.append((f"arpu_year_{year}", value))
    for year, value in enumerate(v.capex, start=1):
        rows.append((f"capex_year_{year}", value))
    for year, value in enumerate(v.opex, start=1):
        rows.append((f"opex_year_{year}", value))
    rows += [
        ("npv", v.npv),
        ("net_cash_flow", v.net_cash_flow),
        ("payback_years", v.payback_years),
        ("cost_first_year", v.cost_first_year),
        ("qos_capable", v.qos_capable.value),
        ("los_user_ap", v.los_user_ap.value),
        ("los_ap_node", v.los_ap_node.value),
        ("license_needed", v.license_needed.value),
        ("ubiquity", v.ubiquity.value),
        ("health_risk", v.health_risk),
        ("env_support", "|".join(g for g, ok in zip(
            ("dense_urban", "urban", "suburban", "rural"), v.env_support.as_tuple()) if ok)),
        ("wireless_any", v.wireless_any),
    ]
    return rows


def _result_csv(result: EvaluationResult) -> str:
    out = io.StringIO()
    writer = csv_module.writer(out, lineterminator="\n")
    writer.writerow(["parameter", "value", "a_term", "b_term"])
    for param, value in _scalar_rows(result):
        contribution = result.contributions.get(param)
        writer.writerow([
            param,
            _fmt(value),
            _fmt(contribution.a_term) if contribution else "",
            _fmt(contribution.b_term) if contribution else "",
        ])
    writer.writerow(["f1", _fmt(result.f1), "", ""])
    writer.writerow(["f1_percent", _fmt(result.f1 * 100.0), "", ""])
    writer.writerow(["f2_pct_per_keur", _fmt(result.f2 * F2_DISPLAY_SCALE), "", ""])
    writer.writerow(["redundancy_r", _fmt(result.redundancy.overall_r), "", ""])
    return out.getvalue()


def _verdict_lines(verdict: RedundancyVerdict) -> List[str]:
    lines = []
    for param in VERDICT_ROW_ORDER:
        pv = verdict.per_param.get(param)
        if pv is None:
            continue
        if pv.kind is VerdictKind.COPIES:
            cell = str(pv.copies)
        elif pv.kind is VerdictKind.COMPLIES:
            cell = "complies"
        else:
            cell = f"fails ({pv.reason})"
        lines.append(f"  {param:<16} {cell}")
    if verdict.ok:
        lines.append(f"  => meets requirements with R = {verdict.overall_r}")
    else:
        lines.append(
            f"  => does not meet requirements ({verdict.failure_reason}); "
            f"blocking: {', '.join(verdict.blocking)}"
        )
    return lines


def _result_table(result: EvaluationResult) -> str:
    v = result.vector
    lines = [f"{'parameter':<18} {'value':>14} {'a-weighted':>12} {'b-weighted':>12}"]
    for param, value in _scalar_rows(result):
        contribution = result.contributions.get(param)
        if isinstance(value, float):
            shown = _fmt_money(value) if "year" in param or param in (
                "npv", "net_cash_flow", "cost_first_year") else f"{value:.6g}"
        else:
            shown = _fmt(value)
        a_cell = f"{contribution.a_term:+.4f}" if contribution else ""
        b_cell = f"{contribution.b_term:.4f}" if contribution else ""
        lines.append(f"{param:<18} {shown:>14} {a_cell:>12} {b_cell:>12}")
    lines.append("")
    lines.append(f"F1 = {result.f1 * 100.0:.2f} %")
    lines.append(f"F2 = {result.f2 * F2_DISPLAY_SCALE:.2f} %/K EUR")
    lines.append("redundancy:")
    lines.extend(_verdict_lines(result.redundancy))
    return "\n".join(lines) + "\n"


def _ranking_csv(table: RankingTable) -> str:
    out = io.StringIO()
    writer = csv_module.writer(out, lineterminator="\n")
    writer.writerow([
        "name", "bw_rx_avg", "bw_tx_avg", "availability", "dist_to_ap_m", "dist_total_m",
        "cost_first_year", "npv", "net_cash_flow", "f1", "f2_pct_per_keur", "r",
    ])
    for row in table.rows:
        v = row.vector
        writer.writerow([
            row.name, _fmt(v.bw_rx_avg), _fmt(v.bw_tx_avg), _fmt(v.availability),
            _fmt(v.dist_to_ap_m), _fmt(v.dist_total_m), _fmt(v.cost_first_year),
            _fmt(v.npv), _fmt(v.net_cash_flow), _fmt(row.f1),
            _fmt(row.f2 * F2_DISPLAY_SCALE), _fmt(row.r),
        ])
    return out.getvalue()


def _ranking_table_text(table: RankingTable) -> str:
    header = (
        f"{'name':<34} {'rx Mbit/s':>10} {'tx Mbit/s':>10} {'avail %':>10} "
        f"{'cost EUR':>12} {'F1 %':>9} {'F2 %/KEUR':>10} {'R':>5}"
    )
    lines = [f"ranking by {table.metric}", header, "-" * len(header)]
    for row in table.rows:
        v = row.vector
        r_cell = str(row.r) if row.r is not None else "fails"
        lines.append(
            f"{row.name:<34} {v.bw_rx_avg:>10.4g} {v.bw_tx_avg:>10.4g} "
            f"{v.availability * 100:>10.4f} {v.cost_first_year:>12,.2f} "
            f"{row.f1 * 100:>9.2f} {row.f2 * F2_DISPLAY_SCALE:>10.2f} {r_cell:>5}"
        )
    return "\n".join(lines) + "\n"


def _quadrant_csv(result: QuadrantResult) -> str:
    out = io.StringIO()
    writer = csv_module.writer(out, lineterminator="\n")
    writer.writerow(["name", "quadrant"])
    for name, quadrant in sorted(result.assignments.items()):
        writer.writerow([name, quadrant.value])
    return out.getvalue()


def _quadrant_table_text(result: QuadrantResult) -> str:
    lines = []
    if result.merit_threshold is not None:
        lines.append(
            f"thresholds: merit {result.merit_threshold:.4g}, "
            f"cost {result.cost_threshold:,.2f} EUR"
        )
    for quadrant in Quadrant:
        members = sorted(n for n, q in result.assignments.items() if q is quadrant)
        if members:
            lines.append(f"{quadrant.value:<22} {', '.join(members)}")
    return "\n".join(lines) + "\n"


def forecast_to_dict(
    f1_value: float,
    points: Sequence[Tuple[int, float]],
    saturation: Optional[int],
    epsilon: float = DEFAULT_EPSILON,
) -> Dict[str, Any]:
    return {
        "f1": f1_value,
        "epsilon": epsilon,
        "points": [
            {"year": year, "f2_per_eur": value, "f2_pct_per_keur": value * F2_DISPLAY_SCALE}
            for year, value in points
        ],
        "saturation_year": saturation,
    }


def _forecast_csv(data: Mapping[str, Any]) -> str:
    out = io.StringIO()
    writer = csv_module.writer(out, lineterminator="\n")
    writer.writerow(["year", "f2_per_eur", "f2_pct_per_keur"])
    for point in data["points"]:
        writer.writerow([point["year"], _fmt(point["f2_per_eur"]), _fmt(point["f2_pct_per_keur"])])
    writer.writerow(["saturation_year", _fmt(data["saturation_year"]), ""])
    return out.getvalue()


def _forecast_table_text(data: Mapping[str, Any]) -> str:
    lines = [f"{'year':>6} {'F2 %/KEUR':>12}"]
    for point in data["points"]:
        lines.append(f"{point['year']:>6} {point['f2_pct_per_keur']:>12.2f}")
    saturation = data["saturation_year"]
    lines.append(
        f"saturation year: {saturation}" if saturation is not None else "saturation year: none"
    )
    return "\n".join(lines) + "\n"


def emit_results(result: Any, format: str = "json") -> bytes:
    """Render a result (evaluation, ranking, quadrant or forecast) as bytes."""
    if format not in ("json", "csv", "table"):
        raise ValueError(f"format must be json, csv or table, got {format!r}")
    if isinstance(result, EvaluationResult):
        data: Mapping[str, Any] = result_to_dict(result)
        csv_text, table_text = _result_csv(result), _result_table(result)
    elif isinstance(result, RankingTable):
        data = ranking_to_dict(result)
        csv_text, table_text = _ranking_csv(result), _ranking_table_text(result)
    elif isinstance(result, QuadrantResult):
        data = quadrant_to_dict(result)
        csv_text, table_text = _quadrant_csv(result), _quadrant_table_text(result)
    elif isinstance(result, Mapping) and "points" in result:
        data = result
        csv_text, table_text = _forecast_csv(result), _forecast_table_text(result)
    else:
        raise TypeError(f"cannot emit {type(result).__name__}")
    if format == "json":
        return to_json_bytes(data)
    return (csv_text if format == "csv" else table_text).encode("utf-8")
