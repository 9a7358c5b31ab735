"""Techno-economic evaluation of network access technologies.

Characterizes serial/parallel compositions of access elements into a single
technical+economic vector, sizes minimum redundancy against a customer
requirements profile, ranks technologies by the F1/F2 figures of merit,
classifies them into cost/benefit quadrants, and forecasts deployment timing
from cost evolution.
"""
from .model import (
    AccessChain,
    AccessElement,
    Branch,
    CharacterizationVector,
    CompositeAccess,
    Contribution,
    EnvSupport,
    EvaluationError,
    EvaluationResult,
    Geotype,
    ParamVerdict,
    PreferenceWeights,
    Range,
    RedundancyVerdict,
    RequirementsProfile,
    TriState,
    VerdictKind,
    Violation,
    validate_chain,
    validate_composite,
    validate_profile,
)
from .characterization import (
    effective_unit_bandwidth,
    element_availability,
    parallel_characterize,
    series_characterize,
)
from .finance import (
    estimate_opex_from_availability,
    irr,
    net_cash_flow,
    npv,
    payback_period,
)
from .redundancy import (
    R_MAX,
    UnreachableRequirement,
    min_copies_for_availability,
    min_copies_for_bandwidth,
    min_redundancy,
)
from .merit import (
    F2_DISPLAY_SCALE,
    Quadrant,
    QuadrantResult,
    RankingRow,
    RankingTable,
    compare,
    contributions,
    f1,
    f2,
    normalize,
    quadrant_classify,
)
from .forecast import f2_series, saturation_year
from .engine import characterize, evaluate, quadrants_for
from .engine import compare as compare_scenarios
from .scenario_io import (
    DocumentError,
    SchemaError,
    ValidationFailure,
    emit_results,
    import_external_outputs,
    parse_preferences,
    parse_requirements,
    parse_scenario,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
