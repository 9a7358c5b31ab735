"""Domain type validation and its totality."""
import dataclasses

import pytest
from hypothesis import given, strategies as st

import utem
from utem.model import (
    PARAMETER_UNITS,
    CharacterizationVector,
    PreferenceWeights,
    Range,
    TriState,
    validate_chain,
    validate_profile,
)


class TestValidateChain:
    def test_adsl_is_clean(self, adsl_chain):
        assert validate_chain(adsl_chain) == []

    def test_availability_out_of_range(self, adsl_chain):
        elements = list(adsl_chain.elements)
        elements[1] = dataclasses.replace(elements[1], availability=1.2)
        bad = dataclasses.replace(adsl_chain, elements=tuple(elements))
        violations = validate_chain(bad)
        assert any("elements[1].availability" in v.path for v in violations)

    def test_series_length_mismatch(self, adsl_chain):
        elements = list(adsl_chain.elements)
        elements[0] = dataclasses.replace(elements[0], arpu=(416.54, 363.60))
        bad = dataclasses.replace(adsl_chain, elements=tuple(elements))
        violations = validate_chain(bad)
        assert any("arpu" in v.path and "length" in v.message for v in violations)

    def test_empty_chain(self):
        chain = utem.AccessChain("x", (), study_period_t=1, interest_rate_k=0.0)
        assert validate_chain(chain)

    @given(
        availability=st.floats(allow_nan=False, allow_infinity=False),
        concurrency=st.floats(allow_nan=False, allow_infinity=False),
        users=st.integers(min_value=-10, max_value=10),
        redundancy_n=st.integers(min_value=-10, max_value=10),
        health=st.integers(min_value=-5, max_value=10),
        bw=st.floats(allow_nan=False, allow_infinity=False),
    )
    def test_total_on_finite_inputs(self, availability, concurrency, users, redundancy_n, health, bw):
        element = utem.AccessElement(
            name="x", bw_rx_unit=bw, bw_tx_unit=bw, availability=availability,
            concurrency=concurrency, users=users, redundancy_n=redundancy_n,
            health_risk=health, arpu=(0.0,), capex=(0.0,), opex=(0.0,),
        )
        chain = utem.AccessChain("x", (element,), study_period_t=1, interest_rate_k=0.01)
        violations = validate_chain(chain)  # must never raise
        assert isinstance(violations, list)


class TestValidateProfile:
    def test_bundled_profile_is_clean(self, requirements_2015, weights_default):
        assert validate_profile(requirements_2015, weights_default) == []

    def test_zero_width_weighted_range(self, requirements_2015, weights_default):
        ranges = dict(requirements_2015.ranges)
        ranges["availability"] = Range(0.9999, 0.9999)
        bad = dataclasses.replace(requirements_2015, ranges=ranges)
        violations = validate_profile(bad, weights_default)
        assert any("zero-width" in v.message for v in violations)

    def test_all_nonpositive_weights(self, requirements_2015):
        weights = PreferenceWeights.from_maps(
            {"bw_rx_avg": -1.0, "qos_capable": 0.0}, {"cost_first_year": 1.0}
        )
        violations = validate_profile(requirements_2015, weights)
        assert any("positive" in v.message for v in violations)

    def test_inverted_range(self, requirements_2015, weights_default):
        ranges = dict(requirements_2015.ranges)
        ranges["bw_rx_avg"] = Range(100, 30)
        violations = validate_profile(
            dataclasses.replace(requirements_2015, ranges=ranges), weights_default
        )
        assert any("u_min" in v.message for v in violations)

    def test_unknown_parameter_flagged(self, requirements_2015):
        weights = PreferenceWeights.from_maps({"no_such_param": 1.0}, {})
        violations = validate_profile(requirements_2015, weights)
        assert any("unknown" in v.message for v in violations)

    def test_mixed_unit_cost_denominator(self, requirements_2015):
        weights = PreferenceWeights.from_maps(
            {"bw_rx_avg": 1.0}, {"cost_first_year": 1.0, "bw_rx_avg": 1.0}
        )
        violations = validate_profile(requirements_2015, weights)
        assert any("mixed units" in v.message for v in violations)


class TestParameterRegistry:
    def test_every_scoreable_parameter_exists_on_vector(self):
        fields = {f.name for f in dataclasses.fields(CharacterizationVector)}
        for param in PARAMETER_UNITS:
            assert param in fields

    def test_default_weights_name_known_parameters(self, weights_default):
        for param in list(weights_default.a) + list(weights_default.b):
            assert param in PARAMETER_UNITS

    def test_positive_a_sum_matches_bundled_profile(self, weights_default):
        assert weights_default.positive_a_sum == pytest.approx(6.1)


class TestTriState:
    def test_round_trip_strings(self):
        for state in TriState:
            assert TriState.of(state.value) is state

    def test_of_bool(self):
        assert TriState.of(True) is TriState.TRUE
        assert TriState.of(False) is TriState.FALSE
        assert TriState.of(None) is TriState.NA
