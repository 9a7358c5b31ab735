"""Document parsing, round trips, overlays and result emission."""
import json
from pathlib import Path

import pytest

import utem
from utem import scenario_io
from utem.scenario_io import (
    SchemaError,
    ValidationFailure,
    emit_results,
    import_external_outputs,
    parse_scenario,
    preferences_to_dict,
    requirements_to_dict,
    result_from_dict,
    result_to_dict,
    scenario_to_dict,
)

MINIMAL = {
    "name": "minimal",
    "study_period_t": 1,
    "interest_rate_k": 0.0,
    "branches": [
        {
            "backup_mode": False,
            "elements": [
                {
                    "name": "only",
                    "bw_rx_unit": 10,
                    "bw_tx_unit": 5,
                    "availability": 0.99,
                    "arpu": [100.0],
                    "capex": [50.0],
                    "opex": [1.0],
                }
            ],
        }
    ],
}


class TestParseScenario:
    def test_adsl_document(self, scenario_dir):
        composite = parse_scenario((scenario_dir / "adsl.json").read_bytes())
        assert len(composite.branches) == 1
        assert len(composite.branches[0].chain.elements) == 4
        assert composite.study_period_t == 3
        assert composite.interest_rate_k == 0.01

    def test_minimal_document(self):
        composite = parse_scenario(json.dumps(MINIMAL))
        assert composite.name == "minimal"
        assert composite.branches[0].chain.elements[0].users == 1

    def test_availability_out_of_bounds_names_path(self):
        doc = json.loads(json.dumps(MINIMAL))
        doc["branches"][0]["elements"][0]["availability"] = 1.5
        with pytest.raises(SchemaError) as err:
            parse_scenario(json.dumps(doc))
        assert "availability" in str(err.value)
        assert "branches[0]" in str(err.value)

    def test_unknown_field_rejected(self):
        doc = json.loads(json.dumps(MINIMAL))
        doc["branches"][0]["elements"][0]["frobnication"] = 3
        with pytest.raises(SchemaError):
            parse_scenario(json.dumps(doc))

    def test_malformed_json(self):
        with pytest.raises(SchemaError):
            parse_scenario(b"{not json")

    def test_length_mismatch_is_semantic_failure(self):
        doc = json.loads(json.dumps(MINIMAL))
        doc["study_period_t"] = 3
        with pytest.raises(ValidationFailure) as err:
            parse_scenario(json.dumps(doc))
        assert err.value.violations

    def test_all_backup_rejected(self):
        doc = json.loads(json.dumps(MINIMAL))
        doc["branches"][0]["backup_mode"] = True
        with pytest.raises(ValidationFailure):
            parse_scenario(json.dumps(doc))

    def test_precomputed_vector_branch(self, requirements_2015, weights_default):
        doc = {
            "name": "imported",
            "study_period_t": 1,
            "interest_rate_k": 0.0,
            "branches": [
                {
                    "backup_mode": False,
                    "vector": {
                        "bw_rx_avg": 40.0, "bw_tx_avg": 5.0, "availability": 0.99999,
                        "dist_to_ap_m": 100.0, "dist_total_m": 900.0,
                        "arpu": [100.0], "capex": [40.0], "opex": [2.0],
                        "qos_capable": "true", "ubiquity": "true",
                    },
                }
            ],
        }
        composite = parse_scenario(json.dumps(doc))
        vector = utem.characterize(composite, requirements_2015)
        assert vector.bw_rx_avg == 40.0
        assert vector.dist_total_m == 900.0


class TestRoundTrips:
    def test_scenario_round_trip(self, scenario_dir):
        for path in sorted(scenario_dir.glob("*.json")):
            composite = parse_scenario(path.read_bytes())
            again = parse_scenario(scenario_io.to_json_bytes(scenario_to_dict(composite)))
            assert again == composite, path.name

    def test_requirements_round_trip(self, requirements_2015):
        doc = scenario_io.to_json_bytes(requirements_to_dict(requirements_2015))
        assert utem.parse_requirements(doc) == requirements_2015

    def test_preferences_round_trip(self, weights_default):
        doc = scenario_io.to_json_bytes(preferences_to_dict(weights_default))
        assert utem.parse_preferences(doc) == weights_default

    def test_result_json_round_trip(self, all_results):
        result = all_results["ADSL"]
        data = json.loads(emit_results(result, "json"))
        assert result_from_dict(data) == result


class TestOverlay:
    def test_distance_substitution(self, adsl, requirements_2015, weights_default):
        overlay = {"patches": [{"branch": 0, "element": 2, "field": "distance_m", "value": 12000}]}
        patched = import_external_outputs(adsl, overlay)
        vector = utem.characterize(patched, requirements_2015)
        assert vector.dist_to_ap_m == 12000
        assert vector.dist_total_m == 12000
        # The original is untouched.
        assert utem.characterize(adsl, requirements_2015).dist_to_ap_m == 4500

    def test_capex_substitution_shifts_cost(self, adsl, requirements_2015):
        overlay = {"patches": [{"branch": 0, "element": 0, "field": "capex", "value": [45.0, 0.0, 0.0]}]}
        patched = import_external_outputs(adsl, overlay)
        before = utem.characterize(adsl, requirements_2015).cost_first_year
        after = utem.characterize(patched, requirements_2015).cost_first_year
        assert after - before == pytest.approx(30.0)

    def test_wrong_length_rejected(self, adsl):
        overlay = {"patches": [{"branch": 0, "element": 0, "field": "capex", "value": [45.0]}]}
        with pytest.raises(ValidationFailure):
            import_external_outputs(adsl, overlay)

    def test_bad_indices_rejected(self, adsl):
        with pytest.raises(ValidationFailure):
            import_external_outputs(
                adsl, {"patches": [{"branch": 5, "element": 0, "field": "distance_m", "value": 1}]}
            )
        with pytest.raises(ValidationFailure):
            import_external_outputs(
                adsl, {"patches": [{"branch": 0, "element": 9, "field": "distance_m", "value": 1}]}
            )


class TestEmit:
    def test_csv_contains_reception_row(self, all_results):
        csv_text = emit_results(all_results["ADSL"], "csv").decode()
        assert "bw_rx_avg,10" in csv_text
        assert csv_text.splitlines()[0] == "parameter,value,a_term,b_term"

    def test_table_shows_figures(self, all_results):
        table = emit_results(all_results["ADSL"], "table").decode()
        assert "F1 = 22.50 %" in table
        assert "F2 = 71.43 %/K EUR" in table
        assert "R = 3" in table

    def test_empty_ranking_headers_only(self):
        table = utem.RankingTable(metric="f1", rows=())
        csv_text = emit_results(table, "csv").decode()
        assert csv_text.splitlines()[0].startswith("name,")
        assert len(csv_text.splitlines()) == 1

    def test_json_is_deterministic(self, all_results):
        a = emit_results(all_results["ADSL"], "json")
        b = emit_results(all_results["ADSL"], "json")
        assert a == b

    def test_unknown_format_rejected(self, all_results):
        with pytest.raises(ValueError):
            emit_results(all_results["ADSL"], "yaml")

    def test_decimal_point_only(self, scenario_dir):
        # Documents and emitted results never use comma decimals or separators.
        raw = (scenario_dir / "adsl.json").read_text()
        assert "0,0" not in raw
        composite = parse_scenario(raw)
        assert composite.branches[0].chain.elements[0].arpu[0] == 416.54


class TestPublishedSchemas:
    def test_docs_match_package(self):
        docs = Path(__file__).resolve().parents[1] / "docs" / "schemas"
        pairs = [
            ("scenario.schema.json", scenario_io.SCENARIO_SCHEMA),
            ("requirements.schema.json", scenario_io.REQUIREMENTS_SCHEMA),
            ("preferences.schema.json", scenario_io.PREFERENCES_SCHEMA),
            ("overlay.schema.json", scenario_io.OVERLAY_SCHEMA),
        ]
        for fname, schema in pairs:
            published = json.loads((docs / fname).read_text())
            assert published == schema, fname
