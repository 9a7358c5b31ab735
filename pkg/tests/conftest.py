import json
from pathlib import Path

import pytest

import utem

REPO = Path(__file__).resolve().parents[1]
SCENARIO_DIR = REPO / "scenarios"

SCENARIO_FILES = [
    "adsl.json", "ftth.json", "wimax.json", "lte_4g.json", "ftth_vrouter.json",
    "leased_line_34m.json", "adsl_x2.json", "adsl_wimax_hybrid.json", "vdsl.json",
]


def load_json(path: Path) -> dict:
    return json.loads(path.read_text(encoding="utf-8"))


@pytest.fixture(scope="session")
def scenario_dir() -> Path:
    return SCENARIO_DIR


@pytest.fixture(scope="session")
def requirements_2015() -> utem.RequirementsProfile:
    return utem.parse_requirements((SCENARIO_DIR / "requirements/residential_2015.json").read_bytes())


@pytest.fixture(scope="session")
def requirements_2006() -> utem.RequirementsProfile:
    return utem.parse_requirements((SCENARIO_DIR / "requirements/residential_2006.json").read_bytes())


@pytest.fixture(scope="session")
def weights_default() -> utem.PreferenceWeights:
    return utem.parse_preferences((SCENARIO_DIR / "preferences/default.json").read_bytes())


def load_scenario(name: str) -> utem.CompositeAccess:
    return utem.parse_scenario((SCENARIO_DIR / name).read_bytes())


@pytest.fixture(scope="session")
def adsl() -> utem.CompositeAccess:
    return load_scenario("adsl.json")


@pytest.fixture(scope="session")
def adsl_chain(adsl) -> utem.AccessChain:
    return adsl.branches[0].chain


@pytest.fixture(scope="session")
def all_scenarios() -> dict:
    return {name: load_scenario(name) for name in SCENARIO_FILES}


@pytest.fixture(scope="session")
def all_results(all_scenarios, requirements_2015, weights_default) -> dict:
    return {
        composite.name: utem.evaluate(composite, requirements_2015, weights_default)
        for composite in all_scenarios.values()
    }
