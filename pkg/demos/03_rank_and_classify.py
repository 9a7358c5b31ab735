"""Rank every scenario on file and place it in a cost/benefit quadrant.

The ranking orders technologies by the performance figure F1 (or by the
efficiency figure F2); the quadrant view then splits the survivors at the
middle of the positive range on both axes, so the optimal corner reads
"above-median figure at below-median cost". Negative figures are discarded.
"""
from pathlib import Path

import utem
from utem.scenario_io import emit_results

scenario_dir = Path(__file__).resolve().parents[1] / "scenarios"
req = utem.parse_requirements((scenario_dir / "requirements/residential_2015.json").read_bytes())
weights = utem.parse_preferences((scenario_dir / "preferences/default.json").read_bytes())

scenarios = []
for path in sorted(scenario_dir.glob("*.json")):
    composite = utem.parse_scenario(path.read_bytes())
    scenarios.append((composite.name, composite))

for metric in ("f1", "f2"):
    table = utem.compare_scenarios(scenarios, req, weights, metric=metric)
    print(emit_results(table, "table").decode())
    quadrants = utem.quadrants_for(table, metric)
    print(emit_results(quadrants, "table").decode())
    print()

# The same inputs under 2006-era requirements (2 Mbit/s floor) reshuffle the
# ranking: fibre still tops it, but copper and shared wireless close in.
req_2006 = utem.parse_requirements(
    (scenario_dir / "requirements/residential_2006.json").read_bytes()
)
then_existing = [(n, c) for n, c in scenarios if n not in ("4G-LTE", "FTTH virtualized router")]
table = utem.compare_scenarios(then_existing, req_2006, weights, metric="f1")
print("2006 requirements, technologies available then, by F1:")
for row in table.rows:
    print(f"  {row.name:<34} F1 = {row.f1 * 100:7.2f} %")
