"""When does deploying a technology start paying off per euro spent?

Hold a technology's performance figure fixed and let its yearly cost per user
evolve; the efficiency figure F2 climbs as costs fall and saturates when the
curve's slope collapses. The saturation year is the deployment-decision
marker.
"""
from pathlib import Path

import utem

scenario_dir = Path(__file__).resolve().parents[1] / "scenarios"
req = utem.parse_requirements((scenario_dir / "requirements/residential_2015.json").read_bytes())
weights = utem.parse_preferences((scenario_dir / "preferences/default.json").read_bytes())

# Performance figures computed once from the scenario documents.
f1_of = {}
for name in ("adsl.json", "ftth.json"):
    composite = utem.parse_scenario((scenario_dir / name).read_bytes())
    f1_of[composite.name] = utem.evaluate(composite, req, weights).f1

# Yearly cost-per-user evolutions: a mature copper plant is already flat,
# fibre falls steeply while roll-outs scale and then levels off.
cost_evolution = {
    "ADSL": [(y, c) for y, c in zip(range(2010, 2017),
             (330.0, 322.0, 318.0, 316.0, 315.0, 315.0, 314.0))],
    "FTTH": [(y, c) for y, c in zip(range(2010, 2017),
             (1800.0, 1280.0, 930.0, 700.0, 560.0, 522.0, 515.0))],
}

for name, costs in cost_evolution.items():
    points = utem.f2_series(f1_of[name], costs)
    saturation = utem.saturation_year(points, epsilon=0.1)
    print(f"{name}: F1 = {f1_of[name] * 100:.2f} %")
    peak = max(v for _, v in points)
    for year, value in points:
        bar = "#" * max(1, round(40 * value / peak))
        mark = "  <- saturation" if year == saturation else ""
        print(f"  {year}  {value * 1e5:8.2f} %/kEUR  {bar}{mark}")
    print(f"  saturation year: {saturation}")
    print()

print("A flat cost curve never saturates (no positive slope peak):")
flat = utem.f2_series(0.5, [(2013, 400.0), (2014, 400.0), (2015, 400.0)])
print(f"  constant costs -> {utem.saturation_year(flat)}")
