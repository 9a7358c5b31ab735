"""Feed another model's outputs into a scenario without touching the rest.

Deployment models produce per-area distances and cost figures; an overlay
document substitutes those into an existing scenario element by element. Here
a topology model says the DSLAM actually sits 12 km out and capex for the
home router drops to a bulk price; everything else is untouched.
"""
import json
from pathlib import Path

import utem
from utem.scenario_io import import_external_outputs

scenario_dir = Path(__file__).resolve().parents[1] / "scenarios"
req = utem.parse_requirements((scenario_dir / "requirements/residential_2015.json").read_bytes())
weights = utem.parse_preferences((scenario_dir / "preferences/default.json").read_bytes())

adsl = utem.parse_scenario((scenario_dir / "adsl.json").read_bytes())
overlay = (scenario_dir / "overlays/topology_import.json").read_bytes()
print("overlay document:")
print(json.dumps(json.loads(overlay), indent=2))
print()

patched = import_external_outputs(adsl, overlay)

before = utem.evaluate(adsl, req, weights)
after = utem.evaluate(patched, req, weights)

rows = (
    ("distance to access point (m)", before.vector.dist_to_ap_m, after.vector.dist_to_ap_m),
    ("first-year cost (EUR)", before.vector.cost_first_year, after.vector.cost_first_year),
    ("NPV (EUR)", before.vector.npv, after.vector.npv),
    ("F1 (%)", before.f1 * 100, after.f1 * 100),
    ("F2 (%/kEUR)", before.f2 * 1e5, after.f2 * 1e5),
    ("R", before.redundancy.overall_r, after.redundancy.overall_r),
)
print(f"{'output':<30} {'native inputs':>15} {'with overlay':>15}")
for label, a, b in rows:
    fa = f"{a:,.2f}" if isinstance(a, float) else str(a)
    fb = f"{b:,.2f}" if isinstance(b, float) else str(b)
    print(f"{label:<30} {fa:>15} {fb:>15}")

# The original composite is immutable; the overlay produced a new one.
assert utem.evaluate(adsl, req, weights).vector.dist_to_ap_m == 4500
