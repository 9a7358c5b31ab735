"""How many identical parallel accesses are needed as requirements tighten.

Sweeps the reception-bandwidth floor and the availability ceiling for each
technology on file, showing where replication stops being a remedy (the
first-year budget caps the answer).
"""
import dataclasses
import json
from pathlib import Path

import utem
from utem.redundancy import min_copies_for_availability, min_copies_for_bandwidth

scenario_dir = Path(__file__).resolve().parents[1] / "scenarios"
req = utem.parse_requirements((scenario_dir / "requirements/residential_2015.json").read_bytes())
weights = utem.parse_preferences((scenario_dir / "preferences/default.json").read_bytes())

vectors = {}
for path in sorted(scenario_dir.glob("*.json")):
    composite = utem.parse_scenario(path.read_bytes())
    vectors[composite.name] = utem.characterize(composite, req)

print("copies needed as the bandwidth floor rises (aggregate-mode replicas)")
floors = (10, 30, 100, 300)
print(f"{'technology':<34}" + "".join(f"{f'>= {f} Mbit/s':>14}" for f in floors))
for name, vector in vectors.items():
    cells = []
    for floor in floors:
        try:
            cells.append(str(min_copies_for_bandwidth(vector.bw_rx_avg, floor)))
        except utem.UnreachableRequirement:
            cells.append("never")
    print(f"{name:<34}" + "".join(f"{c:>14}" for c in cells))

print()
print("copies needed as the availability target climbs")
targets = (0.999, 0.9999, 0.999999, 0.99999999)
print(f"{'technology':<34}" + "".join(f"{t:>14.8f}" for t in targets))
for name, vector in vectors.items():
    cells = [str(min_copies_for_availability(vector.availability, t)) for t in targets]
    print(f"{name:<34}" + "".join(f"{c:>14}" for c in cells))

print()
print("full verdicts under the residential profile (budget applies at R)")
for name, vector in vectors.items():
    verdict = utem.min_redundancy(vector, req)
    if verdict.ok:
        print(f"  {name:<34} R = {verdict.overall_r}")
    else:
        print(f"  {name:<34} fails: {verdict.failure_reason} ({', '.join(verdict.blocking)})")

print()
print("an SME-grade floor of 300 Mbit/s pushes shared wireless out of budget:")
sme = utem.parse_requirements((scenario_dir / "requirements/sme_2015.json").read_bytes())
wimax = vectors["WiMAX 802.16 + WiMAX backhaul"]
verdict = utem.min_redundancy(wimax, sme)
print(f"  WiMAX needs {verdict.per_param['bw_rx_avg'].copies} copies -> {verdict.failure_reason}")
