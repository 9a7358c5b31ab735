"""Build an access chain in code and reduce it to its equivalent vector.

A DSL access seen from the end user: Wi-Fi adapter in the PC, router at the
customer premises, the DSLAM 4.5 km away, and the aggregation interface. The
series submodel collapses the four elements into one technical+economic
vector; the evaluation then scores it against a residential profile.
"""
from pathlib import Path

import utem
from utem.scenario_io import emit_results

elements = (
    utem.AccessElement(
        name="Wi-Fi PC adapter", bw_rx_unit=100, bw_tx_unit=100,
        availability=0.999962, ubiquity=utem.TriState.TRUE, health_risk=1,
        arpu=(416.54, 363.60, 363.60), capex=(15.0, 0, 0),
        opex=(0.00057,) * 3,
    ),
    utem.AccessElement(
        name="Home router", bw_rx_unit=10, bw_tx_unit=3, availability=0.999644,
        qos_capable=utem.TriState.TRUE, health_risk=1,
        arpu=(0.0,) * 3, capex=(100.0, 0, 0), opex=(0.0356,) * 3,
    ),
    utem.AccessElement(
        name="DSLAM", bw_rx_unit=10, bw_tx_unit=3, availability=0.99999,
        distance_m=4500, qos_capable=utem.TriState.TRUE,
        arpu=(0.0,) * 3, capex=(100.0, 0, 0), opex=(0.001,) * 3,
    ),
    utem.AccessElement(
        name="Aggregation", bw_rx_unit=10, bw_tx_unit=3, availability=1.0,
        qos_capable=utem.TriState.TRUE,
        arpu=(0.0,) * 3, capex=(100.0, 0, 0), opex=(0.0,) * 3,
    ),
)
chain = utem.AccessChain("DSL access", elements, study_period_t=3, interest_rate_k=0.01)
composite = utem.CompositeAccess("DSL access", (utem.Branch(chain=chain),), 3, 0.01)

scenario_dir = Path(__file__).resolve().parents[1] / "scenarios"
req = utem.parse_requirements((scenario_dir / "requirements/residential_2015.json").read_bytes())
weights = utem.parse_preferences((scenario_dir / "preferences/default.json").read_bytes())

# The chain's weakest element pins the bandwidth; availabilities multiply.
vector = utem.series_characterize(chain, req)
print(f"equivalent bandwidth : {vector.bw_rx_avg} / {vector.bw_tx_avg} Mbit/s")
print(f"availability         : {vector.availability:.6%}")
print(f"first-year cost      : {vector.cost_first_year:,.2f} EUR")
print(f"net present value    : {vector.npv:,.2f} EUR at K={chain.interest_rate_k:.0%}")
print()

# Full evaluation adds the weighted scores and the redundancy verdict.
result = utem.evaluate(composite, req, weights)
print(emit_results(result, "table").decode())
