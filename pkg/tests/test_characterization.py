"""Series/parallel submodels against the reference scenario outputs and closed forms."""
import dataclasses
import random

import pytest

import utem
from utem.characterization import (
    effective_unit_bandwidth,
    element_availability,
    parallel_characterize,
    series_characterize,
)
from utem.model import AccessElement, EvaluationError, TriState


def make_element(**kw) -> AccessElement:
    base = dict(
        name="element", bw_rx_unit=10.0, bw_tx_unit=3.0, availability=0.999,
        arpu=(0.0,), capex=(0.0,), opex=(0.0,),
    )
    base.update(kw)
    return AccessElement(**base)


class TestEffectiveUnitBandwidth:
    def test_shared_wireless_access_point(self):
        ap = make_element(bw_rx_unit=54.0, users=30, concurrency=0.65,
                          wireless=True, weather_rx_loss=0.3)
        assert effective_unit_bandwidth(ap, "rx", weather_on=True) == pytest.approx(
            2.753846154, abs=1e-9
        )

    def test_identity_when_unshared(self):
        e = make_element(bw_rx_unit=7.5)
        assert effective_unit_bandwidth(e, "rx", weather_on=True) == 7.5

    def test_wireless_adapter_with_rain(self):
        e = make_element(bw_rx_unit=24.0, wireless=True, weather_rx_loss=0.1)
        assert effective_unit_bandwidth(e, "rx", weather_on=True) == pytest.approx(23.9)

    def test_weather_ignored_when_wired(self):
        e = make_element(bw_rx_unit=24.0, wireless=False, weather_rx_loss=0.1)
        assert effective_unit_bandwidth(e, "rx", weather_on=True) == 24.0

    def test_weather_ignored_when_off(self):
        e = make_element(bw_rx_unit=24.0, wireless=True, weather_rx_loss=0.1)
        assert effective_unit_bandwidth(e, "rx", weather_on=False) == 24.0

    def test_clamped_at_zero(self):
        e = make_element(bw_rx_unit=0.05, wireless=True, weather_rx_loss=0.3)
        assert effective_unit_bandwidth(e, "rx", weather_on=True) == 0.0

    def test_replicas_aggregate(self):
        e = make_element(bw_rx_unit=3.4, redundancy_n=2)
        assert effective_unit_bandwidth(e, "rx", weather_on=False) == pytest.approx(6.8)


class TestElementAvailability:
    def test_duplicated_router(self):
        e = make_element(availability=0.999644, redundancy_n=2)
        assert element_availability(e) == pytest.approx(0.999999873, abs=1e-9)

    def test_perfect(self):
        e = make_element(availability=1.0, redundancy_n=5)
        assert element_availability(e) == 1.0

    def test_single(self):
        e = make_element(availability=0.999962)
        assert element_availability(e) == 0.999962


class TestSeries(object):
    def test_adsl_vector(self, adsl_chain, requirements_2015):
        v = series_characterize(adsl_chain, requirements_2015)
        assert v.bw_rx_avg == 10
        assert v.bw_tx_avg == 3
        assert v.availability == pytest.approx(0.999597, abs=1e-6)
        assert (v.dist_to_ap_m, v.dist_total_m) == (4500, 4500)
        assert v.cost_first_year == pytest.approx(315.04, abs=0.01)
        assert v.qos_capable is TriState.TRUE
        assert v.license_needed is TriState.FALSE
        assert v.ubiquity is TriState.TRUE
        assert v.health_risk == 1
        assert v.payback_years == 1
        assert not v.wireless_any

    def test_wimax_chain(self, all_scenarios, requirements_2015):
        chain = all_scenarios["wimax.json"].branches[0].chain
        v = series_characterize(chain, requirements_2015)
        assert v.availability == pytest.approx(0.99999 ** 4, abs=1e-12)
        assert v.availability == pytest.approx(0.999960, abs=1e-6)
        assert v.dist_to_ap_m == 3000
        assert v.dist_total_m == 48000
        assert v.los_user_ap is TriState.FALSE  # subscriber unit NA ignored
        assert v.los_ap_node is TriState.TRUE
        assert v.license_needed is TriState.TRUE
        assert v.wireless_any

    def test_single_element_identity(self, requirements_2015):
        e = make_element(
            bw_rx_unit=10.0, bw_tx_unit=3.0, availability=0.999, distance_m=100.0,
            qos_capable=TriState.TRUE, ubiquity=TriState.TRUE,
            arpu=(10.0,), capex=(5.0,), opex=(1.0,),
        )
        chain = utem.AccessChain("single", (e,), study_period_t=1, interest_rate_k=0.0)
        v = series_characterize(chain, requirements_2015)
        assert v.bw_rx_avg == 10.0
        assert v.bw_tx_avg == 3.0
        assert v.availability == 0.999
        assert (v.dist_to_ap_m, v.dist_total_m) == (100.0, 100.0)
        assert v.cost_first_year == 6.0

    def test_min_rule_monotonic(self, adsl_chain, requirements_2015):
        base = series_characterize(adsl_chain, requirements_2015).bw_rx_avg
        for i in range(len(adsl_chain.elements)):
            elements = list(adsl_chain.elements)
            elements[i] = dataclasses.replace(elements[i], bw_rx_unit=elements[i].bw_rx_unit + 50)
            boosted = dataclasses.replace(adsl_chain, elements=tuple(elements))
            assert series_characterize(boosted, requirements_2015).bw_rx_avg >= base

    def test_series_availability_below_min_element(self, adsl_chain, requirements_2015):
        v = series_characterize(adsl_chain, requirements_2015)
        worst = min(element_availability(e) for e in adsl_chain.elements)
        assert 0.0 <= v.availability <= worst

    def test_order_invariance(self, adsl_chain, requirements_2015):
        v = series_characterize(adsl_chain, requirements_2015)
        rng = random.Random(7)
        for _ in range(5):
            shuffled = list(adsl_chain.elements)
            rng.shuffle(shuffled)
            w = series_characterize(
                dataclasses.replace(adsl_chain, elements=tuple(shuffled)), requirements_2015
            )
            assert w.bw_rx_avg == v.bw_rx_avg
            assert w.bw_tx_avg == v.bw_tx_avg
            assert w.availability == pytest.approx(v.availability, rel=1e-12)
            assert w.cost_first_year == v.cost_first_year
            assert w.npv == pytest.approx(v.npv, rel=1e-12)
            assert w.dist_total_m == v.dist_total_m  # only dist_to_ap/los may move

    def test_empty_chain_rejected(self, requirements_2015):
        chain = utem.AccessChain("empty", (), study_period_t=1, interest_rate_k=0.0)
        with pytest.raises(EvaluationError):
            series_characterize(chain, requirements_2015)


class TestParallel:
    def test_hybrid_aggregate(self, all_scenarios, requirements_2015):
        composite = all_scenarios["adsl_wimax_hybrid.json"]
        v = utem.characterize(composite, requirements_2015)
        assert v.bw_rx_avg == pytest.approx(10.09123, abs=1e-4)
        assert v.bw_tx_avg == pytest.approx(3.092461538, abs=1e-6)
        assert v.availability == pytest.approx(0.99999990, abs=1e-7)
        assert v.dist_to_ap_m == 45
        assert v.dist_total_m == 4500
        assert v.capex[0] == pytest.approx(381.67, abs=0.01)
        assert v.los_user_ap is TriState.TRUE
        assert v.license_needed is TriState.TRUE
        assert v.health_risk == 1

    def test_single_branch_identity(self, adsl_chain, requirements_2015):
        v = series_characterize(adsl_chain, requirements_2015)
        w = parallel_characterize([(v, False)], interest_rate_k=0.01)
        assert w == v

    def test_two_identical_branches_closed_form(self, adsl_chain, requirements_2015):
        v = series_characterize(adsl_chain, requirements_2015)
        w = parallel_characterize([(v, False), (v, False)], interest_rate_k=0.01)
        assert w.bw_rx_avg == pytest.approx(2 * v.bw_rx_avg, rel=1e-12)
        assert w.availability == pytest.approx(1 - (1 - v.availability) ** 2, rel=1e-12)

    def test_r_identical_branches_closed_form(self, adsl_chain, requirements_2015):
        v = series_characterize(adsl_chain, requirements_2015)
        for r in (1, 2, 3, 5, 8):
            w = parallel_characterize([(v, False)] * r, interest_rate_k=0.01)
            assert w.bw_rx_avg == pytest.approx(r * v.bw_rx_avg, rel=1e-12)
            assert w.availability == pytest.approx(1 - (1 - v.availability) ** r, rel=1e-12)

    def test_parallel_availability_dominates_branches(self, all_scenarios, requirements_2015):
        vectors = [
            series_characterize(c.branches[0].chain, requirements_2015)
            for c in all_scenarios.values()
            if c.branches[0].chain is not None
        ]
        w = parallel_characterize([(v, False) for v in vectors], interest_rate_k=0.01)
        assert w.availability <= 1.0
        assert w.availability >= max(v.availability for v in vectors)

    def test_backup_branch_adds_no_bandwidth(self, adsl_chain, requirements_2015):
        v = series_characterize(adsl_chain, requirements_2015)
        w = parallel_characterize([(v, False), (v, True)], interest_rate_k=0.01)
        assert w.bw_rx_avg == v.bw_rx_avg
        assert w.availability == pytest.approx(1 - (1 - v.availability) ** 2, rel=1e-12)
        assert w.capex[0] == pytest.approx(2 * v.capex[0], rel=1e-12)

    def test_all_backup_rejected(self, adsl_chain, requirements_2015):
        v = series_characterize(adsl_chain, requirements_2015)
        with pytest.raises(EvaluationError):
            parallel_characterize([(v, True)], interest_rate_k=0.01)

    def test_no_branches_rejected(self):
        with pytest.raises(EvaluationError):
            parallel_characterize([], interest_rate_k=0.01)
