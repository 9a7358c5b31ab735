"""Cost-evolution series and saturation detection."""
import pytest

from utem import forecast


class TestF2Series:
    def test_direct_division(self):
        series = forecast.f2_series(0.7, [(2013, 1000.0), (2014, 700.0), (2015, 500.0)])
        assert series == [
            (2013, pytest.approx(0.0007)),
            (2014, pytest.approx(0.001)),
            (2015, pytest.approx(0.0014)),
        ]

    def test_constant_cost_constant_series(self):
        series = forecast.f2_series(0.5, [(1, 100.0), (2, 100.0), (3, 100.0)])
        values = [value for _, value in series]
        assert values == [values[0]] * 3

    def test_halving_cost_doubles_value(self):
        series = forecast.f2_series(0.5, [(1, 400.0), (2, 200.0), (3, 100.0)])
        values = [value for _, value in series]
        assert values[1] == pytest.approx(2 * values[0])
        assert values[2] == pytest.approx(2 * values[1])

    def test_nonpositive_cost_rejected(self):
        with pytest.raises(ValueError):
            forecast.f2_series(0.5, [(1, 100.0), (2, 0.0)])


SATURATING = [(1, 10.0), (2, 30.0), (3, 48.0), (4, 55.0), (5, 57.0), (6, 57.5)]


class TestSaturationYear:
    def test_hand_computed_slopes(self):
        # Slopes 20, 18, 7, 2, 0.5; band is 0.1 * 20 = 2, first hit at year 5.
        assert forecast.saturation_year(SATURATING, epsilon=0.1) == 5

    def test_constant_series_has_no_peak(self):
        assert forecast.saturation_year([(1, 5.0), (2, 5.0), (3, 5.0)]) is None

    def test_linear_growth_never_saturates(self):
        series = [(year, 2.0 * year) for year in range(1, 8)]
        assert forecast.saturation_year(series, epsilon=0.1) is None

    def test_declining_series_has_no_positive_peak(self):
        assert forecast.saturation_year([(1, 9.0), (2, 6.0), (3, 3.0)]) is None

    def test_scale_invariance(self):
        year = forecast.saturation_year(SATURATING, epsilon=0.1)
        for scale in (1e-6, 0.5, 42.0, 1e9):
            scaled = [(y, v * scale) for y, v in SATURATING]
            assert forecast.saturation_year(scaled, epsilon=0.1) == year

    def test_convex_decreasing_cost_gives_unique_year(self):
        # Cost decays geometrically then flattens; slope band crossed once.
        costs = [(2010 + i, 1000.0 * (0.6 ** min(i, 5)) + 50.0) for i in range(10)]
        series = forecast.f2_series(0.8, costs)
        year = forecast.saturation_year(series)
        assert year is not None
        slopes = [
            (y, v - pv) for (_, pv), (y, v) in zip(series, series[1:])
        ]
        peak = max(s for _, s in slopes)
        crossing = [y for y, s in slopes if s <= 0.1 * peak]
        assert year == crossing[0]

    def test_needs_three_points(self):
        with pytest.raises(ValueError):
            forecast.saturation_year([(1, 1.0), (2, 2.0)])

    def test_years_strictly_increasing(self):
        with pytest.raises(ValueError):
            forecast.saturation_year([(1, 1.0), (1, 2.0), (2, 3.0)])

    def test_epsilon_widens_the_band(self):
        assert forecast.saturation_year(SATURATING, epsilon=0.4) == 4
        assert forecast.saturation_year(SATURATING, epsilon=0.02) is None
