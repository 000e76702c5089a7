from fractions import Fraction

import pytest

from yvpoly import series
from yvpoly.family import generate


class TestInversePowerSums:
    def test_spot_values(self, records8):
        t2 = series.inverse_power_sums(records8[2], 9)
        t3 = series.inverse_power_sums(records8[3], 9)
        assert t2[3] == Fraction(-3, 4)
        assert t3[3] == Fraction(3, 4)
        assert t2[6] == Fraction(3, 16)

    def test_zero_root_excluded(self, records8):
        # n = 4 has the root z = 0, which must be skipped, not inverted
        t = series.inverse_power_sums(records8[4], 3)
        assert t[3] == series.closed_form_value(4, 3)

    def test_non_multiples_of_three_vanish(self, records8):
        t = series.inverse_power_sums(records8[5], 12)
        for m in range(1, 13):
            if m % 3:
                assert t[m] == 0


class TestClosedForms:
    def test_verify(self, records16):
        assert series.verify_closed_forms(records16, 16,
                                          symmetry_max_m=30).passed

    def test_differences(self, records16):
        assert series.verify_difference_relations(records16, 16).passed

    def test_difference_spot(self):
        assert series.difference_value(2, 3) == Fraction(3, 4)
        assert series.difference_value(3, 3) == Fraction(-3, 2)

    def test_rejects_bad_m(self):
        with pytest.raises(ValueError):
            series.closed_form_value(4, 5)


class TestSeriesAtZero:
    def test_n3_coefficients(self, records8):
        a = series.series_at_zero(records8, 3, 10)
        assert a[2] == Fraction(3, 2)
        assert a[5] == Fraction(3, 40)
        assert a[8] == Fraction(3, 2240) + Fraction(27, 224)

    def test_n1_vanishes_identically(self, records8):
        # w_1 = -1/z, so u = w_1 + 1/z is identically zero
        a = series.series_at_zero(records8, 1, 6)
        assert all(c == 0 for c in a)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_cross_check(self, records8, n):
        assert series.cross_check_series(records8, n, 14).passed

    @pytest.mark.parametrize("n", range(1, 7))
    def test_ode_residual_vanishes(self, records8, n):
        residuals = series.ode_residual_orders(records8, n, 10)
        assert all(c == 0 for c in residuals)


class TestRemark:
    @pytest.mark.parametrize("m", [3, 6])
    def test_polynomiality(self, m):
        records = generate(25)
        rep = series.verify_remark_polynomiality(records, m, 25)
        assert rep.passed
        for cls in range(3):
            info = rep.details[f"class_{cls}"]
            assert info["degree"] <= m // 3 + 1
            assert info["held_out"] >= 1

    def test_rejects_bad_m(self, records16):
        with pytest.raises(ValueError):
            series.verify_remark_polynomiality(records16, 4, 16)

    def test_insufficient_samples(self, records8):
        with pytest.raises(ValueError):
            series.verify_remark_polynomiality(records8, 12, 8)


class TestSumsTable:
    def test_rows(self, records8):
        rows = series.sums_table(records8, 8, [3, 6])
        assert len(rows) == 9 * 2  # one row per (n, m) pair
        for row in rows:
            assert row["sum"] == row["closed_form"]
