from mpmath import mp

import pytest

from yvpoly import roots
from yvpoly.family import expected_degree


class TestCubeReduce:
    def test_degree_and_zero_flag(self, records8):
        rp = roots.cube_reduce(records8[4])
        assert rp.zero_root
        assert rp.degree == 3  # (10 - 1) / 3

    def test_expansion_matches(self, records8):
        rp = roots.cube_reduce(records8[5])
        # substituting y = z^3 back must reproduce the polynomial
        expanded = [0] * (3 * rp.degree + 1)
        for k, c in enumerate(rp.y_coeffs):
            expanded[3 * k] = c
        assert tuple(expanded) == records8[5].poly.coeffs


class TestWorkingPrecision:
    def test_floor(self):
        assert roots.working_precision(1, 64) == 128

    def test_scales_with_degree(self):
        assert roots.working_precision(100, 256) >= 400

    def test_scales_with_coefficients(self):
        assert roots.working_precision(2, 128, coeff_bits=1000) >= 1064


class TestFindRoots:
    @pytest.mark.parametrize("n", range(1, 9))
    def test_counts(self, rootsets8, n):
        assert len(rootsets8[n].roots) == expected_degree(n)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_residuals_tiny(self, rootsets8, n):
        rs = rootsets8[n]
        with mp.workprec(rs.precision_bits):
            assert rs.max_residual < mp.mpf(2) ** (-rs.precision_bits // 2)

    def test_zero_root_only_when_expected(self, rootsets8):
        for n in range(1, 9):
            assert rootsets8[n].includes_zero == (n % 3 == 1)

    def test_deterministic_given_seed(self, records8):
        a = roots.roots_for_record(records8[3], 128, seed=7)
        b = roots.roots_for_record(records8[3], 128, seed=7)
        assert a.roots == b.roots


class TestCertify:
    @pytest.mark.parametrize("n", range(1, 9))
    def test_passes(self, records8, rootsets8, n):
        assert roots.certify(rootsets8[n], records8[n]).passed

    def test_detects_dropped_root(self, records8, rootsets8):
        rs = rootsets8[3]
        broken = roots.RootSet(
            n=3, roots=rs.roots[:-1], precision_bits=rs.precision_bits,
            residuals=rs.residuals[:-1], max_residual=rs.max_residual,
            min_separation=rs.min_separation, includes_zero=rs.includes_zero)
        rep = roots.certify(broken, records8[3])
        assert not rep.passed


class TestExports:
    def test_csv(self, rootsets8, tmp_path):
        path = tmp_path / "roots_4.csv"
        roots.export_csv(rootsets8[4], path)
        lines = path.read_text().strip().splitlines()
        assert lines[0].startswith("n,re,im")
        assert len(lines) == 1 + expected_degree(4)

    def test_svg(self, rootsets8, tmp_path):
        path = tmp_path / "roots_4.svg"
        roots.export_svg(rootsets8[4], path)
        text = path.read_text()
        assert text.lstrip().startswith("<svg")
        assert text.count("<circle") >= expected_degree(4)
