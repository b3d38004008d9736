import pytest

import franklin.verify as verify
from franklin.qseries import rhs_general
from franklin.verify import (
    check_durfee_decomposition,
    check_fixed_point_formula,
    check_general_formula,
    check_sylvester,
)


class TestGeneralFormula:
    @pytest.mark.parametrize("m", [0, 1, 3])
    def test_passes(self, m):
        report = check_general_formula(m, 120)
        assert report.verdict == "Pass"
        assert report.first_mismatch is None
        assert report.params == {"m": m, "order": 120}
        assert report.elapsed >= 0

    def test_fault_injection(self, monkeypatch):
        def corrupted(m, order):
            series = rhs_general(m, order)
            series.coeffs[7] += 1
            return series

        monkeypatch.setattr(verify, "rhs_general", corrupted)
        report = check_general_formula(0, 40)
        assert report.verdict == "Fail"
        assert report.first_mismatch["exponent"] == 7
        assert report.first_mismatch["lhs"] == report.first_mismatch["rhs"] - 1


class TestFixedPointFormula:
    @pytest.mark.parametrize("m", [0, 2, 4])
    def test_passes(self, m):
        report = check_fixed_point_formula(m, 80)
        assert report.verdict == "Pass"

    def test_fault_injection(self, monkeypatch):
        real = verify.euler_product

        def corrupted(m, order):
            series = real(m, order)
            series.coeffs[11] -= 2
            return series

        monkeypatch.setattr(verify, "euler_product", corrupted)
        report = check_fixed_point_formula(1, 30)
        assert report.verdict == "Fail"
        assert report.first_mismatch["exponent"] == 11


class TestSylvester:
    def test_passes(self):
        report = check_sylvester(20, 20)
        assert report.verdict == "Pass"

    def test_degenerate_grids(self):
        assert check_sylvester(10, 1).verdict == "Pass"
        assert check_sylvester(10, 0).verdict == "Pass"
        assert check_sylvester(0, 10).verdict == "Pass"

    def test_fault_injection(self, monkeypatch):
        real = verify.sylvester_sides

        def corrupted(q_order, z_degree):
            lhs, rhs = real(q_order, z_degree)
            rhs.grid[3][1] += 1
            return lhs, rhs

        monkeypatch.setattr(verify, "sylvester_sides", corrupted)
        report = check_sylvester(8, 8)
        assert report.verdict == "Fail"
        assert report.first_mismatch["qExponent"] == 3
        assert report.first_mismatch["zExponent"] == 1


class TestDurfee:
    def test_passes(self):
        report = check_durfee_decomposition(24, 5)
        assert report.verdict == "Pass"
        assert report.params == {"order": 24, "maxDimension": 5}

    def test_dimension_zero_only(self):
        assert check_durfee_decomposition(10, 0).verdict == "Pass"

    def test_fault_injection(self, monkeypatch):
        real = verify.pochhammer_q

        def corrupted(n, order):
            series = real(n, order)
            if n == 2:
                series.coeffs[2] += 1
            return series

        monkeypatch.setattr(verify, "pochhammer_q", corrupted)
        report = check_durfee_decomposition(14, 3)
        assert report.verdict == "Fail"
        assert report.first_mismatch["dimension"] == 2


class TestReportShape:
    def test_summary_lines(self):
        passing = check_sylvester(6, 6)
        assert passing.summary().startswith("[PASS] sylvester")
        failing = verify.VerificationReport(
            identity="sylvester",
            params={"order": 6},
            verdict="Fail",
            first_mismatch={"qExponent": 1, "lhs": 0, "rhs": 2},
            elapsed=0.5,
        )
        line = failing.summary()
        assert line.startswith("[FAIL] sylvester order=6")
        assert "first mismatch" in line
        assert not failing.passed
