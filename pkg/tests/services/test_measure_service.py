"""
Tests for the limit measures and their export
Run with: pytest tests/services/test_measure_service.py
"""
import numpy as np
import pytest

from app.services.measure_service import (
    discretize_mu,
    empirical_moments,
    export_contour_csv,
    export_measure_csv,
    measure_moments,
    moment_discrepancy,
    mu_P,
    mu_Q,
)
from app.services.trajectory_service import trace_gamma1


class TestMeasures:
    """mu_P on gamma1 and mu_Q on gamma2"""

    mu = mu_P()

    def test_unit_mass(self):
        """Both measures are probability measures"""
        assert abs(self.mu.mass - 1) < 1e-6
        assert abs(mu_Q().mass - 1) < 1e-6

    def test_positive(self):
        """Weights are positive"""
        assert np.all(self.mu.weights > 0)

    def test_first_moment_real(self):
        """Conjugate symmetry makes odd moments real"""
        assert abs(np.sum(self.mu.weights * self.mu.nodes).imag) <= 1e-8

    def test_merge(self):
        """Merging keeps the mass"""
        merged = discretize_mu(trace_gamma1(), 50)
        assert len(merged.nodes) == 50
        assert merged.mass == pytest.approx(self.mu.mass, abs=1e-12)

    def test_moments(self):
        """The zeroth moment is the mass"""
        moments = measure_moments(self.mu, K=3, workers=1)
        assert len(moments) == 4
        assert abs(moments[0] - self.mu.mass) < 1e-12


class TestEmpirical:
    """Counting measures of point sets"""

    def test_zeroth(self):
        """k = 0 gives one"""
        moments = empirical_moments([1, -1, 1j, -1j], K=2)
        assert moments[0] == 1
        assert abs(moments[1]) < 1e-15
        assert abs(moments[2]) < 1e-15

    def test_discrepancy(self):
        """Largest entrywise gap"""
        assert moment_discrepancy([1, 2], [1, 2.5]) == pytest.approx(0.5)


class TestExport:
    """CSV files with a metadata header"""

    def test_contour(self, tmp_path):
        """Header, column row, one row per vertex"""
        gamma1 = trace_gamma1()
        path = export_contour_csv(gamma1, tmp_path / "sub" / "gamma1.csv", {"step": 0.01})
        lines = path.read_text().splitlines()
        assert lines[0] == "# step: 0.01"
        assert lines[1] == "re,im"
        assert len(lines) == 2 + len(gamma1)

    def test_measure(self, tmp_path):
        """Weights ride along as a third column"""
        mu = discretize_mu(trace_gamma1(), 10)
        lines = export_measure_csv(mu, tmp_path / "mu_P.csv").read_text().splitlines()
        assert lines[0] == "re,im,weight"
        assert len(lines) == 11
