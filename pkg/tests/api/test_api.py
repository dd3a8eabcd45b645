"""
HTTP tests for the v1 routers
Run with: pytest tests/api/test_api.py
"""
import pytest
from fastapi.testclient import TestClient
from app.main import app

client = TestClient(app)

PADE_1 = {"n1": 1, "n2": 1, "points": [{"re": "0", "im": "0", "mult": 3}]}


class TestSystem:
    """Root and health"""

    def test_root(self):
        """Root points at the docs"""
        response = client.get("/")
        assert response.status_code == 200
        assert response.json()["docs"] == "/docs"

    def test_health(self):
        """Health lists the modules and precisions"""
        response = client.get("/api/v1/health")
        assert response.status_code == 200
        data = response.json()
        assert data["status"] == "ok"
        assert "interp" in data["modules"]
        assert data["precision_bits"]["api"] == 256


class TestInterpolants:
    """POST /interpolants/solve"""

    def test_solve_pade_1(self):
        """(1 + z/2) / (1 - z/2)"""
        response = client.post("/api/v1/interpolants/solve", json={"scheme": PADE_1, "precision_bits": 128})
        assert response.status_code == 200
        data = response.json()
        assert data["precision_bits"] == 128
        assert data["normalization"] == "q_at_zero_is_one"
        assert float(data["p"][1]["re"]) == pytest.approx(0.5)
        assert float(data["q"][1]["re"]) == pytest.approx(-0.5)
        assert float(data["zeros"][0]["re"]) == pytest.approx(-2)
        assert float(data["poles"][0]["re"]) == pytest.approx(2)

    def test_query_precision(self):
        """The query parameter applies when the body has none"""
        response = client.post("/api/v1/interpolants/solve?precision_bits=192", json={"scheme": PADE_1})
        assert response.status_code == 200
        assert response.json()["precision_bits"] == 192

    def test_count_mismatch(self):
        """Two conditions for a type (1, 1) problem"""
        scheme = {"n1": 1, "n2": 1, "points": [{"re": "0", "mult": 2}]}
        response = client.post("/api/v1/interpolants/solve", json={"scheme": scheme})
        assert response.status_code == 400
        assert "needs 3" in response.json()["detail"]

    def test_low_precision(self):
        """Below the minimum precision"""
        response = client.post("/api/v1/interpolants/solve?precision_bits=64", json={"scheme": PADE_1})
        assert response.status_code == 400

    def test_bad_body(self):
        """Multiplicity must be positive"""
        scheme = {"n1": 0, "n2": 0, "points": [{"re": "0", "mult": 0}]}
        response = client.post("/api/v1/interpolants/solve", json={"scheme": scheme})
        assert response.status_code == 422


class TestApparatus:
    """POST /apparatus/dump"""

    def test_pade_dump(self):
        """Pade endpoints are exact"""
        response = client.post("/api/v1/apparatus/dump", json={"scheme": PADE_1})
        assert response.status_code == 200
        data = response.json()
        assert data["provenance"] == "pade_exact"
        assert float(data["a"]["im"]) == pytest.approx(1)
        assert float(data["b"]["im"]) == pytest.approx(-1)
        assert float(data["c_n"]["re"]) == pytest.approx(1)

    def test_n_zero(self):
        """No apparatus for n = 0"""
        scheme = {"n1": 0, "n2": 0, "points": [{"re": "0"}]}
        response = client.post("/api/v1/apparatus/dump", json={"scheme": scheme})
        assert response.status_code == 400


class TestGeometry:
    """GET /geometry/*"""

    def test_c0(self):
        """c0 at the request precision"""
        response = client.get("/api/v1/geometry/c0")
        assert response.status_code == 200
        data = response.json()
        assert float(data["c0"]) == pytest.approx(data["reference"], abs=1e-5)
        assert data["precision_bits"] == 256

    def test_region(self):
        """-5 lies left of gamma1"""
        response = client.get("/api/v1/geometry/region", params={"re": -5})
        assert response.status_code == 200
        assert response.json()["region"] == "D1inf"

    def test_region_on_ray(self):
        """2i is on a trajectory"""
        response = client.get("/api/v1/geometry/region", params={"re": 0, "im": 2})
        assert response.json()["region"] == "OnBoundary"


class TestFigures:
    """GET /figures/presets"""

    def test_presets(self):
        """All twelve presets are listed"""
        response = client.get("/api/v1/figures/presets")
        assert response.status_code == 200
        ids = [p["id"] for p in response.json()]
        assert len(ids) == 12
        assert "two-point-50" in ids
