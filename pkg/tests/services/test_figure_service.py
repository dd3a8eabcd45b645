"""
Tests for presets and rendered artifacts
Run with: pytest tests/services/test_figure_service.py
"""
import json

import pytest

from app.constant import OutputFormat
from app.services.figure_service import PRESETS, get_preset, render_artifacts, write_artifacts
from app.services.scheme_service import pade_scheme

PREC = 128


def rows_of(text: str, kind: str) -> list[str]:
    return [line for line in text.splitlines() if line.startswith(f"{kind},")]


class TestPresets:
    """Twelve presets in three families"""

    def test_count(self):
        """Four of each family"""
        assert len(PRESETS) == 12
        assert sorted({p.family for p in PRESETS.values()}) == ["circle", "line", "two-point"]

    def test_lookup(self):
        """Known ids resolve"""
        assert get_preset("line-72.5").parameter == 72.5

    def test_unknown(self):
        """Unknown ids name the choices"""
        with pytest.raises(ValueError, match="circle-60"):
            get_preset("square-1")

    def test_two_point_counts(self):
        """Type (51, 50) carries 51 zeros, 50 poles and 102 conditions"""
        text = render_artifacts(get_preset("two-point-50").generator(512), [OutputFormat.CSV])[OutputFormat.CSV]
        assert len(rows_of(text, "zero")) == 51
        assert len(rows_of(text, "pole")) == 50
        assert len(rows_of(text, "interp_point")) == 102


class TestRender:
    """CSV, SVG and JSON for Pade n = 1"""

    texts = render_artifacts(pade_scheme(1, PREC), list(OutputFormat))

    def test_csv(self):
        """One zero at -2, one pole at 2, three interpolation conditions"""
        text = self.texts[OutputFormat.CSV]
        assert "kind,re,im" in text
        assert len(rows_of(text, "zero")) == 1
        assert rows_of(text, "zero")[0].startswith("zero,-2")
        assert len(rows_of(text, "pole")) == 1
        assert len(rows_of(text, "interp_point")) == 3
        assert "# precision_bits: 128" in text

    def test_svg(self):
        """Fixed view box"""
        assert 'viewBox="-150 -150 300 300"' in self.texts[OutputFormat.SVG]

    def test_json(self):
        """The report carries metadata and the coefficients"""
        body = json.loads(self.texts[OutputFormat.JSON])
        assert body["metadata"]["type"] == "(1, 1)"
        assert len(body["p"]) == 2
        assert len(body["zeros"]) == 1

    def test_deterministic(self):
        """Same scheme, same bytes"""
        again = render_artifacts(pade_scheme(1, PREC), list(OutputFormat))
        assert again == self.texts


class TestWrite:
    """Files on disk"""

    def test_stem(self, tmp_path):
        """With a stem, out is a directory"""
        paths = write_artifacts(pade_scheme(1, PREC), tmp_path, [OutputFormat.CSV, OutputFormat.SVG], stem="pade-1")
        assert [p.name for p in paths] == ["pade-1.csv", "pade-1.svg"]
        assert all(p.exists() for p in paths)

    def test_single_file(self, tmp_path):
        """Without a stem, out is the file itself"""
        target = tmp_path / "nested" / "r.json"
        assert write_artifacts(pade_scheme(1, PREC), target, [OutputFormat.JSON]) == [target]
        assert json.loads(target.read_text())["n1"] == 1
