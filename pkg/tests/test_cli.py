"""
Tests for the expinterp command line
Run with: pytest tests/test_cli.py
"""
import json

import pytest

from app.cli import build_parser, main
from app.constant import EXIT_INPUT_ERROR, EXIT_OK


class TestParser:
    """Argument parsing"""

    def test_sweep(self):
        """Comma separated sweeps become int lists"""
        args = build_parser().parse_args(["verify", "--suite", "theorem1", "--n-sweep", "10,20"])
        assert args.n_sweep == [10, 20]

    def test_source_required(self):
        """interpolate needs a scheme source"""
        with pytest.raises(SystemExit):
            build_parser().parse_args(["interpolate"])


class TestInterpolate:
    """expinterp interpolate"""

    def test_pade_json_stdout(self, capsys):
        """The report goes to stdout without --out"""
        assert main(["interpolate", "--n", "1", "--precision-bits", "128"]) == EXIT_OK
        body = json.loads(capsys.readouterr().out)
        assert body["metadata"]["type"] == "(1, 1)"
        assert float(body["zeros"][0]["re"]) == pytest.approx(-2)

    def test_scheme_file(self, tmp_path):
        """A scheme file and a CSV target"""
        scheme = tmp_path / "scheme.json"
        scheme.write_text(json.dumps({"n1": 1, "n2": 0, "points": [{"re": "0.5"}, {"re": "-0.5"}]}))
        out = tmp_path / "r.csv"
        code = main(["interpolate", "--scheme", str(scheme), "--format", "csv",
                     "--precision-bits", "128", "--out", str(out)])
        assert code == EXIT_OK
        assert "kind,re,im" in out.read_text()

    def test_empty_scheme(self, tmp_path, capsys):
        """An empty file is an input error"""
        scheme = tmp_path / "empty.json"
        scheme.write_text("")
        assert main(["interpolate", "--scheme", str(scheme)]) == EXIT_INPUT_ERROR
        assert "empty" in capsys.readouterr().err

    def test_low_precision(self, capsys):
        """Precision below the minimum is refused"""
        assert main(["interpolate", "--n", "1", "--precision-bits", "64"]) == EXIT_INPUT_ERROR
        assert capsys.readouterr().err.startswith("error:")


class TestVerify:
    """expinterp verify"""

    def test_decreasing_sweep(self, capsys):
        """The sweep must increase"""
        assert main(["verify", "--suite", "theorem1", "--n-sweep", "20,10"]) == EXIT_INPUT_ERROR
        assert "strictly increasing" in capsys.readouterr().err


class TestTrace:
    """expinterp trace"""

    def test_files(self, tmp_path, capsys):
        """Two contours and two measures"""
        assert main(["trace", "--out", str(tmp_path), "--nodes", "20"]) == EXIT_OK
        names = sorted(p.name for p in tmp_path.iterdir())
        assert names == ["gamma1.csv", "gamma2.csv", "mu_P.csv", "mu_Q.csv"]
        assert (tmp_path / "mu_P.csv").read_text().startswith("# step: 0.01")
        assert len(capsys.readouterr().out.splitlines()) == 4
