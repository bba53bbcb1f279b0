import csv
import io
import json
import subprocess
import sys

import pytest

from higgs_ip import blowup, engine
from higgs_ip.cli import (
    EXIT_ARITHMETIC,
    EXIT_CHECK_FAILED,
    EXIT_OK,
    EXIT_USAGE,
    main,
    parse_genus_range,
)
from higgs_ip.engine import KNOWN_IP_M, QuantityReport
from higgs_ip.polyring import Polynomial


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_usage(capsys, *argv):
    # argparse reports usage errors by raising SystemExit(2)
    with pytest.raises(SystemExit) as info:
        main(list(argv))
    out, err = capsys.readouterr()
    return info.value.code, err


class TestCompute:
    def test_text(self, capsys):
        code, out, _ = run(capsys, "compute", "--genus", "2")
        assert code == EXIT_OK
        assert out.strip() == "1 + t^2 + 17 t^4 + 17 t^6"

    def test_json_round_trip(self, capsys):
        code, out, _ = run(capsys, "compute", "-g", "3", "--format", "json")
        assert code == EXIT_OK
        report = QuantityReport.from_dict(json.loads(out))
        assert report.coefficients == KNOWN_IP_M[3]
        assert report.route == "pipeline"
        assert report.degree == 12

    def test_csv_agrees_with_json(self, capsys):
        _, js, _ = run(capsys, "compute", "-g", "4", "--format", "json")
        _, cs, _ = run(capsys, "compute", "-g", "4", "--format", "csv")
        rows = list(csv.reader(io.StringIO(cs)))
        assert rows[0][:3] == ["genus", "degree", "c0"]
        assert [int(x) for x in rows[1][2:]] == [int(c) for c in json.loads(js)["coefficients"]]

    def test_closed_route(self, capsys):
        _, out, _ = run(capsys, "compute", "-g", "2", "-q", "ip_m_closed", "--format", "json")
        d = json.loads(out)
        assert d["route"] == "closed_form"
        assert d["coefficients"] == ["1", "0", "1", "0", "17", "0", "17"]

    def test_split_quantity_text(self, capsys):
        _, out, _ = run(capsys, "compute", "-g", "2", "-q", "tjtilde_split")
        assert out.splitlines() == ["plus: 1 + 22 t^2 + 17 t^4 + 16 t^6", "minus: 4 t + 4 t^3"]

    def test_series_order(self, capsys):
        _, out, _ = run(capsys, "compute", "-g", "2", "-q", "p_sl2_r", "--order", "6", "--format", "csv")
        assert out.splitlines()[1] == "2,6,1,0,1,4,2,4,23"

    def test_output_file_defaults_to_json(self, capsys, tmp_path):
        path = tmp_path / "ip.json"
        code, out, _ = run(capsys, "compute", "-g", "2", "--output", str(path))
        assert code == EXIT_OK and out == ""
        assert json.loads(path.read_text())["coefficients"][-1] == "17"

    def test_unwritable_output(self, capsys, tmp_path):
        code, _, err = run(capsys, "compute", "-g", "2", "-o", str(tmp_path / "missing" / "x.json"))
        assert code == EXIT_USAGE
        assert "I/O error" in err


class TestTable:
    def test_csv(self, capsys):
        code, out, _ = run(capsys, "table", "--genus-range", "2..4", "--format", "csv")
        assert code == EXIT_OK
        lines = out.splitlines()
        assert len(lines) == 4
        assert lines[1].startswith("2,6,1,0,1,0,17,0,17,0")
        assert lines[3].endswith(",16,259")
        assert len(lines[1].split(",")) == len(lines[3].split(","))

    def test_latex(self, capsys):
        _, out, _ = run(capsys, "table", "-r", "2", "--format", "latex")
        assert out.splitlines() == [
            "\\begin{itemize}",
            "\\item $g=2$ : $IP_{t}(\\mathbf{M})=1+t^{2}+17t^{4}+17t^{6}$",
            "\\end{itemize}",
        ]

    def test_text_prefixes_genus(self, capsys):
        _, out, _ = run(capsys, "table", "-r", "2..3")
        assert out.splitlines()[0] == "g=2: 1 + t^2 + 17 t^4 + 17 t^6"

    def test_json_list(self, capsys):
        _, out, _ = run(capsys, "table", "-r", "2..5", "--format", "json")
        docs = json.loads(out)
        assert [tuple(int(c) for c in d["coefficients"]) for d in docs] == [KNOWN_IP_M[g] for g in range(2, 6)]

    def test_parallel_matches_serial(self, capsys):
        _, serial, _ = run(capsys, "table", "-r", "2..6", "--format", "csv")
        _, parallel, _ = run(capsys, "table", "-r", "2..6", "--format", "csv", "--jobs", "2")
        assert serial == parallel


class TestVerify:
    def test_passes(self, capsys):
        code, out, _ = run(capsys, "verify", "-r", "2..3")
        assert code == EXIT_OK
        assert out.splitlines()[-1] == "30 checks, 0 failed"

    def test_json(self, capsys):
        code, out, _ = run(capsys, "verify", "-r", "4", "--format", "json")
        doc = json.loads(out)
        assert code == EXIT_OK and doc["passed"]
        assert {r["check"] for r in doc["results"]} >= {"route_equality", "table_match"}

    def test_injected_fault_exits_one(self, capsys, monkeypatch):
        original = blowup.correction_theorem2
        monkeypatch.setattr(blowup, "correction_theorem2",
                            lambda g: original(g) + Polynomial.monomial(4))
        code, out, err = run(capsys, "verify", "-r", "2")
        assert code == EXIT_CHECK_FAILED
        assert "route_equality: FAIL (first divergence at t^4: expected 17, got 16)" in out
        assert "check failed" in err


class TestExitCodes:
    def test_genus_one(self, capsys):
        code, err = run_usage(capsys, "compute", "--genus", "1")
        assert code == EXIT_USAGE
        assert "genus" in err

    def test_unknown_quantity(self, capsys):
        code, err = run_usage(capsys, "compute", "-g", "2", "-q", "nope")
        assert code == EXIT_USAGE
        assert "unknown quantity" in err

    @pytest.mark.parametrize("text", ["5..2", "1..3", "x..4", "2.."])
    def test_bad_range(self, capsys, text):
        assert run_usage(capsys, "verify", "-r", text)[0] == EXIT_USAGE

    def test_missing_genus_quantity_combination(self, capsys):
        # Gr^w(3, 4) does not exist
        code, _, err = run(capsys, "compute", "-g", "2", "-q", "d1")
        assert code == EXIT_USAGE
        assert "g >= 3" in err

    def test_arithmetic_failure(self, capsys, monkeypatch):
        real = engine.binomial_power
        monkeypatch.setattr(engine, "binomial_power",
                            lambda sign, n: real(sign, n) + Polynomial.monomial(1))
        code, _, err = run(capsys, "compute", "-g", "2", "-q", "ip_m_closed")
        assert code == EXIT_ARITHMETIC
        assert "arithmetic error" in err

    def test_law_failure_on_compute(self, capsys, monkeypatch):
        original = blowup.correction_theorem2
        monkeypatch.setattr(blowup, "correction_theorem2",
                            lambda g: original(g) - Polynomial.monomial(6 * g - 4))
        code, _, err = run(capsys, "compute", "-g", "2")
        assert code == EXIT_CHECK_FAILED
        assert "DegreeMismatch" in err


def test_parse_genus_range():
    assert parse_genus_range("2..5") == [2, 3, 4, 5]
    assert parse_genus_range("7") == [7]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "higgs_ip", "compute", "-g", "2"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "1 + t^2 + 17 t^4 + 17 t^6"


def test_module_entry_point_usage_error():
    proc = subprocess.run([sys.executable, "-m", "higgs_ip", "compute", "-g", "1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 2
