from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from adesing.cli import run
from adesing.reports import render_json


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_classify_e7_text():
    code, out, _ = call("classify", "x^3 + x*y^3")
    assert code == 0
    assert "type: E7" in out
    assert "mu: 7" in out
    assert "h: 18" in out
    assert "exponents: 1 5 7 9 11 13 17" in out


def test_classify_json_uses_exact_rationals():
    code, out, _ = call("classify", "x^3 + y^5", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["type"] == "E8" and data["h"] == 30
    assert data["weights"] == ["1/3", "1/5"]
    assert data["spectrum"][0] == "-7/15"


def test_classify_not_simple_is_a_computation_error():
    code, _, err = call("classify", "x^3 + y^6")
    assert code == 1
    assert "not a simple singularity" in err


def test_milnor_non_isolated():
    code, _, err = call("milnor", "x^2*y")
    assert code == 1
    assert "non-isolated singularity" in err


def test_milnor_local_and_global():
    code, out, _ = call("milnor", "x^5 + x^2*y^2 + y^5", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["mu"] == 11 and data["global_dimension"] == 16


def test_parse_error_exit_code():
    code, _, err = call("milnor", "x^-1")
    assert code == 1
    assert "negative exponent" in err


def test_spectrum_and_suspension():
    code, out, _ = call("spectrum", "x^3 + y^2", "--suspend", "1", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["spectrum"] == ["1/3", "2/3"]
    assert data["monodromy_order"] == 3
    assert data["length"] == "1/3"


def test_modality_and_signature():
    assert json.loads(call("modality", "x^4 + y^4", "--json")[1])["modality"] == 1
    code, out, _ = call("signature", "x^3 + y^5", "--suspend", "1")
    assert code == 0 and "mu+ = 0, mu0 = 0, mu- = 8" in out
    code, out, _ = call("signature", "x^3 + y^6", "--suspend", "1")
    assert "mu0 = 2" in out and "degenerate" in out


def test_newton_verb():
    code, out, _ = call("newton", "x^5 + x^2*y^2 + y^5")
    assert code == 0 and "newton number: 11" in out
    code, out, _ = call("newton", "x^2*y + y^3", "--json")
    data = json.loads(out)
    assert data["convenient"] is False and data["newton_number"] is None


def test_weyl_info():
    code, out, _ = call("weyl-info", "E8", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["roots"] == 240 and data["coxeter_number"] == 30
    assert data["group_order"] == 696729600 and data["coxeter_trace"] == -1


def test_hurwitz_orbit_verb():
    code, out, _ = call("hurwitz-orbit", "A3")
    assert code == 0 and "orbit size: 16" in out


def test_verify_deligne_a3():
    code, out, _ = call("verify", "deligne", "A3")
    assert code == 0
    assert "[PASS]" in out and "orbit=16, factorizations=16" in out


def test_verify_trace_json_report_schema():
    code, out, _ = call("verify", "trace", "A2", "--json")
    data = json.loads(out)
    rep = data["reports"][0]
    assert code == 0
    assert set(rep) >= {"check-id", "type", "parameters", "counts", "mismatches", "pass"}
    assert rep["mismatches"] == [] and rep["pass"] is True


def test_verify_sampled_trace_honours_seed():
    a = call("verify", "trace", "D4", "--samples", "200", "--seed", "3", "--json")[1]
    b = call("verify", "trace", "D4", "--samples", "200", "--seed", "3", "--json")[1]
    assert a == b
    assert json.loads(a)["reports"][0]["parameters"]["seed"] == 3


def test_verify_mu_const_and_definiteness():
    code, out, _ = call("verify", "mu-const", "x^5 + x^2*y^2 + y^5")
    assert code == 0 and "local=11" in out
    code, out, _ = call("verify", "definiteness")
    assert code == 0 and "[PASS]" in out


def test_verify_mismatch_exit_code():
    # t = -5 removes the x^2*y^2 term: the Milnor number jumps
    code, out, _ = call("verify", "mu-const", "x^5 + x^2*y^2 + y^5", "--t", "-5")
    assert code == 2
    assert "[FAIL]" in out


def test_usage_errors():
    for argv in ([], ["bogus"], ["classify"], ["verify", "nope"], ["weyl-info", "A2", "--seed", "x"]):
        code, _, err = call(*argv)
        assert code == 64, argv
        assert "usage:" in err


def test_verify_needs_a_type():
    code, _, err = call("verify", "deligne")
    assert code == 64


def test_bad_type_is_a_computation_error():
    code, _, err = call("weyl-info", "B3")
    assert code == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["classify", "x^3 + x*y^3", "--json"],
        ["spectrum", "x^2*y + y^6", "--json"],
        ["weyl-info", "D5", "--json"],
        ["verify", "deligne", "D4", "--json"],
        ["corpus", "bundled", "--json"],
    ],
)
def test_json_round_trip_is_byte_identical(argv):
    _, out, _ = call(*argv)
    assert render_json(json.loads(out)) == out


def test_corpus_bundled_passes():
    code, out, _ = call("corpus", "bundled")
    assert code == 0
    assert "overall: PASS" in out


def test_corpus_empty_file(tmp_path):
    path = tmp_path / "empty.txt"
    path.write_text("")
    code, out, _ = call("corpus", str(path), "--json")
    assert code == 0
    assert json.loads(out) == {"errors": [], "germs": [], "pass": True}


def test_corpus_missing_file(tmp_path):
    code, _, err = call("corpus", str(tmp_path / "nope.txt"))
    assert code == 1 and "cannot read corpus" in err


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "adesing", "classify", "x^3 + y^4"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 0
    assert "type: E6" in proc.stdout
