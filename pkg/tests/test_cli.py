import json
import subprocess
import sys
from pathlib import Path

import pytest

from leafvol.cli import main

DATA = Path(__file__).resolve().parent.parent / "data"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def test_molien_b2(capsys):
    code, out, err = run(capsys, "molien", DATA / "b2_group.json", "--series-depth", "8")
    assert code == 0
    doc = json.loads(out)
    assert doc["order"] == 8
    assert doc["coefficients"] == ["1/1", "0/1", "1/1", "0/1", "2/1", "0/1", "2/1", "0/1", "3/1"]
    H = doc["hilbert_series"]
    assert H["numerator"] == ["1/1"] and H["source"] == "molien"


def test_molien_trivial(capsys):
    code, out, _ = run(capsys, "molien", DATA / "trivial3_group.json", "--series-depth", "3")
    assert code == 0
    # 1/(1-z)^3 gives C(k+2, 2)
    assert json.loads(out)["coefficients"] == ["1/1", "3/1", "6/1", "10/1"]


def test_molien_cap(capsys):
    code, out, err = run(capsys, "molien", DATA / "b3_cap10.json")
    assert code == 3 and out == "" and "GroupTooLarge" in err
    code, _, _ = run(capsys, "molien", DATA / "b3_cap10.json", "--cap", "100")
    assert code == 0


def test_analyze_hopf(capsys):
    code, out, _ = run(capsys, "analyze", DATA / "hopf_complex.json")
    doc = json.loads(out)
    assert code == 0
    assert doc["volume"]["ratio"] == "1/4" and doc["volume"]["m"] == 2
    assert doc["hironaka_ratio"] == {"m": 2, "ratio": "1/4"}
    assert doc["cm_check"]["passed"] is True


def test_analyze_t_cubed_warns(capsys):
    code, out, err = run(capsys, "analyze", DATA / "t_cubed.json")
    doc = json.loads(out)
    assert code == 0 and "warning" in err
    assert doc["volume"]["warning"] is True
    assert doc["cm_check"]["offending_poles"] == [{"root_order": 3, "pole_order": 1}]


def test_analyze_no_pole(capsys):
    code, out, err = run(capsys, "analyze", DATA / "no_pole.json")
    assert code == 4 and out == "" and "NoPoleAtOne" in err


def test_analyze_group(capsys):
    code, out, _ = run(capsys, "analyze", DATA / "rotation3_group.json")
    doc = json.loads(out)
    assert code == 0 and doc["group_order"] == 3 and doc["volume"]["ratio"] == "1/3"


@pytest.mark.parametrize("name, last", [("hopf_complex.json", 1000 / 1002), ("trivial_s2.json", 1000 / 1001)])
def test_spectrum(capsys, name, last):
    code, out, _ = run(capsys, "spectrum", DATA / name, "--k-max", "1000")
    doc = json.loads(out)
    assert code == 0
    assert doc["rows"][-1]["k"] == 1000
    assert doc["rows"][-1]["ratio"] == pytest.approx(last, rel=1e-12)
    assert abs(doc["rows"][-1]["ratio"] - 1) < 0.0021
    assert doc["b_series_identity"] is True
    heat = doc["heat_trace"]
    assert heat["scaled"] == pytest.approx(heat["target"], rel=0.02)


def test_spectrum_negative_multiplicity(capsys):
    code, out, err = run(capsys, "spectrum", DATA / "t_cubed.json", "--k-max", "20")
    assert code == 5 and out == "" and "NegativeMultiplicity" in err


def test_spectrum_needs_n(capsys, tmp_path):
    f = tmp_path / "h.json"
    f.write_text(json.dumps({"hsop_degrees": [1, 1], "generator_degrees": [0]}))
    code, _, err = run(capsys, "spectrum", f, "--k-max", "10")
    assert code == 2 and "--n" in err
    code, out, _ = run(capsys, "spectrum", f, "--k-max", "10", "--n", "1", "--heat-s", "0.1")
    assert code == 0 and json.loads(out)["n"] == 1


@pytest.mark.parametrize(
    "content",
    ["not json", "[1, 2]", json.dumps({"something": 1}), json.dumps({"numerator": ["x"]}), json.dumps({"hsop_degrees": [0], "generator_degrees": [0]})],
)
def test_parse_errors(capsys, tmp_path, content):
    f = tmp_path / "bad.json"
    f.write_text(content)
    code, out, _ = run(capsys, "analyze", f)
    assert code == 2 and out == ""


def test_missing_file_and_bad_args(capsys, tmp_path):
    assert run(capsys, "analyze", tmp_path / "missing.json")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "catalog", "run")[0] == 2
    assert run(capsys, "catalog", "verify")[0] == 2


def test_catalog_list_and_run(capsys):
    code, out, _ = run(capsys, "catalog", "list")
    assert code == 0 and "hopf_complex" in json.loads(out)["entries"]
    code, out, _ = run(capsys, "catalog", "run", "clifford(4,2)")
    doc = json.loads(out)
    assert code == 0 and doc["match"] and doc["passed"]
    assert doc["computed"]["ratio"] == "1/16"
    assert run(capsys, "catalog", "run", "nope")[0] == 4


def test_catalog_verify_all(capsys):
    code, out, err = run(capsys, "catalog", "verify", "--all")
    assert code == 0 and json.loads(out)["passed"] is True and err == ""


def test_output_is_byte_stable(capsys):
    first = run(capsys, "analyze", DATA / "rotation3_group.json")[1]
    second = run(capsys, "analyze", DATA / "rotation3_group.json")[1]
    assert first == second


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "leafvol", "analyze", str(DATA / "hopf_complex.json")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["volume"]["ratio"] == "1/4"
