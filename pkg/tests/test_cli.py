import json
import subprocess
import sys
from pathlib import Path

import pytest

from hue.cli import main, stringify

INPUTS = Path(__file__).resolve().parent.parent / "example_inputs"


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out, err = capsys.readouterr()
    return code, out, err


def payload(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0, out
    return json.loads(out)["payload"]


def test_report_on_nonpartitionable_example(capsys):
    p = payload(capsys, "report", INPUTS / "nonpart6.json")
    assert p["h_vector"] == ["1", "33", "39", "-1"]
    assert p["partitionable_obstructed"] is True
    assert p["chromatic"]["methods_agree"] is True
    assert p["series"]["passed"] is True
    assert p["wedge"]["agree"] is True
    assert p["homology"]["betti"] == {"-1": "0", "0": "0", "1": "4", "2": "3"}
    assert [row["m"] for row in p["bounds"]] == ["0", "1", "2", "3"]


def test_cup_on_torus(capsys):
    p = payload(capsys, "cup", INPUTS / "torus9.json")
    assert p["witness"] is not None
    assert p["wedge_of_spheres"] is False


def test_chromatic_brute(capsys):
    p = payload(capsys, "chromatic", INPUTS / "one_edge3.json", "--method", "brute")
    assert p["power_basis"] == ["0", "-1", "0", "1"]
    assert p["f_vector"] == ["1", "6", "18", "18", "6"]
    assert p["h_vector"]["n_prime"] == "3"


def test_text_input_and_normalization(capsys):
    p = payload(capsys, "chromatic", INPUTS / "two_edges4.txt", "--normalization", "6")
    assert p["power_basis"] == ["0", "1", "-2", "0", "1"]
    assert p["h_vector"]["n_prime"] == "6" and len(p["h_vector"]["values"]) == 8
    code, _, _ = run(capsys, "chromatic", INPUTS / "two_edges4.txt", "--normalization", "2")
    assert code == 2


@pytest.mark.parametrize("command, key", [
    ("validate", "valid"),
    ("complex", "f_vector"),
    ("bounds", "levels"),
    ("homology", "betti"),
    ("cm", "verdict"),
    ("connectedness", "connected"),
    ("wedge", "agree"),
])
def test_every_command_runs(capsys, command, key):
    p = payload(capsys, command, INPUTS / "noncm6.json")
    assert key in p


def test_cm_and_connectedness_outputs(capsys):
    p = payload(capsys, "cm", INPUTS / "noncm6.json")
    assert p["verdict"] == "not-CM" and p["witness"] == "123|456"
    p = payload(capsys, "connectedness", INPUTS / "two_components6.json")
    assert p["component_count"] == "2" and p["reduced_betti_0"] == "1"
    p = payload(capsys, "homology", INPUTS / "sphere5.json", "--coefficients", "Q")
    assert "torsion" not in p and p["betti"]["2"] == "1"
    p = payload(capsys, "bounds", INPUTS / "two_edges4.json", "--truncation", "1")
    first = p["levels"][0]["bounds"][0]
    assert first["lower"] == "8" and first["upper"] == "inf" and first["exact"] == "10"
    p = payload(capsys, "complex", INPUTS / "one_edge3.json", "--box")
    assert p["f_vector"] == ["1"] and p["box"]["f_vector"] == ["1", "2", "1"]


def test_exit_codes(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text('{"vertices": 3, "edges": [[1,2,3],[1,2]]}')
    code, out, err = run(capsys, "validate", bad)
    assert code == 2 and "nested edges" in err
    assert json.loads(out)["error"]["kind"] == "invalid-input"
    code, out, _ = run(capsys, "validate", bad, "--reduce-to-minimal")
    assert code == 0 and json.loads(out)["payload"]["hypergraph"]["edges"] == [["1", "2"]]
    code, _, _ = run(capsys, "homology", INPUTS / "torus9.json", "--budget", "100")
    assert code == 3
    code, _, _ = run(capsys, "homology", tmp_path / "missing.json")
    assert code == 2
    code, _, _ = run(capsys, "bounds", INPUTS / "nonpart6.json", "--truncation", "9")
    assert code == 2
    code, _, _ = run(capsys, "nonsense", INPUTS / "nonpart6.json")
    assert code == 2
    empty = tmp_path / "empty.txt"
    empty.write_text("n 3\n")
    code, _, _ = run(capsys, "homology", empty)
    assert code == 2
    assert run(capsys, "validate", empty)[0] == 0


def test_cross_check_failure_exit_code(capsys, monkeypatch):
    from hue import cli
    from hue.polynomial import RationalPolynomial

    real = cli.chromatic_polynomial

    def broken(hg, method="faces"):
        p = real(hg, method)
        return p + RationalPolynomial([0, 1]) if method == "brute" else p

    monkeypatch.setattr(cli, "chromatic_polynomial", broken)
    code, out, err = run(capsys, "chromatic", INPUTS / "nonpart6.json")
    assert code == 4 and "disagree" in err


def test_payload_is_deterministic(capsys):
    a = payload(capsys, "report", INPUTS / "noncm6.json")
    b = payload(capsys, "report", INPUTS / "noncm6.json")
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_pretty_view_is_derived_from_json(capsys):
    code, out, _ = run(capsys, "chromatic", INPUTS / "one_edge3.json", "--pretty")
    assert code == 0
    assert "payload.power_basis: (0, -1, 0, 1)" in out


def test_stringify():
    from fractions import Fraction

    assert stringify({"a": [1, Fraction(1, 2), True, None, float("-inf")]}) == {
        "a": ["1", "1/2", True, None, "-inf"]
    }


def test_console_script_and_stdin():
    text = (INPUTS / "one_edge3.json").read_text()
    out = subprocess.run([sys.executable, "-m", "hue.cli", "chromatic", "-"], input=text,
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert json.loads(out.stdout)["payload"]["power_basis"] == ["0", "-1", "0", "1"]
