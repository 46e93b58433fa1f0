import io
import json
import subprocess
import sys

import pytest

from homlie.cli import main, run as run_cli
from homlie.formats import algebra_from_json, write_json


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_verify_text():
    code, out, _ = run("verify", "A1")
    assert code == 0
    assert out.strip() == "hom-Jacobi: holds; multiplicative: holds; regular: true"


def test_verify_failure(tmp_path):
    path = tmp_path / "bad.json"
    write_json({"dim": 3, "basis": ["h", "e", "f"],
                "brackets": [{"i": 0, "j": 1, "coeffs": ["0", "2", "0"]},
                             {"i": 0, "j": 2, "coeffs": ["0", "0", "-2"]},
                             {"i": 1, "j": 2, "coeffs": ["1", "0", "0"]}],
                "alpha": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "2"]]}, path)
    code, out, _ = run("verify", str(path))
    assert code == 1
    assert "hom-Jacobi: fails" in out and "fails at (h, e, f)" in out


def test_verify_json_either_position():
    for argv in (("--format", "json", "verify", "A2"), ("verify", "A2", "--format", "json")):
        code, out, _ = run(*argv)
        data = json.loads(out)
        assert code == 0 and data["hom_jacobi"]["holds"] and data["regular"] is True


def test_cohomology():
    code, out, _ = run("cohomology", "A2", "--rep", "adjoint:-1", "--degree", "1")
    assert code == 0 and "dims Z=2 B=2 H=0" in out
    code, out, _ = run("--format", "json", "cohomology", "A2", "--rep", "trivial", "--degree", "1")
    data = json.loads(out)
    assert data["dim_H"] == 1 and len(data["representatives"]) == 1


def test_nijenhuis():
    code, out, _ = run("nijenhuis", "A2", "--op", "N_diag10")
    assert code == 0
    assert out.strip() == "hom-Nijenhuis: yes; deformation: valid; trivializes: yes"


def test_nijenhuis_failure(tmp_path):
    path = tmp_path / "n.json"
    write_json({"dim": 3, "matrix": [["1", "0", "0"], ["0", "2", "0"], ["0", "0", "0"]]}, path)
    code, out, _ = run("nijenhuis", "S3", "--op", str(path))
    assert code == 1 and "hom-Nijenhuis: no" in out


def test_central_extend_round_trips():
    code, out, _ = run("--format", "json", "central-extend", "A1", "--theta", "theta_e1e2")
    assert code == 0
    h = algebra_from_json(json.loads(out))
    assert h.labels == ("e1", "e2", "c") and h.bracket_basis(0, 1) == (0, 0, 1)
    code, text, _ = run("central-extend", "A1", "--theta", "theta_e1e2")
    assert "[e1, e2] = 1*c" in text and "closed (d_T theta = 0): yes" in text


def test_semidirect_and_direct_sum():
    code, out, _ = run("semidirect", "S3", "--rep", "adjoint:0")
    assert code == 0 and "dim 6" in out
    code, out, _ = run("--format", "json", "direct-sum", "A3", "H3q")
    assert code == 0 and json.loads(out)["dim"] == 5


def test_derivations():
    code, out, _ = run("--format", "json", "derivations", "S3", "--grade", "0")
    assert code == 0 and json.loads(out)["dim"] == 3
    code, out, _ = run("inner-derivations", "A2", "--grade", "0")
    assert code == 0 and out.startswith("Inn_alpha^0: dim 2")


def test_derivation_extend(tmp_path):
    op = tmp_path / "d.json"
    write_json({"dim": 2, "matrix": [["1", "0"], ["0", "1"]]}, op)
    code, out, _ = run("derivation-extend", "A2", "--op", str(op))
    assert code == 1 and "alpha-derivation: no" in out
    write_json({"dim": 2, "matrix": [["0", "0"], ["0", "1"]]}, op)
    assert run("derivation-extend", "A2", "--op", str(op))[0] == 0


def test_morphism_check(tmp_path):
    m = tmp_path / "swap.json"
    write_json({"source_dim": 2, "target_dim": 2, "matrix": [["0", "1"], ["1", "0"]]}, m)
    code, out, _ = run("morphism-check", "A2", "A2", "--map", str(m))
    assert code == 1 and "morphism: no; graph is subalgebra: no" in out
    write_json({"source_dim": 2, "target_dim": 2, "matrix": [["1", "0"], ["0", "2"]]}, m)
    code, out, _ = run("morphism-check", "A2", "A2", "--map", str(m))
    assert code == 0 and "morphism: yes; graph is subalgebra: yes" in out


def test_iso_check(tmp_path):
    t1, t2, f = tmp_path / "t1.json", tmp_path / "t2.json", tmp_path / "f.json"
    write_json({"degree": 2, "values": [{"i": 0, "j": 1, "value": "-1"}]}, t1)
    write_json({"degree": 2, "values": []}, t2)
    write_json({"degree": 1, "module_dim": 1, "values": [{"indices": [1], "coeffs": ["1"]}]}, f)
    code, out, _ = run("iso-check", "A2", "--theta1", str(t1), "--theta2", str(t2), "--f", str(f))
    assert code == 0 and "isomorphism: holds" in out
    code, _, err = run("iso-check", "A2", "--theta1", str(t2), "--theta2", str(t1), "--f", str(f))
    assert code == 2 and "NotCoboundary" in err


def test_deform(tmp_path):
    w = tmp_path / "w.json"
    write_json({"degree": 2, "module_dim": 3, "values": [{"indices": [0, 1], "coeffs": ["0", "1", "0"]}]}, w)
    code, out, _ = run("deform", "S3", "--omega", str(w), "--t", "1")
    assert code == 1 and "generates deformation: no" in out


def test_d_squared():
    code, out, _ = run("d-squared", "H3q", "--rep", "adjoint:1")
    assert code == 0 and "holds" in out


@pytest.mark.parametrize("argv, fragment", [
    (("verify", "nosuchfile.json"), "no such file"),
    (("cohomology", "A2", "--rep", "adjoint:x", "--degree", "1"), "adjoint power"),
    (("cohomology", "A2", "--rep", "trivial", "--degree", "7"), None),
])
def test_input_errors(argv, fragment):
    code, _, err = run(*argv)
    if fragment is None:
        # degrees above the dimension are zero, not an error
        assert code == 0
    else:
        assert code == 2 and fragment in err


def test_precondition_error():
    code, _, err = run("cohomology", "A2", "--rep", "trivial", "--degree", "-1")
    assert code == 2 and "DegreeOutOfRange" in err


def test_bad_json(tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("{\"dim\": 2,,}")
    code, _, err = run("verify", str(path))
    assert code == 2 and "line 1" in err


def test_usage_error():
    assert run("frobnicate")[0] == 2


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "homlie", "verify", "A3"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "regular: true" in proc.stdout


def test_run_returns_report():
    code, text = run_cli(["cohomology", "S3", "--rep", "adjoint:-1", "--degree", "1"])
    assert code == 0 and "H=0" in text
    code, text = run_cli(["verify", "missing.json"])
    assert code == 2 and text.startswith("input error")
