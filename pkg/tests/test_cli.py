import json
import subprocess
import sys

import pytest

from pseudoreal import acceptance
from pseudoreal.cli import main
from pseudoreal.projlinear import Matrix3, ProjElement, matrix_from_json, matrix_to_json
from pseudoreal.cyclotomic import field


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, json.loads(captured.out), captured.err


def test_classify(capsys):
    code, obj, _ = run(capsys, "classify", "--n", "5", "--a", "1", "--b", "4")
    assert code == 0
    assert obj["moduli"] == "yes" and obj["definable"] is True and obj["pseudo_real"] is False
    assert matrix_from_json(obj["witness"]["model"]).is_real()
    code, obj, _ = run(capsys, "classify", "--n", "7", "--a", "1", "--b", "3")
    assert code == 0 and obj["pseudo_real"] is True


def test_classify_homology(capsys):
    code, obj, _ = run(capsys, "classify", "--n", "5", "--a", "0", "--b", "1")
    assert code == 0 and obj["definable"] is False and obj["obstruction"] == "homology-period>=3"


@pytest.mark.parametrize("argv,kind", [
    (["classify", "--n", "7", "--a", "0", "--b", "0"], "bad-parameters"),
    (["classify", "--n", "7"], "usage"),
    (["classify", "--n", "5", "--a", "1", "--b", "4", "--precision", "20"], "usage"),
    (["no-such-command"], "usage"),
    (["curve", "quintic", "--a", "1", "--b", "0"], "bad-parameters"),
    (["real-model", "cyclic", "--n", "7", "--a", "1", "--b", "3"], "criterion-failed"),
    (["classify-element", "--matrix", "/nonexistent/file.json"], "usage"),
])
def test_errors(capsys, argv, kind):
    code, obj, _ = run(capsys, *argv)
    assert code == 2
    assert obj["error"]["kind"] == kind and obj["error"]["detail"]


def test_classify_element_roundtrip(capsys, tmp_path):
    F = field(7)
    M = Matrix3.diag(1, F.zeta(1), F.zeta(3))
    p = tmp_path / "m.json"
    p.write_text(json.dumps(matrix_to_json(M)))
    code, obj, _ = run(capsys, "classify-element", "--matrix", str(p))
    assert code == 0
    _, direct, _ = run(capsys, "classify", "--n", "7", "--a", "1", "--b", "3")
    for key in ("moduli", "definable", "pseudo_real", "reason", "obstruction"):
        assert obj.get(key) == direct.get(key)
    assert obj["details"]["normal_form"] == direct["details"]["normal_form"] == [7, 1, 3]


def test_real_model_outputs(capsys):
    code, obj, _ = run(capsys, "real-model", "cyclic", "--n", "5", "--a", "1")
    assert code == 0 and obj["normal_form"] == [5, 1, 4]
    assert matrix_from_json(obj["model"]["exact"]).is_real()
    code, obj, _ = run(capsys, "real-model", "dihedral", "--n", "5", "--a", "1")
    assert code == 0 and obj["order"] == 10 and obj["all_real"]
    code, obj, _ = run(capsys, "real-model", "a5")
    assert code == 0 and obj["order"] == 60 and obj["all_real"]


def test_exact_and_numeric_agree(capsys):
    _, obj, _ = run(capsys, "real-model", "cyclic", "--n", "5", "--a", "1", "--precision", "64")
    M = matrix_from_json(obj["model"]["exact"])
    for row_exact, row_num in zip(M.rows(), obj["model"]["numeric"]):
        for x, s in zip(row_exact, row_num):
            assert abs(complex(x.to_complex()) - complex(s.replace("i", "j"))) < 1e-6


def test_catalog(capsys):
    code, obj, _ = run(capsys, "catalog")
    rows = {r["name"]: r for r in obj["catalog"]}
    assert code == 0 and len(rows) == 6
    assert rows["A5"]["definable"] == "yes"
    assert rows["PSL27"]["pseudo_real"] is True


@pytest.mark.parametrize("group,order", [("hess36", 36), ("a5", 60)])
def test_verify(capsys, group, order):
    code, obj, _ = run(capsys, "verify", group)
    assert code == 0 and obj["ok"] and obj["order"] == order


def test_curve(capsys):
    code, obj, _ = run(capsys, "curve", "quintic", "--a", "1", "--b", "2", "--check", "smooth,aut,moduli")
    assert code == 0
    assert obj["smooth"] and obj["aut_contains_D10"] and obj["moduli_obstruction"]
    assert set(obj["certificates"]) == {"smooth", "aut", "moduli"}
    assert len(obj["certificates"]["moduli"]["candidates"]) == 50


def test_pretty_goes_to_stderr(capsys):
    code, obj, err = run(capsys, "classify", "--n", "7", "--a", "1", "--b", "3", "--pretty")
    assert code == 0 and "pseudo-real:" in err and "yes" in err
    assert obj["pseudo_real"] is True


def test_selftest_corrupted_hessian_fails(capsys, monkeypatch):
    # keep this fast: only criterion 5 is really run
    real = acceptance.run_criterion

    def only5(k, **kw):
        if k == 5:
            return real(k, **kw)
        return acceptance.CriterionResult(k, acceptance.CRITERIA[k][0], True)

    monkeypatch.setattr(acceptance, "run_criterion", only5)
    code, obj, err = run(capsys, "selftest", "--corrupt-hessian")
    assert code == 1 and obj["passed"] is False
    assert "[FAIL] criterion 5" in err
    assert err.count("\n") == 9


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "pseudoreal.cli", "classify", "--n", "3", "--a", "0", "--b", "1"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert json.loads(out.stdout)["pseudo_real"] is True
