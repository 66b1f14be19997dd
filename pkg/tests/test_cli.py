import json
import subprocess
import sys

import pytest

from norden.cli import main
from norden.documents import bundled_path
from norden.report import VerificationReport


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_paper_verify_text(capsys):
    code, out, _ = run(capsys, "paper-verify")
    assert code == 0
    assert "[FAIL" not in out
    assert out.count("[ERRATUM]") == 4


def test_paper_verify_json_round_trips(capsys):
    code, out, _ = run(capsys, "paper-verify", "--format", "json")
    assert code == 0
    report = VerificationReport.from_dict(json.loads(out))
    assert report.summary["fail"] == 0


def test_paper_verify_deterministic(capsys):
    first = run(capsys, "paper-verify", "--format", "json")[1]
    assert run(capsys, "paper-verify", "--format", "json")[1] == first


def test_paper_verify_exit_code_on_failure(capsys, monkeypatch):
    import norden.cli as cli
    from norden.report import FAIL, Check

    monkeypatch.setattr(cli, "run_paper_suite", lambda: VerificationReport([Check("x", "d", "l", FAIL, "bad")]))
    assert run(capsys, "paper-verify")[0] == 1


def test_analyze_abelian(capsys):
    code, out, _ = run(capsys, "analyze", "--example", "abelian")
    assert code == 0
    assert "class: W0" in out
    assert "all curvature quantities zero" in out


def test_analyze_abelian_json(capsys):
    code, out, _ = run(capsys, "analyze", "--example", "abelian", "--format", "json")
    data = json.loads(out)
    assert data["classification"]["class"] == "W0"
    assert data["curvature_zero"] and data["R"] == [] and data["tau"] == "0"


def test_analyze_symbolic_family_file(capsys):
    code, out, _ = run(capsys, "analyze", "--input", str(bundled_path("paper_family_symbolic")), "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["classification"]["class"] == "W3"
    assert data["tau"] == "-3/2*l1^2 - 3/2*l2^2 + 3/2*l3^2 + 3/2*l4^2"
    assert data["weyl_zero"] and data["nabla_R_zero"]
    assert data["isotropic_kahler"] == "l1^2 + l2^2 - l3^2 - l4^2 = 0"


def test_analyze_non_norden_warns(capsys):
    code, out, err = run(capsys, "analyze", "--example", "identity_metric")
    assert code == 0
    assert "warning" in err and "not a Norden structure" in out


@pytest.mark.parametrize(
    "argv",
    [
        ["analyze", "--input", "/nonexistent.json"],
        ["analyze"],
        ["sample", "--count", "0"],
        ["sample", "--count", "2", "--range", "3,1"],
        ["sample", "--count", "2", "--range", "a,b"],
        ["sample", "--count", "1", "--include-point", "1,1,1"],
        ["family", "--l1", "1"],
        ["family", "--l1", "1 +"],
        ["bogus"],
        [],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    try:
        code = main(argv)
    except SystemExit as exc:
        code = exc.code
    capsys.readouterr()
    assert code == 2


def test_bad_input_file(tmp_path, capsys):
    p = tmp_path / "m.json"
    p.write_text('{"schema": 1}')
    code, _, err = run(capsys, "analyze", "--input", str(p))
    assert code == 2 and "schema violation" in err


def test_sample_forced_point(capsys):
    code, out, _ = run(capsys, "sample", "--count", "1", "--include-point", "1,1,1,1", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["isotropic_count"] == 1 and data["count"] == 1


def test_sample_deterministic(capsys):
    argv = ["sample", "--count", "5", "--seed", "7", "--range=-2,2", "--points"]
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_family_on_cone(capsys):
    code, out, _ = run(capsys, "family", "--l1", "1", "--l2", "1", "--l3", "1", "--l4", "1")
    assert code == 0
    assert "isotropic Kahler: true" in out
    assert "tau = 0" in out and "||nabla J|| = 0" in out and "||N|| = 0" in out


def test_family_partly_symbolic(capsys):
    code, out, _ = run(capsys, "family", "--l1", "1/2", "--symbolic", "--format", "json")
    data = json.loads(out)
    assert data["norm_nabla_J"] == "4*l2^2 - 4*l3^2 - 4*l4^2 + 1"


def test_negative_values_with_equals_form(capsys):
    code, out, _ = run(capsys, "family", "--l1=-3/4", "--l2", "0", "--l3", "0", "--l4", "0", "--format", "json")
    assert code == 0 and json.loads(out)["norm_nabla_J"] == "9/4"


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "norden", "analyze", "--example", "abelian"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "class: W0" in proc.stdout
