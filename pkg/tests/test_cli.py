import io
import json
import pathlib
import subprocess
import sys

import pytest

from qpodles.cli import EXIT_FAIL, EXIT_OK, EXIT_SEMANTIC, EXIT_USAGE, main

GOLDEN = pathlib.Path(__file__).parent / "golden"


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("expr,want", [("B*A", "q^2*A*B"), ("1", "1"), ("Bs*B", "1 - A^2")])
def test_normalize(expr, want):
    code, out, _ = run("normalize", expr, "--s", "1")
    assert code == EXIT_OK
    assert out == want + "\n"


def test_mul_and_formats():
    assert run("mul", "A*B", "A*B")[1] == "q^2*A^2*B^2\n"
    code, out, _ = run("normalize", "B*A", "--format", "json")
    assert json.loads(out) == {"input": "B*A", "normal_form": "q^2*A*B"}
    code, out, _ = run("normalize", "B*A", "--format", "csv")
    assert out == "input,normal_form\nB*A,q^2*A*B\n"


@pytest.mark.parametrize("suite", ["relations", "resolution", "complexes"])
def test_verify_suites_pass(suite):
    code, out, _ = run("verify", suite, "--seed", "7")
    assert code == EXIT_OK
    assert out.rstrip().endswith(f"{suite}: pass")


def test_verify_reports_theta_choice():
    _, out, _ = run("verify", "resolution", "--format", "json")
    assert json.loads(out)["info"]["theta_S_coefficient"] == "q^3"


def test_homology_dq_degree_zero():
    code, out, _ = run("homology", "Dq", "--n", "0", "--N", "6", "--format", "json")
    d = json.loads(out)
    assert code == EXIT_OK
    assert d["dim"] == 10 and len(d["generators"]) == 10
    assert d["generators"][-2:] == ["σ[1]", "σ[A]"]


def test_homology_rp2q_degree_two():
    code, out, _ = run("homology", "RP2q", "--n", "2", "--N", "4", "--format", "json")
    assert code == EXIT_OK
    assert json.loads(out)["dim"] == 0


def test_homology_dq_degree_one_generators():
    # the odd ladder classes; see the ledger for the e_A classes
    _, out, _ = run("homology", "Dq", "--n", "1", "--N", "6", "--format", "json")
    gens = json.loads(out)["generators"]
    for k in (1, 3, 5):
        b = "B" if k == 1 else f"B^{k}"
        s = "Bs" if k == 1 else f"Bs^{k}"
        assert f"{b}⊗e_B" in gens and f"{s}⊗e_{{B*}}" in gens


@pytest.mark.parametrize("orbifold", ["Dq", "RP2q"])
@pytest.mark.parametrize("fmt", ["md", "csv", "json"])
def test_index_table_golden(orbifold, fmt):
    code, out, _ = run("index-table", orbifold, "--format", fmt)
    assert code == EXIT_OK
    assert out.encode() == (GOLDEN / f"index_{orbifold}.{fmt}").read_bytes()


def test_index_table_with_projection(tmp_path):
    p = tmp_path / "p.json"
    p.write_text(json.dumps({"rho": "mu", "matrix": [["1/2 | 1/2"]]}))
    code, out, _ = run("index-table", "RP2q", "--projection", str(p), "--format", "csv")
    assert code == EXIT_OK
    assert out == "class,Sτ0\n[1_RP2q],1\n[P],1/2\n"


def test_projection_errors(tmp_path):
    assert run("index-table", "RP2q", "--projection", str(tmp_path / "missing.json"))[0] == EXIT_SEMANTIC
    bad = tmp_path / "a.json"
    bad.write_text(json.dumps({"rho": "mu", "matrix": [["A | 0"]]}))
    assert run("index-table", "RP2q", "--projection", str(bad))[0] == EXIT_SEMANTIC
    junk = tmp_path / "junk.json"
    junk.write_text("{not json")
    assert run("index-table", "RP2q", "--projection", str(junk))[0] == EXIT_USAGE


def test_exit_codes():
    assert run("normalize", "A*")[0] == EXIT_USAGE
    assert run("bogus")[0] == EXIT_USAGE
    assert run("homology", "Dq", "--N", "1")[0] == EXIT_USAGE
    assert run("homology", "Dq", "--n", "2", "--tensor-max", "2")[0] == EXIT_USAGE
    assert run("homology", "mu", "--s", "1/2")[0] == EXIT_SEMANTIC
    assert run("index-table", "RP2q", "--s", "1/2")[0] == EXIT_SEMANTIC


def test_verify_failure_exit_code(monkeypatch):
    from qpodles import checks

    def broken(name, s=1, seed=0):
        res = checks.SuiteResult(name)
        res.add("forced", False)
        return res

    monkeypatch.setattr(checks, "run_suite", broken)
    code, out, _ = run("verify", "relations")
    assert code == EXIT_FAIL
    assert "FAIL  forced" in out


def test_env_fallback(monkeypatch):
    monkeypatch.setenv("QPODLES_FORMAT", "json")
    monkeypatch.setenv("QPODLES_N", "2")
    code, out, _ = run("basis")
    assert json.loads(out)["count"] == 9
    monkeypatch.setenv("QPODLES_N", "two")
    assert run("basis")[0] == EXIT_USAGE


def test_cyclic_command():
    code, out, _ = run("cyclic", "sigma", "--n", "1", "--N", "3", "--format", "json")
    assert code == EXIT_OK and json.loads(out)["dim"] == 0


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "qpodles", "normalize", "B*A"],
                       capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout == "q^2*A*B\n"
