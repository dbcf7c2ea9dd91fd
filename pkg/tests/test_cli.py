"""Command-line surface: outputs, exit codes, file formats."""

import json

import pytest

from spincalc import checks
from spincalc.cli import main, parse_schubert_expr
from spincalc.schubert import degree, sigma


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# --- pair -------------------------------------------------------------------

def test_pair_xi_nikulin(capsys):
    code, out, _ = run(capsys, "pair", "--curve", "xi", "--genus", "6",
                       "--divisor", "nikulin_N6")
    assert code == 0
    assert out.strip() == "-1"


def test_pair_xi_canonical(capsys):
    code, out, _ = run(capsys, "pair", "--curve", "xi", "--genus", "7",
                       "--divisor", "canonical")
    assert code == 0
    assert out.strip() == "-8"


def test_pair_gamma_theta(capsys):
    code, out, _ = run(capsys, "pair", "--curve", "gamma", "--genus", "5",
                       "--divisor", "theta_null")
    assert code == 0
    assert out.strip() == "-2"


def test_pair_r_with_pulled_back_bn8(capsys):
    code, out, _ = run(capsys, "pair", "--curve", "r", "--divisor", "bn8")
    assert code == 0
    assert out.strip() == "0"


def test_pair_btilde_bn8(capsys):
    code, out, _ = run(capsys, "pair", "--curve", "btilde", "--genus", "8",
                       "--divisor", "bn8")
    assert code == 0
    assert out.strip() == "-32896"


def test_pair_usage_error_bad_genus(capsys):
    code, _, err = run(capsys, "pair", "--curve", "xi", "--genus", "3",
                       "--divisor", "prym_green")
    assert code == 2
    assert "error:" in err


def test_pair_usage_error_wrong_space(capsys):
    code, _, err = run(capsys, "pair", "--curve", "septic", "--genus", "8",
                       "--divisor", "theta_null")
    assert code == 2


# --- class ------------------------------------------------------------------

def test_class_theta_null(capsys):
    code, out, _ = run(capsys, "class", "--space", "spin", "--genus", "8",
                       "--name", "theta_null")
    assert code == 0
    assert out.strip() == ("1/4*lambda - 1/16*alpha_0 - 1/2*beta_1 "
                           "- 1/2*beta_2 - 1/2*beta_3 - 1/2*beta_4")


def test_class_marks_opaque_symbols(capsys):
    code, out, _ = run(capsys, "class", "--space", "rbar", "--genus", "6",
                       "--name", "nikulin_N6")
    assert code == 0
    assert "?*pi_delta_1" in out


def test_class_space_mismatch(capsys):
    code, _, err = run(capsys, "class", "--space", "mbar", "--genus", "8",
                       "--name", "theta_null")
    assert code == 2


def test_class_hodge_needs_param(capsys):
    code, _, err = run(capsys, "class", "--space", "rbar", "--genus", "5",
                       "--name", "hodge_c1")
    assert code == 2
    code, out, _ = run(capsys, "class", "--space", "rbar", "--genus", "5",
                       "--name", "hodge_c1", "--param", "3")
    assert code == 0
    assert out.startswith("37*lambda")


# --- lattice ----------------------------------------------------------------

def test_lattice_gram_output(capsys):
    code, out, _ = run(capsys, "lattice", "--name", "u")
    assert code == 0
    assert out.splitlines() == ["u1 u2", "0 1", "1 0"]


def test_lattice_identities(capsys):
    code, out, _ = run(capsys, "lattice", "--name", "lambda_g",
                       "--genus", "7", "--check", "identities")
    assert code == 0
    assert "H^2: 8 (expected 8)" in out
    assert out.strip().endswith("ok")


def test_lattice_cs_check(capsys):
    code, out, _ = run(capsys, "lattice", "--name", "lambda_g",
                       "--genus", "9", "--check", "cs")
    assert code == 0
    assert "solutions=none" in out


def test_lattice_doubly_elliptic(capsys):
    code, out, _ = run(capsys, "lattice", "--name", "nikulin",
                       "--check", "doubly-elliptic")
    assert code == 0
    assert "(2E+sum G_i)^2 = 14" in out


# --- schubert ---------------------------------------------------------------

def test_schubert_degree(capsys):
    code, out, _ = run(capsys, "schubert", "--n", "5",
                       "--expr", "4*s(2,1)*s1^3", "--degree")
    assert code == 0
    assert out.strip() == "8"


def test_schubert_expansion(capsys):
    code, out, _ = run(capsys, "schubert", "--n", "5", "--expr", "s1*s1")
    assert code == 0
    assert out.strip() == "s(1,1) + s(2,0)"


def test_schubert_parse_matches_library():
    cycle = parse_schubert_expr(5, "4*s(2,1)*s1^3")
    direct = sigma(5, 2, 1, 4)
    for _ in range(3):
        from spincalc.schubert import multiply
        direct = multiply(direct, sigma(5, 1))
    assert cycle == direct
    assert degree(parse_schubert_expr(5, "4*s(2,1)")) == 8


def test_schubert_parse_error(capsys):
    code, _, err = run(capsys, "schubert", "--n", "5", "--expr", "4+s(2,1)")
    assert code == 2


# --- complex ----------------------------------------------------------------

def test_complex_compound(tmp_path, capsys):
    path = tmp_path / "form.txt"
    path.write_text("3\n1 0 0\n0 1 0\n0 0 1\n")
    code, out, _ = run(capsys, "complex", "--op", "compound",
                       "--input", str(path))
    assert code == 0
    assert out.splitlines()[-1] == "rank: 3"


def test_complex_tangency(tmp_path, capsys):
    path = tmp_path / "line.txt"
    path.write_text("# rank-3 form, isotropic base point, tangent line\n"
                    "5\n"
                    "1 0 0 0 0\n0 1 0 0 0\n0 0 -1 0 0\n"
                    "0 0 0 0 0\n0 0 0 0 0\n"
                    "1 0 1 0 0\n"
                    "0 1 0 0 0\n")
    code, out, _ = run(capsys, "complex", "--op", "tangency",
                       "--input", str(path))
    assert code == 0
    assert out.strip() == "true"


def test_complex_singular(tmp_path, capsys):
    path = tmp_path / "point.txt"
    path.write_text("5\n"
                    "1 0 0 0 0\n0 -1 0 0 0\n0 0 1 0 0\n"
                    "0 0 0 -1 0\n0 0 0 0 1\n"
                    "1 1 0 0 0\n"
                    "0 0 1 1 0\n")
    code, out, _ = run(capsys, "complex", "--op", "singular",
                       "--input", str(path))
    assert code == 0
    assert out.strip() == "true"


def test_complex_plucker_rank(tmp_path, capsys):
    path = tmp_path / "psi.txt"
    path.write_text("6\n1 0 0 0 0 0 0 0 0 0 0 0 0 0 0\n")
    code, out, _ = run(capsys, "complex", "--op", "plucker-rank",
                       "--input", str(path))
    assert code == 0
    assert out.strip() == "6"


def test_complex_rational_entries(tmp_path, capsys):
    path = tmp_path / "half.txt"
    path.write_text("2\n1/2 0\n0 1/2\n")
    code, out, _ = run(capsys, "complex", "--op", "compound",
                       "--input", str(path))
    assert code == 0
    assert out.splitlines()[0] == "1/4"


def test_complex_missing_file(capsys):
    code, _, err = run(capsys, "complex", "--op", "compound",
                       "--input", "/no/such/file")
    assert code == 2


# --- verify-all -------------------------------------------------------------

@pytest.fixture()
def small_samples(monkeypatch):
    monkeypatch.setattr(checks, "FULL_SAMPLES", checks.QUICK_SAMPLES)


def test_verify_all_text(small_samples, capsys):
    code, out, _ = run(capsys, "verify-all")
    assert code == 0
    assert "[ ok ] slope-bn8: 22/3" in out
    assert "failed=0" in out


def test_verify_all_json_round_trip(small_samples, capsys):
    code, out, _ = run(capsys, "verify-all", "--json", "--seed", "7")
    assert code == 0
    doc = json.loads(out)
    assert doc["failed"] == 0
    assert json.dumps(doc, indent=2) == out.strip()


def test_verify_all_exit_one_on_failure(monkeypatch, capsys):
    failing = checks.Report((checks.CheckRecord(
        "x", "c", "1", "2", "fail"),), seed=0)
    monkeypatch.setattr(checks, "verify_all",
                        lambda seed=0, perturb=None, quick=False: failing)
    code, out, _ = run(capsys, "verify-all")
    assert code == 1


def test_usage_error_exit_two():
    with pytest.raises(SystemExit) as exc:
        main(["pair", "--curve", "unknown", "--divisor", "bn8"])
    assert exc.value.code == 2
