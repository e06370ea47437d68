import json

import pytest

from lattes.cli import EXIT_NEGATIVE, EXIT_OK, EXIT_USAGE, main


def run(argv, capsys):
    code = main(argv)
    out = capsys.readouterr().out
    return code, out


def run_json(argv, capsys):
    code, out = run(argv, capsys)
    return code, json.loads(out)


def test_selfmap_supersingular(capsys):
    code, data = run_json(["selfmap", "--p", "3", "--lambda", "2"], capsys)
    assert code == EXIT_OK
    assert data["schema"] == "1"
    assert data["p"] == 3
    assert data["supersingular"] is True
    assert data["generic_degree"] == 9
    assert data["reduced_degree"] == 9


def test_selfmap_bad_characteristic(capsys):
    code = main(["selfmap", "--p", "2", "--lambda", "1"])
    capsys.readouterr()
    assert code == EXIT_USAGE


def test_orbit_documented_example(capsys):
    code, data = run_json(
        ["orbit", "--p", "5", "--lambda", "2", "--z", "3"], capsys
    )
    assert code == EXIT_OK
    assert data["period"] == 1
    assert data["tail"] == 0
    assert data["torsion_order"] == 4
    assert data["div_pf_minus_1"] is True
    assert data["equal_pf_minus_1"] is True


def test_orbit_infinity(capsys):
    code, data = run_json(
        ["orbit", "--p", "5", "--lambda", "2", "--z", "inf"], capsys
    )
    assert code == EXIT_OK
    assert data["torsion_order"] == 1


def test_census_supersingular(capsys):
    code, data = run_json(["census", "--p", "3", "--lambda", "2", "--n", "1"], capsys)
    assert code == EXIT_OK
    assert data["periodic"] == 10
    assert data["preperiodic"] == 0
    assert data["expected"] == 10


def test_census_with_verdicts(capsys):
    code, data = run_json(
        ["census", "--p", "5", "--lambda", "2", "--n", "1", "--verdicts"], capsys
    )
    assert code == EXIT_OK
    assert "verdicts" in data


def test_supersingular_scan(capsys):
    code, data = run_json(["supersingular-scan", "--p", "7"], capsys)
    assert code == EXIT_OK
    assert data["count"] == 3
    assert sorted(data["in_prime_field"]) == ["2", "4", "6"]


def test_hasse_poly(capsys):
    code, data = run_json(["hasse-poly", "--p", "5"], capsys)
    assert code == EXIT_OK
    assert data["degree"] == 2
    assert data["coefficients"] == [[1], [4], [1]]


def test_hasse_poly_rejects_even(capsys):
    code = main(["hasse-poly", "--p", "4"])
    capsys.readouterr()
    assert code == EXIT_USAGE


def test_torsion_locus(capsys):
    code, data = run_json(["torsion-locus", "--m", "3"], capsys)
    assert code == EXIT_OK
    assert data["m"] == 3
    assert data["deg_x"] == 4


def test_pvi_check(capsys):
    code, data = run_json(["pvi-check", "--m", "3"], capsys)
    assert code == EXIT_OK
    assert data["residual_zero"] is True
    assert data["control_nonzero"] is True
    assert data["etale"] is True
    assert data["params"] == {"alpha": "0", "beta": "0", "gamma": "0", "delta": "1/2"}


def test_is_torsion_positive(capsys):
    code, data = run_json(["is-torsion", "--lambda", "27/32", "--z", "9/8"], capsys)
    assert code == EXIT_OK
    assert data["verdict"] == "torsion"
    assert data["order"] == 3


def test_is_torsion_negative_exit_code(capsys):
    code, data = run_json(["is-torsion", "--lambda", "2", "--z", "3"], capsys)
    assert code == EXIT_NEGATIVE
    assert data["verdict"] == "non-torsion"


def test_verify_all_small(capsys):
    code, data = run_json(["verify-all", "--pmax", "5"], capsys)
    assert code == EXIT_OK
    assert data["passed"] == data["total"] > 0


def test_text_format(capsys):
    code, out = run(["hasse-poly", "--p", "3", "--format", "text"], capsys)
    assert code == EXIT_OK
    assert "degree: 1" in out
    assert "schema" in out


def test_out_file(tmp_path, capsys):
    dest = tmp_path / "report.json"
    code, out = run(["hasse-poly", "--p", "3", "--out", str(dest)], capsys)
    assert code == EXIT_OK
    assert out == ""  # nothing on stdout
    data = json.loads(dest.read_text())
    assert data["p"] == 3


def test_determinism(capsys):
    _, first = run(["supersingular-scan", "--p", "13"], capsys)
    _, second = run(["supersingular-scan", "--p", "13"], capsys)
    assert first == second


def test_threads_env_validation(monkeypatch, capsys):
    monkeypatch.setenv("LATTES_THREADS", "zero")
    with pytest.raises(SystemExit):
        main(["hasse-poly", "--p", "3"])
    capsys.readouterr()
    monkeypatch.setenv("LATTES_THREADS", "2")
    code = main(["hasse-poly", "--p", "3"])
    capsys.readouterr()
    assert code == EXIT_OK


def test_usage_error_exit(capsys):
    with pytest.raises(SystemExit) as ei:
        main(["selfmap"])  # missing required flags
    capsys.readouterr()
    assert ei.value.code == EXIT_USAGE
