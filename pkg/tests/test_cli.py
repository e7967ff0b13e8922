import csv
import json

import pytest

from wittenzeta.cli import EXIT_FAIL, EXIT_NUMERIC, EXIT_OK, EXIT_USAGE, build_parser, main, make_config


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_value_exact(capsys):
    code, out, _ = run(capsys, "value", "--preset", "B2", "--s", "0")
    assert code == EXIT_OK and "3/8 (exact)" in out
    code, out, _ = run(capsys, "value", "--poly", "(1+x)(1+3x)", "--s", "-1")
    assert "-23/87480 (exact)" in out


def test_value_lie_normalisation(capsys):
    code, out, _ = run(capsys, "value", "--preset", "B2", "--s", "-1", "--lie", "--format", "json")
    data = json.loads(out)
    assert data["value"] == "-11/26880" and data["function"] == "zeta_B2"


def test_value_numeric_matches_direct(capsys):
    from wittenzeta.continuation import zeta_direct
    from wittenzeta.specials import F_A
    code, out, _ = run(capsys, "value", "--preset", "A2", "--s", "1.5", "--format", "json")
    data = json.loads(out)
    assert code == EXIT_OK
    assert abs(data["re"] - zeta_direct(F_A, 1.5).re) < 1e-9


def test_value_near_pole_is_usage_error(capsys):
    code, _, err = run(capsys, "value", "--preset", "G2", "--s", "0.2")
    assert code == EXIT_USAGE and '"s0": "1/5"' in err


@pytest.mark.parametrize("argv", [
    ["value", "--s", "1"],
    ["value", "--preset", "A2", "--poly", "(1+x)", "--s", "1"],
    ["value", "--poly", "[1,-1]", "--s", "1"],
    ["value", "--preset", "A2", "--s", "abc"],
    ["dzero", "--poly", "[1,1,1]"],
    ["claims", "--id", "nope"],
    ["table1", "--cell", "nope"],
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == EXIT_USAGE


def test_argparse_usage_error():
    with pytest.raises(SystemExit) as exc:
        main(["value", "--format", "xml"])
    assert exc.value.code == EXIT_USAGE


def test_numeric_failure_exit(capsys, monkeypatch):
    from wittenzeta import continuation
    from wittenzeta.quadrature import QuadratureError

    def boom(*a, **k):
        raise QuadratureError("no convergence")
    monkeypatch.setattr(continuation, "zeta_mb", boom)
    assert run(capsys, "value", "--preset", "A2", "--s", "1.5")[0] == EXIT_NUMERIC


def test_table1_single_cell(capsys):
    code, out, _ = run(capsys, "table1", "--cell", "residue:G", "--format", "json")
    data = json.loads(out)
    assert code == EXIT_OK and len(data) == 1
    assert set(data[0]) >= {"claim_id", "expected", "computed", "abs_err", "status"}


def test_table1_full(capsys):
    code, out, _ = run(capsys, "table1", "--depth", "30")
    assert code == EXIT_OK and "FAIL" not in out


def test_poles_pattern(capsys):
    code, out, _ = run(capsys, "poles", "--preset", "G2", "--depth", "50", "--format", "json")
    data = json.loads(out)
    assert code == EXIT_OK and data["pattern"]["holds"] and data["pattern"]["modulus"] == 10


def test_dzero(capsys):
    code, out, _ = run(capsys, "dzero", "--preset", "G2")
    assert code == EXIT_OK
    assert "5/2·log π + 2·log 2 - 1/2·log 3" in out


def test_eisenstein(capsys):
    code, out, _ = run(capsys, "eisenstein-check", "--case", "G", "--n", "2", "--q-order", "12", "--format", "json")
    data = json.loads(out)
    assert code == EXIT_OK and data["holds"] and data["first_mismatch"] is None


def test_repcount_csv(capsys, tmp_path):
    path = tmp_path / "counts.csv"
    code, _, _ = run(capsys, "repcount", "--system", "A2", "--n", "10", "--format", "csv", "--out", str(path))
    rows = list(csv.reader(path.open()))
    assert code == EXIT_OK and rows[0] == ["n", "r_n"] and rows[4] == ["3", "3"] and len(rows) == 12


def test_repcount_compare(capsys):
    code, out, _ = run(capsys, "repcount", "--compare", "--n", "10000", "--format", "json")
    assert code == EXIT_OK and json.loads(out)["ok"]


def test_certify(capsys):
    code, out, _ = run(capsys, "certify", "--which", "b")
    assert code == EXIT_OK and "b: true" in out
    code, out, _ = run(capsys, "certify", "--format", "json")
    assert code == EXIT_OK and all(json.loads(out).values())


def test_claims_failure_exit(capsys):
    code, out, _ = run(capsys, "claims", "--id", "repcount:B2-exponent")
    assert code == EXIT_FAIL and "FAIL" in out


def test_config_file(capsys, tmp_path):
    cfg = tmp_path / "run.toml"
    cfg.write_text('format = "json"\n[value]\npreset = "G2"\ns = "-1"\n')
    code, out, _ = run(capsys, "value", "--config", str(cfg))
    assert code == EXIT_OK and json.loads(out)["value"] == "33205/2612736"
    # the command line wins over the file
    code, out, _ = run(capsys, "value", "--config", str(cfg), "--s", "0", "--format", "text")
    assert "5/12 (exact)" in out


def test_config_unknown_key(capsys, tmp_path):
    cfg = tmp_path / "run.toml"
    cfg.write_text('bogus = 1\n')
    assert run(capsys, "certify", "--config", str(cfg))[0] == EXIT_USAGE


def test_deterministic_reports(capsys):
    outs = {run(capsys, "poles", "--preset", "B2", "--depth", "20", "--format", "json")[1] for _ in range(2)}
    assert len(outs) == 1


def test_make_config_defaults():
    ns = build_parser().parse_args(["certify"])
    cfg = make_config(ns)
    assert cfg.which == "all" and cfg.format == "text"
