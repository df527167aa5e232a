import json

import pytest

from permpoly.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_params_text(capsys):
    code, out, _ = run(capsys, "params", "--m", "3", "--k", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 4  # one row per (alpha, beta)
    assert "r=2" in lines[0] and "m_prime=1" in lines[0] and "sigma=4" in lines[0]


def test_params_json(capsys):
    code, out, _ = run(capsys, "--format", "json", "params", "--m", "5", "--k", "3")
    assert code == 0
    rows = [json.loads(line) for line in out.strip().splitlines()]
    assert rows[0]["r"] == 2 and rows[0]["m_prime"] == 1


def test_params_rejects_non_coprime(capsys):
    code, _, err = run(capsys, "params", "--m", "4", "--k", "2")
    assert code == 2 and "gcd" in err


def test_params_rejects_out_of_range(capsys):
    code, _, _ = run(capsys, "params", "--m", "3", "--k", "0")
    assert code == 2


def test_eval_h_identity_case(capsys):
    # m=2, k=1: H is the identity
    code, out, _ = run(capsys, "eval", "h", "--m", "2", "--k", "1", "--x", "2")
    assert code == 0 and out.strip() == "2"


def test_eval_f_and_g(capsys):
    code, out, _ = run(capsys, "eval", "f", "--m", "3", "--k", "2", "--x", "1")
    assert code == 0 and out.strip() == "0"  # f_0(1) = r mod 2 = 0
    code, out, _ = run(capsys, "eval", "g", "--m", "3", "--k", "2", "--x", "2")
    assert code == 0 and out.strip() == "6"  # x + x^2 = X + X^2


def test_eval_dickson(capsys):
    # D_3(X) = X^3 + X = (X+1) + X = 1 in GF(8) with X^3 = X+1
    code, out, _ = run(capsys, "eval", "dickson", "--m", "3", "--n", "3", "--x", "2")
    assert code == 0 and out.strip() == "1"
    code, out, _ = run(capsys, "eval", "dickson", "--m", "3", "--n", "3",
                       "--x", "2", "--method", "closed_form")
    assert out.strip() == "1"
    code, out, _ = run(capsys, "eval", "dickson", "--m", "3", "--n", "3",
                       "--x", "2", "--cross-check")
    assert code == 0 and out.strip() == "1"


def test_eval_phi_special_points(capsys):
    code, out, _ = run(capsys, "eval", "phi", "--m", "2", "--k", "1", "--z", "inf")
    assert code == 0 and out.strip() == "0"
    code, out, _ = run(capsys, "eval", "phi", "--m", "2", "--k", "1", "--z", "1")
    assert code == 0 and out.strip() == "inf"


def test_eval_w_fixes_infinity(capsys):
    for name in ("w0", "w1"):
        code, out, _ = run(capsys, "eval", name, "--m", "3", "--k", "2", "--z", "inf")
        assert code == 0 and out.strip() == "inf"


def test_eval_tau(capsys):
    code, out, _ = run(capsys, "eval", "tau", "--m", "3", "--v", "1", "--x", "5")
    assert code == 0 and out.strip() == "4"


def test_expand(capsys):
    code, out, _ = run(capsys, "expand", "--m", "3", "--k", "2")
    assert code == 0 and out.strip() == "3,6,15,18"
    code, out, _ = run(capsys, "expand", "--m", "2", "--k", "1")
    assert code == 0 and out.strip() == "1"


def test_expand_reduce(capsys):
    code, out, _ = run(capsys, "expand", "--m", "3", "--k", "2", "--reduce")
    assert code == 0
    exps = [int(e) for e in out.strip().split(",")]
    assert all(e < 8 for e in exps)


def test_sweep(capsys):
    code, out, err = run(capsys, "sweep", "--m-min", "2", "--m-max", "3")
    assert code == 0
    lines = out.strip().splitlines()
    # (m=2,k=1), (m=3,k=1), (m=3,k=2), 4 (alpha,gamma) rows each
    assert len(lines) == 12
    assert all("agree=True" in line for line in lines)


def test_sweep_csv(capsys):
    code, out, _ = run(capsys, "--format", "csv", "sweep", "--m-min", "2", "--m-max", "2")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0].startswith("m,k,r,m_prime,alpha,gamma,predicted")
    assert len(lines) == 5


def test_sweep_skips_non_coprime(capsys):
    code, _, err = run(capsys, "sweep", "--m-min", "4", "--m-max", "4")
    assert code == 0 and "skipping m=4 k=2" in err


def test_verify_single_suite(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "zsumexp", "--m-max", "3")
    assert code == 0
    rows = [json.loads(line) for line in out.strip().splitlines()]
    assert len(rows) == 3  # (2,1), (3,1), (3,2)
    assert all(r["passed"] for r in rows)
    assert all(r["check"] == "zsumexp" for r in rows)
    assert all(r["counterexample"] is None for r in rows)


def test_verify_unknown_suite(capsys):
    code, _, err = run(capsys, "verify", "--suite", "nonsense")
    assert code == 2 and "unknown check" in err


def test_verify_to_file(tmp_path, capsys):
    path = tmp_path / "out.ndjson"
    code, out, _ = run(capsys, "--out", str(path), "verify",
                       "--suite", "fgprop", "--m-max", "3")
    assert code == 0 and out == ""
    rows = [json.loads(line) for line in path.read_text().splitlines()]
    assert rows and all(r["passed"] for r in rows)


def test_field_table_env_override(tmp_path, monkeypatch, capsys):
    # GF(8) built on X^3+X^2+1 instead of the default X^3+X+1
    table = tmp_path / "fields.txt"
    table.write_text("m=3 poly=0xd\n")
    code, default_out, _ = run(capsys, "eval", "h", "--m", "3", "--k", "2",
                               "--gamma", "1", "--x", "2")
    monkeypatch.setenv("PERMPOLY_FIELD_TABLE", str(table))
    code2, override_out, _ = run(capsys, "eval", "h", "--m", "3", "--k", "2",
                                 "--gamma", "1", "--x", "2")
    assert code == 0 and code2 == 0
    assert default_out != override_out  # same bit pattern, different field


def test_output_deterministic(capsys):
    _, out1, _ = run(capsys, "expand", "--m", "5", "--k", "3", "--alpha", "1")
    _, out2, _ = run(capsys, "expand", "--m", "5", "--k", "3", "--alpha", "1")
    assert out1 == out2
