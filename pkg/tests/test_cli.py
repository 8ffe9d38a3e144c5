import json

import pytest

from fmethod.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_classify_pass(capsys):
    code, out, err = run(
        capsys, "classify", "--flavor", "sl", "--n", "2", "--m-max", "1",
        "--l-max", "1", "--format", "json",
    )
    assert code == 0
    rows = json.loads(out)
    assert all(r["ok"] for r in rows)
    dim2 = [r for r in rows if r["computed_dim"] == 2]
    assert dim2 and all(r["predicted_dim"] == 2 for r in dim2)


def test_classify_deterministic(capsys):
    args = ("classify", "--flavor", "gl", "--n", "2", "--m-max", "1", "--l-max", "1", "--format", "csv")
    _, out1, _ = run(capsys, *args)
    _, out2, _ = run(capsys, *args)
    assert out1 == out2
    header = out1.splitlines()[0]
    assert header.startswith("flavor,n,alpha,beta,l,lambda,nu,predicted_dim,computed_dim")


def test_classify_ido(capsys):
    code, out, _ = run(
        capsys, "classify", "--n", "2", "--ido", "--k-max", "2", "--format", "json"
    )
    assert code == 0
    rows = json.loads(out)
    assert all(r["ok"] for r in rows)


def test_classify_homs(capsys):
    code, out, _ = run(
        capsys, "classify", "--n", "2", "--homs", "--connected",
        "--m-max", "1", "--l-max", "1", "--format", "json",
    )
    assert code == 0
    rows = json.loads(out)
    assert any(r["computed_dim"] == 2 for r in rows)


def test_verify_equivariance_pass(capsys):
    code, out, _ = run(
        capsys, "verify", "equivariance", "--n", "3", "--m", "1", "--l", "0",
        "--lambda", "5",
    )
    assert code == 0
    assert json.loads(out)["status"] == "pass"


def test_verify_equivariance_mismatch_exit_one(capsys):
    code, out, _ = run(
        capsys, "verify", "equivariance", "--n", "3", "--m", "1", "--l", "0",
        "--lambda", "5", "--nu", "7",
    )
    assert code == 1
    report = json.loads(out)
    assert report["status"] == "fail" and report["violations"]


def test_verify_factorization(capsys):
    code, out, _ = run(
        capsys, "verify", "factorization", "--n", "3", "--m", "2", "--l", "1",
        "--deg", "5",
    )
    assert code == 0


def test_verify_images(capsys):
    code, out, _ = run(capsys, "verify", "images", "--n", "3", "--m", "1", "--l", "2")
    assert code == 0
    assert json.loads(out)["fg_stability"] == "pass"


def test_verify_verma_factorization(capsys):
    code, out, _ = run(
        capsys, "verify", "verma-factorization", "--n", "2", "--m", "1", "--l", "1",
        "--deg", "3",
    )
    assert code == 0


def test_branch_pass(capsys):
    code, out, _ = run(capsys, "branch", "--n", "2", "--s", "1/3", "--deg", "8")
    assert code == 0
    assert json.loads(out)["status"] == "pass"


def test_branch_multiplicity_report(capsys):
    code, out, _ = run(capsys, "branch", "--n", "2", "--p", "0", "--deg", "6")
    assert code == 0
    assert json.loads(out)["invariant_counts"]["-2"] == 2


def test_branch_usage_error(capsys):
    code, _, err = run(capsys, "branch", "--n", "2")
    assert code == 2


def test_rational_argument_parsing(capsys):
    code, out, _ = run(
        capsys, "verify", "equivariance", "--n", "2", "--m", "1", "--l", "1",
        "--lambda", "-1",
    )
    assert code == 0


def test_bad_fraction_is_usage_error(capsys):
    code, _, err = run(
        capsys, "verify", "equivariance", "--n", "2", "--m", "1", "--l", "0",
        "--lambda", "nonsense",
    )
    assert code == 2


def test_output_file(tmp_path, capsys):
    out_file = tmp_path / "table.json"
    code, _, _ = run(
        capsys, "classify", "--n", "2", "--m-max", "0", "--l-max", "0",
        "--format", "json", "--out", str(out_file),
    )
    assert code == 0
    rows = json.loads(out_file.read_text())
    assert rows


def test_jobs_flag_matches_serial(capsys):
    base = ("classify", "--n", "2", "--m-max", "1", "--l-max", "0", "--format", "json")
    _, serial, _ = run(capsys, *base, "--jobs", "1")
    _, parallel, _ = run(capsys, *base, "--jobs", "2")
    assert serial == parallel
