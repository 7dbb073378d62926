import json

import pytest

from hyptrans.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_spectrum_json(capsys):
    code, out, _ = run(
        capsys, "spectrum", "--alpha", "0", "--beta", "0", "--kappa", "4.5"
    )
    assert code == 0
    report = json.loads(out)
    assert report["config"]["kappa"] == 4.5
    lambdas = [r["lambda"] for r in report["results"] if "lambda" in r]
    assert len(lambdas) == 2
    assert any(abs(l - 2.0625) < 1e-9 for l in lambdas)


def test_spectrum_no_discrete(capsys):
    code, out, _ = run(
        capsys, "spectrum", "--alpha", "0", "--beta", "0", "--kappa", "0.5"
    )
    assert code == 0
    report = json.loads(out)
    assert {"discrete": "none"} in report["results"]


def test_invalid_params_exit_2(capsys):
    code, _, err = run(
        capsys, "spectrum", "--alpha", "-2", "--beta", "0", "--kappa", "1"
    )
    assert code == 2
    assert "alpha" in err


def test_node_count_validation(capsys):
    code, _, err = run(
        capsys,
        "spectrum", "--alpha", "0", "--beta", "0", "--kappa", "1", "--x-nodes", "4",
    )
    assert code == 2
    assert "x-nodes" in err


def test_transform_zero_poly(capsys):
    code, out, _ = run(
        capsys,
        "transform", "--alpha", "0.3", "--beta", "0.8", "--kappa", "2.5",
        "--function", "poly:0", "--x-nodes", "64",
    )
    assert code == 0
    report = json.loads(out)
    for row in report["results"]:
        for comp in row["value"]:
            assert comp["re"] == 0.0 and comp["im"] == 0.0


def test_transform_conjugate_components(capsys):
    code, out, _ = run(
        capsys,
        "transform", "--alpha", "0.3", "--beta", "0.8", "--kappa", "2.5",
        "--function", "jacobi:2", "--lam", "-5.0", "--x-nodes", "128",
    )
    assert code == 0
    row = json.loads(out)["results"][0]
    assert row["region"] == "omega2"
    v0, v1 = row["value"]
    assert v0["re"] == pytest.approx(v1["re"], abs=1e-10)
    assert v0["im"] == pytest.approx(-v1["im"], abs=1e-10)


def test_transform_rejects_generic_lambda(capsys):
    code, _, err = run(
        capsys,
        "transform", "--alpha", "0.3", "--beta", "0.8", "--kappa", "2.5",
        "--function", "jacobi:0", "--lam", "10.0", "--x-nodes", "64",
    )
    assert code == 2
    assert "spectrum" in err


def test_transform_unknown_function(capsys):
    code, _, err = run(
        capsys,
        "transform", "--alpha", "0.3", "--beta", "0.8", "--kappa", "2.5",
        "--function", "fourier:1",
    )
    assert code == 2
    assert "function" in err


def test_verify_identities_suite(capsys):
    code, out, _ = run(
        capsys,
        "verify", "--alpha", "0.3", "--beta", "0.8", "--kappa", "2.5",
        "--suite", "identities",
    )
    assert code == 0
    report = json.loads(out)
    assert all(r["status"] == "PASS" for r in report["results"])


def test_verify_wilson_skipped_when_unequal(capsys):
    code, out, _ = run(
        capsys,
        "verify", "--alpha", "0.3", "--beta", "0.8", "--kappa", "2.5",
        "--suite", "wilson",
    )
    assert code == 0
    row = json.loads(out)["results"][0]
    assert row["status"] == "SKIP"
    assert "alpha" in row["note"]


def test_csv_output(capsys, tmp_path):
    out_file = tmp_path / "report.csv"
    code, _, _ = run(
        capsys,
        "spectrum", "--alpha", "0", "--beta", "0", "--kappa", "4.5",
        "--format", "csv", "--out", str(out_file),
    )
    assert code == 0
    text = out_file.read_text()
    assert text.startswith("# command=spectrum")
    assert "lambda" in text
