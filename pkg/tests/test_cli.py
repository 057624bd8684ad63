"""Command-line interface: verbs, exit codes, and file round-trips.

The exit codes are a scripting contract: 0 success, 1 usage, 2 input/parse,
3 structure precondition failure.
"""

import csv
import json

import numpy as np
import pytest

from su4exp.cli import main
from su4exp.matio import load_matrix, save_matrix
from su4exp.oracle import expm_reference
from su4exp.qtensor import pauli_kron


@pytest.fixture
def zz_file(tmp_path):
    path = tmp_path / "zz.json"
    save_matrix(1j * pauli_kron("z", "z"), path)
    return str(path)


@pytest.fixture
def dense_file(tmp_path):
    rng = np.random.default_rng(90)
    A = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    path = tmp_path / "dense.json"
    save_matrix(0.5 * (A - A.conj().T), path)
    return str(path)


@pytest.fixture
def tridiag_file(tmp_path):
    T = np.zeros((4, 4), dtype=complex)
    for k, v in enumerate((1.0, 2.0, 3.0)):
        T[k, k + 1] = T[k + 1, k] = 1j * v
    path = tmp_path / "tri.json"
    save_matrix(T, path)
    return str(path)


def test_no_verb_is_usage_error(capsys):
    assert main([]) == 1
    assert main(["frobnicate"]) == 1


def test_missing_file_is_parse_error(tmp_path, capsys):
    assert main(["classify", str(tmp_path / "nope.json")]) == 2


def test_malformed_json_is_parse_error(tmp_path, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text('{"matrix": [[1, 2], [3, 4]]}')
    assert main(["classify", str(bad)]) == 2


def test_non_antihermitian_is_parse_error(tmp_path, capsys):
    path = tmp_path / "herm.json"
    save_matrix(np.eye(4, dtype=complex), path)
    assert main(["classify", str(path)]) == 2


def test_classify_output(zz_file, capsys):
    assert main(["classify", zz_file]) == 0
    out = capsys.readouterr().out
    assert "imaginary-symmetric: yes" in out
    assert "min-poly: quadratic-I" in out
    assert "charpoly: mu=2" in out


def test_classify_tridiag_flag(tridiag_file, capsys):
    assert main(["classify", tridiag_file]) == 0
    out = capsys.readouterr().out
    assert "symmetric-tridiagonal: yes" in out
    assert "exp method: tridiag" in out


def test_expm_writes_unitary(tridiag_file, tmp_path, capsys):
    out_path = tmp_path / "u.json"
    assert main(["expm", tridiag_file, "--out", str(out_path)]) == 0
    stdout = capsys.readouterr().out
    assert "method: tridiag" in stdout
    U = load_matrix(out_path)
    assert np.abs(U.conj().T @ U - np.eye(4)).max() < 1e-10
    X = load_matrix(tridiag_file)
    assert np.abs(U - expm_reference(X)).max() < 1e-10


def test_expm_method_oracle(dense_file, capsys):
    assert main(["expm", dense_file, "--method", "oracle"]) == 0
    assert "method: oracle" in capsys.readouterr().out


def test_expm_closed_fails_on_generic_matrix(dense_file, capsys):
    assert main(["expm", dense_file, "--method", "closed"]) == 3


def test_expm_prints_matrix_without_out(zz_file, capsys):
    assert main(["expm", zz_file]) == 0
    out = capsys.readouterr().out
    assert "residual:" in out
    assert out.count("j") >= 16  # all sixteen entries printed


def test_charpoly_values(zz_file, capsys):
    assert main(["charpoly", zz_file]) == 0
    out = capsys.readouterr().out
    assert "mu: 2" in out
    assert "pi: 1" in out


def test_demo_rabi(capsys):
    assert main(["demo", "rabi", "g=1,1,1", "t=0.5"]) == 0
    out = capsys.readouterr().out
    assert "method: tridiag" in out
    dev = float(out.split("oracle deviation:")[1].split()[0])
    assert dev < 1e-10


def test_demo_josephson_and_jcoupling(capsys):
    assert main(["demo", "josephson", "EJ1=0.4", "t=2"]) == 0
    assert "method: bisym" in capsys.readouterr().out
    assert main(["demo", "jcoupling", "a=1", "d=0.5", "e=0.2", "f=0.1"]) == 0
    assert "method: bisym" in capsys.readouterr().out


def test_demo_bad_params(capsys):
    assert main(["demo", "rabi", "notakv"]) == 2
    assert main(["demo", "rabi", "zz=3"]) == 2
    assert main(["demo", "rabi", "g1=abc"]) == 2
    assert main(["demo", "nope"]) == 1


def test_bench_csv(tmp_path, capsys):
    out_csv = tmp_path / "bench.csv"
    assert main(["bench", "--families", "tridiag,quad-I", "--trials", "5",
                 "--csv", str(out_csv)]) == 0
    with open(out_csv) as fh:
        rows = list(csv.DictReader(fh))
    assert [r["family"] for r in rows] == ["tridiag", "quad-I"]
    for r in rows:
        assert r["trials"] == "5"
        assert float(r["max_err"]) < 1e-9
        assert int(r["t_closed_ns"]) > 0 and int(r["t_oracle_ns"]) > 0


def test_bench_usage_errors(capsys):
    assert main(["bench", "--families", "nosuchfamily"]) == 1
    assert main(["bench", "--trials", "0"]) == 1


def test_selftest(capsys):
    assert main(["selftest"]) == 0
    out = capsys.readouterr().out
    assert out.count("[ok]") == 9


def test_matrix_json_round_trip(tmp_path):
    rng = np.random.default_rng(91)
    A = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    path = tmp_path / "m.json"
    save_matrix(A, path)
    data = json.loads(path.read_text())
    assert "matrix" in data and len(data["matrix"]) == 4
    assert np.abs(load_matrix(path) - A).max() == 0.0
