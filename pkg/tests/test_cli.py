import io
import json
import subprocess
import sys

from quadrisig import SparsePolynomial
from quadrisig.cli import run


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out)
    return code, out.getvalue()


def test_expand_six_two_three():
    code, text = call("expand", "6", "2", "3", "--form", "u2")
    assert code == 0
    data = json.loads(text)
    got = {(t["r"], t["s"]): int(t["coeff"]) for t in data["terms"]}
    assert got == {(3, 0): 2, (0, 2): 3, (6, 0): -1, (3, 2): 6, (0, 4): -3, (0, 6): 1}
    assert [(t["l"], t["r"]) for t in data["terms"]] == sorted((t["l"], t["r"]) for t in data["terms"])
    assert all(isinstance(t["coeff"], str) and t["sign"] in (1, -1) for t in data["terms"])


def test_expand_backends_print_the_same_terms():
    _, a = call("expand", "12", "3", "4")
    _, b = call("expand", "12", "3", "4", "--backend", "modular")
    assert a == b


def test_expand_size_guard(capsys):
    code, _ = call("expand", "65", "1", "2")
    assert code == 2
    err = json.loads(capsys.readouterr().err)
    assert err["error"] == "usage" and "--force" in err["message"]


def test_signature_two_one_one():
    code, text = call("signature", "2", "1", "1", "--form", "u11")
    assert code == 0
    assert text == '{"n_plus":2,"n_minus":1,"ratio":"2/3"}\n'


def test_witness_not_in_support(capsys):
    code, text = call("witness", "6", "2", "3", "1", "1")
    assert code == 2 and text == ""
    err = capsys.readouterr().err
    assert err.count("\n") == 1
    assert "not in support" in json.loads(err)["message"]


def test_witness_output():
    code, text = call("witness", "6", "2", "3", "6", "0")
    data = json.loads(text)
    assert code == 0
    assert data["cycles"] == "(1 3 5)(2 4 6)"
    assert data["k"] == 2 and data["violations"] == []


def test_bad_parameters_exit_two(capsys):
    assert call("signature", "6", "2", "4")[0] == 2
    assert "faithful" in capsys.readouterr().err
    assert call("bogus")[0] == 2
    assert call()[0] == 2


def test_sweep_csv():
    code, text = call("sweep", "--q1", "1", "--q2", "2", "--form", "u2", "--p-min", "10", "--p-max", "13")
    assert code == 0
    lines = text.split("\n")
    assert lines[0] == "p,q1,q2,form,n_plus,n_minus,ratio,limit,abs_err,ratio_float"
    assert lines[-1] == "" and "\r" not in text
    rows = [line.split(",") for line in lines[1:-1]]
    assert [int(r[0]) for r in rows] == [10, 11, 12, 13]
    assert all(r[7] == "1" for r in rows)


def test_sweep_skips_with_notice(capsys):
    code, text = call("sweep", "--q1", "2", "--q2", "3", "--p-min", "2", "--p-max", "5")
    assert code == 0
    assert [line.split(",")[0] for line in text.split("\n")[1:-1]] == ["4", "5"]
    notices = [json.loads(line) for line in capsys.readouterr().err.splitlines()]
    assert [n["p"] for n in notices] == [2, 3]


def test_sweep_empty_range():
    assert call("sweep", "--q1", "1", "--q2", "2", "--p-min", "10", "--p-max", "9")[0] == 2


def test_sweep_is_byte_identical_across_thread_counts(monkeypatch):
    argv = ["sweep", "--q1", "2", "--q2", "5", "--form", "u11", "--p-min", "100", "--p-max", "400"]
    _, one = call(*argv, "--threads", "1")
    _, many = call(*argv, "--threads", "8")
    monkeypatch.setenv("QUADRISIG_THREADS", "3")
    _, env = call(*argv)
    assert one == many == env


def test_output_file(tmp_path):
    path = tmp_path / "phi.json"
    code, text = call("-o", str(path), "expand", "6", "2", "3")
    assert code == 0 and text == ""
    assert json.loads(path.read_text())["p"] == 6


def test_example_phi211():
    code, text = call("example", "phi211")
    data = json.loads(text)
    assert code == 0
    assert [int(t["coeff"]) for t in data["terms"]] == [1, -2, 1]
    assert data["signature"] == {"n_plus": 2, "n_minus": 1, "ratio": "2/3"}
    assert sorted(c["magnitude_squared"] for c in data["cr_map"]["G"]) == [2]


def test_example_t24():
    data = json.loads(call("example", "t24")[1])
    assert data["fixed_points"] == [16, 17]
    geo = data["geometry_C1"]
    assert geo["d"] == [20, 18, 19] and geo["e"] == [2, 3, 4]
    assert geo["V"] == [[5, 8, 11, 14, 17], [6, 9, 12, 15], [7, 10, 13, 16]]
    assert geo["W"] == [[3, 18, 21, 24], [1, 4, 19, 22], [2, 20, 23]]


def test_example_phi623():
    data = json.loads(call("example", "phi623")[1])
    assert SparsePolynomial.parse(data["polynomial"]) == SparsePolynomial.parse(
        "2x^3 - x^6 + 3y^2 + 6x^3y^2 - 3y^4 + y^6")
    assert data["signature"]["n_plus"] == 4


def test_verify_small():
    code, text = call("verify", "--p-max", "6")
    data = json.loads(text)
    assert code == 0 and data["passed"]


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "quadrisig", "signature", "5", "1", "4", "--form", "u11"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0
    assert json.loads(res.stdout) == {"n_plus": 1, "n_minus": 3, "ratio": "1/4"}
