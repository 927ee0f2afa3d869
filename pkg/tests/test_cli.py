import json

import pytest

from ribbonlab import verify
from ribbonlab.cli import main
from ribbonlab.qcoeff import ONE


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    assert code == 0
    return json.loads(out)


def test_compute_G_schur(capsys):
    data = run_json(capsys, "compute", "G", "--shape", "2,2", "--n", "2", "--basis", "schur")
    assert {lam: c for lam, c in data["terms"]} == {"2": "q^2", "1,1": "1"}


def test_compute_X(capsys):
    data = run_json(capsys, "compute", "X", "--outer", "5,5,2", "--inner", "2", "--n", "2", "--type", "5")
    assert data["poly"] == "q^5 - 2*q^3 + q"


def test_compute_quotient_pretty(capsys):
    code, out, _ = run(capsys, "compute", "quotient", "--shape", "7,6,4,3,1", "--n", "3")
    assert code == 0
    assert "[(3), (2,2), ()]" in out


def test_compute_core(capsys):
    assert run_json(capsys, "compute", "core", "--shape", "7,6,4,3,1", "--n", "3")["core"] == []
    assert run_json(capsys, "compute", "core", "--shape", "5,2,1", "--n", "2")["core"] == [3, 2, 1]


def test_compute_tableaux(capsys):
    data = run_json(capsys, "compute", "tableaux", "--shape", "2,2", "--n", "2", "--labels", "2")
    assert data["count"] == 4
    assert sorted(t["spin"] for t in data["tableaux"]) == [0, 2, 2, 2]


def test_compute_qlr_and_fock(capsys):
    data = run_json(capsys, "compute", "qlr", "--shape", "2,2", "--n", "2")
    assert {lam: c for lam, c in data["terms"]} == {"2": "q^2", "1,1": "1"}
    data = run_json(capsys, "compute", "fock-op", "--op", "f", "--i", "1", "--shape", "1", "--n", "2")
    assert {lam: c for lam, c in data["terms"]} == {"2": "1", "1,1": "q"}


def test_compute_domino_rsk(capsys):
    data = run_json(capsys, "compute", "domino-rsk", "--biword", "1 1 3; 0 2 4")
    assert data["tc"] == 2
    assert data["P"]["shape"] == data["Q"]["shape"] == [3, 1]
    assert data["P"]["spin"] + data["Q"]["spin"] == 2


def test_compute_csv(capsys):
    code, out, _ = run(capsys, "compute", "G", "--shape", "2,2", "--n", "2", "--format", "csv")
    assert code == 0 and len(out.strip().splitlines()) == 3


def test_verify_examples(capsys):
    data = run_json(capsys, "verify", "mn", "--n", "2", "--nu", "", "--k", "2", "--no-timing")
    assert data["passed"]
    assert data["cells"][0]["terms"][2] == ["2,2", "q^2 - 1"]
    data = run_json(capsys, "verify", "pieri", "--n", "3", "--nu", "3,1", "--k", "2")
    assert data["passed"] and len(data["cells"][0]["terms"]) == 6
    data = run_json(capsys, "verify", "heisenberg", "--n", "2", "--kmax", "2", "--sizemax", "6")
    assert data["passed"] and data["n_failed"] == 0


def test_verify_output_is_repeatable(capsys):
    argv = ("verify", "dual-pieri", "--n", "2,3", "--sizemax", "3", "--format", "json", "--no-timing")
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b


def test_verify_failure_exit_code(capsys, monkeypatch):
    monkeypatch.setattr(verify, "heisenberg_scalar", lambda k, n: ONE * k)
    code, out, _ = run(capsys, "verify", "heisenberg", "--n", "2", "--kmax", "1", "--sizemax", "1", "--format", "json")
    assert code == 1
    assert json.loads(out)["first_counterexample"] is not None


@pytest.mark.parametrize(
    "argv",
    [
        ["compute", "G", "--shape", "2,x", "--n", "2"],
        ["compute", "G", "--shape", "1,2", "--n", "2"],
        ["compute", "G", "--shape", "2,2"],
        ["compute", "G", "--shape", "2,2", "--n", "0"],
        ["compute", "X", "--outer", "5,5,2", "--inner", "2", "--n", "2", "--type", "a"],
        ["compute", "domino-rsk", "--biword", "2 1 1"],
        ["verify", "pieri", "--n", "two"],
    ],
)
def test_malformed_input_exit_code(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert "error" in err


def test_unknown_subcommand(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
