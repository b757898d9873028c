import json

import pytest

from bigalg import biggen
from bigalg.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out.strip(), out.err


def test_gens_examples(capsys):
    code, out, _ = run(capsys, "gens", "--n", "2", "--r", "1", "--which", "F", "--p", "1", "--q", "1", "--cartan")
    assert code == 0
    assert out == "t[1]*x[2][1]*d[2][1] + t[2]*x[1][1]*d[1][1]"
    assert run(capsys, "gens", "--which", "F", "--p", "1", "--q", "2", "--r", "1")[1] == "0"
    assert run(capsys, "gens", "--which", "M", "--p", "1", "--q", "0")[1] == "y[1][1] + y[2][2] + y[3][3]"


def test_gens_json(capsys):
    code, out, _ = run(capsys, "gens", "--n", "2", "--p", "1", "--q", "1", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["which"] == "F" and data["terms"]


def test_gens_usage_errors(capsys):
    code, _, err = run(capsys, "gens", "--n", "2", "--p", "2", "--q", "1")
    assert code == 2 and "p + q <= n" in err
    code, _, err = run(capsys, "gens", "--n", "9", "--p", "1", "--q", "1")
    assert code == 2 and "exceeds" in err


@pytest.mark.parametrize("argv", [
    ["check", "commute", "--n", "3", "--r", "2", "--cartan"],
    ["check", "capelli", "--n", "2", "--r", "2"],
    ["check", "bethe", "--n", "2", "--r", "1", "--p", "1"],
    ["check", "cauchy-binet", "--n", "2", "--r", "2"],
    ["check", "charpoly", "--n", "3"],
    ["check", "symdet", "--n", "2", "--r", "1"],
    ["check", "relations", "--n", "2", "--m", "3"],
])
def test_check_passes(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0
    assert "pass" in out


def test_check_json(capsys):
    code, out, _ = run(capsys, "check", "charpoly", "--n", "2", "--format", "json")
    assert code == 0
    assert json.loads(out)["status"] == "pass"


def test_check_refuses_oversize(capsys):
    code, _, err = run(capsys, "check", "commute", "--n", "4", "--r", "2")
    assert code == 2 and "bound" in err


def test_failure_exit_code(capsys, monkeypatch):
    from bigalg import biggen
    from bigalg.report import Report

    def broken(n):
        rep = Report("charpoly")
        rep.compare("forced", 1, 2)
        return rep
    monkeypatch.setattr(biggen, "verify_charpoly", broken)
    code, out, _ = run(capsys, "check", "charpoly", "--n", "2")
    assert code == 1
    assert "fail" in out and "diff" in out


def test_sympow_present(capsys):
    code, out, _ = run(capsys, "sympow", "present", "--n", "2", "--m", "2", "--basis", "M", "--algebra", "sl")
    assert code == 0
    assert "M1^3+4*c2*M1" in out
    code, out, _ = run(capsys, "sympow", "present", "--n", "3", "--m", "2", "--basis", "P", "--algebra", "gl")
    assert "P1^3-3*P1*P2-2*c2*P1+2*c1*P2+4*c3" in out.splitlines()


def test_sympow_present_json(capsys):
    code, out, _ = run(capsys, "sympow", "present", "--n", "3", "--m", "3", "--basis", "M",
                       "--algebra", "sl", "--reduced", "--format", "json")
    data = json.loads(out)
    assert set(data) == {"generators", "relations"}
    assert data["relations"][0] == "M1^4-6*M1^2*M2+4*c2*M1^2-18*c3*M1+3*M2^2-6*c2*M2"


def test_sympow_deterministic(capsys):
    a = run(capsys, "sympow", "present", "--n", "3", "--m", "3")[1]
    b = run(capsys, "sympow", "present", "--n", "3", "--m", "3")[1]
    assert a == b


@pytest.mark.parametrize("argv", [
    ["sympow", "check-relations", "--n", "3", "--m", "3"],
    ["sympow", "dhat", "--n", "2", "--m", "2", "--alphas", "1,2"],
    ["sympow", "upsilon-rank", "--n", "3", "--m", "2"],
])
def test_sympow_checks(capsys, argv):
    code, out, _ = run(capsys, *argv)
    assert code == 0 and "pass" in out


@pytest.mark.parametrize("argv", [
    ["sympow", "present", "--n", "4", "--m", "2"],
    ["sympow", "present", "--n", "2", "--m", "9"],
    ["sympow", "dhat", "--alphas", "1,2,3"],
    ["sympow", "dhat", "--alphas", "x"],
])
def test_sympow_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_argparse_errors_exit_2():
    with pytest.raises(SystemExit) as exc:
        main(["check", "nonsense"])
    assert exc.value.code == 2


def test_worker_env_parallel_grid_matches_serial(monkeypatch):
    serial = biggen.verify_commutativity(3, 2, cartan=True)
    monkeypatch.setenv("BIGALG_THREADS", "2")
    parallel = biggen.verify_commutativity(3, 2, cartan=True)
    assert parallel.ok and serial.ok
    assert parallel.to_text() == serial.to_text()


def test_worker_env_invalid_is_usage_error(monkeypatch, capsys):
    monkeypatch.setenv("BIGALG_THREADS", "zero")
    assert main(["check", "charpoly", "--n", "2"]) == 2
    assert "BIGALG_THREADS" in capsys.readouterr().err
    monkeypatch.setenv("BIGALG_THREADS", "0")
    assert main(["check", "charpoly", "--n", "2"]) == 2
