import json
import subprocess
import sys

import pytest

from suslin_clifford import Mat, ModularRing, ZZ, form_J
from suslin_clifford.cli import main
from suslin_clifford.textio import dumps_mat, loads_mat


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def write_mat(tmp_path, name, M):
    p = tmp_path / name
    p.write_text(dumps_mat(M))
    return str(p)


def test_emit_suslin(capsys):
    code, out, _ = run(capsys, "emit", "suslin", "--m", "2", "--v", "1,0", "--w", "0,1", "--ring", "int")
    assert code == 0
    assert json.loads(out)["rows"] == [["1", "0"], ["-1", "0"]]


def test_emit_J(capsys):
    code, out, _ = run(capsys, "emit", "J", "--n", "2")
    assert code == 0 and loads_mat(out) == form_J(2)


def test_emit_phi(capsys):
    code, out, _ = run(capsys, "emit", "phi", "--n", "2", "--v", "a1,a2", "--w", "b1,b2", "--ring", "poly")
    assert code == 0
    M = loads_mat(out)
    A, B, C, D = M.quarters()
    assert A.is_zero() and D.is_zero()
    assert json.loads(out)["rows"][0] == ["0", "0", "a1", "a2"]


def test_emit_epin_gen_and_pi(capsys, tmp_path):
    code, out, _ = run(capsys, "emit", "epin-gen", "--n", "3", "--kind", "ee", "--i", "1", "--j", "2",
                       "--a", "3", "--ring", "mod:7")
    assert code == 0
    x = loads_mat(out)
    A, _, _, D = x.quarters()
    g1, g2 = write_mat(tmp_path, "g1.json", A), write_mat(tmp_path, "g2.json", D)
    code, out, _ = run(capsys, "emit", "pi", "--n", "3", "--g1", g1, "--g2", g2)
    assert code == 0 and loads_mat(out).size == 6


def test_emit_usage(capsys):
    code, _, err = run(capsys, "emit", "suslin", "--v", "1", "--w", "1")
    assert code == 2 and "--m" in err
    code, _, _ = run(capsys, "emit", "phi", "--n", "2")
    assert code == 2


def test_sus_gen_extract(capsys, tmp_path):
    code, out, _ = run(capsys, "sus", "gen", "--m", "3", "--v", "a1,a2,a3", "--w", "b1,b2,b3", "--ring", "poly")
    assert code == 0
    p = tmp_path / "s.json"
    p.write_text(out)
    code, out, _ = run(capsys, "sus", "extract", "--in", str(p))
    assert code == 0
    obj = json.loads(out)
    assert obj["v"] == ["a1", "a2", "a3"] and obj["w"] == ["b1", "b2", "b3"]
    bad = write_mat(tmp_path, "bad.json", Mat.from_rows(ZZ, [[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]]))
    code, out, _ = run(capsys, "sus", "extract", "--in", bad)
    assert code == 1 and out.strip() == "not-suslin"


def test_parse_error_position(capsys):
    code, _, err = run(capsys, "sus", "gen", "--m", "2", "--v", "a1+*2,a2", "--w", "b1,b2", "--ring", "poly")
    assert code == 2 and "position 3" in err


def test_forms(capsys, tmp_path):
    code, out, _ = run(capsys, "forms", "J", "--n", "3")
    assert code == 0 and loads_mat(out) == form_J(3)
    p = write_mat(tmp_path, "i.json", Mat.identity(ZZ, 8))
    code, out, _ = run(capsys, "forms", "star", "--n", "3", "--in", p)
    assert code == 0 and loads_mat(out) == Mat.identity(ZZ, 8)


def test_cl(capsys):
    code, out, _ = run(capsys, "cl", "phi", "--n", "3", "--v", "1,2,3", "--w", "4,5,6")
    assert code == 0 and loads_mat(out).size == 8
    code, out, _ = run(capsys, "cl", "word", "--n", "3", "--word", "e1 f2 e3", "--coeff", "1")
    assert code == 0 and loads_mat(out).size == 8
    code, _, _ = run(capsys, "cl", "word", "--n", "2", "--word", "e3")
    assert code == 2


def test_spin(capsys, tmp_path):
    R = ModularRing(5)
    g1 = write_mat(tmp_path, "g1.json", Mat.from_rows(R, [[1, 1], [0, 1]]))
    g2 = write_mat(tmp_path, "g2.json", Mat.identity(R, 2))
    bad = write_mat(tmp_path, "bad.json", Mat.from_rows(R, [[2, 0], [0, 1]]))
    code, out, _ = run(capsys, "spin", "check", "--n", "2", "--g1", g1, "--g2", g2)
    assert code == 0 and json.loads(out)["status"] == "pass"
    code, out, _ = run(capsys, "spin", "check", "--n", "2", "--g1", bad, "--g2", g2)
    assert code == 1 and json.loads(out)["status"] == "fail"

    R7 = ModularRing(7)
    g = write_mat(tmp_path, "g.json", Mat.scalar(R7, 4, 3))
    S = write_mat(tmp_path, "S.json", Mat.identity(R7, 4))
    code, out, _ = run(capsys, "spin", "act", "--n", "3", "--g", g, "--S", S)
    assert code == 0 and loads_mat(out) == Mat.scalar(R7, 4, 9)
    code, out, _ = run(capsys, "spin", "d", "--n", "3", "--g", g)
    assert code == 0 and json.loads(out)["d"] == "4 mod 7"
    code, out, _ = run(capsys, "spin", "d", "--n", "3", "--g", write_mat(tmp_path, "z.json", Mat.zeros(R7, 4)))
    assert code == 1


def test_epin(capsys):
    code, out, _ = run(capsys, "epin", "gen", "--n", "3", "--kind", "ee", "--i", "1", "--j", "2", "--a", "x")
    assert code == 0 and json.loads(out)["ring"]["variables"] == ["x"]
    code, out, _ = run(capsys, "epin", "table1", "--n", "3")
    assert code == 0
    code, _, _ = run(capsys, "epin", "table1", "--n", "4")
    assert code == 2
    code, out, _ = run(capsys, "epin", "verify-epin6")
    assert code == 0 and json.loads(out)["status"] == "pass"


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "eq1", "--n", "3")
    assert code == 0 and json.loads(out)["status"] == "pass"
    code, out, _ = run(capsys, "verify", "--suite", "spin6")
    assert code == 0
    code, out, _ = run(capsys, "verify", "--suite", "core", "--n", "1")
    assert code == 0
    code, _, err = run(capsys, "verify", "--suite", "core", "--n", "9")
    assert code == 2 and "unsupported" in err
    code, _, _ = run(capsys, "verify", "--suite", "bogus")
    assert code == 2
    code, _, _ = run(capsys, "verify", "--suite", "core", "--n", "x")
    assert code == 2


def test_verify_byte_identical(capsys, monkeypatch):
    args = ("verify", "--suite", "spin4", "--samples", "10", "--seed", "4")
    _, a, _ = run(capsys, *args)
    _, b, _ = run(capsys, *args)
    assert a == b
    monkeypatch.setenv("SUSLIN_SEED", "4")
    _, c, _ = run(capsys, "verify", "--suite", "spin4", "--samples", "10", "--seed", "99")
    assert c == a


def test_verify_matches_library(capsys):
    from suslin_clifford.checks import run_suite
    for suite in ("core", "eq1", "spin6"):
        code, out, _ = run(capsys, "verify", "--suite", suite)
        assert json.loads(out) == run_suite(suite).to_dict()
        assert (code == 0) == run_suite(suite).ok


def test_missing_file(capsys):
    code, _, err = run(capsys, "sus", "extract", "--in", "/nonexistent/m.json")
    assert code == 2 and "cannot read" in err


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "suslin_clifford.cli", "emit", "J", "--n", "1"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["rows"] == [["0", "1"], ["-1", "0"]]


def test_no_subcommand(capsys):
    code, _, _ = run(capsys)
    assert code == 2
