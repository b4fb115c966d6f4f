import json
import os
import subprocess
import sys

import pytest

from leavitt import cli, verify
from leavitt.verify import SuiteResult

from conftest import CORPUS


def run(capsys, *argv):
    code = cli.main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, json.loads(out)


def doc(name):
    return CORPUS / f"{name}.lpa"


def test_classify_line3(capsys):
    code, data = run(capsys, "classify", doc("line3"))
    assert code == 0
    assert data["schema"] == 1 and data["command"] == "classify"
    assert data["A_vn_regular"] == "true"
    assert data["decomposition"] == [["v3", 3]]
    assert data["audit"] == []


def test_classify_staircase(capsys):
    code, data = run(capsys, "classify", doc("staircase"))
    assert code == 0
    assert data["A_left_self_injective"] == "true"
    assert data["A_strongly_pi_regular"] == "false"


def test_nf_and_mul(capsys):
    code, data = run(capsys, "nf", doc("line2"), "-e", "e1 e1^*")
    assert code == 0 and data["normal_form"]["text"] == "v1"
    code, data = run(capsys, "mul", doc("line2"), "-e", "e1 + e1^*", "-e", "e1 + e1^*")
    assert code == 0 and data["product"]["text"] == "v1 + v2"
    code, data = run(capsys, "nf", doc("line3"), "-e", "e2 e1", "--field", "gf:5")
    assert code == 0 and data["normal_form"]["text"] == "0" and data["warnings"]


def test_basis_and_decompose(capsys):
    code, data = run(capsys, "basis", doc("fork"))
    assert code == 0 and data["dimension"] == 8
    code, data = run(capsys, "decompose", doc("fork"))
    assert code == 0 and data["decomposition"] == [["v2", 2], ["v3", 2]]
    code, data = run(capsys, "decompose", doc("staircase"), "--preview", "3")
    assert data["decomposition"]["first"] == [["c1.v1", 1], ["c2.v2", 2], ["c3.v3", 3]]


def test_witness_pi(capsys):
    code, data = run(capsys, "witness-pi", doc("staircase"), "--depth", "4")
    assert code == 0
    assert data["block_sizes"] == data["k_profile"] == [1, 2, 3, 4]


def test_verify_passes(capsys):
    code, data = run(capsys, "verify", doc("fork"), "--samples", "10", "--seed", "1")
    assert code == 0 and data["passed"]
    code, data = run(capsys, "verify", doc("comb"), "--samples", "10", "--field", "gf:5")
    assert code == 0 and data["passed"]


@pytest.mark.parametrize(
    "argv",
    [
        ("classify", "missing.lpa"),
        ("nf", "line2", "-e", "e9"),
        ("nf", "line2", "-e", "e1 +"),
        ("nf", "line2", "-e", "v1", "--field", "gf:4"),
        ("verify", "fork", "--field", "r"),
    ],
)
def test_exit_1_parse_errors(capsys, argv):
    argv = [str(doc(a)) if a in ("line2", "fork") else a for a in argv]
    code, data = run(capsys, *argv)
    assert code == 1 and "error" in data


def test_exit_1_bad_document(capsys, tmp_path):
    bad = tmp_path / "bad.lpa"
    bad.write_text("graph g { vertices: v; edges: e: v -> w; }")
    code, data = run(capsys, "classify", bad)
    assert code == 1 and data["error"] == "SemanticError"


def test_exit_1_usage_errors(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["nf", str(doc("line2"))])
    assert info.value.code == 1
    with pytest.raises(SystemExit) as info:
        cli.main(["mul", str(doc("line2")), "-e", "v1"])
    assert info.value.code == 1


@pytest.mark.parametrize(
    "argv, error",
    [
        (("basis", "loop"), "InfiniteDimensional"),
        (("decompose", "toeplitz"), "NotSemisimpleShape"),
        (("decompose", "comb"), "NotSemisimpleShape"),
        (("nf", "staircase", "-e", "v1"), "Precondition"),
        (("witness-pi", "pairs", "--depth", "3"), "BoundedFamily"),
        (("witness-pi", "loops", "--depth", "3"), "NotSemisimpleShape"),
    ],
)
def test_exit_2_preconditions(capsys, argv, error):
    code, data = run(capsys, argv[0], doc(argv[1]), *argv[2:])
    assert code == 2
    assert data["error"] == error


def test_exit_3_when_a_suite_fails(capsys, monkeypatch):
    def broken(*args, **kwargs):
        res = SuiteResult("broken", checked=1)
        res.fail("forced")
        return [res]

    monkeypatch.setattr(verify, "run_all", broken)
    code, data = run(capsys, "verify", doc("fork"))
    assert code == 3 and data["passed"] is False


def test_seed_determinism_and_env_fallback(capsys, monkeypatch):
    argv = ("verify", doc("line3rose2"), "--samples", "15")
    _, a = run(capsys, *argv, "--seed", "5")
    _, b = run(capsys, *argv, "--seed", "5")
    assert a == b
    monkeypatch.setenv("LEAVITT_SEED", "5")
    _, c = run(capsys, *argv)
    assert c == a


def test_entry_point_bytes_identical():
    cmd = [sys.executable, "-m", "leavitt", "verify", str(doc("fork")), "--samples", "5", "--seed", "3"]
    env = dict(os.environ)
    first = subprocess.run(cmd, capture_output=True, env=env, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, env=env, check=True).stdout
    assert first == second
    assert json.loads(first)["passed"]
