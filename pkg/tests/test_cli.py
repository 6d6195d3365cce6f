import io
import json

import pytest

from qfh import cli


def run(*argv):
    out = io.StringIO()
    code = cli.main(["--no-cache", *argv], out=out)
    return code, out.getvalue()


def run_json(*argv):
    code, text = run("--format", "json", *argv)
    return code, json.loads(text)


def test_gr_basis():
    code, text = run("gr-basis", "--n", "3")
    assert code == 0
    assert "Gamma_(1) = (1)*T(1 2) + (1)*T(2 3) + (q^-1)*T(1 3)" in text
    assert text.count("Gamma_") == 3
    code, text = run("gr-basis", "--n", "3", "--mu", "2")
    assert text.strip() == "Gamma_(2) = (1)*T(1 2 3) + (1)*T(1 3 2) + (1 - q^-1)*T(1 3)"
    assert run("gr-basis", "--n", "1")[1].strip() == "Gamma_() = (1)*T()"


def test_json_envelope_and_determinism():
    code, first = run("--format", "json", "gr-basis", "--n", "3")
    _, second = run("gr-basis", "--n", "3", "--format", "json")
    assert first == second
    env = json.loads(first)
    assert env["format_version"] == cli.FORMAT_VERSION and env["command"] == "gr-basis"
    assert [b["mu"] for b in env["result"]["basis"]] == [[], [1], [2]]
    assert list(env) == sorted(env)


def test_phi():
    code, text = run("phi", "--mu", "1", "--nu", "1")
    assert code == 0
    assert text.splitlines() == ["(1,1): (q + q^-1)", "(2): (q + 1 + q^-1)",
                                 "(1): (q - 1)*C(t,1) + (-q + 1)", "(): (q)*C(t,2)"]
    assert run("phi", "--mu", "", "--nu", "2")[1].strip() == "(2): (1)"
    code, env = run_json("phi", "--mu", "1", "--nu", "1", "--at-q", "1")
    assert {tuple(t["lambda"]): t["phi"] for t in env["result"]["terms"]} == {
        (1, 1): {"0": {"0": "2"}}, (2,): {"0": {"0": "3"}}, (): {"2": {"0": "1"}}}


def test_fmu():
    code, text = run("fmu", "--mu", "2", "--check")
    assert code == 0 and "round trip: ok" in text
    assert "e-basis: e(1,1) + (-q - q^-1)*e(2)" in text
    assert run("fmu", "--mu", "")[1].startswith("e-basis: 1")


def test_char_core_blocks_contents():
    assert run("char", "--n", "2", "--lambda", "1,1", "--mu", "1")[1].strip() == "-1"
    assert run("core", "--lambda", "5,3,2", "--e", "4")[1].strip() == "1,1"
    assert run("blocks", "--n", "3", "--e", "2")[1].splitlines() == ["{(3), (1,1,1)}", "{(2,1)}"]
    _, env = run_json("blocks", "--n", "3", "--e", "inf")
    assert env["result"] == {"n": 3, "e": "inf", "blocks": [[[3]], [[2, 1]], [[1, 1, 1]]]}
    _, env = run_json("char-table", "--n", "2", "--mu", "1")
    assert env["result"]["rows"] == [{"lambda": [2], "value": {"1": "1"}},
                                     {"lambda": [1, 1], "value": {"0": "-1"}}]
    assert "residues mod 3" in run("contents", "--lambda", "4,2,1", "--e", "3")[1]


def test_multiply_and_psi():
    code, text = run("multiply", "--n", "4", "--left", "1", "--right", "1")
    assert text.splitlines() == ["(1,1): (q + q^-1)", "(2): (q + 1 + q^-1)", "(1): (3*q - 3)", "(): (6*q)"]
    code, env = run_json("psi", "--e", "1,1")
    assert env["result"]["k2_coefficient_matches"] == ["q + 1 + q^-1"]


def test_exit_codes(capsys):
    assert run("gr-basis", "--n", "9")[0] == cli.EXIT_GUARD
    assert run("--max-n", "3", "gr-basis", "--n", "4")[0] == cli.EXIT_GUARD
    assert run("char", "--n", "3", "--lambda", "2", "--mu", "1")[0] == cli.EXIT_USAGE
    assert run("core", "--lambda", "1,2", "--e", "2")[0] == cli.EXIT_USAGE
    assert run("nonsense")[0] == cli.EXIT_USAGE


def test_verify_properties_deterministic():
    code, first = run("--format", "json", "verify", "--suite", "properties", "--max-n", "4", "--seed", "7")
    assert code == 0
    _, second = run("--format", "json", "verify", "--suite", "properties", "--max-n", "4", "--seed", "7")
    assert first == second
    assert json.loads(first)["result"]["passed"]


def test_verify_failure_exit(monkeypatch):
    from qfh.verify import CheckResult
    monkeypatch.setattr(cli, "run_suite", lambda *a, **k: [CheckResult("broken", False, "x")])
    code, text = run("verify", "--suite", "paper")
    assert code == cli.EXIT_VERIFY and text.startswith("FAIL  broken")


def test_cache_commands(tmp_path):
    out = io.StringIO()
    assert cli.main(["--cache-dir", str(tmp_path), "gr-basis", "--n", "3"], out=out) == 0
    out = io.StringIO()
    cli.main(["--cache-dir", str(tmp_path), "--format", "json", "cache", "info"], out=out)
    assert json.loads(out.getvalue())["result"]["entries"] >= 0
    out = io.StringIO()
    cli.main(["--cache-dir", str(tmp_path), "cache", "clear"], out=out)
    assert out.getvalue().startswith("removed")
    assert run("cache")[1].strip() == "cache disabled"
