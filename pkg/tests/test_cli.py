import json

import pytest

from groupalg import __version__
from groupalg.cli import run

from .conftest import fixture_path


def _run(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_decide_loop(capsys):
    code, out, err = _run(capsys, "decide", fixture_path("loop"), "--ring", "Z")
    assert code == 0, err
    assert "noetherian: yes" in out
    assert "artinian: no" in out
    assert "decomposition: M1(Laurent:Z)" in out
    assert err == ""


def test_decide_non_discrete(capsys):
    code, out, _ = _run(capsys, "decide", fixture_path("loop_with_exit"), "--ring", "Q")
    assert code == 0
    assert "noetherian: no" in out
    assert "witness: cycle e has exit f at v" in out


def test_decide_groupoid_document(capsys):
    code, out, _ = _run(capsys, "decide", fixture_path("mixed"), "--ring", "Q", "--json")
    assert code == 0
    document = json.loads(out)
    assert document["noetherian"] == "yes"
    assert [s["ring"] for s in document["decomposition"]] == ["Q", "GroupRing:Q:C2"]


def test_bad_ring_spec(capsys):
    code, out, err = _run(capsys, "decide", fixture_path("a3"), "--ring", "Zmod")
    assert code == 2
    assert out == ""
    assert err.startswith("error[InvalidRingSpec]: ")
    assert err.count("\n") == 1


@pytest.mark.parametrize("command", ["decide", "decompose", "verify-iso"])
@pytest.mark.parametrize("ring", ["Laurent:GroupRing:Z:S3", "GroupRing:Z:S3"])
@pytest.mark.parametrize("graph", ["loop", "loop_with_exit", "a3"])
def test_noncommutative_coefficients_rejected(capsys, command, ring, graph):
    code, out, err = _run(capsys, command, fixture_path(graph), "--ring", ring)
    assert code == 2
    assert out == ""
    assert err.startswith("error[NoncommutativeCoefficients]: ")
    assert err.count("\n") == 1


def test_oracle_ideals_of_group_ring(capsys):
    code, out, err = _run(capsys, "oracle", "ideals", "--ring", "GroupRing:Zmod:2:C2")
    assert code == 0, err
    assert out.startswith("GroupRing:Zmod:2:C2: 3 left ideal(s), 3 right ideal(s)\n")


def test_verify_iso(capsys):
    code, out, err = _run(capsys, "verify-iso", fixture_path("a3"), "--ring", "Q")
    assert code == 0, err
    assert "basis arrows: 9 (bound 3)" in out
    for check in ("bijective", "multiplicative", "involution", "round_trip"):
        assert f"{check}: pass" in out


def test_verify_iso_needs_discreteness(capsys):
    code, _, err = _run(capsys, "verify-iso", fixture_path("loop_with_exit"), "--ring", "Z")
    assert code == 1
    assert err.startswith("error[NotDiscrete]: ")


def test_verify_iso_rejects_bad_bound(capsys):
    code, _, err = _run(capsys, "verify-iso", fixture_path("loop"), "--ring", "Z", "--bound", "0")
    assert code == 2
    assert err.startswith("error[UsageError]: ")


def test_json_output_is_stable(capsys):
    argv = ("verify-iso", fixture_path("two_cycle"), "--ring", "Z", "--bound", "2", "--json")
    first = _run(capsys, *argv)
    second = _run(capsys, *argv)
    assert first == second
    document = json.loads(first[1])
    assert document["passed"] is True
    assert document["bound"] == 2


def test_decompose(capsys):
    code, out, _ = _run(capsys, "decompose", fixture_path("two_cycle"), "--ring", "Q")
    assert code == 0
    assert out == "M2(Laurent:Q) at (g1.g2)^∞\n"
    code, _, err = _run(capsys, "decompose", fixture_path("infinite_emitter"), "--ring", "Q")
    assert code == 1
    assert err.startswith("error[NotDiscrete]: ")


def test_analyze(capsys):
    code, out, _ = _run(capsys, "analyze", fixture_path("a3"))
    assert code == 0
    assert "discrete: yes" in out
    assert "orbit sink ε_v3: size 3, isotropy trivial" in out
    code, out, _ = _run(capsys, "analyze", fixture_path("mixed"))
    assert code == 0
    assert out.splitlines() == ["orbit a: size 2, isotropy C1", "orbit c: size 1, isotropy C2"]


def test_validate_groupoid(capsys):
    code, out, _ = _run(capsys, "validate-groupoid", fixture_path("pair"))
    assert (code, out) == (0, "valid\n")
    code, out, err = _run(capsys, "validate-groupoid", fixture_path("bad_composable"))
    assert code == 1
    assert out.startswith("bad_composability: ")
    assert err.startswith("error[InvalidGroupoid]: ")


def test_oracles(capsys):
    code, out, _ = _run(capsys, "oracle", "column", "--ring", "Zmod:4")
    assert code == 0
    assert "3 submodule(s)" in out
    code, out, _ = _run(capsys, "oracle", "row", "--ring", "Zmod:6", "--size", "3", "--index", "2")
    assert code == 0
    assert "4 submodule(s)" in out
    code, out, _ = _run(capsys, "oracle", "ideals", "--ring", "Zmod:6")
    assert code == 0
    assert out.startswith("Zmod:6: 4 left ideal(s), 4 right ideal(s)")


def test_oracle_needs_a_finite_ring(capsys):
    code, _, err = _run(capsys, "oracle", "ideals", "--ring", "Z")
    assert code == 1
    assert err.startswith("error[InfiniteRing]: ")


def test_input_errors(capsys, tmp_path):
    code, _, err = _run(capsys, "analyze", str(tmp_path / "missing.json"))
    assert code == 2
    assert err.startswith("error[FileNotFoundError]: ")
    broken = tmp_path / "broken.json"
    broken.write_text("{", encoding="utf-8")
    code, _, err = _run(capsys, "analyze", str(broken))
    assert code == 2
    assert err.startswith("error[GraphParseError]: ")


def test_usage_errors(capsys):
    code, _, err = _run(capsys)
    assert code == 2
    assert err.startswith("error[UsageError]: ")
    code, _, err = _run(capsys, "decide", fixture_path("a3"))
    assert code == 2
    assert "--ring" in err


def test_version(capsys):
    code, out, _ = _run(capsys, "--version")
    assert code == 0
    assert out.strip() == f"groupalg {__version__}"


@pytest.mark.parametrize("flag", ["-v", "-vv", "-vvv"])
def test_verbosity_flags(capsys, flag):
    code, _, _ = _run(capsys, flag, "analyze", fixture_path("loop"))
    assert code == 0
