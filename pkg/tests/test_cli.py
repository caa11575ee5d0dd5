import json
import subprocess
import sys

import pytest

from voa.cli import main, parse_specialize, InputError

SCHEMA = {"job", "status", "expected", "got", "weight", "charge"}


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_run_zhu_json(capsys):
    code, out, _ = run(capsys, "run", "zhu", "--json")
    assert code == 0
    rep = json.loads(out)
    assert rep["status"] == "pass"
    assert all(SCHEMA <= set(r) for r in rep["checks"])
    assert all(r["status"] in ("pass", "fail") for r in rep["checks"])
    assert "timing_seconds" not in rep


def test_reports_are_deterministic(capsys):
    _, a, _ = run(capsys, "run", "curves", "--json")
    _, b, _ = run(capsys, "run", "curves", "--json")
    assert a == b


def test_timing_is_opt_in(capsys):
    _, out, _ = run(capsys, "run", "curves", "--json", "--timing")
    assert "timing_seconds" in json.loads(out)


def test_mismatch_exit_code(capsys):
    code, out, _ = run(capsys, "classify", "--x", "1", "--y", "1", "--z", "1")
    assert code == 1
    assert "[fail]" in out


def test_classify_member(capsys):
    code, out, _ = run(capsys, "classify", "--x", "0", "--y", "5/2", "--z", "0", "--json")
    assert code == 0
    assert json.loads(out)["notes"]["top_dim"] == 2


@pytest.mark.parametrize("argv", [
    ["zhu", "--algebra", "nope", "--expr", "J"],
    ["zhu", "--algebra", "wsl4sub", "--expr", "J +* Q"],
    ["run", "zhu", "--specialize", "k"],
    ["classify", "--x", "1/0", "--y", "0", "--z", "0"],
])
def test_input_errors(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2
    assert err.startswith("voa: error:")


def test_parse_error_cites_position(capsys):
    code, _, err = run(capsys, "zhu", "--algebra", "wsl4sub", "--expr", "J +* Q")
    assert "line 1, column" in err


def test_bad_file(tmp_path, capsys):
    f = tmp_path / "bad.voa"
    f.write_text("algebra x\ngenerator a parity=even weight=1\nope a a { 0: b; }\n")
    code, _, err = run(capsys, "check", str(f))
    assert code == 2 and "line 3" in err


def test_check_file_roundtrip(tmp_path, capsys):
    code, text, _ = run(capsys, "print", "n2")
    assert code == 0
    f = tmp_path / "n2.voa"
    f.write_text(text)
    code, out, _ = run(capsys, "check", str(f), "--jacobi", "5", "--specialize", "c=-15")
    assert code == 0, out


def test_check_reports_minimal_failure(capsys):
    code, out, _ = run(capsys, "check", "wsl4sub-altB", "--jacobi", "6", "--json")
    assert code == 1
    assert json.loads(out)["notes"]["minimal_failure"].startswith("jacobi")


def test_zhu_command(capsys):
    code, out, _ = run(capsys, "zhu", "--algebra", "wsl4sub", "--k", "-1", "--expr", "[G+, G-]",
                       "--json")
    rep = json.loads(out)
    assert code == 0
    assert rep["notes"]["result"] == ("(4)*[J] + (3)*[L] + [W] + (-6)*[J]^2 + (-12/5)*[J][L]"
                                      " + (56/25)*[J]^3")
    assert rep["notes"]["trace"]


def test_zhu_specialize(capsys):
    _, a, _ = run(capsys, "zhu", "--algebra", "n2", "--c", "-15", "--expr", "T")
    _, b, _ = run(capsys, "zhu", "--algebra", "n2", "--specialize", "k=-1,c=-15", "--expr", "T")
    assert a == b


def test_singular_command(capsys):
    code, out, _ = run(capsys, "singular", "--algebra", "wsl4sub", "--k", "-1", "--weight", "2",
                       "--charge", "2", "--json")
    rep = json.loads(out)
    assert code == 0
    assert rep["notes"]["dimension"] == 1
    assert rep["checks"][0]["got"] == "G+_(-1) G+_(-1) v"


def test_cutoff_env(monkeypatch, capsys):
    monkeypatch.setenv("VOA_CUTOFF", "3")
    _, out, _ = run(capsys, "run", "n2-axioms", "--json")
    assert json.loads(out)["notes"]["cutoff"] == 3
    _, out, _ = run(capsys, "run", "n2-axioms", "--json", "--cutoff", "4")
    assert json.loads(out)["notes"]["cutoff"] == 4
    monkeypatch.setenv("VOA_CUTOFF", "x")
    code, _, _ = run(capsys, "run", "n2-axioms")
    assert code == 2


def test_parse_specialize():
    assert parse_specialize("k=-1,c=-15") == {"k": -1, "c": -15}
    assert parse_specialize(None) == {}
    with pytest.raises(InputError):
        parse_specialize("k")


def test_console_script():
    out = subprocess.run([sys.executable, "-m", "voa.cli", "curves", "intersect"],
                         capture_output=True, text=True)
    assert out.returncode == 0
    assert "(-13/4,-7/4)" in out.stdout


def test_unknown_suite():
    with pytest.raises(SystemExit) as e:
        main(["run", "nope"])
    assert e.value.code == 2
