from __future__ import annotations

import json
import subprocess
import sys

import pytest

from galois_param.cli import main
from galois_param.extensions import builder_manual, load_fixture


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_build_sqrt_json_round_trip(capsys, tmp_path):
    path = tmp_path / "e.json"
    code, out, _ = run(capsys, "--format", "json", "build", "sqrt", "-o", str(path), "--", "-2,0,1")
    assert code == 0
    wire = json.loads(out)
    assert json.loads(path.read_text()) == wire
    assert builder_manual(wire).to_wire() == wire
    code, out, _ = run(capsys, "--format", "json", "build", "manual", str(path))
    assert code == 0 and json.loads(out) == wire


def test_build_subcommand_format_flag(capsys):
    code, out, _ = run(capsys, "build", "cyclotomic", "5", "--format", "json")
    assert code == 0
    assert json.loads(out)["group"]["kind"] == "perm"


def test_build_morse_text(capsys):
    code, out, _ = run(capsys, "build", "morse", "0,1,0,0,0,1")
    assert code == 0
    assert "infinity: class [5^1]" in out


def test_build_trinomial_rejects_bad_parameters(capsys):
    code, _, err = run(capsys, "build", "trinomial", "5", "1", "1", "1")
    assert code == 3 and "must equal 1" in err


def test_specialize(capsys):
    code, out, _ = run(capsys, "--format", "json", "specialize", "sqrt_t2_plus_1", "--t0", "1/2")
    assert code == 0
    assert json.loads(out)["quadratic_kernel"] == 5


def test_specialize_at_branch_point_is_an_error(capsys):
    code, _, err = run(capsys, "specialize", "sqrt_t", "--t0", "0")
    assert code == 3 and "NonSeparable" in err


@pytest.mark.parametrize("argv,code", [
    (["check", "--criterion", "ih", "--e1", "sqrt_t", "--e2", "sqrt_t"], 2),
    (["check", "--criterion", "ic3", "--e1", "trinomial_s5", "--e2", "morse_y5_plus_y"], 0),
    (["check", "--criterion", "ic3", "--e1", "morse_y5_plus_y", "--e2", "trinomial_s5"], 2),
    (["check", "--criterion", "bph", "--e1", "sqrt_t", "--e2", "sqrt_phi5"], 0),
    (["check", "--criterion", "bph", "--e1", "sqrt_phi5", "--e2", "sqrt_t"], 3),
    (["check", "--criterion", "ramvar", "--e1", "thompson_2a3a19a", "--e2", "baby_monster_2c3a55a"], 0),
    (["case", "prop31", "1", "0", "1"], 2),
    (["case", "prop31", "1", "0", "-1"], 0),
    (["case", "cor710", "3"], 2),
    (["case", "cor710", "17"], 3),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_check_json_report(capsys):
    code, out, _ = run(capsys, "--format", "json", "check", "--criterion", "bpc",
                       "--e1", "sqrt_t", "--e2", "sqrt_phi5", "--prime-bound", "2000")
    assert code == 0
    rep = json.loads(out)
    assert rep["overall"]["status"] == "empirically_supported"
    assert set(rep["conditions"]) == {"(BPC-1)", "(BPC-2)", "(BPC-3)"}


def test_check_with_descriptor_file(capsys, tmp_path):
    path = tmp_path / "abstract.json"
    wire = load_fixture("sqrt_t").to_wire()
    wire["field"] = {"kind": "dedekind", "hilbertian": False, "infinite_prime_divisors": True}
    path.write_text(json.dumps(wire))
    code, out, _ = run(capsys, "check", "--criterion", "ic3", "--e1", "morse_y5_plus_y", "--e2", str(path))
    assert code == 3
    assert "INCONCLUSIVE" in out


@pytest.mark.parametrize("argv", [
    ["check", "--criterion", "ic9", "--e1", "sqrt_t", "--e2", "sqrt_t"],
    ["check", "--criterion", "ic1", "--e1", "no_such_thing", "--e2", "sqrt_t"],
    ["build", "sqrt", "1,x"],
    ["case", "nope"],
    [],
])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        code = main(argv)
        raise SystemExit(code)
    assert exc.value.code == 64


def test_group_listing(capsys):
    code, out, _ = run(capsys, "--format", "json", "group", "S5", "--g-complete", "6A,2A,5A")
    assert code == 0
    data = json.loads(out)
    assert data["order"] == 120 and len(data["classes"]) == 7
    assert data["g_complete"] is True


def test_primes(capsys):
    code, out, _ = run(capsys, "--format", "json", "primes", "1,1,1,1,1", "--bound", "100")
    assert code == 0
    data = json.loads(out)
    assert data["divisors"] == [5, 11, 31, 41, 61, 71]


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "galois_param.cli", "case", "cor710", "2"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "ESTABLISHED" in proc.stdout
