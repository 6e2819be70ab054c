import json
import subprocess
import sys

import pytest

from wheelcoh.cli import main
from wheelcoh.fixtures import path
from wheelcoh.random_inputs import perturb
from wheelcoh.serialize import dumps, wheel_to_json

FAN = str(path("hex_fan.json"))
WHEEL = str(path("hex_wheel.json"))
FLIST = str(path("seven_var_flist.json"))


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_cohomology_text(capsys):
    code, out, _ = run(capsys, "cohomology", FAN, WHEEL)
    assert code == 0
    assert "H^0  = 0" in out and "H^-2 = 0" in out and "H^-3 = 0" in out
    assert "vanishing steps: [1, 2, 4, 5, 9, 10, 12, 13]" in out
    assert "support E_1∩E_2∩E_7" in out


def test_cohomology_json(capsys):
    code, out, _ = run(capsys, "cohomology", FAN, WHEEL, "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert data["h1"]["nonvanishing_steps"] == [3, 6, 7, 8, 11, 14, 15]
    assert data["h0"]["empty"] and data["h2"]["zero"] and data["h3"]["zero"]
    step15 = data["h1"]["steps"][14]
    assert step15["Z"]["components"] == [[0, 1, 6]]
    assert step15["Z"]["cutting_divisors_str"] == ["E_1", "E_1+E_2+E_7", "E_2", "E_7"]


def test_output_is_deterministic(capsys):
    first = run(capsys, "cohomology", FAN, WHEEL, "--format", "json")
    second = run(capsys, "cohomology", FAN, WHEEL, "--format", "json")
    assert first == second
    a = run(capsys, "oracle-check", "--m", "4", "--random", "3", "--seed", "7")
    b = run(capsys, "oracle-check", "--m", "4", "--random", "3", "--seed", "7")
    assert a == b


def test_validate_ok_and_failure(capsys, tmp_path, wheel):
    assert run(capsys, "validate", FAN, WHEEL)[0] == 0
    bad = tmp_path / "bad.json"
    bad.write_text(dumps(wheel_to_json(perturb(wheel, "rim_fwd", 1, 0))))
    code, out, _ = run(capsys, "validate", FAN, str(bad))
    assert code == 1
    assert "relation (12) fails at j=2" in out
    code, out, _ = run(capsys, "validate", FAN, str(bad), "--format", "json")
    assert json.loads(out)["relation12_failures"] == [2]
    code, _, err = run(capsys, "cohomology", FAN, str(bad))
    assert code == 1 and "relation (12)" in err


def test_malformed_input_exit_2(capsys, tmp_path):
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    assert run(capsys, "validate", FAN, str(broken))[0] == 2
    missing = tmp_path / "missing.json"
    missing.write_text('{"f_out": ["x_1"]}')
    assert run(capsys, "validate", FAN, str(missing))[0] == 2
    assert run(capsys, "filtration", str(tmp_path / "nope.json"))[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_filtration_flist_and_wheel(capsys):
    code, out, _ = run(capsys, "filtration", FLIST, "--format", "json")
    steps = json.loads(out)["steps"]
    assert [s["k"] for s in steps if s["vanishes"]] == [9, 10, 12, 13]
    code, out, _ = run(capsys, "filtration", WHEEL, "--fan", FAN, "--k", "3")
    assert code == 0 and "I_k = <x_7>" in out and "L_3*L_4*L^-1(E_3)" in out


def test_syzygy_command(capsys):
    code, out, _ = run(capsys, "syzygy", FLIST, "--k", "7")
    assert code == 0
    assert "beta_1 (1, 2): -x_2*x_7*e_1 + x_6*e_2" in out
    assert "sigma(1,2,3,1)" in out
    code, out, _ = run(capsys, "syzygy", FLIST, "--format", "json", "--k", "6")
    data = json.loads(out)
    assert len(data["beta"]) == 15 and len(data["syzygies"]["6"]) == 1


def test_oracle_check_random(capsys):
    code, out, _ = run(capsys, "oracle-check", "--m", "4", "--random", "10", "--seed", "7")
    assert code == 0
    assert out.strip().endswith("130/130 checks passed")


def test_oracle_check_wheel_file(capsys):
    code, out, _ = run(capsys, "oracle-check", WHEEL, "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["pass"] and data["failures"] == 0


def test_oracle_check_spokes_formula_reports_counterexample(capsys, tmp_path):
    from test_syzygy import COUNTER
    p = tmp_path / "counter.json"
    p.write_text(dumps(wheel_to_json(COUNTER)))
    assert run(capsys, "oracle-check", str(p))[0] == 0
    code, out, _ = run(capsys, "oracle-check", str(p), "--formula", "spokes")
    assert code == 1
    assert "wheel I_1 closed form" in out


def test_oracle_check_needs_input(capsys):
    assert run(capsys, "oracle-check")[0] == 2


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "wheelcoh", "validate", FAN, WHEEL],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and "valid" in proc.stdout
