import json
import subprocess
import sys

import numpy as np
import pytest

from magic_jsd import ParamPair, magic_M_pure
from magic_jsd.cli import main
from magic_jsd.magic import qubit_state
from magic_jsd.scans import EXAMPLE2_ALPHA, EXAMPLE2_BETA, GridSpec, parse_number, scan_example1, scan_example2, to_csv


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_parse_number():
    assert parse_number("2*pi") == 2 * np.pi
    assert parse_number("-pi/2") == -np.pi / 2
    assert parse_number("0.25") == 0.25
    for bad in ["__import__('os')", "pi**2", "", "e"]:
        with pytest.raises(ValueError):
            parse_number(bad)


def test_grid_spec():
    g = GridSpec.parse("phi:0:2*pi:4:open")
    assert np.abs(g.values() - [0, np.pi / 2, np.pi, 3 * np.pi / 2]).max() < 1e-15
    g = GridSpec.parse("beta:-1:1:3", exclude=(0.0,))
    assert list(g.values()) == [-1.0, 1.0]
    assert EXAMPLE2_ALPHA.values().size == 40 and EXAMPLE2_BETA.values().size == 40
    for bad in ["a:0:1", "a:0:1:x", "a:0:1:5:closed", "a:0:1:1"]:
        with pytest.raises(ValueError):
            GridSpec.parse(bad)


def test_scan1_rows_match_eval():
    p = ParamPair(0.5, 2)
    th, ph = GridSpec("theta", 0, np.pi, 7), GridSpec("phi", 0, 2 * np.pi, 9, open_end=True)
    rows = scan_example1(p, th, ph)
    assert len(rows) == 63
    for t, f, q, m in rows:
        r = magic_M_pure(qubit_state(t, f), p)
        assert abs(m - r.value) < 1e-12
        assert abs(q - r.c_psi) < 1e-12


def test_scan_threads_do_not_change_output():
    a = to_csv(("alpha", "beta", "M_T", "m_T"), scan_example2(workers=1))
    b = to_csv(("alpha", "beta", "M_T", "m_T"), scan_example2(workers=4))
    assert a == b


def test_cli_scan_csv(capsys, tmp_path):
    code, out, _ = run(capsys, "scan-example1", "--alpha", "0.5", "--beta", "2", "--grid", "theta:0:pi:3", "--grid", "phi:0:2*pi:4:open")
    assert code == 0
    lines = out.split("\n")
    assert lines[0] == "theta,phi,q_max,M"
    assert len(lines) == 1 + 12 + 1 and lines[-1] == ""
    assert "\r" not in out
    path = tmp_path / "s.csv"
    run(capsys, "scan-example1", "--alpha", "0.5", "--beta", "2", "--grid", "theta:0:pi:3", "--grid", "phi:0:2*pi:4:open", "--out", str(path))
    assert path.read_bytes() == out.encode()


def test_cli_scan3_json_and_domain(capsys):
    code, out, _ = run(capsys, "scan-example3", "--grid", "alpha:1.1:1.9:3", "--grid", "beta:-2:0.5:3", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert len(obj["rows"]) == 9 and all(r["boosted"] is True for r in obj["rows"])
    code, _, err = run(capsys, "scan-example3", "--grid", "alpha:0.5:1.5:3")
    assert code == 3 and "error" in err


def test_cli_eval_values(capsys):
    code, out, _ = run(capsys, "eval", "--kind", "magicM", "--state", "qutrit_T", "--alpha", "0.5", "--beta", "2")
    obj = json.loads(out)
    assert code == 0
    assert abs(obj["value"] - 0.53629654651033707) < 1e-12
    assert set(obj["witnesses"]) == {"psi_00", "psi_02", "psi_22"}
    code, out, _ = run(capsys, "eval", "--kind", "relent", "--state", "zero", "--state2", "mixed2", "--alpha", "0.5", "--beta", "1")
    obj = json.loads(out)
    assert abs(obj["value"] - (2 - np.sqrt(2))) < 1e-14 and obj["support_mismatch"] is False
    code, out, _ = run(capsys, "eval", "--kind", "gatepower", "--gate", "T^1/4", "--alpha", "1.5", "--beta", "0.5")
    obj = json.loads(out)
    assert abs(obj["C_U"] - np.cos(np.pi / 32)) < 1e-12
    code, out, _ = run(capsys, "eval", "--kind", "robustness", "--state", "T")
    assert abs(json.loads(out)["value"] - (np.sqrt(3) - 1) / 2) < 1e-12


def test_cli_eval_inline_json(capsys, tmp_path):
    st = json.dumps({"dim": 2, "amps": [[1, 0], [0, 0]]})
    code, out, _ = run(capsys, "eval", "--kind", "entropy", "--state", st, "--alpha", "2", "--beta", "1")
    assert code == 0 and json.loads(out)["value"] == 0
    f = tmp_path / "rho.json"
    f.write_text(json.dumps({"dim": 2, "rows": [[[0.5, 0], [0, 0]], [[0, 0], [0.5, 0]]]}))
    code, out, _ = run(capsys, "eval", "--kind", "entropy", "--state-file", str(f), "--alpha", "2", "--beta", "2")
    assert code == 0 and abs(json.loads(out)["value"] - 0.375) < 1e-15


def test_cli_mixed_magic_upper_bound(capsys):
    code, out, _ = run(capsys, "eval", "--kind", "magicM", "--state", "mixed2", "--alpha", "1.5", "--beta", "0.5")
    obj = json.loads(out)
    assert code == 0 and obj["upper_bound"] is True and obj["value"] <= 1e-6


def test_cli_exit_codes(capsys):
    assert run(capsys, "eval", "--kind", "entropy", "--state", "zero", "--alpha", "1", "--beta", "1")[0] == 3
    assert run(capsys, "eval", "--kind", "entropy", "--state", "zero", "--alpha", "2", "--beta", "0")[0] == 3
    bad_norm = json.dumps({"dim": 2, "amps": [[1, 0], [1, 0]]})
    assert run(capsys, "eval", "--kind", "entropy", "--state", bad_norm, "--alpha", "2", "--beta", "1")[0] == 2
    assert run(capsys, "eval", "--kind", "entropy", "--state", "{not json", "--alpha", "2", "--beta", "1")[0] == 2
    assert run(capsys, "eval", "--kind", "entropy", "--alpha", "2", "--beta", "1")[0] == 2
    assert run(capsys, "eval", "--kind", "gatepower", "--gate", '{"dim": 2, "rows": [[[1,0],[0,0]],[[0,0],[2,0]]]}',
               "--alpha", "1.5", "--beta", "0.5")[0] == 2
    assert run(capsys, "export-stabilizers", "--d", "5")[0] == 2
    assert run(capsys, "eval", "--kind", "magicm", "--state", "mixed2", "--alpha", "1.5", "--beta", "0.5")[0] == 2


def test_cli_export(capsys, tmp_path):
    for d, n, count in [(2, 1, 6), (3, 1, 12), (2, 2, 60)]:
        code, out, _ = run(capsys, "export-stabilizers", "--d", str(d), "--n", str(n))
        assert code == 0 and len(json.loads(out)["states"]) == count
        _, again, _ = run(capsys, "export-stabilizers", "--d", str(d), "--n", str(n))
        assert again == out


def test_cli_verify_json(capsys, tmp_path):
    path = tmp_path / "rep.json"
    code, out, _ = run(capsys, "verify", "--suite", "stabilizer", "--samples", "10", "--format", "json", "--out", str(path))
    assert code == 0
    assert json.loads(out) == json.loads(path.read_text())


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "magic_jsd", "eval", "--kind", "gatepower", "--gate", "H",
                          "--alpha", "1.5", "--beta", "0.5"], capture_output=True, text=True)
    assert res.returncode == 0
    assert json.loads(res.stdout)["value"] == 0
