import json
import subprocess
import sys
from importlib import resources

import pytest

from zdisk.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_classify_text(capsys):
    code, out = run(capsys, "classify", "--n", "-4")
    assert code == 0 and "Z4" in out and "4 classes" in out


def test_classify_json(capsys):
    code, out = run(capsys, "classify", "--n", "6", "--json")
    obj = json.loads(out)
    assert code == 0 and obj["finite"] is False and obj["rank"] == 1


def test_classify_zero(capsys):
    code, out = run(capsys, "classify", "--n", "0")
    assert code == 0 and "trivial" in out


def test_json_is_deterministic(capsys):
    _, a = run(capsys, "classify", "--n", "-9", "--json")
    _, b = run(capsys, "classify", "--n", "-9", "--json")
    assert a == b


def test_disks(capsys):
    code, out = run(capsys, "disks", "--poly", "-2*t+3-2*t^-1", "--json")
    obj = json.loads(out)
    assert code == 0 and (obj["isotopy_count"], obj["equivalence_count"]) == (2, 1)
    assert obj["caveat"]
    _, out = run(capsys, "disks", "--n", "-1", "--json")
    assert json.loads(out)["isotopy_count"] == 1
    code, out = run(capsys, "disks", "--poly", "t^2+1", "--json")
    assert code == 0 and json.loads(out)["isotopy_count"] == "unsupported"


def test_disks_parse_error(capsys):
    assert main(["disks", "--poly", "t^^"]) == 1


def test_units(capsys):
    code, out = run(capsys, "units", "--n", "-9", "--json")
    obj = json.loads(out)
    assert code == 0 and len(obj["units"]) == 4
    assert all(u["preimage"] for u in obj["units"])


def test_oracle(capsys):
    code, out = run(capsys, "oracle", "--n", "1", "--pm", "--json")
    assert code == 0 and json.loads(out)["count"] == 1
    code, out = run(capsys, "oracle", "--n", "3", "--deg", "2", "--coeff", "3", "--json")
    assert code == 0 and json.loads(out)["complete_within_bounds"] is False


@pytest.mark.parametrize("argv", [
    ["oracle", "--n", "0"], ["oracle", "--n", "-4", "--deg", "0"]])
def test_oracle_bad_bounds(argv):
    assert main(argv) == 1


def test_bad_flags():
    with pytest.raises(SystemExit) as exc:
        main(["classify", "--bogus"])
    assert exc.value.code == 1


def test_factorization_limit(monkeypatch):
    monkeypatch.setenv("ZDISK_FACTOR_LIMIT", "1000")
    assert main(["classify", "--n", "-1000003"]) == 2


def test_knot_table(tmp_path, capsys):
    src = resources.files("zdisk") / "data" / "five_crossing.csv"
    out = tmp_path / "table.json"
    assert main(["knot-table", "--input", str(src), "--output", str(out), "--format", "json"]) == 0
    rows = json.loads(out.read_text())
    assert [r["isotopy_count"] for r in rows] == [1, 1, 2, "unsupported", 2]
    assert main(["knot-table", "--input", str(tmp_path / "missing.csv")]) == 1


def test_selftest_quick(capsys):
    code, out = run(capsys, "selftest", "--quick")
    assert code == 0 and "7/7 checks passed" in out


def test_module_entry():
    res = subprocess.run([sys.executable, "-m", "zdisk", "classify", "--n", "-2"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and "Z2" in res.stdout
