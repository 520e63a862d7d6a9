import json
import os
import subprocess
import sys

import pytest

from dnlattice import checks, io
from dnlattice.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_verify(capsys):
    code, out, _ = run(capsys, "verify", "--theorem", "4.8", "--n", "7")
    assert code == 0 and out.startswith("PASS")
    code, out, _ = run(capsys, "verify", "--theorem", "3.4", "--n", "4", "--format", "json")
    assert code == 0 and json.loads(out)["status"] == "skipped"
    code, _, err = run(capsys, "verify", "--theorem", "9.9", "--n", "4")
    assert code == 2 and "unknown check id" in err


def test_suite_json_n2(capsys):
    code, out, _ = run(capsys, "suite", "--n-min", "2", "--n-max", "2", "--format", "json")
    assert code == 0
    status = {r["id"]: r["status"] for r in json.loads(out)["results"]}
    assert status["4.4"] == "pass" and status["4.7"] == "pass"
    assert all(v == "skipped" for k, v in status.items() if k.startswith("3."))
    assert list(json.loads(out)["results"][0]) == ["id", "n", "status", "detail", "elapsed_ms"]


def test_suite_text_all_pass(capsys):
    code, out, _ = run(capsys, "suite", "--n-min", "3", "--n-max", "9")
    assert code == 0
    assert "0 failed" in out.splitlines()[-1]
    assert not any(line.startswith("FAIL") for line in out.splitlines())


def test_suite_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["suite", "--n-min", "9", "--n-max", "3"])
    assert exc.value.code == 2


def test_suite_deterministic_output(capsys):
    argv = ["suite", "--n-min", "3", "--n-max", "4", "--format", "json", "--deterministic"]
    _, first, _ = run(capsys, *argv)
    _, second, _ = run(capsys, *argv)
    assert first == second
    assert all(r["elapsed_ms"] == 0 for r in json.loads(first)["results"])


def test_failing_check_sets_exit_code(capsys, monkeypatch):
    spec = checks.REGISTRY["3.6"]

    def broken(n):
        checks.require(False, "forced")

    monkeypatch.setitem(checks.REGISTRY, "3.6", checks.CheckSpec("3.6", spec.applicable, broken, spec.summary))
    code, out, _ = run(capsys, "verify", "--theorem", "3.6", "--n", "5")
    assert code == 1 and out.startswith("FAIL")


def test_cohomology(capsys):
    code, out, _ = run(capsys, "cohomology", "--lattice", "Rab", "--n", "2", "--subgroup", "dih:1:0")
    assert code == 0 and "H^-1 = Z/2" in out and "H^1 = 0" in out
    _, out, _ = run(capsys, "cohomology", "--lattice", "regular", "--n", "5", "--format", "json")
    rows = json.loads(out)["subgroups"]
    assert all(v == {"h_minus1": "0", "h0_hat": "0", "h1": "0"} for v in rows.values())
    _, out, _ = run(capsys, "cohomology", "--lattice", "Rab", "--n", "7", "--subgroup", "rot:7")
    assert "rot:7" in out and "H^-1 = 0, H^0 = 0, H^1 = 0" in out
    code, _, err = run(capsys, "cohomology", "--lattice", "Rab", "--n", "3", "--subgroup", "rot:2")
    assert code == 2 and "not a subgroup" in err
    code, _, _ = run(capsys, "cohomology", "--lattice", "nope", "--n", "3")
    assert code == 2


def test_verdict(capsys):
    code, out, _ = run(capsys, "verdict", "--n", "9", "--format", "json")
    v = json.loads(out)
    assert code == 0 and v["stably_rational"] and v["retract_rational_over_infinite_k"]
    assert list(v) == ["n", "stably_rational", "retract_rational_over_infinite_k", "evidence", "citations"]
    code, out, _ = run(capsys, "verdict", "--n", "8")
    assert code == 0 and "stably rational: no" in out and "<s^4, t>" in out
    _, out, _ = run(capsys, "verdict", "--n", "2")
    assert "Theorem 1.5" in out


def test_export(capsys, tmp_path):
    path = tmp_path / "m.json"
    code, _, _ = run(capsys, "export", "--lattice", "mtilde_plus", "--n", "3", "--out", str(path))
    d = json.loads(path.read_text())
    assert code == 0 and d["rank"] == 4
    assert d["sigma"]["rows"] == d["tau"]["cols"] == 4
    assert io.lattice_from_dict(d) == io.lattice_from_dict(json.loads(io.dumps(d)))
    _, out, _ = run(capsys, "export", "--lattice", "Rab", "--n", "2", "--out", "-")
    assert json.loads(out)["rank"] == 5
    _, out, _ = run(capsys, "export", "--witness", "4.8", "--n", "5", "--out", "-")
    assert json.loads(out)["provenance"].startswith("Theorem 4.8")
    code, _, err = run(capsys, "export", "--lattice", "triv", "--n", "3", "--out", str(tmp_path / "no" / "x"))
    assert code == 1 and "I/O error" in err


def test_console_script_respects_worker_cap():
    env = dict(os.environ, DNLATTICE_WORKERS="2")
    out = subprocess.run([sys.executable, "-m", "dnlattice.cli", "suite", "--n-min", "2", "--n-max", "3",
                          "--only", "4.1,4.4", "--format", "json", "--deterministic"],
                         env=env, capture_output=True, text=True, check=True)
    assert json.loads(out.stdout)["summary"] == {"pass": 4, "fail": 0, "skipped": 0}
