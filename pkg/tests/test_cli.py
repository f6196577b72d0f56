import csv
import io
import json
import subprocess
import sys
from pathlib import Path

import pytest

from kcbg.bigraph import parse, serialize
from kcbg.cli import main, rows_to_csv, run_sweep, sweep_tasks
from kcbg.constructions import FAMILIES, ConstructionSpec, bar_g, ddot_g
from kcbg.fixtures import FIXTURES

GOLDEN = Path(__file__).parent / "golden"


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_construct_bar(capsys):
    code, out, _ = run(capsys, "construct", "bar", "--n", "6", "--m", "5", "--format", "edgelist")
    assert code == 0
    assert out == "6 5\n0 0\n0 1\n1 1\n1 2\n2 2\n2 3\n3 3\n3 4\n4 4\n5 0\n"


def test_construct_complete_and_family_flag(capsys):
    code, out, _ = run(capsys, "construct", "--family", "complete", "--n", "3", "--m", "2")
    assert code == 0 and parse(out).edge_count == 6


def test_construct_bad_params(capsys):
    code, _, err = run(capsys, "construct", "check", "--n", "6", "--m", "5")
    assert code == 2 and "a = 10/6 not integer" in err
    code, _, _ = run(capsys, "construct", "kappa_tuned", "--n", "6", "--m", "4", "--kappa", "9")
    assert code == 2


@pytest.mark.parametrize("fmt", ["edgelist", "dot", "json"])
def test_construct_reparses(capsys, tmp_path, fmt):
    path = tmp_path / f"g.{fmt}"
    for family in FAMILIES:
        code, _, _ = run(capsys, "construct", family, "--n", "12", "--m", "10",
                         "--format", fmt, "--output", str(path))
        if code == 2:
            continue
        assert parse(path.read_text(), fmt) == ConstructionSpec(family, 12, 10).build()


def test_verify_exit_codes(capsys, tmp_path):
    good = tmp_path / "bar.edgelist"
    good.write_text(serialize(bar_g(6, 5)))
    bad = tmp_path / "ddot.edgelist"
    bad.write_text(serialize(ddot_g(6, 5, 2)))
    code, out, _ = run(capsys, "verify", str(good), "--method", "fast")
    assert code == 0 and json.loads(out)["verdict"] is True
    code, out, _ = run(capsys, "verify", str(bad), "--method", "bruteforce")
    report = json.loads(out)
    assert code == 1 and report["witness"] == {"side": "U", "vertices": [0]}
    code, out, _ = run(capsys, "verify", str(bad), "--method", "all")
    assert code == 1 and json.loads(out)["agree"] is True


def test_verify_budget_and_parse_errors(capsys, tmp_path):
    big = tmp_path / "big.edgelist"
    big.write_text(serialize(bar_g(32, 30)))
    code, _, err = run(capsys, "verify", str(big), "--method", "hall")
    assert code == 2 and "BudgetExceeded" in err
    broken = tmp_path / "broken.edgelist"
    broken.write_text("2 1\n0 7\n")
    code, _, err = run(capsys, "verify", str(broken))
    assert code == 2 and "line 2" in err
    code, _, _ = run(capsys, "verify", str(tmp_path / "missing.edgelist"))
    assert code == 2


def test_verify_reads_format_from_suffix(capsys, tmp_path):
    path = tmp_path / "bar.json"
    path.write_text(serialize(bar_g(7, 4), "json"))
    assert run(capsys, "verify", str(path), "--method", "hall")[0] == 0


def test_connectivity(capsys, tmp_path):
    path = tmp_path / "g.edgelist"
    path.write_text(serialize(bar_g(6, 5)))
    code, out, _ = run(capsys, "connectivity", str(path))
    r = json.loads(out)
    assert code == 0 and (r["kappa"], r["kappa_U"], r["kappa_V"]) == (1, 1, 1)
    path.write_text((GOLDEN / "small_delta_7_4.edgelist").read_text())
    r = json.loads(run(capsys, "connectivity", str(path))[1])
    assert all(r["bounds"].values())


def test_fixtures_match_golden(capsys, tmp_path):
    code, _, _ = run(capsys, "fixtures", "--output", str(tmp_path))
    assert code == 0
    for name in FIXTURES:
        assert (tmp_path / f"{name}.edgelist").read_bytes() == \
            (GOLDEN / f"{name}.edgelist").read_bytes()


def test_sweep_bar(capsys):
    code, out, _ = run(capsys, "sweep", "--n", "3-10", "--family", "bar")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == sum(n - 2 for n in range(3, 11))
    for row in rows:
        n, m, k = int(row["n"]), int(row["m"]), int(row["k"])
        assert row["kcb_bruteforce"] == row["kcb_hall"] == row["kcb_fast"] == "True"
        assert int(row["edge_count"]) == m * (k + 1)
        assert row["error"] == ""
    assert "time_fast" not in rows[0]


def test_sweep_negative_families(capsys):
    out = run(capsys, "sweep", "--n", "3-10", "--family", "ddot,check")[1]
    for row in csv.DictReader(io.StringIO(out)):
        n, m, k = int(row["n"]), int(row["m"]), int(row["k"])
        if row["family"] == "ddot" and n % (k + 1) == 0 and n // (k + 1) > 1:
            assert row["kcb_fast"] == "False"
        if row["family"] == "check" and not row["error"]:
            assert (row["kcb_fast"] == "True") == (n % m == 0)
        assert row["error"] == "" or "not integer" in row["error"]


def test_sweep_byte_stable_across_jobs():
    tasks = sweep_tasks(range(3, 9), None, ["bar", "hat", "ddot"])
    one = rows_to_csv(run_sweep(tasks, jobs=1))
    two = rows_to_csv(run_sweep(tasks, jobs=2))
    assert one == two == rows_to_csv(run_sweep(tasks, jobs=1))


def test_sweep_timings_opt_in(capsys):
    out = run(capsys, "sweep", "--n", "5", "--m", "3", "--timings")[1]
    header = out.splitlines()[0].split(",")
    assert header[-4:] == ["time_bruteforce", "time_hall", "time_fast", "error"]


def test_sweep_unknown_family(capsys):
    assert run(capsys, "sweep", "--n", "5", "--family", "nosuch")[0] == 2


def test_module_entry_point(tmp_path):
    path = tmp_path / "g.edgelist"
    path.write_text(serialize(ddot_g(6, 5, 2)))
    proc = subprocess.run([sys.executable, "-m", "kcbg.cli", "verify", str(path)],
                          capture_output=True, text=True)
    assert proc.returncode == 1
    proc = subprocess.run([sys.executable, "-m", "kcbg.cli", "verify", "-"],
                          input=serialize(bar_g(6, 5)), capture_output=True, text=True)
    assert proc.returncode == 0
