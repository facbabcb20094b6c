import json
import subprocess
import sys


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "steinberg_lab.cli", *args],
        capture_output=True,
        text=True,
    )


def test_sigma_a_g2():
    out = run_cli("sigma-a", "G", "2", "--format", "json")
    assert out.returncode == 0
    payload = json.loads(out.stdout)
    assert payload["size"] == 2
    assert payload["matches_table"] is True


def test_sigma_a_a4_notes_no_table():
    out = run_cli("sigma-a", "A", "4", "--format", "json")
    assert out.returncode == 0
    payload = json.loads(out.stdout)
    assert "no classified set exists" in payload["note"]
    assert payload["c1_witness"]


def test_sigma_a_invalid_rank_exits_2():
    out = run_cli("sigma-a", "D", "2")
    assert out.returncode == 2


def test_verify_even_q_exits_2():
    out = run_cli("verify", "tree", "--q", "4")
    assert out.returncode == 2


def test_verify_unknown_suite_exits_2():
    out = run_cli("verify", "nonsense")
    assert out.returncode == 2


def test_verify_prasad_deterministic(tmp_path):
    p1 = tmp_path / "a.json"
    p2 = tmp_path / "b.json"
    out1 = run_cli("verify", "prasad", "--json", str(p1))
    out2 = run_cli("verify", "prasad", "--json", str(p2))
    assert out1.returncode == 0 and out2.returncode == 0
    assert p1.read_bytes() == p2.read_bytes()
    payload = json.loads(p1.read_text())
    assert payload["reports"][0]["suite"] == "prasad"
    statuses = {c["status"] for c in payload["reports"][0]["checks"]}
    assert statuses <= {"pass", "skip"}


def test_tables_r1r2():
    out = run_cli("tables", "--r1r2", "--format", "json")
    assert out.returncode == 0
    rows = json.loads(out.stdout)
    by_type = {row["type"]: (row["r1"], row["r2"]) for row in rows}
    assert by_type["A3"] == (4, 2)
    assert by_type["D5"] == (8, 4)
    assert by_type["E6"] == (8, 4)
    assert all(row["match"] for row in rows)


def test_tables_eic_markdown():
    out = run_cli("tables", "--eic", "--format", "markdown")
    assert out.returncode == 0
    assert out.stdout.startswith("| type |")
    assert "False" not in out.stdout


def test_warning_for_non_prime_power_q():
    out = run_cli("verify", "series", "--q", "15", "--radius", "4")
    assert "not a prime power" in out.stderr
