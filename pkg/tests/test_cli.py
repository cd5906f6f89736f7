import json
import subprocess
import sys

from conftest import fixture_path


def run(*argv, stdin=None):
    return subprocess.run(
        [sys.executable, "-m", "knotfloer.cli", *argv],
        capture_output=True,
        text=True,
        input=stdin,
    )


def test_alexander_table_lookup():
    r = run("alexander", "--knot", "3_1")
    assert r.returncode == 0
    assert r.stdout.strip() == "t^-1 - 1 + t"


def test_hk_trefoil():
    r = run("hk", "--knot", "3_1", "--k", "0")
    assert r.returncode == 0 and r.stdout.strip() == "1"


def test_small_10_123():
    r = run("small", "--knot", "10_123")
    assert r.returncode == 0 and r.stdout.strip() == "false"


def test_pd_stdin():
    r = run("alexander", "--pd", "-", stdin="X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)")
    assert r.returncode == 0 and r.stdout.strip() == "t^-1 - 1 + t"


def test_json_single_document_and_deterministic():
    r1 = run("cfr", "--knot", "4_1", "--json")
    r2 = run("cfr", "--knot", "4_1", "--json")
    assert r1.returncode == 0
    assert r1.stdout == r2.stdout  # byte-identical
    doc = json.loads(r1.stdout)  # exactly one JSON document
    assert doc["small"] is True and doc["ranks"] == {"-1": 1, "0": 3, "1": 1}
    assert doc["schema"] == 1


def test_surgery_json():
    r = run("surgery", "--knot", "3_1", "--m", "1", "--k", "0", "--json")
    doc = json.loads(r.stdout)
    assert (doc["h"], doc["d_shift"], doc["reduced_rank"]) == (1, -2, 0)


def test_maslov_subcommand(tmp_path):
    dom = tmp_path / "dom.json"
    dom.write_text(json.dumps({"multiplicity": {"U": 1}, "corners": ["x1", "x2"]}))
    r = run(
        "maslov",
        "--cellulation", fixture_path("genus1_bigon.json"),
        "--domain", str(dom),
        "--json",
    )
    doc = json.loads(r.stdout)
    assert doc["maslov"] == 1 and doc["classification"] == "disk_diff"


def test_usage_error_exit_2():
    r = run("alexander")
    assert r.returncode == 2


def test_domain_error_exit_1():
    r = run("alexander", "--knot", "nope_1")
    assert r.returncode == 1


def test_trace(tmp_path):
    trace = tmp_path / "trace"
    r = run("spectrum", "--knot", "3_1", "--trace", str(trace))
    assert r.returncode == 0
    assert (trace / "presentation.json").exists()
    assert (trace / "spectrum.json").exists()


def test_table_listing():
    r = run("table", "--json")
    doc = json.loads(r.stdout)
    names = [row["name"] for row in doc["knots"]]
    assert "3_1" in names and "10_123" in names


def test_table_path_override(tmp_path, monkeypatch):
    import json as _json
    import os

    from knotfloer import table as tbl

    custom = tmp_path / "mini.json"
    entry = tbl.raw_table()["3_1"]
    custom.write_text(_json.dumps({"only_1": entry}))
    r = subprocess.run(
        [sys.executable, "-m", "knotfloer.cli", "alexander", "--knot", "only_1"],
        capture_output=True,
        text=True,
        env={**os.environ, "FLOER_TABLE_PATH": str(custom)},
    )
    assert r.returncode == 0 and r.stdout.strip() == "t^-1 - 1 + t"
