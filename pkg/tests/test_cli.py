import json

import pytest

from halincolor.cli import run
from halincolor.halin import from_dict


def _run(capsys, argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io
        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = run(argv)
    out, err = capsys.readouterr()
    return code, out, err


def _lines(out):
    return [json.loads(line) for line in out.splitlines()]


def test_selftest(capsys):
    code, out, err = _run(capsys, ["selftest"])
    assert code == 0
    doc = json.loads(out)
    assert doc["automorphisms_verified"] == 21 and doc["compositions_verified"] == 1728
    assert "21 automorphisms verified" in err and "1728 compositions verified" in err


def test_generate_color_verify(capsys, tmp_path, monkeypatch):
    code, out, _ = _run(capsys, ["generate", "--leaves", "12", "--seed", "1", "--count", "5"])
    assert code == 0
    assert len(_lines(out)) == 5
    inst = tmp_path / "i.jsonl"
    inst.write_text(out)
    code, colored, _ = _run(capsys, ["color", "--in", str(inst), "--emit-dot", str(tmp_path / "c.dot")])
    assert code == 0
    recs = _lines(colored)
    assert all(r["colors_used"] <= 8 and max(r["coloring"]) <= 7 for r in recs)
    assert (tmp_path / "c.dot").read_text().count("digraph") == 5
    code, out, _ = _run(capsys, ["verify", "--in", "-"], colored, monkeypatch)
    assert code == 0
    assert all(r["valid"] for r in _lines(out))


def test_color_seed_one(capsys, tmp_path):
    _, out, _ = _run(capsys, ["generate", "--leaves", "3", "--seed", "1"])
    f = tmp_path / "i.json"
    f.write_text(out)
    code, out, _ = _run(capsys, ["color", "--in", str(f)])
    rec = json.loads(out)
    assert code == 0 and rec["colors_used"] <= 8 and rec["case"] == "SmallCycle"


def test_generate_deterministic(capsys):
    argv = ["generate", "--leaves", "9", "--seed", str(2 ** 64 - 1), "--count", "3", "--subdivide", "0.2"]
    first = _run(capsys, argv)[1]
    assert first == _run(capsys, argv)[1]
    for doc in _lines(first):
        from_dict(doc)


def test_verify_corrupted(capsys, tmp_path):
    _, out, _ = _run(capsys, ["generate", "--leaves", "8", "--seed", "3"])
    inst = tmp_path / "i.json"
    inst.write_text(out)
    _, colored, _ = _run(capsys, ["color", "--in", str(inst)])
    rec = json.loads(colored)
    h = from_dict(rec["instance"])
    u, v = sorted(h.arcs)[0]
    rec["coloring"][v] = rec["coloring"][u]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(rec))
    code, out, err = _run(capsys, ["verify", "--in", str(inst), "--coloring", str(bad)])
    assert code == 1
    doc = json.loads(out)
    assert doc["valid"] is False and doc["violation"]["kind"] == "AdjacentSameColor"
    assert "AdjacentSameColor" in err


def test_verify_incomplete_coloring(capsys, tmp_path):
    _, out, _ = _run(capsys, ["generate", "--leaves", "4", "--seed", "3"])
    inst = tmp_path / "i.json"
    inst.write_text(out)
    col = tmp_path / "c.json"
    col.write_text("[0, 1]")
    code, out, _ = _run(capsys, ["verify", "--in", str(inst), "--coloring", str(col)])
    assert code == 1 and "error" in json.loads(out)


def test_ochrom(capsys, tmp_path):
    _, out, _ = _run(capsys, ["generate", "--leaves", "5", "--seed", "2"])
    f = tmp_path / "i.json"
    f.write_text(out)
    code, out, _ = _run(capsys, ["ochrom", "--in", str(f)])
    doc = json.loads(out)
    assert code == 0 and doc["status"] == "ok" and 3 <= doc["chi"] <= 8
    code, out, _ = _run(capsys, ["ochrom", "--in", str(f), "--kmax", "2"])
    assert json.loads(out)["status"] == "above_kmax"
    code, out, _ = _run(capsys, ["ochrom", "--in", str(f), "--budget", "1"])
    assert json.loads(out)["status"] == "budget"


def test_search(capsys):
    argv = ["search", "--max-leaves", "3", "--no-timing"]
    code, out, _ = _run(capsys, argv)
    recs = _lines(out)
    assert code == 0 and len(recs) == 65
    assert all("time" not in r for r in recs[:-1])
    summary = recs[-1]
    assert summary["summary"] and summary["max_chi"] == 4 and "rotation" in summary["note"]
    assert _run(capsys, argv)[1] == out
    code, out, _ = _run(capsys, ["search", "--max-leaves", "3", "--summary-only", "--jobs", "2", "--no-timing"])
    assert json.loads(out) == summary


def test_export(capsys, tmp_path):
    _, out, _ = _run(capsys, ["generate", "--leaves", "3", "--seed", "1"])
    f = tmp_path / "i.json"
    f.write_text(out)
    dot = tmp_path / "g.dot"
    assert _run(capsys, ["export", "--in", str(f), "--dot", str(dot)])[0] == 0
    text = dot.read_text()
    assert text.startswith("digraph") and text.count("->") == 6
    col = tmp_path / "c.json"
    col.write_text("[0, 3, 4, 5]")
    assert _run(capsys, ["export", "--in", str(f), "--dot", str(dot), "--coloring", str(col)])[0] == 0
    assert "c=5" in dot.read_text()


@pytest.mark.parametrize("argv", [
    [],
    ["frobnicate"],
    ["color"],
    ["color", "--in", "x", "--bogus"],
    ["generate", "--leaves", "2", "--seed", "0"],
    ["generate", "--leaves", "5", "--seed", "-1"],
    ["verify", "--in", "/nonexistent/file"],
    ["search", "--max-leaves", "3", "--jobs", "0"],
])
def test_usage_errors(capsys, argv):
    assert _run(capsys, argv)[0] == 2


@pytest.mark.parametrize("text", [
    "{not json",
    '{"tree": 1}',
    '{"tree":{"id":0,"children":[{"id":1,"children":[]},{"id":2,"children":[]}]},'
    '"root":0,"tree_arcs":[[0,1],[0,2]],"cycle_arcs":[[1,2],[2,1]]}',
    "",
])
def test_invalid_instances(capsys, tmp_path, text):
    f = tmp_path / "bad.json"
    f.write_text(text)
    code, out, err = _run(capsys, ["color", "--in", str(f)])
    assert code == 1 and err


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run([sys.executable, "-m", "halincolor", "selftest"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["ok"] is True
