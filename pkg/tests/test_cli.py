import glob
import json
import os

import pytest

import main
import cache_functions as cache
import _param as param


def run(capsys, *argv):
    code = main.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_approx_json(capsys):
    code, out, _ = run(capsys, "approx", "--level", "6", "--alpha", "0,1",
                       "--order", "6")
    assert code == 0
    result = json.loads(out)
    rows0 = result["members"][0]["rows"]
    assert rows0[2]["ratio"] == "351/292"
    assert rows0[1]["b"] == "5/1"
    assert result["members"][1]["rows"][5]["ratio"] == \
        "6144958163/5112036000"


def test_usage_errors(capsys):
    assert run(capsys, "verify", "--level", "7")[0] == 2
    assert run(capsys, "approx", "--format", "xml")[0] == 2
    assert run(capsys, "table", "5")[0] == 2
    assert run(capsys, "approx", "--order", "1")[0] == 2
    assert run(capsys, "approx", "--alpha", "1/0")[0] == 2
    assert run(capsys, "export")[0] == 2
    assert run(capsys, "frobnicate")[0] == 2


def test_table1_markdown(capsys):
    code, out, _ = run(capsys, "table", "1", "--format", "md")
    assert code == 0
    assert "| 2 | 3 | 68849/57276 | 68849/57276 | yes |" in out
    assert "| no |" not in out


def test_table_deterministic(capsys):
    first = run(capsys, "table", "1", "--format", "json")
    second = run(capsys, "table", "1", "--format", "json")
    assert first[0] == 0
    assert first[1] == second[1]


def test_table_tsv(capsys):
    code, out, _ = run(capsys, "table", "1", "--format", "tsv")
    lines = out.strip().split("\n")
    assert lines[0].split("\t")[:3] == ["alpha", "n", "a_n/b_n"]
    assert len(lines) == 1 + 8 * 4


def test_verify_level6(capsys):
    code, out, _ = run(capsys, "verify", "--level", "6", "--upto", "20",
                       "--order", "30")
    result = json.loads(out)
    assert result["first_failure"] is None
    assert code == 0
    names = [c["name"] for c in result["checks"]]
    assert "Apery recurrence" in names
    assert "Hecke functional equation" in names


def test_verify_other_level(capsys):
    code, out, _ = run(capsys, "verify", "--level", "10", "--order", "20")
    assert code == 0
    assert json.loads(out)["passed"]


def test_metrics_index_zero(capsys):
    code, out, _ = run(capsys, "metrics", "--level", "6", "--n", "0",
                       "--digits", "30")
    assert code == 0
    row = json.loads(out)["members"][0]["rows"][0]
    assert row["n"] == 0
    assert row["err_exponent"] == 0
    assert row["error"] == "1.2"
    assert row["Q"] is None


def test_haupt_and_forms(capsys):
    code, out, _ = run(capsys, "haupt", "--level", "10", "--order", "7")
    assert code == 0
    assert json.loads(out)["series"]["coeffs"][:4] == \
        ["0/1", "1/1", "-6/1", "15/1"]
    code, out, _ = run(capsys, "f-form", "--level", "6", "--order", "3")
    combo = json.loads(out)["combo"]
    assert combo["coeffs"] == {"1": "1/40", "2": "-7/10", "3": "63/40",
                               "6": "-9/10"}
    code, out, _ = run(capsys, "e-family", "--level", "6", "--alpha", "-5")
    result = json.loads(out)
    assert result["closed_form_agrees"]
    assert result["members"][0]["c"] == "0/1"


def test_cache_round_trip(capsys, tmp_path):
    argv = ("approx", "--order", "6", "--cache-dir", str(tmp_path))
    cold = run(capsys, *argv)
    files = glob.glob(os.path.join(str(tmp_path), "*.json"))
    assert len(files) == 1
    warm = run(capsys, *argv)
    assert cold[1] == warm[1]
    verified = run(capsys, *(argv + ("--verify-cache",)))
    assert verified[0] == 0
    assert verified[1] == cold[1]


def test_cache_env(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv(param._CACHE_ENV, str(tmp_path))
    assert run(capsys, "approx", "--order", "4")[0] == 0
    assert glob.glob(os.path.join(str(tmp_path), "*.json"))


def _entryPath(tmp_path):
    key = cache.cacheKey('approx', 6, "0", 6)
    return key, cache.cachePath(str(tmp_path), key)


def test_cache_tampered(capsys, tmp_path):
    argv = ("approx", "--order", "6", "--cache-dir", str(tmp_path))
    run(capsys, *argv)
    key, path = _entryPath(tmp_path)
    with open(path) as fh:
        entry = json.load(fh)
    entry["payload"]["rows"][2]["ratio"] = "1/1"
    with open(path, "w") as fh:
        json.dump(entry, fh)
    code, _, err = run(capsys, *(argv + ("--verify-cache",)))
    assert code == 1
    assert key in err
    assert "differs from recomputation" in err


def test_cache_corrupted(capsys, tmp_path):
    argv = ("approx", "--order", "6", "--cache-dir", str(tmp_path))
    run(capsys, *argv)
    key, path = _entryPath(tmp_path)
    with open(path, "w") as fh:
        fh.write("{not json")
    code, _, err = run(capsys, *(argv + ("--verify-cache",)))
    assert code == 1
    assert key in err


def test_cache_stale_version(capsys, tmp_path):
    argv = ("approx", "--order", "6", "--cache-dir", str(tmp_path))
    cold = run(capsys, *argv)
    key, path = _entryPath(tmp_path)
    with open(path) as fh:
        entry = json.load(fh)
    entry["version"] = "0.0.0"
    entry["payload"] = {}
    with open(path, "w") as fh:
        json.dump(entry, fh)
    again = run(capsys, *argv)
    assert again[0] == 0
    assert again[1] == cold[1]
    with open(path) as fh:
        assert json.load(fh)["version"] == param._VERSION


def test_parallel_matches_serial(capsys):
    argv = ("approx", "--alpha", "0,1,-2", "--order", "8")
    serial = run(capsys, *argv)
    parallel = run(capsys, *(argv + ("--jobs", "2")))
    assert parallel[0] == 0
    assert serial[1] == parallel[1]


def _readAll(directory):
    out = {}
    for name in sorted(os.listdir(directory)):
        with open(os.path.join(directory, name), "rb") as fh:
            out[name] = fh.read()
    return out


def test_export(capsys, tmp_path):
    cache_dir = str(tmp_path / "cache")
    first = str(tmp_path / "first")
    second = str(tmp_path / "second")
    third = str(tmp_path / "third")
    base = ("export", "--level", "6", "--order", "10")
    assert run(capsys, *(base + ("--out", first)))[0] == 0
    assert run(capsys, *(base + ("--out", second)))[0] == 0
    run(capsys, *(base + ("--out", third, "--cache-dir", cache_dir)))
    run(capsys, *(base + ("--out", third, "--cache-dir", cache_dir)))

    files = _readAll(first)
    manifest = json.loads(files["manifest.json"])
    assert len(manifest["artifacts"]) == 6
    assert sorted(files) == sorted(["manifest.json"] + [
        a["file"] for a in manifest["artifacts"]])
    assert manifest["inputs"]["level"] == 6
    assert manifest["precision"]["digits"] == param._DEFAULT_DIGITS
    assert files == _readAll(second)
    assert files == _readAll(third)
