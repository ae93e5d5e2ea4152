import json
import logging
import shutil
import subprocess
import sys

import pytest

from gcx.cli import CacheError, _cache_path, cache_dir, cache_load, cache_store, cached_basis, main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


def test_forms_check_passes(capsys):
    code, rep = run(capsys, "forms", "check", "--n", "3")
    assert code == 0 and rep["ok"]
    assert rep["result"]["residual_terms"] == 0
    assert rep["result"]["north_pole"] == "1/2*g*C*u1"
    assert rep["config"]["seed"] == 0


def test_nonformality_reports_obstruction(capsys):
    code, rep = run(capsys, "nonformality", "--n", "3")
    assert code == 0 and rep["verdicts"] == {"obstruction": True}


@pytest.mark.parametrize("argv", [
    ["forms", "check", "--n", "3", "--bogus"],
    ["frobnicate"],
    ["forms", "check"],
    ["forms", "check", "--n", "3", "--ring", "u"],
])
def test_usage_errors_exit_two(capsys, argv):
    assert main(argv) == 2


def test_value_error_maps_to_usage(capsys):
    code, rep = run(capsys, "mc", "check", "--n", "3", "--element", "tadpole")
    assert code == 2 and not rep["ok"]


def test_overflow_exit_three(capsys, tmp_path):
    code, rep = run(capsys, "gc", "cohomology", "--n", "3", "--vmax", "5", "--emax", "7",
                    "--flavor", "fgc", "--max-cell", "10", "--cache", str(tmp_path))
    assert code == 3 and "WindowOverflow" in rep["error"]


def test_failed_verdict_exits_one(capsys, monkeypatch):
    import gcx.cli
    monkeypatch.setattr(gcx.cli, "cmd_forms_check", lambda a: ({}, {"identity": False}))
    code, rep = run(capsys, "forms", "check", "--n", "3")
    assert code == 1 and rep["ok"] is False


def test_reports_are_byte_identical(capsys, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        assert main(["dk", "verify", "--n", "2", "--arity", "3", "--maxlen", "2",
                     "--json", str(path), "--seed", "7"]) == 0
    capsys.readouterr()
    assert a.read_bytes() == b.read_bytes()
    assert json.loads(a.read_text())["config"]["seed"] == 7


def test_timing_is_opt_in(capsys):
    _, rep = run(capsys, "forms", "check", "--n", "2")
    assert "seconds" not in rep
    _, rep = run(capsys, "forms", "check", "--n", "2", "--timing")
    assert "seconds" in rep


def test_csv_written(capsys, tmp_path):
    out = tmp_path / "cells.csv"
    code, _ = run(capsys, "gc", "cohomology", "--n", "3", "--vmax", "3", "--emax", "4",
                  "--cache", str(tmp_path / "c"), "--csv", str(out))
    assert code == 0
    assert out.read_text().splitlines()[0] == "vertices,edges,loop_order,degree,dim"


def test_cache_round_trip(tmp_path):
    lines = ["GCX1 p=1 v=2 kinds=I,I edges=(1,2)", "second"]
    cache_store(tmp_path, ("gc", 3, "gc", 2, 1), lines)
    assert cache_load(tmp_path, ("gc", 3, "gc", 2, 1)) == lines
    assert cache_load(tmp_path, ("gc", 3, "gc", 2, 2)) is None


def test_truncated_cache_is_detected(tmp_path):
    key = ("gc", 3, "gc", 2, 1)
    path = cache_store(tmp_path, key, ["a", "b", "c"])
    text = path.read_text().splitlines()
    path.write_text("\n".join(text[:2]) + "\n")
    with pytest.raises(CacheError):
        cache_load(tmp_path, key)


def test_tampered_cache_is_detected(tmp_path):
    key = ("gc", 3, "gc", 2, 1)
    path = cache_store(tmp_path, key, ["a", "b"])
    path.write_text(path.read_text().replace("\na\n", "\nz\n"))
    with pytest.raises(CacheError):
        cache_load(tmp_path, key)


def test_corrupt_cache_is_rebuilt_with_warning(tmp_path, caplog):
    fresh, status = cached_basis(tmp_path, 3, "gc", 4, 6)
    assert status == "miss" and fresh
    assert cached_basis(tmp_path, 3, "gc", 4, 6) == (fresh, "hit")
    path = _cache_path(tmp_path, ("gc", 3, "gc", 4, 6))
    path.write_text(path.read_text()[:-10])
    with caplog.at_level(logging.WARNING, logger="gcx"):
        again, status = cached_basis(tmp_path, 3, "gc", 4, 6)
    assert status == "rebuilt" and again == fresh
    assert "rebuilding" in caplog.text
    assert cached_basis(tmp_path, 3, "gc", 4, 6)[1] == "hit"


def test_environment_overrides_cache_flag(tmp_path, monkeypatch):
    monkeypatch.setenv("GCX_CACHE", str(tmp_path / "env"))
    assert cache_dir(str(tmp_path / "flag")) == tmp_path / "env"
    monkeypatch.delenv("GCX_CACHE")
    assert cache_dir(str(tmp_path / "flag")) == tmp_path / "flag"


def test_cache_rebuild_command(capsys, tmp_path, monkeypatch):
    monkeypatch.setenv("GCX_CACHE", str(tmp_path))
    code, rep = run(capsys, "cache", "rebuild", "--n", "2", "--vmax", "3", "--emax", "4")
    assert code == 0 and rep["result"]["cells"] == 15
    assert rep["result"]["cache_dir"] == str(tmp_path)


@pytest.mark.skipif(shutil.which("gcx") is None, reason="console script not installed")
def test_console_script():
    proc = subprocess.run(["gcx", "forms", "check", "--n", "5"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["ok"]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "gcx.cli", "--version"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout.startswith("gcx ")
