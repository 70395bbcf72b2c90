import json
import sys
from pathlib import Path

import pytest

from scripts import check

ROOT = Path(__file__).resolve().parent.parent


def run(monkeypatch, *argv):
    monkeypatch.setattr(sys, "argv", ["check.py", *argv])
    return check.main()


def test_check_writes_report(monkeypatch, tmp_path, capsys):
    report = tmp_path / "smoke.json"
    markdown = tmp_path / "smoke.md"
    status = run(monkeypatch, "check", str(ROOT / "scenarios" / "c2_smoke.json"), "--suite", "cyclicity",
                 "--cap", "2", "--report", str(report), "--markdown", str(markdown))
    assert status == check.EXIT_SATISFIED
    data = json.loads(report.read_text(encoding="utf-8"))
    assert data["level_cap"] == 2
    assert [s["suite"] for s in data["suites"]] == ["cyclicity"]
    assert markdown.read_text(encoding="utf-8").startswith("# Report: c2_smoke")
    assert "All predictions met" in capsys.readouterr().out


def test_missing_file(monkeypatch, tmp_path):
    assert run(monkeypatch, "check", str(tmp_path / "nope.json")) == check.EXIT_INPUT_ERROR


def test_bad_scenario(monkeypatch, tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"group": {"kind": "cyclic", "n": 2}, "run": {"suites": ["bogus"]}}', encoding="utf-8")
    assert run(monkeypatch, "check", str(path)) == check.EXIT_INPUT_ERROR
    assert "ConfigInvalid" in capsys.readouterr().out


def test_list(monkeypatch, tmp_path, capsys):
    assert run(monkeypatch, "list", "--reports-dir", str(tmp_path)) == check.EXIT_SATISFIED
    assert "No reports found" in capsys.readouterr().out


def test_no_command(monkeypatch):
    assert run(monkeypatch) == check.EXIT_INPUT_ERROR


def test_unknown_suite_flag(monkeypatch):
    with pytest.raises(SystemExit):
        run(monkeypatch, "check", "x.json", "--suite", "bogus")
