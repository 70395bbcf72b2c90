import pytest

from src.core.report import Report, SuiteResult
from src.export.report_tables import (
    console_summary,
    homology_table,
    law_counts,
    markdown_report,
    suite_summary,
    to_markdown,
)
from src.storage.report_store import list_reports, load_report, render_report, report_path, save_markdown, save_report
from src.verdict import fail, ok


@pytest.fixture
def report():
    laws = SuiteResult(suite="laws")
    laws.add(ok("T.counit", 4, "G"))
    laws.add(ok("T.counit", 6, "X"))
    laws.add(fail("lambda~.equivariant", 3, "LxN", (1, 0), 2, 1), prediction=False)
    homology = SuiteResult(suite="homology")
    homology.add(fail("d.squared", 9, "nerve(C2)", [0, 1]))
    homology.add(ok("note", 1), prediction=None)
    homology.table("homology", {"config": "nerve(C2)", "level": 0, "group": "Z"})
    homology.table("homology", {"config": "nerve(C2)", "level": 1, "group": "Z/2"})
    homology.notes.append("computed to level 1")
    return Report(scenario={"name": "sample"}, suites=[laws, homology], level_cap=2, note="exhaustive to 2")


def test_predictions_decide_satisfaction(report):
    laws, homology = report.suites
    assert laws.satisfied
    assert not homology.satisfied
    assert not report.satisfied
    assert homology.first_violation == {"law": "d.squared", "object": "nerve(C2)", "predicted": True,
                                        "witness": [0, 1]}


def test_unexpected_pass_is_a_violation():
    suite = SuiteResult(suite="laws")
    suite.add(ok("chi.natural", 5, "X"), prediction=False)
    assert suite.first_violation["witness"] == "held on all 5 checked"


def test_save_and_load(report, tmp_path):
    path = save_report(report, tmp_path / "sample.report.json")
    loaded = load_report(path)
    assert render_report(loaded) == render_report(report)
    assert not loaded.satisfied


def test_default_report_path(tmp_path):
    assert report_path("c3", tmp_path) == tmp_path / "c3.report.json"


def test_list_reports(report, tmp_path):
    save_report(report, report_path("sample", tmp_path))
    (tmp_path / "broken.report.json").write_text("{", encoding="utf-8")
    rows = list_reports(tmp_path)
    assert [(r["name"], r["satisfied"]) for r in rows] == [("sample", False)]
    assert list_reports(tmp_path / "missing") == []


def test_suite_summary(report):
    frame = suite_summary(report)
    assert list(frame["suite"]) == ["laws", "homology"]
    assert list(frame["violations"]) == [0, 1]
    assert list(frame["first_violation"]) == ["", "d.squared"]
    assert "seconds" not in frame.columns


def test_suite_summary_keeps_timings(report):
    report.suites[0].seconds = 0.5
    assert "seconds" in suite_summary(report).columns


def test_law_counts(report):
    frame = law_counts(report.suites[0]).set_index("law")
    assert frame.loc["T.counit", "checks"] == 2
    assert frame.loc["T.counit", "cases"] == 10
    assert frame.loc["lambda~.equivariant", "passed"] == 0
    assert law_counts(SuiteResult(suite="empty")).empty


def test_homology_pivot(report):
    frame = homology_table(report)
    assert list(frame.columns) == ["config", "H0", "H1"]
    assert frame.iloc[0]["H1"] == "Z/2"


def test_markdown(report, tmp_path):
    text = markdown_report(report)
    assert text.startswith("# Report: sample")
    assert "VIOLATED" in text
    assert "First violation: `d.squared`" in text
    assert "- computed to level 1" in text
    assert save_markdown(text, tmp_path / "out" / "sample.md").read_text(encoding="utf-8") == text
    assert "nerve(C2)" in console_summary(report)


def test_empty_table_markdown():
    assert to_markdown(homology_table(Report(scenario={}, level_cap=1))) == "_(empty)_\n"
