"""
Tabular views of a report: suite summaries, per-law counts and the
tables suites record, as pandas DataFrames, plus console and Markdown text.
"""
from typing import List

import pandas as pd

from src.core.report import Report, SuiteResult


def suite_summary(report: Report) -> pd.DataFrame:
    """One row per suite: checks run, unmet predictions, first violated law."""
    rows = []
    for suite in report.suites:
        violation = suite.first_violation
        rows.append({
            "suite": suite.suite,
            "checks": len(suite.checks),
            "violations": sum(not c.satisfied for c in suite.checks),
            "satisfied": suite.satisfied,
            "first_violation": violation["law"] if violation else "",
            "seconds": suite.seconds,
        })
    frame = pd.DataFrame(rows, columns=["suite", "checks", "violations", "satisfied", "first_violation", "seconds"])
    if frame["seconds"].isna().all():
        frame = frame.drop(columns=["seconds"])
    return frame


def law_counts(suite: SuiteResult) -> pd.DataFrame:
    """Per law: how often it was checked, passed, and met its prediction."""
    frame = pd.DataFrame([
        {
            "law": c.verdict.law,
            "passed": c.verdict.passed,
            "satisfied": c.satisfied,
            "informational": c.prediction is None,
            "cases": c.verdict.checked,
        }
        for c in suite.checks
    ], columns=["law", "passed", "satisfied", "informational", "cases"])
    if frame.empty:
        return frame
    return (
        frame.groupby("law", sort=False)
        .agg(checks=("passed", "size"), passed=("passed", "sum"),
             satisfied=("satisfied", "all"), informational=("informational", "sum"),
             cases=("cases", "sum"))
        .reset_index()
    )


def suite_table(suite: SuiteResult, name: str) -> pd.DataFrame:
    return pd.DataFrame(suite.tables.get(name, []))


def homology_table(report: Report) -> pd.DataFrame:
    """Homology groups pivoted to one row per configuration."""
    suite = report.suite("homology")
    if suite is None or not suite.tables.get("homology"):
        return pd.DataFrame()
    frame = suite_table(suite, "homology")
    pivot = frame.pivot(index="config", columns="level", values="group")
    pivot.columns = [f"H{level}" for level in pivot.columns]
    return pivot.reset_index()


def to_markdown(frame: pd.DataFrame) -> str:
    if frame.empty:
        return "_(empty)_\n"
    header = "| " + " | ".join(str(c) for c in frame.columns) + " |"
    rule = "|" + "---|" * len(frame.columns)
    body = ["| " + " | ".join(_cell(v) for v in row) + " |" for row in frame.itertuples(index=False)]
    return "\n".join([header, rule] + body) + "\n"


def _cell(value) -> str:
    if isinstance(value, float) and pd.isna(value):
        return ""
    return str(value).replace("|", "\\|")


def console_summary(report: Report) -> str:
    """Fixed-width summary for the terminal."""
    lines = [suite_summary(report).to_string(index=False)]
    homology = homology_table(report)
    if not homology.empty:
        lines += ["", homology.to_string(index=False)]
    return "\n".join(lines)


def markdown_report(report: Report) -> str:
    """Summary, per-suite law counts, recorded tables and notes as Markdown."""
    name = report.scenario.get("name", "scenario")
    status = "satisfied" if report.satisfied else "VIOLATED"
    parts: List[str] = [f"# Report: {name}\n", f"Overall: **{status}**. {report.note}\n",
                        "## Suites\n", to_markdown(suite_summary(report))]
    for suite in report.suites:
        parts += [f"\n## {suite.suite}\n", to_markdown(law_counts(suite))]
        violation = suite.first_violation
        if violation:
            parts.append(f"\nFirst violation: `{violation['law']}` at {violation['object']}, "
                         f"witness `{violation['witness']}`\n")
        for table in suite.tables:
            parts += [f"\n### {table}\n", to_markdown(suite_table(suite, table))]
        if suite.notes:
            parts.append("\n" + "\n".join(f"- {n}" for n in suite.notes) + "\n")
    return "".join(parts)
