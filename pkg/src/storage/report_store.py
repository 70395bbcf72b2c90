"""
Report storage: saving and loading check reports as canonical JSON.
"""
import logging
from pathlib import Path
from typing import Any, Dict, List, Optional

import config
from src.core.report import Report
from src.utils.io_utils import dumps_json, read_json, write_json, write_text

logger = logging.getLogger(__name__)


def report_path(scenario_name: str, reports_dir: Optional[Path] = None) -> Path:
    """Default location of the report for a scenario name."""
    return Path(reports_dir or config.REPORTS_DIR) / f"{scenario_name}.report.json"


def render_report(report: Report) -> str:
    """Canonical JSON text; equal reports render byte-identically."""
    return dumps_json(report.to_json_dict())


def save_report(report: Report, path: Optional[Path] = None) -> Path:
    """
    Write a report to disk.

    Args:
        report: Report to write
        path: Target file; defaults to REPORTS_DIR/<scenario>.report.json

    Returns:
        The path written
    """
    target = Path(path) if path else report_path(report.scenario.get("name", "scenario"))
    write_json(target, report.to_json_dict())
    logger.info("Saved report to %s", target)
    return target


def load_report(path: Path) -> Report:
    """Read a report back; computed fields in the file are ignored."""
    data = read_json(path)
    data.pop("satisfied", None)
    for suite in data.get("suites", []):
        suite.pop("satisfied", None)
        suite.pop("first_violation", None)
        for check in suite.get("checks", []):
            check.pop("satisfied", None)
    return Report.model_validate(data)


def list_reports(reports_dir: Optional[Path] = None) -> List[Dict[str, Any]]:
    """Name, satisfied flag and path of every stored report."""
    folder = Path(reports_dir or config.REPORTS_DIR)
    if not folder.exists():
        return []
    rows = []
    for path in sorted(folder.glob("*.report.json")):
        try:
            report = load_report(path)
        except Exception as e:
            logger.warning("Skipping unreadable report %s: %s", path, e)
            continue
        rows.append({"name": report.scenario.get("name", path.stem), "satisfied": report.satisfied, "path": str(path)})
    return rows


def save_markdown(text: str, path: Path) -> Path:
    write_text(path, text)
    return Path(path)
