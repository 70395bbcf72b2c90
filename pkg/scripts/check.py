"""
Run the law suites on a scenario file and write the JSON report.

Usage:
    python scripts/check.py check scenarios/c3_loday.json
    python scripts/check.py check scenarios/s3_full.json --suite cyclicity --suite homology --cap 2
    python scripts/check.py check scenarios/c2_smoke.json --report out.json --markdown out.md --timing
    python scripts/check.py list

Exit status: 0 when every prediction is met, 1 when some prediction is
violated, 2 on an input error.
"""
import argparse
import logging
import sys
from pathlib import Path

# Add the project root to the import path
project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

import config
from src.core.check_pipeline import CheckPipeline
from src.core.scenario import SUITES, override_run, parse_scenario
from src.errors import CrossedCheckError
from src.export.report_tables import console_summary, markdown_report
from src.storage.report_store import list_reports, report_path, save_markdown, save_report
from src.utils.io_utils import read_text

EXIT_SATISFIED = 0
EXIT_VIOLATED = 1
EXIT_INPUT_ERROR = 2

logger = logging.getLogger("check")


def run_check(args: argparse.Namespace) -> int:
    """Parse, run and report one scenario; returns the exit status."""
    path = Path(args.scenario)
    try:
        scenario = parse_scenario(read_text(path))
        scenario = override_run(scenario, args.suite, args.cap)
    except FileNotFoundError:
        print(f"❌ Scenario file not found: {path}")
        return EXIT_INPUT_ERROR
    except CrossedCheckError as e:
        print(f"❌ {type(e).__name__}: {e}")
        return EXIT_INPUT_ERROR

    print(f"📦 {scenario.name}: {scenario.group.name} (order {scenario.group.order}), "
          f"suites {', '.join(scenario.suites)}, level cap {scenario.level_cap}")
    try:
        report = CheckPipeline(scenario, timing=args.timing).run()
    except CrossedCheckError as e:
        print(f"❌ {type(e).__name__}: {e}")
        return EXIT_INPUT_ERROR

    target = Path(args.report) if args.report else report_path(scenario.name)
    save_report(report, target)
    if args.markdown:
        save_markdown(markdown_report(report), Path(args.markdown))
        print(f"✅ Markdown summary written to {args.markdown}")

    print(console_summary(report))
    for suite in report.suites:
        for note in suite.notes:
            print(f"⚠️  {suite.suite}: {note}")
        violation = suite.first_violation
        if violation:
            print(f"❌ {suite.suite}: {violation['law']} at {violation['object']} "
                  f"(predicted {violation['predicted']}), witness {violation['witness']}")

    print(f"\n📁 Report: {target}")
    if report.satisfied:
        print("✅ All predictions met")
        return EXIT_SATISFIED
    print("❌ Some predictions were violated")
    return EXIT_VIOLATED


def run_list(args: argparse.Namespace) -> int:
    rows = list_reports(Path(args.reports_dir) if args.reports_dir else None)
    if not rows:
        print("⚠️  No reports found")
    for row in rows:
        mark = "✅" if row["satisfied"] else "❌"
        print(f"{mark} {row['name']}: {row['path']}")
    return EXIT_SATISFIED


def main() -> int:
    parser = argparse.ArgumentParser(description="Exhaustive law checks for crossed G-set constructions")
    subparsers = parser.add_subparsers(dest="command", help="Command")

    check_parser = subparsers.add_parser("check", help="Run suites on a scenario file")
    check_parser.add_argument("scenario", type=str, help="Scenario JSON file")
    check_parser.add_argument("--suite", action="append", choices=list(SUITES) + ["all"],
                              help="Suite to run (repeatable); defaults to the scenario's run section")
    check_parser.add_argument("--cap", type=int, default=None, help="Level cap for simplicial checks")
    check_parser.add_argument("--report", type=str, default=None, help="Report path")
    check_parser.add_argument("--markdown", type=str, default=None, help="Also write a Markdown summary")
    check_parser.add_argument("--timing", action="store_true", help="Record wall-clock time per suite")

    list_parser = subparsers.add_parser("list", help="List stored reports")
    list_parser.add_argument("--reports-dir", type=str, default=None, help="Reports folder")

    args = parser.parse_args()
    logging.basicConfig(level=config.LOG_LEVEL, format="%(levelname)s %(name)s: %(message)s")

    if args.command == "check":
        return run_check(args)
    if args.command == "list":
        return run_list(args)
    parser.print_help()
    return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
