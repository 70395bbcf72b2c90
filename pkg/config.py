"""
Configuration module for CrossedCheck.
"""
import os
from pathlib import Path
from dotenv import load_dotenv

load_dotenv()

# Search bounds
ORDER_BOUND = int(os.environ.get("CROSSEDCHECK_ORDER_BOUND", "24"))
SEARCH_BOUND = int(os.environ.get("CROSSEDCHECK_SEARCH_BOUND", "200000"))
# Probe universe: equivariant maps kept per ordered pair of base objects
PROBE_MAP_BOUND = int(os.environ.get("CROSSEDCHECK_PROBE_MAP_BOUND", "6"))

# Simplicial levels checked exhaustively
LEVEL_CAP = int(os.environ.get("CROSSEDCHECK_LEVEL_CAP", "3"))
HOMOLOGY_CELL_BOUND = int(os.environ.get("CROSSEDCHECK_HOMOLOGY_CELL_BOUND", "250000"))

LOG_LEVEL = os.environ.get("CROSSEDCHECK_LOG_LEVEL", "INFO")

# Report format
REPORT_SCHEMA_VERSION = 1

# Root paths
PROJECT_ROOT = Path(__file__).parent
SCENARIOS_DIR = PROJECT_ROOT / "scenarios"
REPORTS_DIR = PROJECT_ROOT / "reports"
