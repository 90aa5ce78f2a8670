"""
Configuration Settings

This module loads environment variables and defines configuration constants
for the library and the command line, including worker counts, default
search heights and the report check configuration.
"""

import os
from pathlib import Path
from dotenv import load_dotenv

load_dotenv()

# settings.py is at: .../diagonal/settings.py
BASE_DIR = Path(__file__).resolve().parent.parent


class Settings:
    """
    Central configuration for the diagonal equation toolkit.
    """
    # -------------------------------------------------------------------------
    # Runtime Configuration
    # -------------------------------------------------------------------------
    LOG_LEVEL = os.getenv("DIAGONAL_LOG_LEVEL", "INFO")
    LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"
    OUTPUT_DIR = os.getenv("DIAGONAL_OUTPUT_DIR", "output")

    # -------------------------------------------------------------------------
    # Search Configuration
    # -------------------------------------------------------------------------
    WORKERS = int(os.getenv("DIAGONAL_WORKERS", "4"))
    SEARCH_HEIGHT = int(os.getenv("DIAGONAL_SEARCH_HEIGHT", "100"))
    # Mazur: rational torsion has order at most 12
    TORSION_BOUND = 12

    # -------------------------------------------------------------------------
    # Report Configuration
    # -------------------------------------------------------------------------
    REPORT_CONFIG = os.getenv(
        "DIAGONAL_REPORT_CONFIG",
        str(BASE_DIR / "config" / "report_checks.json"),
    )

    # Families accepted by `generate`
    FAMILIES = ("2666", "2488", "2848", "24612", "26412", "21246", "cor2")
