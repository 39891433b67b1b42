"""latpoly unit tests module."""
import os
from pathlib import Path

# Constants.
DATA_DIR = Path(__file__).parent.joinpath("data")
CONFIG_DIR = DATA_DIR.joinpath("config")
POLYGONS_DIR = DATA_DIR.joinpath("polygons")

#: `os.access` always grants root, so permission tests are skipped for it.
ISROOT = hasattr(os, "geteuid") and os.geteuid() == 0
