"""Paths to the data files bundled with the package."""

from __future__ import annotations

from importlib import resources
from pathlib import Path

DEFAULT_DATASET = "countries.csv"
DEFAULT_CATALOG = "recommendations.csv"


def data_path(name: str) -> Path:
    """Absolute path of a bundled data file (package installed on disk)."""
    return Path(str(resources.files("ecorec").joinpath("data", name)))
