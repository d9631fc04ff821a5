from __future__ import annotations

from pathlib import Path

import pytest

from ecorec.catalog import Recommendation, load_catalog_path
from ecorec.countries import CountryRecord, load_dataset_path
from ecorec.resources import data_path

FIXTURES = Path(__file__).parent / "fixtures"

# One line per acceptance criterion in the terminal summary.
_acceptance_results: dict[str, str] = {}


def pytest_runtest_logreport(report: pytest.TestReport) -> None:
    if "test_acceptance.py" not in report.nodeid:
        return
    name = report.nodeid.split("::")[-1]
    if report.when == "call":
        _acceptance_results[name] = (
            "SKIP" if report.skipped else ("PASS" if report.passed else "FAIL")
        )
    elif report.when == "setup" and (report.skipped or report.failed):
        _acceptance_results[name] = "SKIP" if report.skipped else "FAIL"


def pytest_terminal_summary(terminalreporter) -> None:
    if not _acceptance_results:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for name, outcome in _acceptance_results.items():
        terminalreporter.write_line(f"{outcome}: {name}")


@pytest.fixture(scope="session")
def default_dataset() -> list[CountryRecord]:
    return load_dataset_path(data_path("countries.csv"))


@pytest.fixture(scope="session")
def sample26() -> list[CountryRecord]:
    return load_dataset_path(data_path("sample26.csv"))


@pytest.fixture(scope="session")
def seeded_catalog() -> list[Recommendation]:
    return load_catalog_path(data_path("recommendations.csv"))
