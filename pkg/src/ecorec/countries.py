"""Country plastic-waste dataset: CSV loading, lookup, and summary statistics.

The dataset is a UTF-8 CSV with the exact header
``country,mismanaged_share_pct,waste_per_capita_tonnes``. Country names are
matched byte-for-byte and case-sensitively; there is no fuzzy matching.
"""

from __future__ import annotations

import csv
import io
import statistics
from dataclasses import dataclass
from pathlib import Path

from .errors import (
    CountryNotFound,
    DuplicateCountry,
    EmptyDataset,
    MalformedRow,
    OutOfRange,
)

DATASET_HEADER = ("country", "mismanaged_share_pct", "waste_per_capita_tonnes")

NOT_FOUND_MESSAGE = "Country not found. Remember to type with first letter capital."

METRICS = ("mismanaged_share_pct", "waste_per_capita_tonnes")


@dataclass(frozen=True)
class CountryRecord:
    name: str
    mismanaged_share_pct: float
    waste_per_capita_tonnes: float


@dataclass(frozen=True)
class DatasetSummary:
    mean: float
    minimum: float
    median: float
    maximum: float
    sample_stdev: float | None  # None when only one record (n-1 undefined)


def shortest_decimal(value: float) -> str:
    """Render a float in its shortest exact decimal form (43 -> "43", 31.5 -> "31.5")."""
    value = float(value)
    if value.is_integer():
        return str(int(value))
    return repr(value)


def load_dataset(text: str) -> list[CountryRecord]:
    """Parse dataset CSV text into records, preserving file order.

    Raises MalformedRow / OutOfRange / DuplicateCountry with the offending
    line number in the message.
    """
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise MalformedRow("line 1: missing header") from None
    if tuple(header) != DATASET_HEADER:
        raise MalformedRow(f"line 1: header must be {','.join(DATASET_HEADER)}")

    records: list[CountryRecord] = []
    seen: set[str] = set()
    for row in reader:
        line = reader.line_num
        if not row:
            continue
        if len(row) != 3:
            raise MalformedRow(f"line {line}: expected 3 fields, got {len(row)}")
        name, share_text, capita_text = row
        if not name:
            raise MalformedRow(f"line {line}: empty country name")
        try:
            share = float(share_text)
            capita = float(capita_text)
        except ValueError:
            raise MalformedRow(f"line {line}: non-numeric value") from None
        if not 0.0 <= share <= 100.0:
            raise OutOfRange(f"line {line}: mismanaged_share_pct must be within [0, 100]")
        if not capita >= 0.0:
            raise OutOfRange(f"line {line}: waste_per_capita_tonnes must be >= 0")
        if name in seen:
            raise DuplicateCountry(f"line {line}: duplicate country {name!r}")
        seen.add(name)
        records.append(CountryRecord(name, share, capita))
    return records


def load_dataset_path(path: str | Path) -> list[CountryRecord]:
    return load_dataset(Path(path).read_text(encoding="utf-8"))


def dump_dataset(records: list[CountryRecord]) -> str:
    """Serialize records back to dataset CSV (inverse of load_dataset)."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(DATASET_HEADER)
    for record in records:
        writer.writerow(
            (
                record.name,
                shortest_decimal(record.mismanaged_share_pct),
                shortest_decimal(record.waste_per_capita_tonnes),
            )
        )
    return out.getvalue()


def lookup_country(records: list[CountryRecord], name: str) -> CountryRecord:
    """Exact-name lookup; raises CountryNotFound with the canonical message."""
    for record in records:
        if record.name == name:
            return record
    raise CountryNotFound(NOT_FOUND_MESSAGE)


def summarize(records: list[CountryRecord], metric: str) -> DatasetSummary:
    """Summary statistics (sample stdev, n-1) for one numeric column."""
    if metric not in METRICS:
        raise ValueError(f"unknown metric {metric!r}; expected one of {METRICS}")
    if not records:
        raise EmptyDataset("cannot summarize an empty dataset")
    values = [getattr(record, metric) for record in records]
    return DatasetSummary(
        mean=statistics.fmean(values),
        minimum=min(values),
        median=statistics.median(values),
        maximum=max(values),
        sample_stdev=statistics.stdev(values) if len(values) > 1 else None,
    )
