"""Recommendation catalog: difficulty-rated tasks keyed by country standing.

The catalog ships as an editable CSV with the exact header
``standing,difficulty,text``. Rows are kept in file order; selection never
reorders them. Lines whose first field starts with ``#`` are comments.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from enum import Enum
from pathlib import Path

from .errors import DuplicateEntry, MalformedRow, UnknownDifficulty, UnknownStanding
from .standing import Standing

CATALOG_HEADER = ("standing", "difficulty", "text")


class Difficulty(str, Enum):
    HARD = "HARD"
    MEDIUM = "MEDIUM"
    EASY = "EASY"


@dataclass(frozen=True)
class Recommendation:
    standing: Standing  # pool: FIRST or THIRD only
    difficulty: Difficulty
    text: str


def load_catalog(text: str) -> list[Recommendation]:
    """Parse catalog CSV text, preserving row order.

    Standing and difficulty tokens are exact-uppercase; anything else raises
    UnknownStanding / UnknownDifficulty with the line number. An identical
    (standing, difficulty, text) row appearing twice raises DuplicateEntry.
    """
    reader = csv.reader(io.StringIO(text))
    try:
        header = next(reader)
    except StopIteration:
        raise MalformedRow("line 1: missing header") from None
    if tuple(header) != CATALOG_HEADER:
        raise MalformedRow(f"line 1: header must be {','.join(CATALOG_HEADER)}")

    entries: list[Recommendation] = []
    seen: set[tuple[str, str, str]] = set()
    for row in reader:
        line = reader.line_num
        if not row or row[0].startswith("#"):
            continue
        if len(row) != 3:
            raise MalformedRow(f"line {line}: expected 3 fields, got {len(row)}")
        standing_text, difficulty_text, text_value = row
        if standing_text not in (Standing.FIRST.value, Standing.THIRD.value):
            raise UnknownStanding(f"line {line}: unknown standing {standing_text!r}")
        try:
            difficulty = Difficulty(difficulty_text)
        except ValueError:
            raise UnknownDifficulty(
                f"line {line}: unknown difficulty {difficulty_text!r}"
            ) from None
        if not text_value:
            raise MalformedRow(f"line {line}: empty recommendation text")
        key = (standing_text, difficulty_text, text_value)
        if key in seen:
            raise DuplicateEntry(f"line {line}: duplicate entry {text_value!r}")
        seen.add(key)
        entries.append(Recommendation(Standing(standing_text), difficulty, text_value))
    return entries


def load_catalog_path(path: str | Path) -> list[Recommendation]:
    return load_catalog(Path(path).read_text(encoding="utf-8"))


def select(
    entries: list[Recommendation], standing: Standing, difficulty: Difficulty
) -> tuple[list[Recommendation], int]:
    """Pick the entries for a standing/difficulty pair, in catalog order.

    AVERAGE draws from both the FIRST and THIRD pools (order-preserving
    union). Returns the picked entries together with their count.
    """
    picked: list[Recommendation] = []
    count = 0
    for entry in entries:
        if entry.difficulty is not difficulty:
            continue
        if standing is Standing.AVERAGE or entry.standing is standing:
            picked.append(entry)
            count += 1
    return picked, count
