"""Case-aware word counts and a chi-squared test of independence.

Tokens are maximal runs of alphanumeric characters. The merged count of a
keyword deliberately mirrors a case-sensitive word-cloud workflow: it adds the
occurrences of the lowercase form and of the first-letter-capitalized form,
and nothing else (an all-caps form is a different token and is not counted).

The chi-squared test uses expected = row_total * col_total / grand_total,
per-cell components (O - E)^2 / E, df = (rows-1)*(cols-1), and the exact
tail probability Q(df/2, statistic/2). No continuity correction is applied.
"""

from __future__ import annotations

import csv
import io
import re
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .errors import DegenerateTable, EmptyWord, MalformedRow
from .special import chi_square_survival

SIGNIFICANCE_LEVEL = 0.05

# Alphanumeric runs: word characters minus underscore, Unicode-aware.
_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)


def tokenize(text: str) -> list[str]:
    """Split text into maximal alphanumeric runs, in order."""
    return _TOKEN_RE.findall(text)


def count_word_merged(text: str, word: str) -> int:
    """Count a lowercase keyword plus its first-letter-capitalized form.

    "government Government GOVERNMENT" counts 2 for "government": the
    all-caps form is excluded by construction.
    """
    if not word:
        raise EmptyWord("keyword must be non-empty")
    if word != word.lower():
        raise ValueError("keyword must be lowercase")
    counts = Counter(tokenize(text))
    capitalized = word[0].upper() + word[1:]
    if capitalized == word:  # leading digit: both forms are the same token
        return counts[word]
    return counts[word] + counts[capitalized]


@dataclass(frozen=True)
class KeywordGroup:
    label: str
    words: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.label:
            raise ValueError("group label must be non-empty")
        if not self.words:
            raise ValueError("group must contain at least one word")
        for word in self.words:
            if not word:
                raise EmptyWord("keyword must be non-empty")
            if word != word.lower() or len(tokenize(word)) != 1 or tokenize(word)[0] != word:
                raise ValueError(f"keyword must be a single lowercase token: {word!r}")


def count_group(text: str, group: KeywordGroup) -> int:
    """Sum of merged counts over the group's keywords."""
    return sum(count_word_merged(text, word) for word in group.words)


def parse_keyword_groups(text: str) -> list[KeywordGroup]:
    """Parse group definitions: one ``label: word, word, ...`` per line.

    Blank lines and lines starting with ``#`` are ignored.
    """
    groups: list[KeywordGroup] = []
    for number, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        label, sep, words_part = line.partition(":")
        if not sep:
            raise MalformedRow(f"line {number}: expected 'label: word, word, ...'")
        words = tuple(w.strip() for w in words_part.split(",") if w.strip())
        try:
            groups.append(KeywordGroup(label=label.strip(), words=words))
        except ValueError as exc:
            raise MalformedRow(f"line {number}: {exc}") from None
    return groups


def load_keyword_groups(path: str | Path) -> list[KeywordGroup]:
    return parse_keyword_groups(Path(path).read_text(encoding="utf-8"))


@dataclass(frozen=True)
class ContingencyTable:
    observed: tuple[tuple[int, ...], ...]
    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]

    def __post_init__(self) -> None:
        rows = len(self.observed)
        if rows < 2:
            raise ValueError("table needs at least 2 rows")
        cols = len(self.observed[0])
        if cols < 2:
            raise ValueError("table needs at least 2 columns")
        for row in self.observed:
            if len(row) != cols:
                raise ValueError("table rows must have equal length")
            for value in row:
                if not isinstance(value, int) or isinstance(value, bool) or value < 0:
                    raise ValueError("observed counts must be non-negative integers")
        if len(self.row_labels) != rows or len(self.col_labels) != cols:
            raise ValueError("label counts must match table dimensions")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.observed), len(self.observed[0])


@dataclass(frozen=True)
class ChiSquareResult:
    table: ContingencyTable
    expected: np.ndarray
    components: np.ndarray
    statistic: float
    df: int
    p_value: float
    significant_at_5pct: bool


def contingency_from_csv(text: str) -> ContingencyTable:
    """Parse a contingency CSV: header = corner cell + column labels, then
    one row label + integer counts per line."""
    reader = csv.reader(io.StringIO(text))
    rows = [row for row in reader if row]
    if len(rows) < 3:
        raise MalformedRow("need a header row and at least 2 data rows")
    header = rows[0]
    if len(header) < 3:
        raise MalformedRow("need at least 2 column labels in the header")
    col_labels = tuple(header[1:])
    row_labels: list[str] = []
    observed: list[tuple[int, ...]] = []
    for number, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise MalformedRow(f"line {number}: expected {len(header)} fields, got {len(row)}")
        label, *cells = row
        if not label:
            raise MalformedRow(f"line {number}: empty row label")
        try:
            counts = tuple(int(cell) for cell in cells)
        except ValueError:
            raise MalformedRow(f"line {number}: counts must be integers") from None
        if any(count < 0 for count in counts):
            raise MalformedRow(f"line {number}: counts must be non-negative")
        row_labels.append(label)
        observed.append(counts)
    return ContingencyTable(
        observed=tuple(observed), row_labels=tuple(row_labels), col_labels=col_labels
    )


def expected_counts(table: ContingencyTable) -> np.ndarray:
    """Expected cell counts under independence: row_total * col_total / grand."""
    observed = np.asarray(table.observed, dtype=float)
    row_totals = observed.sum(axis=1)
    col_totals = observed.sum(axis=0)
    grand = observed.sum()
    if grand <= 0 or (row_totals <= 0).any() or (col_totals <= 0).any():
        raise DegenerateTable("every row and column total must be positive")
    return np.outer(row_totals, col_totals) / grand


def chi_square(table: ContingencyTable) -> ChiSquareResult:
    """Chi-squared test of independence on a contingency table."""
    observed = np.asarray(table.observed, dtype=float)
    expected = expected_counts(table)
    components = (observed - expected) ** 2 / expected
    statistic = float(components.sum())
    rows, cols = table.shape
    df = (rows - 1) * (cols - 1)
    p_value = chi_square_survival(statistic, df)
    return ChiSquareResult(
        table=table,
        expected=expected,
        components=components,
        statistic=statistic,
        df=df,
        p_value=p_value,
        significant_at_5pct=p_value < SIGNIFICANCE_LEVEL,
    )
