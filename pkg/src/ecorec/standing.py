"""Country standing classification from the mismanaged plastic share.

A share above the upper threshold marks a developing ("third world") country,
below the lower threshold a developed ("first world") one, and anything on or
between the thresholds is in the average range. Label and reason strings are
part of the external contract and must not be reworded.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .countries import shortest_decimal
from .errors import OutOfRange

# Boundary percentages; values on the boundaries classify as AVERAGE.
FIRST_WORLD_BELOW_PCT = 25.0
THIRD_WORLD_ABOVE_PCT = 75.0


class Standing(str, Enum):
    FIRST = "FIRST"
    THIRD = "THIRD"
    AVERAGE = "AVERAGE"


@dataclass(frozen=True)
class StandingResult:
    standing: Standing
    short_label: str | None  # AVERAGE has no short form
    long_label: str
    reason: str


def classify(
    pct: float,
    *,
    lower: float = FIRST_WORLD_BELOW_PCT,
    upper: float = THIRD_WORLD_ABOVE_PCT,
) -> StandingResult:
    """Classify a mismanaged-plastic share (0..100) into a Standing."""
    if not 0.0 <= pct <= 100.0:
        raise OutOfRange("percentage must be within [0, 100]")
    rendered = shortest_decimal(pct)
    prefix = f"Reason: Percent of inadequately managed plastic is {rendered}% which is "
    if pct > upper:
        return StandingResult(
            standing=Standing.THIRD,
            short_label="THIRD",
            long_label="Third World/Developing Country",
            reason=prefix + f"higher than {shortest_decimal(upper)}%.",
        )
    if pct < lower:
        return StandingResult(
            standing=Standing.FIRST,
            short_label="FIRST",
            long_label="First World/Developed Country",
            reason=prefix + f"lower than {shortest_decimal(lower)}%.",
        )
    return StandingResult(
        standing=Standing.AVERAGE,
        short_label=None,
        long_label="In the average range",
        reason=prefix
        + f"between {shortest_decimal(lower)}% and {shortest_decimal(upper)}%.",
    )
