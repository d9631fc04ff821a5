"""Domain exceptions shared across the package.

Every error carries a stable machine-readable ``code`` so the HTTP layer and
the CLI can report failures uniformly without matching on message text.
"""


class EcorecError(Exception):
    """Base class for all domain errors."""

    code = "error"


class MalformedRow(EcorecError):
    code = "malformed_row"


class OutOfRange(EcorecError):
    code = "out_of_range"


class DuplicateCountry(EcorecError):
    code = "duplicate_country"


class CountryNotFound(EcorecError):
    code = "country_not_found"


class EmptyDataset(EcorecError):
    code = "empty_dataset"


class UnknownStanding(EcorecError):
    code = "unknown_standing"


class UnknownDifficulty(EcorecError):
    code = "unknown_difficulty"


class DuplicateEntry(EcorecError):
    code = "duplicate_entry"


class WrongState(EcorecError):
    code = "wrong_state"


class InvalidDifficulty(EcorecError):
    code = "invalid_difficulty"


class IndexOutOfRange(EcorecError):
    code = "index_out_of_range"


class StoreUnavailable(EcorecError):
    code = "store_unavailable"


class UnknownSession(EcorecError):
    code = "unknown_session"


class DegenerateTable(EcorecError):
    code = "degenerate_table"


class EmptyWord(EcorecError):
    code = "empty_word"
