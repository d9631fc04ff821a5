"""Dialogue session: country -> yes/no -> difficulty -> marked tasks -> points.

Replies are exact-string: only the uppercase tokens YES / NO / HARD / MEDIUM /
EASY drive transitions, and only the mark "O" completes a task (any other mark
is stored as "X"). Points accumulate into ``lifetime_points`` across runs; a
new difficulty selection starts a fresh task list while keeping everything
already earned.
"""

from __future__ import annotations

import uuid
from dataclasses import dataclass, field
from enum import Enum

from .catalog import Difficulty, Recommendation, select
from .countries import CountryRecord, lookup_country
from .errors import IndexOutOfRange, InvalidDifficulty, WrongState
from .standing import StandingResult, classify


class SessionState(str, Enum):
    AWAITING_COUNTRY = "AwaitingCountry"
    AWAITING_YES_NO = "AwaitingYesNo"
    AWAITING_DIFFICULTY = "AwaitingDifficulty"
    TASKS_ISSUED = "TasksIssued"
    TERMINATED = "Terminated"


POINT_VALUES = {Difficulty.HARD: 10, Difficulty.MEDIUM: 5, Difficulty.EASY: 1}

COMPLETE_MARK = "O"
INCOMPLETE_MARK = "X"

# Messages printed by the original dialogue, byte-exact.
MSG_ASK_DIFFICULTY = "How difficult would you like your recommendations to be?"
MSG_GOODBYE = "Thank you for using our app! Come again soon :)"
MSG_YES_NO_ONLY = "Please reply with either YES or NO"
MSG_NO_RECOMMENDATIONS = "Will not give any recommendations"

# Shown by the presentation layer above the standing card, byte-exact.
COUNTRY_RESULT_PREAMBLE = "The country that you searched for would be considered: "

# Prompts around the dialogue (describable behavior, wording is ours).
PROMPT_COUNTRY = "Please enter your country."
PROMPT_WANT_RECOMMENDATIONS = "Would you like recommendations to help solve plastic pollution?"


@dataclass
class TaskEntry:
    text: str
    difficulty: Difficulty
    mark: str = INCOMPLETE_MARK

    def award(self) -> int:
        if self.mark == COMPLETE_MARK:
            return POINT_VALUES[self.difficulty]
        return 0


@dataclass
class Session:
    id: str
    state: SessionState = SessionState.AWAITING_COUNTRY
    country: CountryRecord | None = None
    standing: StandingResult | None = None
    difficulty: Difficulty | None = None
    tasks: list[TaskEntry] = field(default_factory=list)
    lifetime_points: int = 0
    # lifetime_points at the moment the current task list was issued; the
    # current run has earned exactly lifetime_points - run_base_points.
    run_base_points: int = 0


def new_session() -> Session:
    return Session(id=uuid.uuid4().hex)


def submit_country(
    session: Session, dataset: list[CountryRecord], name: str
) -> StandingResult:
    """Look up the country and classify it; moves to the yes/no question.

    A failed lookup raises CountryNotFound and leaves the session untouched.
    """
    if session.state is not SessionState.AWAITING_COUNTRY:
        raise WrongState(f"cannot submit a country in state {session.state.value}")
    record = lookup_country(dataset, name)
    result = classify(record.mismanaged_share_pct)
    session.country = record
    session.standing = result
    session.state = SessionState.AWAITING_YES_NO
    return result


def answer_recommendations(session: Session, reply: str) -> tuple[bool, str]:
    """Handle the yes/no question.

    Returns (accepted, message): exactly "YES" moves on to the difficulty
    question, exactly "NO" terminates with the goodbye message, and any other
    reply is rejected with no state change.
    """
    if session.state is not SessionState.AWAITING_YES_NO:
        raise WrongState(f"cannot answer the yes/no question in state {session.state.value}")
    if reply == "YES":
        session.state = SessionState.AWAITING_DIFFICULTY
        return True, MSG_ASK_DIFFICULTY
    if reply == "NO":
        session.state = SessionState.TERMINATED
        return True, MSG_GOODBYE
    return False, MSG_YES_NO_ONLY


def choose_difficulty(
    session: Session, reply: str, catalog: list[Recommendation]
) -> list[TaskEntry]:
    """Issue the task list for an exact difficulty token.

    Allowed when awaiting a difficulty and also after tasks were issued: the
    latter starts a fresh run (previously earned points stay locked in).
    """
    if session.state not in (SessionState.AWAITING_DIFFICULTY, SessionState.TASKS_ISSUED):
        raise WrongState(f"cannot choose a difficulty in state {session.state.value}")
    try:
        difficulty = Difficulty(reply)
    except ValueError:
        raise InvalidDifficulty(MSG_NO_RECOMMENDATIONS) from None
    assert session.standing is not None  # guaranteed past AWAITING_COUNTRY
    entries, _ = select(catalog, session.standing.standing, difficulty)
    session.difficulty = difficulty
    session.tasks = [TaskEntry(text=e.text, difficulty=e.difficulty) for e in entries]
    session.run_base_points = session.lifetime_points
    session.state = SessionState.TASKS_ISSUED
    return session.tasks


def mark_task(session: Session, index: int, mark: str) -> int:
    """Set one task's mark and return its award after the write.

    Any mark other than "O" is stored as "X". Lifetime points move by the
    delta, so un-marking takes back exactly what the mark had earned.
    """
    if session.state is not SessionState.TASKS_ISSUED:
        raise WrongState(f"cannot mark a task in state {session.state.value}")
    if not 0 <= index < len(session.tasks):
        raise IndexOutOfRange(f"task index {index} out of range (have {len(session.tasks)})")
    entry = session.tasks[index]
    before = entry.award()
    entry.mark = COMPLETE_MARK if mark == COMPLETE_MARK else INCOMPLETE_MARK
    session.lifetime_points += entry.award() - before
    return entry.award()


def total_points(session: Session) -> int:
    """Points earned in the current task list plus everything carried in.

    The delta accounting in mark_task keeps this equal to run_base_points
    plus the sum of current per-entry awards (checked in the tests).
    """
    return session.lifetime_points
