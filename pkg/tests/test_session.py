from __future__ import annotations

import copy
import random

import pytest

from ecorec.catalog import Difficulty
from ecorec.errors import (
    CountryNotFound,
    IndexOutOfRange,
    InvalidDifficulty,
    WrongState,
)
from ecorec.session import (
    MSG_ASK_DIFFICULTY,
    MSG_GOODBYE,
    MSG_NO_RECOMMENDATIONS,
    MSG_YES_NO_ONLY,
    POINT_VALUES,
    Session,
    SessionState,
    TaskEntry,
    answer_recommendations,
    choose_difficulty,
    mark_task,
    new_session,
    submit_country,
    total_points,
)
from ecorec.standing import Standing


def session_at_yes_no(default_dataset, country: str = "Mexico") -> Session:
    session = new_session()
    submit_country(session, default_dataset, country)
    return session


def session_with_tasks(default_dataset, seeded_catalog, country="Mexico", difficulty="EASY"):
    session = session_at_yes_no(default_dataset, country)
    answer_recommendations(session, "YES")
    choose_difficulty(session, difficulty, seeded_catalog)
    return session


def test_new_session_shape() -> None:
    session = new_session()
    assert session.state is SessionState.AWAITING_COUNTRY
    assert session.country is None and session.standing is None
    assert session.difficulty is None and session.tasks == []
    assert session.lifetime_points == 0


def test_submit_country_success(default_dataset) -> None:
    session = new_session()
    result = submit_country(session, default_dataset, "Mexico")
    assert result.standing is Standing.FIRST
    assert session.state is SessionState.AWAITING_YES_NO
    assert session.country.name == "Mexico"
    assert session.standing is result


def test_submit_country_failure_is_a_no_op(default_dataset) -> None:
    session = new_session()
    snapshot = copy.deepcopy(session)
    with pytest.raises(CountryNotFound):
        submit_country(session, default_dataset, "mexico")
    assert session == snapshot


def test_submit_country_wrong_state(default_dataset) -> None:
    session = session_at_yes_no(default_dataset)
    with pytest.raises(WrongState):
        submit_country(session, default_dataset, "Congo")


def test_answer_yes(default_dataset) -> None:
    session = session_at_yes_no(default_dataset)
    assert answer_recommendations(session, "YES") == (True, MSG_ASK_DIFFICULTY)
    assert session.state is SessionState.AWAITING_DIFFICULTY


def test_answer_no_terminates(default_dataset) -> None:
    session = session_at_yes_no(default_dataset)
    assert answer_recommendations(session, "NO") == (True, MSG_GOODBYE)
    assert session.state is SessionState.TERMINATED


def test_answer_other_replies_rejected_without_side_effects(default_dataset) -> None:
    session = session_at_yes_no(default_dataset)
    snapshot = copy.deepcopy(session)
    for reply in ("yeet", "no", "yes", "Yes", " YES", "YES ", ""):
        assert answer_recommendations(session, reply) == (False, MSG_YES_NO_ONLY)
        assert session == snapshot


def test_answer_wrong_state(default_dataset) -> None:
    session = new_session()
    with pytest.raises(WrongState):
        answer_recommendations(session, "YES")


def test_terminated_is_absorbing(default_dataset, seeded_catalog) -> None:
    session = session_at_yes_no(default_dataset)
    answer_recommendations(session, "NO")
    with pytest.raises(WrongState):
        submit_country(session, default_dataset, "Congo")
    with pytest.raises(WrongState):
        answer_recommendations(session, "YES")
    with pytest.raises(WrongState):
        choose_difficulty(session, "EASY", seeded_catalog)
    with pytest.raises(WrongState):
        mark_task(session, 0, "O")


def test_choose_difficulty_issues_tasks(default_dataset, seeded_catalog) -> None:
    session = session_with_tasks(default_dataset, seeded_catalog, difficulty="EASY")
    assert session.state is SessionState.TASKS_ISSUED
    assert session.difficulty is Difficulty.EASY
    assert len(session.tasks) == 4
    assert all(task.mark == "X" for task in session.tasks)
    assert session.tasks[0].text == "Use a reusable straw instead of a plastic straw"


def test_choose_difficulty_rejects_other_tokens(default_dataset, seeded_catalog) -> None:
    session = session_at_yes_no(default_dataset)
    answer_recommendations(session, "YES")
    snapshot = copy.deepcopy(session)
    for reply in ("YES", "easy", "Hard", "", "MEDIUM "):
        with pytest.raises(InvalidDifficulty) as excinfo:
            choose_difficulty(session, reply, seeded_catalog)
        assert str(excinfo.value) == MSG_NO_RECOMMENDATIONS
        assert session == snapshot
    assert session.tasks == []


def test_choose_difficulty_wrong_state(default_dataset, seeded_catalog) -> None:
    session = session_at_yes_no(default_dataset)
    with pytest.raises(WrongState):
        choose_difficulty(session, "EASY", seeded_catalog)


def test_choose_difficulty_empty_catalog_issues_zero_tasks(default_dataset) -> None:
    session = session_at_yes_no(default_dataset)
    answer_recommendations(session, "YES")
    tasks = choose_difficulty(session, "HARD", [])
    assert tasks == [] and session.state is SessionState.TASKS_ISSUED


def test_average_standing_draws_from_both_pools(default_dataset, seeded_catalog) -> None:
    session = session_with_tasks(
        default_dataset, seeded_catalog, country="Bulgaria", difficulty="EASY"
    )
    assert len(session.tasks) == 6  # 4 FIRST + 2 THIRD


def test_point_awards_golden_table(default_dataset, seeded_catalog) -> None:
    for difficulty, mark, expected in (
        ("HARD", "O", 10),
        ("HARD", "X", 0),
        ("MEDIUM", "O", 5),
        ("EASY", "O", 1),
        ("EASY", "X", 0),
    ):
        session = session_with_tasks(default_dataset, seeded_catalog, difficulty=difficulty)
        assert mark_task(session, 0, mark) == expected
        assert total_points(session) == expected


def test_mark_normalizes_non_o_marks(default_dataset, seeded_catalog) -> None:
    session = session_with_tasks(default_dataset, seeded_catalog)
    for mark in ("x", "o", "", "DONE", "0"):
        assert mark_task(session, 0, mark) == 0
        assert session.tasks[0].mark == "X"


def test_mark_then_unmark_nets_zero(default_dataset, seeded_catalog) -> None:
    session = session_with_tasks(default_dataset, seeded_catalog)
    assert mark_task(session, 0, "O") == 1
    assert total_points(session) == 1
    assert mark_task(session, 0, "X") == 0
    assert total_points(session) == 0
    # marking an already-complete task again does not double-award
    mark_task(session, 1, "O")
    assert mark_task(session, 1, "O") == 1
    assert total_points(session) == 1


def test_mark_index_out_of_range(default_dataset, seeded_catalog) -> None:
    session = session_with_tasks(default_dataset, seeded_catalog)  # 4 tasks
    for index in (-1, 4, 100):
        with pytest.raises(IndexOutOfRange):
            mark_task(session, index, "O")


def test_mark_wrong_state(default_dataset) -> None:
    session = session_at_yes_no(default_dataset)
    with pytest.raises(WrongState):
        mark_task(session, 0, "O")


def test_mixed_list_total(default_dataset, seeded_catalog) -> None:
    session = session_at_yes_no(default_dataset)
    answer_recommendations(session, "YES")
    choose_difficulty(session, "EASY", seeded_catalog)
    # shape the list by hand: HARD/O, MEDIUM/O, EASY/X
    session.tasks = [
        TaskEntry("a", Difficulty.HARD),
        TaskEntry("b", Difficulty.MEDIUM),
        TaskEntry("c", Difficulty.EASY),
    ]
    session.lifetime_points = session.run_base_points
    mark_task(session, 0, "O")
    mark_task(session, 1, "O")
    mark_task(session, 2, "X")
    assert total_points(session) == 15


def test_reissue_locks_in_earned_points(default_dataset, seeded_catalog) -> None:
    session = session_with_tasks(default_dataset, seeded_catalog, difficulty="EASY")
    for index in range(4):
        mark_task(session, index, "O")
    assert total_points(session) == 4
    tasks = choose_difficulty(session, "HARD", seeded_catalog)  # fresh run
    assert len(tasks) == 2 and all(t.mark == "X" for t in tasks)
    assert total_points(session) == 4  # earned points survive the reset
    mark_task(session, 0, "O")
    assert total_points(session) == 14
    # un-marking in the new run cannot take back the previous run's points
    mark_task(session, 0, "X")
    assert total_points(session) == 4


def test_lifetime_equals_base_plus_awards_under_random_marking(
    default_dataset, seeded_catalog
) -> None:
    rng = random.Random(8154)
    for _ in range(200):
        session = session_with_tasks(
            default_dataset,
            seeded_catalog,
            difficulty=rng.choice(["HARD", "MEDIUM", "EASY"]),
        )
        for _ in range(rng.randrange(12)):
            if not session.tasks:
                break
            mark_task(
                session,
                rng.randrange(len(session.tasks)),
                rng.choice(["O", "X", "o", "nope"]),
            )
        brute_force = session.run_base_points + sum(
            POINT_VALUES[t.difficulty] if t.mark == "O" else 0 for t in session.tasks
        )
        assert total_points(session) == brute_force
        assert session.lifetime_points == brute_force
