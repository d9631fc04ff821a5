from __future__ import annotations

import json
from pathlib import Path

import pytest
from fastapi.testclient import TestClient

from ecorec.resources import data_path
from ecorec.service import ServiceConfig, create_app
from ecorec.session import COUNTRY_RESULT_PREAMBLE


@pytest.fixture()
def config(tmp_path) -> ServiceConfig:
    return ServiceConfig.default(store_path=tmp_path / "sessions")


@pytest.fixture()
def client(config) -> TestClient:
    return TestClient(create_app(config), raise_server_exceptions=False)


def create_session(client) -> str:
    body = client.post("/sessions").json()
    assert body["status"] == "ok"
    return body["payload"]["id"]


def walk_to_tasks(client, country: str = "Mexico", difficulty: str = "EASY") -> str:
    session_id = create_session(client)
    client.post(f"/sessions/{session_id}/country", json={"name": country})
    client.post(f"/sessions/{session_id}/answer", json={"reply": "YES"})
    client.post(f"/sessions/{session_id}/difficulty", json={"reply": difficulty})
    return session_id


def test_create_session_envelope(client) -> None:
    body = client.post("/sessions").json()
    assert body["status"] == "ok"
    assert set(body) == {"status", "message", "payload"}
    assert body["payload"]["state"] == "AwaitingCountry"


def test_country_success_payload(client) -> None:
    session_id = create_session(client)
    response = client.post(f"/sessions/{session_id}/country", json={"name": "Mexico"})
    assert response.status_code == 200
    body = response.json()
    assert body["message"] == COUNTRY_RESULT_PREAMBLE
    standing = body["payload"]["standing"]
    assert standing["short_label"] == "FIRST"
    assert standing["long_label"] == "First World/Developed Country"
    assert standing["reason"] == (
        "Reason: Percent of inadequately managed plastic is 12% which is lower than 25%."
    )
    assert body["payload"]["state"] == "AwaitingYesNo"


def test_country_not_found_envelope(client) -> None:
    session_id = create_session(client)
    response = client.post(f"/sessions/{session_id}/country", json={"name": "bunny"})
    assert response.status_code == 404
    body = response.json()
    assert body["status"] == "error"
    assert body["code"] == "country_not_found"
    assert body["message"] == "Country not found. Remember to type with first letter capital."
    assert "payload" not in body


def test_answer_rejects_lowercase_no(client) -> None:
    session_id = create_session(client)
    client.post(f"/sessions/{session_id}/country", json={"name": "Mexico"})
    response = client.post(f"/sessions/{session_id}/answer", json={"reply": "no"})
    assert response.status_code == 422
    body = response.json()
    assert body["status"] == "error"
    assert body["message"] == "Please reply with either YES or NO"
    assert "payload" not in body
    # the session did not move
    follow_up = client.post(f"/sessions/{session_id}/answer", json={"reply": "NO"})
    assert follow_up.status_code == 200
    assert follow_up.json()["message"] == "Thank you for using our app! Come again soon :)"
    assert follow_up.json()["payload"]["state"] == "Terminated"


def test_answer_yes_asks_for_difficulty(client) -> None:
    session_id = create_session(client)
    client.post(f"/sessions/{session_id}/country", json={"name": "Congo"})
    response = client.post(f"/sessions/{session_id}/answer", json={"reply": "YES"})
    assert response.json()["message"] == (
        "How difficult would you like your recommendations to be?"
    )
    assert response.json()["payload"]["state"] == "AwaitingDifficulty"


def test_difficulty_lists_tasks(client) -> None:
    session_id = walk_to_tasks(client, difficulty="EASY")
    response = client.get(f"/sessions/{session_id}/tasks")
    payload = response.json()["payload"]
    assert payload["count"] == 4
    assert payload["tasks"][0]["text"] == "Use a reusable straw instead of a plastic straw"
    assert all(task["mark"] == "X" for task in payload["tasks"])


def test_invalid_difficulty_envelope(client) -> None:
    session_id = create_session(client)
    client.post(f"/sessions/{session_id}/country", json={"name": "Mexico"})
    client.post(f"/sessions/{session_id}/answer", json={"reply": "YES"})
    response = client.post(f"/sessions/{session_id}/difficulty", json={"reply": "YES"})
    assert response.status_code == 422
    assert response.json()["code"] == "invalid_difficulty"
    assert response.json()["message"] == "Will not give any recommendations"
    tasks = client.get(f"/sessions/{session_id}/tasks").json()["payload"]
    assert tasks["count"] == 0


def test_mark_and_points_flow(client) -> None:
    session_id = walk_to_tasks(client, difficulty="EASY")
    for index in range(4):
        response = client.post(
            f"/sessions/{session_id}/tasks/{index}/mark", json={"mark": "O"}
        )
        assert response.json()["payload"]["award"] == 1
    points = client.get(f"/sessions/{session_id}/points").json()
    assert points["payload"]["total"] == 4


def test_mark_index_out_of_range(client) -> None:
    session_id = walk_to_tasks(client)
    response = client.post(f"/sessions/{session_id}/tasks/9/mark", json={"mark": "O"})
    assert response.status_code == 404
    assert response.json()["code"] == "index_out_of_range"


def test_wrong_state_maps_to_conflict(client) -> None:
    session_id = create_session(client)
    response = client.post(f"/sessions/{session_id}/answer", json={"reply": "YES"})
    assert response.status_code == 409
    assert response.json()["code"] == "wrong_state"


def test_unknown_session_envelope(client) -> None:
    response = client.get("/sessions/doesnotexist/points")
    assert response.status_code == 404
    assert response.json()["code"] == "unknown_session"


def test_missing_body_field_is_enveloped(client) -> None:
    session_id = create_session(client)
    response = client.post(f"/sessions/{session_id}/country", json={"nom": "Mexico"})
    assert response.status_code == 422
    body = response.json()
    assert body["status"] == "error"
    assert body["code"] == "invalid_request"


def test_unknown_route_is_enveloped(client) -> None:
    response = client.get("/definitely/not/here")
    assert response.status_code == 404
    assert response.json()["status"] == "error"


def test_country_endpoint(client) -> None:
    response = client.get("/countries/Bulgaria")
    assert response.json()["payload"] == {
        "name": "Bulgaria",
        "mismanaged_share_pct": 31.0,
        "waste_per_capita_tonnes": 0.154,
    }
    missing = client.get("/countries/bulgaria")
    assert missing.status_code == 404
    assert missing.json()["message"] == (
        "Country not found. Remember to type with first letter capital."
    )


def test_stats_summary_endpoint(client) -> None:
    response = client.get("/stats/summary", params={"metric": "mismanaged_share_pct"})
    payload = response.json()["payload"]
    assert payload["metric"] == "mismanaged_share_pct"
    assert payload["minimum"] == 0.0 and payload["maximum"] == 87.0
    bad = client.get("/stats/summary", params={"metric": "bogus"})
    assert bad.status_code == 422
    assert bad.json()["status"] == "error"


def test_chisq_endpoint_reproduces_reference_values(client) -> None:
    csv_body = data_path("word_group_counts.csv").read_text(encoding="utf-8")
    response = client.post("/stats/chisq", content=csv_body)
    payload = response.json()["payload"]
    assert payload["statistic"] == pytest.approx(31.4007, abs=1e-3)
    assert payload["df"] == 1
    assert payload["p_value"] < 0.00001
    assert payload["significant_at_5pct"] is True
    assert payload["expected"][0][0] == pytest.approx(31.31, abs=0.01)


def test_chisq_endpoint_rejects_bad_csv(client) -> None:
    response = client.post("/stats/chisq", content="not,a\ntable")
    assert response.status_code == 400
    assert response.json()["code"] == "malformed_row"
    degenerate = ",a,b\nr1,0,0\nr2,1,2\n"
    response = client.post("/stats/chisq", content=degenerate)
    assert response.status_code == 422
    assert response.json()["code"] == "degenerate_table"


def test_restart_preserves_points(config) -> None:
    # same store directory, fresh app objects = a service restart
    first = TestClient(create_app(config), raise_server_exceptions=False)
    session_id = walk_to_tasks(first, difficulty="HARD")
    first.post(f"/sessions/{session_id}/tasks/0/mark", json={"mark": "O"})

    second = TestClient(create_app(config), raise_server_exceptions=False)
    points = second.get(f"/sessions/{session_id}/points").json()
    assert points["payload"]["total"] == 10
    # a second run on the restarted service accumulates
    second.post(f"/sessions/{session_id}/difficulty", json={"reply": "HARD"})
    second.post(f"/sessions/{session_id}/tasks/0/mark", json={"mark": "O"})
    third = TestClient(create_app(config), raise_server_exceptions=False)
    assert third.get(f"/sessions/{session_id}/points").json()["payload"]["total"] == 20


def test_ok_envelopes_never_have_error_fields(client) -> None:
    session_id = walk_to_tasks(client)
    responses = [
        client.get(f"/sessions/{session_id}/tasks"),
        client.get(f"/sessions/{session_id}/points"),
        client.get("/countries/Mexico"),
        client.get("/stats/summary", params={"metric": "waste_per_capita_tonnes"}),
    ]
    for response in responses:
        body = response.json()
        assert response.status_code == 200
        assert body["status"] == "ok"
        assert "code" not in body
