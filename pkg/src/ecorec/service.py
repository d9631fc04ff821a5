"""HTTP facade: one endpoint per core operation, uniform JSON envelopes.

Every response body is an envelope ``{"status": "ok"|"error", "message"?,
"payload"?}``. Error envelopes carry the module error code and its exact
message and never include a payload. Session mutations are persisted before
the response is sent, so a crash right after a reply never loses points.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path
from typing import Any, Literal

from fastapi import FastAPI, Request
from fastapi.exceptions import RequestValidationError
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import JSONResponse
from pydantic import BaseModel
from starlette.exceptions import HTTPException as StarletteHTTPException

from . import session as dialogue
from .catalog import load_catalog_path
from .countries import load_dataset_path, lookup_country, summarize
from .errors import EcorecError
from .resources import DEFAULT_CATALOG, DEFAULT_DATASET, data_path
from .store import SessionManager, SessionStore
from .session import COUNTRY_RESULT_PREAMBLE
from .textstats import chi_square, contingency_from_csv

_STATUS_BY_CODE = {
    "country_not_found": 404,
    "unknown_session": 404,
    "index_out_of_range": 404,
    "wrong_state": 409,
    "invalid_difficulty": 422,
    "out_of_range": 422,
    "degenerate_table": 422,
    "empty_word": 422,
    "malformed_row": 400,
    "duplicate_country": 400,
    "duplicate_entry": 400,
    "unknown_standing": 400,
    "unknown_difficulty": 400,
    "empty_dataset": 400,
    "store_unavailable": 503,
}


@dataclass(frozen=True)
class ServiceConfig:
    dataset_path: Path
    catalog_path: Path
    store_path: Path

    @staticmethod
    def default(store_path: str | Path = "./sessions") -> "ServiceConfig":
        return ServiceConfig(
            dataset_path=data_path(DEFAULT_DATASET),
            catalog_path=data_path(DEFAULT_CATALOG),
            store_path=Path(store_path),
        )


class CountryBody(BaseModel):
    name: str


class ReplyBody(BaseModel):
    reply: str


class MarkBody(BaseModel):
    mark: str


def _ok(payload: Any = None, message: str | None = None) -> dict[str, Any]:
    envelope: dict[str, Any] = {"status": "ok"}
    if message is not None:
        envelope["message"] = message
    if payload is not None:
        envelope["payload"] = payload
    return envelope


def _error(status_code: int, code: str, message: str) -> JSONResponse:
    return JSONResponse(
        status_code=status_code,
        content={"status": "error", "code": code, "message": message},
    )


def _country_payload(record) -> dict[str, Any]:
    return {
        "name": record.name,
        "mismanaged_share_pct": record.mismanaged_share_pct,
        "waste_per_capita_tonnes": record.waste_per_capita_tonnes,
    }


def _standing_payload(result) -> dict[str, Any]:
    return {
        "standing": result.standing.value,
        "short_label": result.short_label,
        "long_label": result.long_label,
        "reason": result.reason,
    }


def _tasks_payload(session) -> dict[str, Any]:
    return {
        "state": session.state.value,
        "count": len(session.tasks),
        "tasks": [
            {
                "index": index,
                "text": task.text,
                "difficulty": task.difficulty.value,
                "mark": task.mark,
            }
            for index, task in enumerate(session.tasks)
        ],
    }


def create_app(config: ServiceConfig) -> FastAPI:
    dataset = load_dataset_path(config.dataset_path)
    catalog = load_catalog_path(config.catalog_path)
    manager = SessionManager(SessionStore(config.store_path))

    app = FastAPI(title="ecorec", docs_url=None, redoc_url=None)
    app.add_middleware(
        CORSMiddleware, allow_origins=["*"], allow_methods=["*"], allow_headers=["*"]
    )

    @app.exception_handler(EcorecError)
    async def domain_error(_request: Request, exc: EcorecError) -> JSONResponse:
        return _error(_STATUS_BY_CODE.get(exc.code, 400), exc.code, str(exc))

    @app.exception_handler(RequestValidationError)
    async def invalid_request(_request: Request, exc: RequestValidationError) -> JSONResponse:
        return _error(422, "invalid_request", str(exc.errors()[0].get("msg", "invalid request")))

    @app.exception_handler(StarletteHTTPException)
    async def http_error(_request: Request, exc: StarletteHTTPException) -> JSONResponse:
        return _error(exc.status_code, "http_error", str(exc.detail))

    @app.post("/sessions")
    def create_session() -> dict[str, Any]:
        session = manager.create()
        return _ok(
            payload={"id": session.id, "state": session.state.value},
            message=dialogue.PROMPT_COUNTRY,
        )

    @app.post("/sessions/{session_id}/country")
    def submit_country(session_id: str, body: CountryBody) -> dict[str, Any]:
        session, result = manager.apply(
            session_id, lambda s: dialogue.submit_country(s, dataset, body.name)
        )
        return _ok(
            payload={
                "state": session.state.value,
                "country": _country_payload(session.country),
                "standing": _standing_payload(result),
                "next_prompt": dialogue.PROMPT_WANT_RECOMMENDATIONS,
            },
            message=COUNTRY_RESULT_PREAMBLE,
        )

    @app.post("/sessions/{session_id}/answer")
    def answer(session_id: str, body: ReplyBody):
        session, (accepted, message) = manager.apply(
            session_id, lambda s: dialogue.answer_recommendations(s, body.reply)
        )
        if not accepted:
            return _error(422, "invalid_reply", message)
        return _ok(payload={"state": session.state.value}, message=message)

    @app.post("/sessions/{session_id}/difficulty")
    def choose_difficulty(session_id: str, body: ReplyBody) -> dict[str, Any]:
        session, _tasks = manager.apply(
            session_id, lambda s: dialogue.choose_difficulty(s, body.reply, catalog)
        )
        payload = _tasks_payload(session)
        payload["difficulty"] = session.difficulty.value
        return _ok(payload=payload)

    @app.get("/sessions/{session_id}/tasks")
    def list_tasks(session_id: str) -> dict[str, Any]:
        session = manager.peek(session_id)
        return _ok(payload=_tasks_payload(session))

    @app.post("/sessions/{session_id}/tasks/{index}/mark")
    def mark_task(session_id: str, index: int, body: MarkBody) -> dict[str, Any]:
        session, award = manager.apply(
            session_id, lambda s: dialogue.mark_task(s, index, body.mark)
        )
        return _ok(
            payload={
                "index": index,
                "mark": session.tasks[index].mark,
                "award": award,
                "total": dialogue.total_points(session),
            }
        )

    @app.get("/sessions/{session_id}/points")
    def points(session_id: str) -> dict[str, Any]:
        session = manager.peek(session_id)
        return _ok(payload={"total": dialogue.total_points(session)})

    @app.get("/countries/{name}")
    def country(name: str) -> dict[str, Any]:
        record = lookup_country(dataset, name)
        return _ok(payload=_country_payload(record))

    @app.get("/stats/summary")
    def stats_summary(
        metric: Literal["mismanaged_share_pct", "waste_per_capita_tonnes"],
    ) -> dict[str, Any]:
        summary = summarize(dataset, metric)
        return _ok(
            payload={
                "metric": metric,
                "mean": summary.mean,
                "minimum": summary.minimum,
                "median": summary.median,
                "maximum": summary.maximum,
                "sample_stdev": summary.sample_stdev,
            }
        )

    @app.post("/stats/chisq")
    async def stats_chisq(request: Request) -> dict[str, Any]:
        text = (await request.body()).decode("utf-8")
        result = chi_square(contingency_from_csv(text))
        return _ok(
            payload={
                "observed": [list(row) for row in result.table.observed],
                "row_labels": list(result.table.row_labels),
                "col_labels": list(result.table.col_labels),
                "expected": result.expected.tolist(),
                "components": result.components.tolist(),
                "statistic": result.statistic,
                "df": result.df,
                "p_value": result.p_value,
                "significant_at_5pct": result.significant_at_5pct,
            }
        )

    return app
