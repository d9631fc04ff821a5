"""Session persistence: one JSON document per session id.

Writes go to a temp file in the store directory followed by an atomic
rename, so a crash mid-write never corrupts a previously saved session.
A SessionManager serializes all operations per session id, which makes it
safe to drive one session from concurrent callers.
"""

from __future__ import annotations

import json
import os
import re
import tempfile
import threading
from pathlib import Path
from typing import Any, Callable, TypeVar

from .catalog import Difficulty
from .countries import CountryRecord
from .errors import StoreUnavailable, UnknownSession
from .session import Session, SessionState, TaskEntry, new_session
from .standing import Standing, StandingResult

_ID_RE = re.compile(r"^[A-Za-z0-9_-]+$")

T = TypeVar("T")


def _encode(session: Session) -> dict[str, Any]:
    return {
        "id": session.id,
        "state": session.state.value,
        "country": None
        if session.country is None
        else {
            "name": session.country.name,
            "mismanaged_share_pct": session.country.mismanaged_share_pct,
            "waste_per_capita_tonnes": session.country.waste_per_capita_tonnes,
        },
        "standing": None
        if session.standing is None
        else {
            "standing": session.standing.standing.value,
            "short_label": session.standing.short_label,
            "long_label": session.standing.long_label,
            "reason": session.standing.reason,
        },
        "difficulty": None if session.difficulty is None else session.difficulty.value,
        "tasks": [
            {"text": task.text, "difficulty": task.difficulty.value, "mark": task.mark}
            for task in session.tasks
        ],
        "lifetime_points": session.lifetime_points,
        "run_base_points": session.run_base_points,
    }


def _decode(document: dict[str, Any]) -> Session:
    country = document["country"]
    standing = document["standing"]
    return Session(
        id=document["id"],
        state=SessionState(document["state"]),
        country=None if country is None else CountryRecord(**country),
        standing=None
        if standing is None
        else StandingResult(
            standing=Standing(standing["standing"]),
            short_label=standing["short_label"],
            long_label=standing["long_label"],
            reason=standing["reason"],
        ),
        difficulty=None
        if document["difficulty"] is None
        else Difficulty(document["difficulty"]),
        tasks=[
            TaskEntry(text=t["text"], difficulty=Difficulty(t["difficulty"]), mark=t["mark"])
            for t in document["tasks"]
        ],
        lifetime_points=document["lifetime_points"],
        run_base_points=document["run_base_points"],
    )


class SessionStore:
    """Directory of per-session JSON documents."""

    def __init__(self, root: str | Path):
        self.root = Path(root)

    def _path(self, session_id: str) -> Path:
        if not _ID_RE.match(session_id):
            raise UnknownSession(f"no session with id {session_id!r}")
        return self.root / f"{session_id}.json"

    def persist(self, session: Session) -> None:
        path = self._path(session.id)
        try:
            self.root.mkdir(parents=True, exist_ok=True)
            fd, tmp_name = tempfile.mkstemp(dir=self.root, suffix=".tmp")
            try:
                with os.fdopen(fd, "w", encoding="utf-8") as handle:
                    json.dump(_encode(session), handle)
                os.replace(tmp_name, path)
            except BaseException:
                os.unlink(tmp_name)
                raise
        except OSError as exc:
            raise StoreUnavailable(f"cannot write session store: {exc}") from exc

    def restore(self, session_id: str) -> Session:
        path = self._path(session_id)
        try:
            text = path.read_text(encoding="utf-8")
        except FileNotFoundError:
            raise UnknownSession(f"no session with id {session_id!r}") from None
        except OSError as exc:
            raise StoreUnavailable(f"cannot read session store: {exc}") from exc
        try:
            return _decode(json.loads(text))
        except (KeyError, TypeError, ValueError) as exc:
            raise StoreUnavailable(f"corrupt session document {session_id!r}: {exc}") from exc

    def exists(self, session_id: str) -> bool:
        return _ID_RE.match(session_id) is not None and self._path(session_id).exists()


class SessionManager:
    """Serializes operations per session id and persists every mutation."""

    def __init__(self, store: SessionStore):
        self.store = store
        self._locks: dict[str, threading.Lock] = {}
        self._registry_lock = threading.Lock()

    def _lock_for(self, session_id: str) -> threading.Lock:
        with self._registry_lock:
            if session_id not in self._locks:
                self._locks[session_id] = threading.Lock()
            return self._locks[session_id]

    def create(self) -> Session:
        session = new_session()
        self.store.persist(session)
        return session

    def apply(self, session_id: str, operation: Callable[[Session], T]) -> tuple[Session, T]:
        """Load, run the operation, and persist before returning its result.

        The per-id lock makes load -> mutate -> persist atomic with respect
        to other callers of the same session.
        """
        with self._lock_for(session_id):
            session = self.store.restore(session_id)
            result = operation(session)
            self.store.persist(session)
            return session, result

    def peek(self, session_id: str) -> Session:
        with self._lock_for(session_id):
            return self.store.restore(session_id)
