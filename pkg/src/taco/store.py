"""Durable per-session persistence of dialogue contexts with optimistic
concurrency. Two backends share one interface: in-memory for tests and an
atomic file-per-session JSON store for runtime."""
from __future__ import annotations

import json
import os
import tempfile
import threading
from dataclasses import replace
from pathlib import Path
from typing import Optional, Protocol

from .errors import StorageError, VersionConflict
from .model import DialogueContext


class SessionStore(Protocol):
    def get(self, session_id: str) -> Optional[DialogueContext]: ...
    def put(self, ctx: DialogueContext) -> int: ...


class MemoryStore:
    """Thread-safe in-memory store."""

    def __init__(self):
        self._contexts: dict[str, DialogueContext] = {}
        self._lock = threading.Lock()

    def get(self, session_id: str) -> Optional[DialogueContext]:
        with self._lock:
            return self._contexts.get(session_id)

    def put(self, ctx: DialogueContext) -> int:
        with self._lock:
            current = self._contexts.get(ctx.session_id)
            stored_version = current.version if current else 0
            if ctx.version != stored_version:
                raise VersionConflict(ctx.session_id, ctx.version, stored_version)
            new = replace(ctx, version=ctx.version + 1)
            self._contexts[ctx.session_id] = new
            return new.version


class FileStore:
    """One JSON file per session under ``<data_dir>/sessions``, replaced
    atomically via a temp-file rename so a killed write never corrupts the
    previous version."""

    def __init__(self, data_dir: str | Path):
        self.root = Path(data_dir) / "sessions"
        self.root.mkdir(parents=True, exist_ok=True)
        self._lock = threading.Lock()

    def _path(self, session_id: str) -> Path:
        safe = "".join(c if c.isalnum() or c in "-_" else "_" for c in session_id)
        return self.root / f"{safe}.json"

    def get(self, session_id: str) -> Optional[DialogueContext]:
        path = self._path(session_id)
        if not path.exists():
            return None
        try:
            return DialogueContext.from_dict(json.loads(path.read_text()))
        except (OSError, json.JSONDecodeError, KeyError) as exc:
            raise StorageError(f"{path}: {exc}")

    def put(self, ctx: DialogueContext) -> int:
        with self._lock:
            current = self.get(ctx.session_id)
            stored_version = current.version if current else 0
            if ctx.version != stored_version:
                raise VersionConflict(ctx.session_id, ctx.version, stored_version)
            new = replace(ctx, version=ctx.version + 1)
            path = self._path(ctx.session_id)
            try:
                fd, tmp_name = tempfile.mkstemp(dir=self.root, suffix=".tmp")
                with os.fdopen(fd, "w") as fh:
                    json.dump(new.to_dict(), fh)
                    fh.flush()
                    os.fsync(fh.fileno())
                os.replace(tmp_name, path)
            except OSError as exc:
                raise StorageError(f"{path}: {exc}")
            return new.version
