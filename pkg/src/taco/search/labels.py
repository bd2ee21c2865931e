"""Weak supervision labels for the re-ranker, read from a JSON file."""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from ..errors import ValidationError


@dataclass(frozen=True)
class WeakLabelEntry:
    query: str
    positives: tuple[str, ...]
    negatives: tuple[str, ...]

    def __post_init__(self):
        if len(self.positives) > 3:
            raise ValidationError(f"{self.query!r}: at most 3 positives per query")
        overlap = set(self.positives) & set(self.negatives)
        if overlap:
            raise ValidationError(f"{self.query!r}: ids in both positives and negatives: {sorted(overlap)}")


@dataclass(frozen=True)
class WeakLabelSet:
    entries: tuple[WeakLabelEntry, ...]

    def validate_ids(self, known_ids: set[str]) -> None:
        for entry in self.entries:
            for doc_id in entry.positives + entry.negatives:
                if doc_id not in known_ids:
                    raise ValidationError(f"{entry.query!r}: unknown doc id {doc_id!r}")

    def by_query(self) -> dict[str, WeakLabelEntry]:
        return {e.query: e for e in self.entries}


def load_weak_labels(path: str | Path) -> WeakLabelSet:
    records = json.loads(Path(path).read_text())
    entries = tuple(
        WeakLabelEntry(r["query"], tuple(r["positives"]), tuple(r["negatives"]))
        for r in records
    )
    return WeakLabelSet(entries)


def save_weak_labels(labels: WeakLabelSet, path: str | Path) -> None:
    records = [
        {"query": e.query, "positives": list(e.positives), "negatives": list(e.negatives)}
        for e in labels.entries
    ]
    Path(path).write_text(json.dumps(records, indent=1))
