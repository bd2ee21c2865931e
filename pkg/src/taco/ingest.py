"""Corpus loading and validation: task documents, substitution table,
safety blacklists, and the step segmenter.
"""
from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Optional

from .errors import EmptyStep, ParseError, ValidationError
from .model import IngredientLine, StepSegment, TaskDocument, canonical_ingredient
from .text import normalize_ws, split_sentences

TIP_MARKER_RE = re.compile(r"^\s*(tip|tips|note|warning)\s*:\s*", re.IGNORECASE)

DEFAULT_INSTRUCTION_BUDGET = 280


def segment_step(raw_step: str, budget: int = DEFAULT_INSTRUCTION_BUDGET) -> StepSegment:
    """Split raw step text into a short instruction, detail, and tips.

    The instruction is the longest prefix of non-tip sentences that fits the
    length budget (always at least one sentence). Sentences from the first
    tip-marked one onward become tips; anything in between becomes detail.
    Tip sentences keep their marker text so the three parts concatenate back
    to the input.
    """
    if not raw_step.strip():
        raise EmptyStep("blank step text")
    sentences = split_sentences(raw_step)

    instruction_parts = [sentences[0]]
    used = len(sentences[0])
    rest = 1
    for sentence in sentences[1:]:
        if TIP_MARKER_RE.match(sentence):
            break
        if used + 1 + len(sentence) > budget:
            break
        instruction_parts.append(sentence)
        used += 1 + len(sentence)
        rest += 1

    detail_parts: list[str] = []
    tips_parts: list[str] = []
    for sentence in sentences[rest:]:
        if tips_parts or TIP_MARKER_RE.match(sentence):
            tips_parts.append(sentence)
        else:
            detail_parts.append(sentence)

    return StepSegment(
        instruction=" ".join(instruction_parts),
        detail=" ".join(detail_parts) or None,
        tips=" ".join(tips_parts) or None,
    )


def strip_tip_marker(text: str) -> str:
    """Remove a leading tip/note/warning marker for spoken output."""
    return TIP_MARKER_RE.sub("", text, count=1)


def _segment_entry(doc_id: str, entry) -> StepSegment:
    if isinstance(entry, str):
        try:
            return segment_step(entry)
        except EmptyStep:
            raise ValidationError(f"{doc_id}: steps: blank step text")
    if isinstance(entry, dict):
        try:
            return StepSegment.from_dict(entry)
        except (KeyError, ValidationError) as exc:
            raise ValidationError(f"{doc_id}: steps: {exc}")
    raise ValidationError(f"{doc_id}: steps: expected string or object")


def load_corpus(path: str | Path) -> list[TaskDocument]:
    """Load and validate a JSON array of task documents.

    Raw string steps are run through :func:`segment_step`; pre-segmented
    step objects are validated as-is.
    """
    path = Path(path)
    try:
        records = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"{path}: {exc}")
    if not isinstance(records, list):
        raise ParseError(f"{path}: expected a JSON array of documents")

    docs = []
    seen_ids: set[str] = set()
    for record in records:
        doc_id = record.get("id", "<missing id>")
        if doc_id in seen_ids:
            raise ValidationError(f"{doc_id}: duplicate document id")
        seen_ids.add(doc_id)
        raw_steps = record.get("steps") or []
        if not raw_steps:
            raise ValidationError(f"{doc_id}: steps: must be non-empty")
        steps = tuple(_segment_entry(doc_id, s) for s in raw_steps)
        try:
            ingredients = tuple(
                IngredientLine(canonical_ingredient(i["name"]), i.get("quantity"))
                for i in record.get("ingredients") or ()
            )
            doc = TaskDocument(
                id=doc_id,
                title=record["title"],
                domain=record["domain"],
                steps=steps,
                rating=record.get("rating"),
                popularity=record.get("popularity"),
                estimated_time=record.get("estimated_time"),
                cuisine_tags=frozenset(record.get("cuisine_tags") or ()),
                diet_tags=frozenset(record.get("diet_tags") or ()),
                ingredients=ingredients,
                faqs=tuple((q, a) for q, a in record.get("faqs") or ()),
            )
        except KeyError as exc:
            raise ValidationError(f"{doc_id}: missing field {exc}")
        except ValidationError:
            raise
        docs.append(doc)
    return docs


@dataclass(frozen=True)
class SubstitutionTable:
    """Canonical ingredient name -> ordered substitute suggestions."""

    entries: dict[str, tuple[str, ...]]

    def lookup(self, name: str) -> Optional[tuple[str, ...]]:
        return self.entries.get(canonical_ingredient(name))


def load_substitutions(path: str | Path) -> SubstitutionTable:
    path = Path(path)
    try:
        raw = json.loads(path.read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise ParseError(f"{path}: {exc}")
    if not isinstance(raw, dict):
        raise ParseError(f"{path}: expected a JSON object")
    entries: dict[str, tuple[str, ...]] = {}
    for name, suggestions in raw.items():
        if not suggestions:
            raise ValidationError(f"{path}: {name!r}: empty suggestion list")
        entries[canonical_ingredient(name)] = tuple(suggestions)
    return SubstitutionTable(entries)


@dataclass(frozen=True)
class Blacklist:
    """Safety keyword lists, one set per category."""

    dangerous_terms: frozenset[str]
    professional_terms: frozenset[str]
    profanity_terms: frozenset[str]


def _load_phrase_file(path: Path) -> frozenset[str]:
    phrases = set()
    for line in path.read_text().splitlines():
        line = line.split("#", 1)[0]
        phrase = normalize_ws(line.lower())
        if phrase:
            phrases.add(phrase)
    return frozenset(phrases)


def load_blacklist(dangerous: str | Path, professional: str | Path,
                   profanity: str | Path) -> Blacklist:
    """Load one plain-text phrase file per category ('#' starts a comment)."""
    return Blacklist(
        dangerous_terms=_load_phrase_file(Path(dangerous)),
        professional_terms=_load_phrase_file(Path(professional)),
        profanity_terms=_load_phrase_file(Path(profanity)),
    )


def validate_dir(directory: str | Path) -> list[str]:
    """Validate every known data file under a directory; returns problems."""
    directory = Path(directory)
    problems = []
    corpus_path = directory / "corpus.json"
    try:
        docs = load_corpus(corpus_path)
        if not docs:
            problems.append(f"{corpus_path}: corpus is empty")
    except (ParseError, ValidationError) as exc:
        problems.append(str(exc))
    subs_path = directory / "substitutions.json"
    if subs_path.exists():
        try:
            load_substitutions(subs_path)
        except (ParseError, ValidationError) as exc:
            problems.append(str(exc))
    names = ("blacklist_dangerous.txt", "blacklist_professional.txt", "blacklist_profanity.txt")
    paths = [directory / n for n in names]
    missing = [str(p) for p in paths if not p.exists()]
    if missing:
        problems.extend(f"{p}: missing blacklist file" for p in missing)
    else:
        try:
            load_blacklist(*paths)
        except OSError as exc:
            problems.append(str(exc))
    return problems


def corpus_by_id(docs: Iterable[TaskDocument]) -> dict[str, TaskDocument]:
    return {doc.id: doc for doc in docs}
