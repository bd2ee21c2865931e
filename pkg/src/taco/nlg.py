"""Template registry and response composition: variant selection, slot
filling, step and catalog presentation, favorites, and utility
acknowledgements."""
from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from .errors import EmptyFavorites, EmptyVariantList, MissingSlot, UnknownSlot, ValidationError
from .ingest import strip_tip_marker
from .model import (
    CatalogCard,
    DisplayPayload,
    RankedResult,
    StepSegment,
    TaskDocument,
)
from .text import format_duration

PAGE_SIZE = 3

_TOKEN_RE = re.compile(r"\{\{|\}\}|\{([A-Za-z_][A-Za-z0-9_]*)\}")

# responders that fire on most turns must not sound canned
HIGH_FREQUENCY = ("step", "catalog", "help")


@dataclass(frozen=True)
class Template:
    text: str
    slots: frozenset[str]

    def placeholders(self) -> set[str]:
        return {m.group(1) for m in _TOKEN_RE.finditer(self.text) if m.group(1)}


@dataclass
class TemplateRegistry:
    entries: dict[str, tuple[Template, ...]]
    favorites: tuple[tuple[str, str], ...] = ()

    def variants(self, responder_id: str) -> tuple[Template, ...]:
        if responder_id not in self.entries:
            raise ValidationError(f"unknown responder {responder_id!r}")
        return self.entries[responder_id]

    @classmethod
    def load(cls, path: str | Path) -> "TemplateRegistry":
        doc = json.loads(Path(path).read_text())
        entries = {}
        for responder_id, spec in doc["responders"].items():
            slots = frozenset(spec.get("slots") or ())
            entries[responder_id] = tuple(Template(text, slots) for text in spec["variants"])
        favorites = tuple((f["task_id"], f["blurb"]) for f in doc.get("favorites") or ())
        return cls(entries, favorites)


def lint_registry(registry: TemplateRegistry, required_ids: tuple[str, ...] = ()) -> list[str]:
    """Check slot declarations, variant counts, and the favorites keywords."""
    problems = []
    for responder_id, variants in sorted(registry.entries.items()):
        if not variants:
            problems.append(f"{responder_id}: no variants")
        for template in variants:
            undeclared = template.placeholders() - template.slots
            if undeclared:
                problems.append(f"{responder_id}: undeclared placeholders {sorted(undeclared)}")
    for responder_id in HIGH_FREQUENCY:
        if len(registry.entries.get(responder_id, ())) < 2:
            problems.append(f"{responder_id}: needs at least 2 variants")
    for responder_id in required_ids:
        if responder_id not in registry.entries:
            problems.append(f"missing responder {responder_id!r}")
    for template in registry.entries.get("favorites", ()):
        text = template.text.lower()
        for word in ("recipe", "task", "favorite"):
            if word not in text:
                problems.append(f"favorites: variant missing the word {word!r}")
    return problems


def select_variant(variants: tuple[Template, ...], rng: random.Random) -> Template:
    """Uniform draw; deterministic for a given generator state."""
    if not variants:
        raise EmptyVariantList("no variants to select from")
    return variants[rng.randrange(len(variants))]


def fill_slots(template: Template, values: dict[str, str], strict: bool = True) -> str:
    """Replace declared slots; `{{`/`}}` escape literal braces."""
    if strict:
        for name in values:
            if name not in template.slots:
                raise UnknownSlot(name)

    def substitute(match: re.Match) -> str:
        token = match.group(0)
        if token == "{{":
            return "{"
        if token == "}}":
            return "}"
        name = match.group(1)
        if name not in values:
            raise MissingSlot(name)
        return values[name]

    return _TOKEN_RE.sub(substitute, template.text)


def render(registry: TemplateRegistry, responder_id: str, rng: random.Random,
           values: dict[str, str] | None = None) -> str:
    """Pick a variant of the responder and fill it."""
    template = select_variant(registry.variants(responder_id), rng)
    return fill_slots(template, values or {}, strict=False)


# --- fragments --------------------------------------------------------------

@dataclass(frozen=True)
class Fragment:
    speech: str
    display: Optional[DisplayPayload] = None
    end_session: bool = False


def _step_hint(step: StepSegment, index: int, total: int, rng: random.Random) -> str:
    mentions = []
    if index < total:
        mentions.append(rng.choice(['say "next" to move on', 'say "next" when you are ready']))
    else:
        mentions.append(rng.choice([
            'this is the last step, so say "I\'m done" when you finish',
            'that was everything, so say "I\'m done" to wrap up',
        ]))
    if step.detail or step.tips:
        mentions.append('ask for "more details" to hear the rest')
    if len(mentions) == 2:
        return f"You can {mentions[0]}, or {mentions[1]}."
    return f"You can {mentions[0]}."


def render_step(step: StepSegment, index: int, total: int, rng: random.Random,
                registry: TemplateRegistry, title: str = "") -> Fragment:
    """Indexed step speech with one suggested-command hint and a step card."""
    if not 1 <= index <= total:
        raise ValidationError("step index out of range")
    prefix = render(registry, "step", rng, {"index": str(index), "total": str(total)})
    speech = f"{prefix} {step.instruction} {_step_hint(step, index, total, rng)}"
    display = DisplayPayload(
        kind="step", title=title, body=step.instruction,
        step_index=index, step_total=total,
        has_detail=step.detail is not None, has_tips=step.tips is not None,
    )
    return Fragment(speech=speech, display=display)


def render_step_part(step: StepSegment, index: int, total: int, part: str,
                     rng: random.Random, registry: TemplateRegistry, title: str = "") -> Fragment:
    """Speak the detail or tips part of the current step."""
    text = step.detail if part == "detail" else step.tips
    if text is None:
        raise ValidationError(f"step has no {part}")
    spoken = strip_tip_marker(text)
    lead = render(registry, "step_detail" if part == "detail" else "step_tips", rng)
    display = DisplayPayload(kind="step", title=title, body=spoken,
                             step_index=index, step_total=total,
                             has_detail=step.detail is not None,
                             has_tips=step.tips is not None)
    return Fragment(speech=f"{lead} {spoken}", display=display)


_ORDINALS = ("First", "Second", "Third")


def _metadata_clause(doc: TaskDocument) -> str:
    clauses = []
    if doc.rating is not None:
        clauses.append(f"rated {doc.rating:g} stars")
    if doc.estimated_time is not None:
        clauses.append(f"about {doc.estimated_time} minutes")
    if not clauses:
        return ""
    return " (" + ", ".join(clauses) + ")"


def render_catalog(result: RankedResult, page: int, corpus: dict[str, TaskDocument],
                   rng: random.Random, registry: TemplateRegistry) -> Fragment:
    """Enumerate up to three result titles with metadata; mention paging
    commands when they apply."""
    total = len(result.candidates)
    if total == 0:
        return Fragment(speech=render(registry, "no_results", rng))
    start = page * PAGE_SIZE
    visible = result.candidates[start : start + PAGE_SIZE]
    lead = render(registry, "catalog", rng, {"count": str(total)})
    parts = [lead]
    cards = []
    for position, candidate in enumerate(visible):
        doc = corpus[candidate.doc_id]
        parts.append(f"{_ORDINALS[position]}: {doc.title}{_metadata_clause(doc)}.")
        cards.append(CatalogCard(
            index=position + 1, task_id=doc.id, title=doc.title,
            rating=doc.rating, estimated_time=doc.estimated_time,
        ))
    has_more = start + PAGE_SIZE < total
    has_less = page > 0
    if has_more and has_less:
        parts.append('Say "more" or "less" to browse, or pick one by number.')
    elif has_more:
        parts.append('Say "more" to see other options, or pick one by number.')
    elif has_less:
        parts.append('Say "less" to go back, or pick one by number.')
    else:
        parts.append("Pick one by number, or ask for something else.")
    display = DisplayPayload(kind="catalog", cards=tuple(cards),
                             has_more=has_more, has_less=has_less)
    return Fragment(speech=" ".join(parts), display=display)


def render_favorites(registry: TemplateRegistry, rng: random.Random) -> Fragment:
    """Introduce up to three curated tasks with their blurbs."""
    if not registry.favorites:
        raise EmptyFavorites("no curated favorites configured")
    count = min(3, len(registry.favorites))
    indices = sorted(rng.sample(range(len(registry.favorites)), count))
    chosen = [registry.favorites[i] for i in indices]
    lead = render(registry, "favorites", rng)
    blurbs = " ".join(blurb for _, blurb in chosen)
    return Fragment(speech=f"{lead} {blurbs}")


def render_utility_ack(kind: str, registry: TemplateRegistry, rng: random.Random,
                       item: str = "", seconds: float | None = None,
                       ok: bool = True) -> Fragment:
    """Acknowledge a completed (or failed) list/timer action by name."""
    if not ok:
        return Fragment(speech=render(registry, f"{kind}_miss", rng, {"item": item}))
    values = {"item": item}
    if seconds is not None:
        values["duration"] = format_duration(seconds)
    return Fragment(speech=render(registry, f"{kind}_ack", rng, values))


def greet(hour: int, registry: TemplateRegistry, rng: random.Random) -> Fragment:
    """Daypart greeting (morning from 5, afternoon from 12, evening from 18)."""
    if not 0 <= hour < 24:
        raise ValidationError("hour must be in [0, 24)")
    if 5 <= hour < 12:
        daypart = "morning"
    elif 12 <= hour < 18:
        daypart = "afternoon"
    else:
        daypart = "evening"
    speech = render(registry, "greeting", rng, {"daypart": daypart})
    return Fragment(speech=speech)
