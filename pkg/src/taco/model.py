"""Core domain types: tasks, intents, dialogue states, turn inputs and outputs.

Every type here is an immutable value with a canonical JSON form
(``to_dict`` / ``from_dict``, snake_case field names) shared by the corpus
format, the HTTP API, and the test harness.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from typing import Any, Optional

from .errors import ValidationError

# --- enums (plain strings so the JSON form is the value itself) -----------

COOKING = "cooking"
DIY = "diy"
DOMAINS = (COOKING, DIY)

TASK_SEARCH = "task_search"
TASK_PREPARATION = "task_preparation"
TASK_EXECUTION = "task_execution"
HALT = "halt"
PHASES = (TASK_SEARCH, TASK_PREPARATION, TASK_EXECUTION, HALT)

INSTRUCTION = "instruction"
DETAIL = "detail"
TIPS = "tips"
STEP_PARTS = (INSTRUCTION, DETAIL, TIPS)

PLACEHOLDER_RE = re.compile(r"\{[A-Za-z_][A-Za-z0-9_]*\}")


# --- task content ----------------------------------------------------------

@dataclass(frozen=True)
class StepSegment:
    """One task step split into a short instruction plus optional extras."""

    instruction: str
    detail: Optional[str] = None
    tips: Optional[str] = None

    def __post_init__(self):
        if not self.instruction.strip():
            raise ValidationError("step instruction must be non-empty")
        for name in ("detail", "tips"):
            value = getattr(self, name)
            if value is not None and not value.strip():
                raise ValidationError(f"step {name} must be absent or non-empty")

    def to_dict(self) -> dict:
        return {"instruction": self.instruction, "detail": self.detail, "tips": self.tips}

    @classmethod
    def from_dict(cls, d: dict) -> "StepSegment":
        return cls(d["instruction"], d.get("detail"), d.get("tips"))


@dataclass(frozen=True)
class IngredientLine:
    name: str
    quantity: Optional[str] = None

    def __post_init__(self):
        if not self.name:
            raise ValidationError("ingredient name must be non-empty")
        if self.name != canonical_ingredient(self.name):
            raise ValidationError(f"ingredient name not canonical: {self.name!r}")

    def to_dict(self) -> dict:
        return {"name": self.name, "quantity": self.quantity}

    @classmethod
    def from_dict(cls, d: dict) -> "IngredientLine":
        return cls(canonical_ingredient(d["name"]), d.get("quantity"))


def canonical_ingredient(name: str) -> str:
    """Lowercase, trim, and collapse internal whitespace."""
    return " ".join(name.lower().split())


@dataclass(frozen=True)
class TaskDocument:
    """A searchable cooking or DIY task with segmented steps and FAQ pairs."""

    id: str
    title: str
    domain: str
    steps: tuple[StepSegment, ...]
    rating: Optional[float] = None
    popularity: Optional[int] = None
    estimated_time: Optional[int] = None
    cuisine_tags: frozenset[str] = frozenset()
    diet_tags: frozenset[str] = frozenset()
    ingredients: tuple[IngredientLine, ...] = ()
    faqs: tuple[tuple[str, str], ...] = ()

    def __post_init__(self):
        if self.domain not in DOMAINS:
            raise ValidationError(f"{self.id}: unknown domain {self.domain!r}")
        if not self.steps:
            raise ValidationError(f"{self.id}: steps must be non-empty")
        if self.rating is not None and not 0.0 <= self.rating <= 5.0:
            raise ValidationError(f"{self.id}: rating out of [0, 5]")
        if self.popularity is not None and self.popularity < 0:
            raise ValidationError(f"{self.id}: popularity must be non-negative")
        if self.domain == DIY and (self.cuisine_tags or self.diet_tags):
            raise ValidationError(f"{self.id}: diy documents carry no cuisine/diet tags")
        if self.domain == DIY and self.ingredients:
            raise ValidationError(f"{self.id}: diy documents carry no ingredients")

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "title": self.title,
            "domain": self.domain,
            "rating": self.rating,
            "popularity": self.popularity,
            "estimated_time": self.estimated_time,
            "cuisine_tags": sorted(self.cuisine_tags),
            "diet_tags": sorted(self.diet_tags),
            "ingredients": [i.to_dict() for i in self.ingredients],
            "steps": [s.to_dict() for s in self.steps],
            "faqs": [[q, a] for q, a in self.faqs],
        }

    @classmethod
    def from_dict(cls, d: dict) -> "TaskDocument":
        return cls(
            id=d["id"],
            title=d["title"],
            domain=d["domain"],
            steps=tuple(StepSegment.from_dict(s) for s in d["steps"]),
            rating=d.get("rating"),
            popularity=d.get("popularity"),
            estimated_time=d.get("estimated_time"),
            cuisine_tags=frozenset(d.get("cuisine_tags") or ()),
            diet_tags=frozenset(d.get("diet_tags") or ()),
            ingredients=tuple(IngredientLine.from_dict(i) for i in d.get("ingredients") or ()),
            faqs=tuple((q, a) for q, a in d.get("faqs") or ()),
        )


# --- intents ---------------------------------------------------------------

SENTIMENT = "sentiment"
TASK_REQUEST = "task_request"
NAVIGATION = "navigation"
DETAIL_REQUEST = "detail_request"
TASK_COMPLETE = "task_complete"
STOP = "stop"
REPEAT = "repeat"
HELP = "help"
QUESTION = "question"
LIST = "list"
TIMER = "timer"
IGNORE = "ignore"

INTENT_KINDS = (
    SENTIMENT, TASK_REQUEST, NAVIGATION, DETAIL_REQUEST, TASK_COMPLETE,
    STOP, REPEAT, HELP, QUESTION, LIST, TIMER, IGNORE,
)

AFFIRM = "affirm"
NEGATE = "negate"
NEUTRAL = "neutral"
SENTIMENTS = (AFFIRM, NEGATE, NEUTRAL)

MORE_CHOICE = "more_choice"
LESS_CHOICE = "less_choice"
FORWARD = "forward"
BACKWARD = "backward"
GO_TO_STEP = "go_to_step"
NAV_KINDS = (MORE_CHOICE, LESS_CHOICE, FORWARD, BACKWARD, GO_TO_STEP)

LIST_ACTIONS = ("add", "remove")
TIMER_ACTIONS = ("set", "pause", "resume", "cancel")


@dataclass(frozen=True, order=True)
class NavCommand:
    """A parsed navigation command; count is the step distance or target."""

    kind: str
    count: int = 1

    def __post_init__(self):
        if self.kind not in NAV_KINDS:
            raise ValidationError(f"unknown nav command {self.kind!r}")
        if self.kind in (FORWARD, BACKWARD, GO_TO_STEP) and self.count < 1:
            raise ValidationError("nav step count must be positive")


@dataclass(frozen=True, order=True)
class IntentLabel:
    """One dialogue intent; ``variant`` holds the fine-grained sub-kind."""

    kind: str
    variant: str = ""
    count: int = 0

    def __post_init__(self):
        if self.kind not in INTENT_KINDS:
            raise ValidationError(f"unknown intent kind {self.kind!r}")
        if self.kind == SENTIMENT and self.variant not in SENTIMENTS:
            raise ValidationError(f"bad sentiment {self.variant!r}")
        if self.kind == NAVIGATION:
            # construction goes through nav() so the NavCommand is always parsed
            NavCommand(self.variant, self.count or 1)
        if self.kind == LIST and self.variant not in LIST_ACTIONS:
            raise ValidationError(f"bad list action {self.variant!r}")
        if self.kind == TIMER and self.variant not in TIMER_ACTIONS:
            raise ValidationError(f"bad timer action {self.variant!r}")

    @property
    def key(self) -> str:
        """Granularity used by the allowed-intent and transition tables."""
        if self.kind in (SENTIMENT, NAVIGATION, LIST, TIMER):
            return f"{self.kind}:{self.variant}"
        return self.kind

    @property
    def nav(self) -> NavCommand:
        if self.kind != NAVIGATION:
            raise ValidationError("not a navigation label")
        return NavCommand(self.variant, self.count or 1)

    def encode(self) -> str:
        if self.kind == NAVIGATION:
            if self.variant in (MORE_CHOICE, LESS_CHOICE):
                return f"navigation:{self.variant}"
            return f"navigation:{self.variant}:{self.count}"
        if self.kind in (SENTIMENT, LIST, TIMER):
            return f"{self.kind}:{self.variant}"
        return self.kind

    @classmethod
    def decode(cls, text: str) -> "IntentLabel":
        parts = text.split(":")
        kind = parts[0]
        if kind == NAVIGATION:
            if len(parts) == 2:
                return nav(parts[1])
            if len(parts) == 3:
                return nav(parts[1], int(parts[2]))
        elif kind in (SENTIMENT, LIST, TIMER) and len(parts) == 2:
            return cls(kind, parts[1])
        elif len(parts) == 1:
            return cls(kind)
        raise ValidationError(f"cannot decode intent {text!r}")


def sentiment(polarity: str) -> IntentLabel:
    return IntentLabel(SENTIMENT, polarity)


def nav(kind: str, count: int = 1) -> IntentLabel:
    cmd = NavCommand(kind, count)
    return IntentLabel(NAVIGATION, cmd.kind, cmd.count)


def list_intent(action: str) -> IntentLabel:
    return IntentLabel(LIST, action)


def timer_intent(action: str) -> IntentLabel:
    return IntentLabel(TIMER, action)


@dataclass(frozen=True)
class IntentSet:
    """Multi-label NLU result for one turn."""

    labels: frozenset[IntentLabel]
    raw_utterance: str
    corrected_utterance: str

    def __post_init__(self):
        if not self.labels:
            raise ValidationError("intent set must be non-empty")
        if any(l.kind == IGNORE for l in self.labels) and len(self.labels) > 1:
            raise ValidationError("ignore must be the only label when present")

    def has(self, kind: str) -> bool:
        return any(l.kind == kind for l in self.labels)

    def first(self, kind: str) -> Optional[IntentLabel]:
        for label in sorted(self.labels):
            if label.kind == kind:
                return label
        return None

    def to_dict(self) -> dict:
        return {
            "labels": sorted(l.encode() for l in self.labels),
            "raw_utterance": self.raw_utterance,
            "corrected_utterance": self.corrected_utterance,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "IntentSet":
        return cls(
            frozenset(IntentLabel.decode(t) for t in d["labels"]),
            d["raw_utterance"],
            d["corrected_utterance"],
        )


# --- dialogue states -------------------------------------------------------

WELCOME = "welcome"
CLARIFICATION = "clarification"
CATALOG = "catalog"
COMPARISON = "comparison"
OVERVIEW = "overview"
STEP = "step"
COMPLETED = "completed"
SUB_STATE_KINDS = (WELCOME, CLARIFICATION, CATALOG, COMPARISON, OVERVIEW, STEP, COMPLETED)


@dataclass(frozen=True, order=True)
class SubState:
    kind: str
    page: int = 0
    index: int = 0
    part: str = ""

    def __post_init__(self):
        if self.kind not in SUB_STATE_KINDS:
            raise ValidationError(f"unknown sub-state {self.kind!r}")
        if self.kind == CATALOG and self.page < 0:
            raise ValidationError("catalog page must be non-negative")
        if self.kind == STEP:
            if self.index < 1:
                raise ValidationError("step index is 1-based")
            if self.part not in STEP_PARTS:
                raise ValidationError(f"bad step part {self.part!r}")

    def to_dict(self) -> dict:
        d: dict[str, Any] = {"kind": self.kind}
        if self.kind == CATALOG:
            d["page"] = self.page
        if self.kind == STEP:
            d["index"] = self.index
            d["part"] = self.part
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "SubState":
        return cls(d["kind"], d.get("page", 0), d.get("index", 0), d.get("part", ""))


@dataclass(frozen=True, order=True)
class DialogueState:
    """Position in the hierarchical dialogue machine; equality is structural."""

    phase: str
    sub_state: Optional[SubState] = None
    selected_task: Optional[str] = None

    def __post_init__(self):
        if self.phase not in PHASES:
            raise ValidationError(f"unknown phase {self.phase!r}")
        if self.phase == HALT:
            if self.sub_state is not None:
                raise ValidationError("halt has no sub-state")
            return
        if self.sub_state is None:
            raise ValidationError(f"{self.phase} requires a sub-state")
        allowed = {
            TASK_SEARCH: (WELCOME, CLARIFICATION, CATALOG, COMPARISON),
            TASK_PREPARATION: (OVERVIEW,),
            TASK_EXECUTION: (STEP, COMPLETED),
        }[self.phase]
        if self.sub_state.kind not in allowed:
            raise ValidationError(f"{self.sub_state.kind} is not a {self.phase} sub-state")
        if self.phase in (TASK_PREPARATION, TASK_EXECUTION) and not self.selected_task:
            raise ValidationError(f"{self.phase} requires a selected task")

    @property
    def kind(self) -> str:
        """Abstract node name used by the transition table and graph dump."""
        if self.phase == HALT:
            return HALT
        return self.sub_state.kind

    def to_dict(self) -> dict:
        return {
            "phase": self.phase,
            "sub_state": self.sub_state.to_dict() if self.sub_state else None,
            "selected_task": self.selected_task,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "DialogueState":
        sub = d.get("sub_state")
        return cls(d["phase"], SubState.from_dict(sub) if sub else None, d.get("selected_task"))


def welcome_state() -> DialogueState:
    return DialogueState(TASK_SEARCH, SubState(WELCOME))


def clarification_state() -> DialogueState:
    return DialogueState(TASK_SEARCH, SubState(CLARIFICATION))


def catalog_state(page: int = 0) -> DialogueState:
    return DialogueState(TASK_SEARCH, SubState(CATALOG, page=page))


def comparison_state() -> DialogueState:
    return DialogueState(TASK_SEARCH, SubState(COMPARISON))


def overview_state(task_id: str) -> DialogueState:
    return DialogueState(TASK_PREPARATION, SubState(OVERVIEW), task_id)


def step_state(task_id: str, index: int, part: str = INSTRUCTION) -> DialogueState:
    return DialogueState(TASK_EXECUTION, SubState(STEP, index=index, part=part), task_id)


def completed_state(task_id: str) -> DialogueState:
    return DialogueState(TASK_EXECUTION, SubState(COMPLETED), task_id)


def halt_state() -> DialogueState:
    return DialogueState(HALT)


# --- search results --------------------------------------------------------

@dataclass(frozen=True)
class Candidate:
    doc_id: str
    bm25: float
    rerank: Optional[float] = None

    @property
    def sort_score(self) -> float:
        return self.rerank if self.rerank is not None else self.bm25

    def to_dict(self) -> dict:
        return {"doc_id": self.doc_id, "bm25": self.bm25, "rerank": self.rerank}

    @classmethod
    def from_dict(cls, d: dict) -> "Candidate":
        return cls(d["doc_id"], d["bm25"], d.get("rerank"))


@dataclass(frozen=True)
class RankedResult:
    """Scored candidate tasks for one query, with score provenance."""

    query: str
    expanded_terms: tuple[str, ...]
    candidates: tuple[Candidate, ...]
    constraints_applied: "Clarification"

    def __post_init__(self):
        scores = [c.sort_score for c in self.candidates]
        if any(s != s or s in (float("inf"), float("-inf")) for s in scores):
            raise ValidationError("candidate scores must be finite")
        # reranked candidates form a prefix ordered by rerank score; anything
        # beyond the rerank pool stays in bm25 order after it
        reranked = [c.rerank for c in self.candidates if c.rerank is not None]
        tail = [c.bm25 for c in self.candidates if c.rerank is None]
        if reranked and any(c.rerank is not None for c in self.candidates[len(reranked):]):
            raise ValidationError("reranked candidates must precede bm25-only ones")
        if reranked != sorted(reranked, reverse=True) or tail != sorted(tail, reverse=True):
            raise ValidationError("candidates must be sorted by descending score")

    def to_dict(self) -> dict:
        return {
            "query": self.query,
            "expanded_terms": list(self.expanded_terms),
            "candidates": [c.to_dict() for c in self.candidates],
            "constraints_applied": self.constraints_applied.to_dict(),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "RankedResult":
        return cls(
            d["query"],
            tuple(d["expanded_terms"]),
            tuple(Candidate.from_dict(c) for c in d["candidates"]),
            Clarification.from_dict(d["constraints_applied"]),
        )


@dataclass(frozen=True)
class Clarification:
    """Diet/cuisine constraints gathered by the recipe clarification turn."""

    diet: tuple[str, ...] = ()
    cuisine: tuple[str, ...] = ()

    def is_empty(self) -> bool:
        return not self.diet and not self.cuisine

    def to_dict(self) -> dict:
        return {"diet": list(self.diet), "cuisine": list(self.cuisine)}

    @classmethod
    def from_dict(cls, d: dict) -> "Clarification":
        return cls(tuple(d.get("diet") or ()), tuple(d.get("cuisine") or ()))


# --- timers ----------------------------------------------------------------

TIMER_RUNNING = "running"
TIMER_PAUSED = "paused"
TIMER_CANCELLED = "cancelled"
TIMER_FIRED = "fired"


@dataclass(frozen=True)
class TimerRecord:
    id: str
    duration: float
    started_at: float
    state: str = TIMER_RUNNING
    label: Optional[str] = None
    remaining: Optional[float] = None

    def __post_init__(self):
        if self.state not in (TIMER_RUNNING, TIMER_PAUSED, TIMER_CANCELLED, TIMER_FIRED):
            raise ValidationError(f"bad timer state {self.state!r}")
        if self.state == TIMER_PAUSED:
            if self.remaining is None:
                raise ValidationError("paused timer needs a remaining time")
            if self.remaining > self.duration:
                raise ValidationError("remaining exceeds duration")

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "label": self.label,
            "duration": self.duration,
            "started_at": self.started_at,
            "state": self.state,
            "remaining": self.remaining,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "TimerRecord":
        return cls(d["id"], d["duration"], d["started_at"], d["state"],
                   d.get("label"), d.get("remaining"))


# --- session context -------------------------------------------------------

@dataclass(frozen=True)
class DialogueContext:
    """Per-session state persisted between turns."""

    session_id: str
    state: DialogueState
    state_history: tuple[DialogueState, ...] = ()
    search_results: Optional[RankedResult] = None
    clarification: Optional[Clarification] = None
    shopping_list: tuple[str, ...] = ()
    timers: tuple[TimerRecord, ...] = ()
    turn_count: int = 0
    version: int = 0
    rng_seed: int = 0

    def __post_init__(self):
        if any(s.phase == HALT for s in self.state_history):
            raise ValidationError("state history never contains halt")

    def with_state(self, new_state: DialogueState) -> "DialogueContext":
        """Move to ``new_state``, pushing the old state on any actual change."""
        if new_state == self.state:
            return self
        history = self.state_history
        if self.state.phase != HALT:
            history = history + (self.state,)
        return replace(self, state=new_state, state_history=history)

    def to_dict(self) -> dict:
        return {
            "session_id": self.session_id,
            "state": self.state.to_dict(),
            "state_history": [s.to_dict() for s in self.state_history],
            "search_results": self.search_results.to_dict() if self.search_results else None,
            "clarification": self.clarification.to_dict() if self.clarification else None,
            "shopping_list": list(self.shopping_list),
            "timers": [t.to_dict() for t in self.timers],
            "turn_count": self.turn_count,
            "version": self.version,
            "rng_seed": self.rng_seed,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "DialogueContext":
        return cls(
            session_id=d["session_id"],
            state=DialogueState.from_dict(d["state"]),
            state_history=tuple(DialogueState.from_dict(s) for s in d["state_history"]),
            search_results=RankedResult.from_dict(d["search_results"]) if d.get("search_results") else None,
            clarification=Clarification.from_dict(d["clarification"]) if d.get("clarification") else None,
            shopping_list=tuple(d.get("shopping_list") or ()),
            timers=tuple(TimerRecord.from_dict(t) for t in d.get("timers") or ()),
            turn_count=d.get("turn_count", 0),
            version=d.get("version", 0),
            rng_seed=d.get("rng_seed", 0),
        )


def fresh_context(session_id: str, rng_seed: int = 0) -> DialogueContext:
    return DialogueContext(session_id=session_id, state=welcome_state(), rng_seed=rng_seed)


# --- turn I/O ---------------------------------------------------------------

UTTERANCE = "utterance"
TOUCH = "touch"


@dataclass(frozen=True)
class TurnInput:
    kind: str
    text: str = ""
    args: tuple[tuple[str, str], ...] = ()
    received_at: float = 0.0

    def __post_init__(self):
        if self.kind not in (UTTERANCE, TOUCH):
            raise ValidationError(f"bad input kind {self.kind!r}")
        if self.kind == UTTERANCE and not self.text.strip():
            raise ValidationError("utterance must be non-empty after trimming")

    def to_dict(self) -> dict:
        d: dict[str, Any] = {"kind": self.kind, "received_at": self.received_at}
        if self.kind == UTTERANCE:
            d["text"] = self.text
        else:
            d["args"] = [{"name": n, "value": v} for n, v in self.args]
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "TurnInput":
        if d["kind"] == UTTERANCE:
            return cls(UTTERANCE, text=d["text"], received_at=d.get("received_at", 0.0))
        args = tuple((a["name"], a["value"]) for a in d.get("args") or ())
        return cls(TOUCH, args=args, received_at=d.get("received_at", 0.0))


def utterance_input(text: str, received_at: float = 0.0) -> TurnInput:
    return TurnInput(UTTERANCE, text=text, received_at=received_at)


def touch_input(args: dict[str, str] | list[tuple[str, str]], received_at: float = 0.0) -> TurnInput:
    pairs = tuple(args.items()) if isinstance(args, dict) else tuple(args)
    return TurnInput(TOUCH, args=pairs, received_at=received_at)


# --- display payloads and responses ----------------------------------------

@dataclass(frozen=True)
class CatalogCard:
    index: int
    task_id: str
    title: str
    rating: Optional[float] = None
    estimated_time: Optional[int] = None

    def to_dict(self) -> dict:
        return {"index": self.index, "task_id": self.task_id, "title": self.title,
                "rating": self.rating, "estimated_time": self.estimated_time}


@dataclass(frozen=True)
class DisplayPayload:
    """Structured screen content: a catalog page, a step card, or an info card."""

    kind: str  # catalog | step | info
    cards: tuple[CatalogCard, ...] = ()
    title: str = ""
    body: str = ""
    step_index: int = 0
    step_total: int = 0
    has_more: bool = False
    has_less: bool = False
    has_detail: bool = False
    has_tips: bool = False

    def to_dict(self) -> dict:
        d: dict[str, Any] = {"kind": self.kind}
        if self.kind == "catalog":
            d["cards"] = [c.to_dict() for c in self.cards]
            d["has_more"] = self.has_more
            d["has_less"] = self.has_less
        elif self.kind == "step":
            d.update(title=self.title, body=self.body, step_index=self.step_index,
                     step_total=self.step_total, has_detail=self.has_detail,
                     has_tips=self.has_tips)
        else:
            d.update(title=self.title, body=self.body)
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "DisplayPayload":
        cards = tuple(CatalogCard(**c) for c in d.get("cards") or ())
        return cls(
            kind=d["kind"], cards=cards, title=d.get("title", ""), body=d.get("body", ""),
            step_index=d.get("step_index", 0), step_total=d.get("step_total", 0),
            has_more=d.get("has_more", False), has_less=d.get("has_less", False),
            has_detail=d.get("has_detail", False), has_tips=d.get("has_tips", False),
        )


@dataclass(frozen=True)
class Response:
    """Composed speech plus optional display payload for one turn."""

    speech: str
    display: Optional[DisplayPayload] = None
    end_session: bool = False
    debug: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.speech and not self.end_session:
            raise ValidationError("speech must be non-empty unless the session ends")
        if PLACEHOLDER_RE.search(self.speech):
            raise ValidationError(f"unfilled placeholder in speech: {self.speech!r}")

    def to_dict(self) -> dict:
        return {
            "speech": self.speech,
            "display": self.display.to_dict() if self.display else None,
            "end_session": self.end_session,
            "debug": dict(self.debug),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Response":
        display = DisplayPayload.from_dict(d["display"]) if d.get("display") else None
        return cls(d["speech"], display, d.get("end_session", False), d.get("debug") or {})
