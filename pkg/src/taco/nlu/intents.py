"""Multi-label intent recognition: an ordered pattern layer backed by
one-vs-rest linear heads over n-gram features, plus the per-state
allowed-intent table used to filter predictions."""
from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional

from ..errors import UnparseableNavigation
from ..model import (
    AFFIRM,
    DETAIL_REQUEST,
    HELP,
    IGNORE,
    LIST,
    NAVIGATION,
    NEGATE,
    NEUTRAL,
    QUESTION,
    REPEAT,
    SENTIMENT,
    STOP,
    TASK_COMPLETE,
    TASK_REQUEST,
    TIMER,
    DialogueState,
    IntentLabel,
    IntentSet,
    list_intent,
    nav,
    sentiment,
    timer_intent,
)
from ..text import normalize_ws, tokenize
from .features import NgramFeaturizer
from .linear import LogisticModel
from .navigation import parse_navigation

GREETING_RE = re.compile(
    r"^\s*(?:hi|hello|hey(?:\s+there)?|hi\s+there|hello\s+there|yo|greetings|howdy"
    r"|good\s+(?:morning|afternoon|evening)|what'?s\s+up)\s*[.!?]*\s*$"
)

# (pattern, intent key), applied in order; all hits are unioned
_PATTERNS: list[tuple[str, str]] = [
    # sentiment
    (r"^(?:oh\s+|ah\s+)?(?:yes|yeah|yep|yup|sure|absolutely|definitely|certainly"
     r"|of\s+course|sounds?\s+(?:good|great)|ok(?:ay)?|alright|all\s+right|perfect"
     r"|great|exactly|correct|right|good|please\s+do|go\s+ahead)\b", "sentiment:affirm"),
    (r"\b(?:let'?s|lets)\s+(?:do\s+it|go|start|begin|cook)\b|\bi'?m\s+ready\b"
     r"|\bgo\s+for\s+it\b|\bwhy\s+not\b|\bstart\s+(?:the\s+)?(?:task|recipe)\b", "sentiment:affirm"),
    (r"\bthe\s+(?:first|second|third|last)\s+(?:one|option|choice|task|recipe)\b"
     r"|\b(?:number|option)\s+(?:one|two|three|\d+)\b"
     r"|^\s*(?:the\s+)?(?:first|second|third)(?:\s+one)?\s*[.!?]?\s*$"
     r"|\bi'?ll\s+(?:take|try|pick|go\s+with)\b|\bi\s+(?:choose|pick|want)\s+(?:the|that|this)\b", "sentiment:affirm"),
    (r"^(?:oh\s+)?(?:no|nope|nah|not\s+really|never\s*mind|negative|not\s+now"
     r"|i\s+don'?t\s+think\s+so)\b", "sentiment:negate"),
    (r"\bi\s+(?:don'?t|do\s+not)\s+(?:want|like|need)\b|\bsomething\s+(?:else|different)\b"
     r"|\bnone\s+of\s+(?:these|those|them)\b|\bnot\s+(?:this|that|these|those)\s+one?s?\b", "sentiment:negate"),
    (r"^(?:maybe|perhaps|possibly|i\s+guess|not\s+sure|i'?m\s+not\s+sure|hmm+"
     r"|i\s+don'?t\s+know|whatever|either\s+way|it\s+depends)\b", "sentiment:neutral"),
    # commands
    (r"\bhow\s+to\s+\w+", "task_request"),
    (r"\b(?:search|look)\s+(?:for\s+|up\s+)?\w+|\bfind\s+(?:me\s+)?\w+"
     r"|\bshow\s+me\s+(?:how\s+)?(?!more\b|less\b|fewer\b)\w+", "task_request"),
    (r"\bi\s+(?:want|would\s+like|wanna|need)\s+to\s+(?:make|cook|bake|build|fix|clean"
     r"|learn|repair|install|grow|remove|know\s+how|wash|paint|hang|organize|sharpen"
     r"|polish|knit|frame|start|patch|care|unclog|mount|replace)\b", "task_request"),
    (r"\brecipes?\s+(?:for|of)\b|\b\w+\s+recipes?\b|\bteach\s+me\b|\bhelp\s+me\s+(?:with\s+)?\w+"
     r"|\bbest\s+way\s+to\s+\w+|\binstructions?\s+for\b", "task_request"),
    (r"\b(?:more\s+)?details?\b|\btell\s+me\s+more\b|\bmore\s+info(?:rmation)?\b"
     r"|\bin\s+detail\b|\bany\s+tips?\b|\bgive\s+me\s+(?:a\s+|the\s+)?tips?\b"
     r"|\belaborate\b|\bexplain\s+(?:that|this|it|more)\b|\bwhat\s+do\s+you\s+mean\b", "detail_request"),
    (r"\b(?:i'?m|i\s+am|we'?re|we\s+are|all)\s+(?:done|finished)\b|\btask\s+complete\b"
     r"|\bi\s+(?:have\s+)?(?:finished|completed)\b|^\s*(?:done|finished)\s*[.!?]?\s*$"
     r"|\bmark\s+(?:it|task)\s+(?:as\s+)?(?:done|complete)\b", "task_complete"),
    (r"^\s*(?:stop|exit|quit|bye|goodbye|good\s+bye)\s*[.!?]?\s*$"
     r"|\b(?:end|stop)\s+(?:the\s+)?(?:conversation|session)\b|\bshut\s+down\b"
     r"|\bturn\s+(?:yourself\s+)?off\b|\bwe'?re\s+done\s+here\b", "stop"),
    # utilities
    (r"\brepeat\b|\bsay\s+(?:that|it)\s+again\b|\bcome\s+again\b|\bone\s+more\s+time\b"
     r"|\bpardon\b|\bdidn'?t\s+(?:hear|catch|get)\s+(?:that|it|you)\b", "repeat"),
    (r"^\s*help\s*[.!?]?\s*$|\bhelp\s+please\b|\bwhat\s+can\s+(?:i|you)\s+(?:say|do)\b"
     r"|\bhow\s+does\s+this\s+work\b|\bi'?m\s+(?:lost|confused|stuck)\b"
     r"|\bwhat\s+are\s+my\s+options\b|\bi\s+need\s+help\b", "help"),
    (r"\?\s*$", "question"),
    (r"^(?:what|when|where|why|who|whose|which)\b", "question"),
    (r"^how\b(?!\s+to\b)", "question"),
    (r"^(?:can|could|should|would|will|do|does|did|is|are|was|were)\s+(?:i|you|we|it|this|that|the|my)\b", "question"),
    (r"\bhow\s+(?:long|much|many|often|hot|warm|high|deep)\b", "question"),
    # list and timer
    (r"\b(?:add|put)\b.+\blist\b", "list:add"),
    (r"\b(?:remove|delete|take)\b.+\b(?:from|off)\b.+\blist\b|\b(?:remove|delete)\b.+\blist\b", "list:remove"),
    (r"\b(?:set|start|create)\b.+\btimer\b|\btimer\s+for\b|\bremind\s+me\s+in\b", "timer:set"),
    (r"\b(?:pause|hold)\b.+\btimer\b", "timer:pause"),
    (r"\b(?:resume|unpause|restart|continue)\b.+\btimer\b", "timer:resume"),
    (r"\b(?:cancel|stop|delete|clear|kill)\b.+\btimer\b|\bturn\s+off\b.+\btimer\b", "timer:cancel"),
]

_NAV_PROBE_RE = re.compile(
    r"\bnext\b|\bback\b|\bbackwards?\b|\bforward\b|\bahead\b|\bprevious\b|\bcontinue\b"
    r"|\bproceed\b|\bskip\b|\bgo\s+on\b|\bmove\s+on\b|\bstep\s+\w+\b|\bmore\b|\bless\b"
    r"|\bfewer\b|\bwhat\s+else\b|\bjump\b|\bpage\b"
)


def default_patterns() -> tuple[tuple[re.Pattern, str], ...]:
    return tuple((re.compile(p), key) for p, key in _PATTERNS)


@dataclass
class IntentModel:
    """Pattern rules plus per-label linear heads and decision thresholds."""

    pattern_rules: tuple[tuple[re.Pattern, str], ...] = field(default_factory=default_patterns)
    featurizer: Optional[NgramFeaturizer] = None
    linear: Optional[LogisticModel] = None
    thresholds: dict[str, float] = field(default_factory=dict)
    default_threshold: float = 0.5
    version: int = 1

    def threshold(self, key: str) -> float:
        return self.thresholds.get(key, self.default_threshold)

    def save(self, path: str | Path) -> None:
        doc = {
            "version": self.version,
            "patterns": [[p.pattern, key] for p, key in self.pattern_rules],
            "thresholds": self.thresholds,
            "default_threshold": self.default_threshold,
            "featurizer": self.featurizer.to_dict() if self.featurizer else None,
            "linear": self.linear.to_dict() if self.linear else None,
        }
        Path(path).write_text(json.dumps(doc))

    @classmethod
    def load(cls, path: str | Path) -> "IntentModel":
        doc = json.loads(Path(path).read_text())
        return cls(
            pattern_rules=tuple((re.compile(p), key) for p, key in doc["patterns"]),
            featurizer=NgramFeaturizer.from_dict(doc["featurizer"]) if doc.get("featurizer") else None,
            linear=LogisticModel.from_dict(doc["linear"]) if doc.get("linear") else None,
            thresholds=doc.get("thresholds", {}),
            default_threshold=doc.get("default_threshold", 0.5),
            version=doc.get("version", 1),
        )


def _label_for_key(key: str, utterance: str) -> Optional[IntentLabel]:
    kind, _, variant = key.partition(":")
    if kind == SENTIMENT:
        return sentiment(variant)
    if kind == LIST:
        return list_intent(variant)
    if kind == TIMER:
        return timer_intent(variant)
    if kind == NAVIGATION:
        try:
            cmd = parse_navigation(utterance)
        except UnparseableNavigation:
            return None
        return nav(cmd.kind, cmd.count)
    return IntentLabel(kind)


def recognize_intents(utterance: str, model: IntentModel) -> IntentSet:
    """Union the pattern hits with linear heads above threshold.

    Sentiment polarities are mutually exclusive (best score wins, a neutral
    default on exact ties); utility intents naming the timer or list suppress
    the navigation and stop readings of shared verbs; an empty union falls
    back to the ignore intent.
    """
    raw = utterance
    norm = normalize_ws(utterance.lower())
    if not tokenize(norm):
        return IntentSet(frozenset({IntentLabel(IGNORE)}), raw, norm)
    if GREETING_RE.match(norm):
        return IntentSet(frozenset({IntentLabel(IGNORE)}), raw, norm)

    scores: dict[str, float] = {}
    for pattern, key in model.pattern_rules:
        if pattern.search(norm):
            scores[key] = 1.0
    if _NAV_PROBE_RE.search(norm):
        try:
            cmd = parse_navigation(norm)
            scores.setdefault(f"{NAVIGATION}:{cmd.kind}", 1.0)
        except UnparseableNavigation:
            pass

    if model.linear is not None and model.featurizer is not None:
        X = model.featurizer.transform([norm])
        probs = model.linear.scores(X)[0]
        for head, p in zip(model.linear.heads, probs):
            if head == IGNORE:
                continue
            if p >= model.threshold(head):
                scores[head] = max(scores.get(head, 0.0), float(p))

    if any(k.startswith((f"{TIMER}:", f"{LIST}:")) for k in scores):
        for key in [k for k in scores if k.startswith(f"{NAVIGATION}:") or k == STOP]:
            del scores[key]
    # "how does this work" is a plea for help, not a question for the QA stack
    if HELP in scores:
        scores.pop(QUESTION, None)

    sentiments = {k: s for k, s in scores.items() if k.startswith(f"{SENTIMENT}:")}
    if len(sentiments) > 1:
        best = max(sentiments.values())
        top = sorted(k for k, s in sentiments.items() if s == best)
        keep = top[0] if len(top) == 1 else f"{SENTIMENT}:{NEUTRAL}"
        for key in sentiments:
            if key != keep:
                scores.pop(key, None)
        scores.setdefault(keep, 1.0)

    labels = set()
    for key in sorted(scores):
        label = _label_for_key(key, norm)
        if label is not None and label.kind != IGNORE:
            labels.add(label)
    if not labels:
        labels = {IntentLabel(IGNORE)}
    return IntentSet(frozenset(labels), raw, norm)


# --- per-state allowed intents ---------------------------------------------

_COMMON = frozenset({
    f"{SENTIMENT}:{AFFIRM}", f"{SENTIMENT}:{NEGATE}", f"{SENTIMENT}:{NEUTRAL}",
    QUESTION, REPEAT, HELP, STOP, IGNORE,
})
_LIST_KEYS = frozenset({f"{LIST}:add", f"{LIST}:remove"})
_TIMER_KEYS = frozenset({f"{TIMER}:set", f"{TIMER}:pause", f"{TIMER}:resume", f"{TIMER}:cancel"})

ALLOWED_INTENTS: dict[str, frozenset[str]] = {
    "welcome": _COMMON | {TASK_REQUEST},
    "clarification": _COMMON | {TASK_REQUEST, f"{NAVIGATION}:backward"},
    "catalog": _COMMON | {
        TASK_REQUEST, DETAIL_REQUEST,
        f"{NAVIGATION}:more_choice", f"{NAVIGATION}:less_choice", f"{NAVIGATION}:backward",
    },
    "comparison": _COMMON | {
        TASK_REQUEST, DETAIL_REQUEST,
        f"{NAVIGATION}:more_choice", f"{NAVIGATION}:less_choice", f"{NAVIGATION}:backward",
    },
    "overview": _COMMON | _LIST_KEYS | {
        TASK_REQUEST, DETAIL_REQUEST, f"{NAVIGATION}:forward", f"{NAVIGATION}:backward",
    },
    "step": _COMMON | _LIST_KEYS | _TIMER_KEYS | {
        DETAIL_REQUEST, TASK_COMPLETE,
        f"{NAVIGATION}:forward", f"{NAVIGATION}:backward", f"{NAVIGATION}:go_to_step",
    },
    "completed": _COMMON | _LIST_KEYS | _TIMER_KEYS | {
        TASK_COMPLETE, f"{NAVIGATION}:backward",
    },
    "halt": frozenset({STOP, IGNORE}),
}


def filter_by_state(intents: IntentSet, state: DialogueState) -> IntentSet:
    """Drop labels the current state does not admit; an emptied set becomes
    the ignore intent."""
    allowed = ALLOWED_INTENTS[state.kind]
    kept = frozenset(l for l in intents.labels if l.key in allowed or l.kind == IGNORE)
    if not kept:
        kept = frozenset({IntentLabel(IGNORE)})
    return IntentSet(kept, intents.raw_utterance, intents.corrected_utterance)
