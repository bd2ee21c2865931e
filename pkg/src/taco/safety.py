"""Per-turn safety screening: profanity checks on both sides of the
conversation and dangerous/professional task-request classification."""
from __future__ import annotations

import re
from dataclasses import dataclass, replace
from typing import Optional

from .ingest import Blacklist
from .model import Response

SAFE = "safe"
PROFANE = "profane"
DANGEROUS_TASK = "dangerous_task"
PROFESSIONAL_TASK = "professional_task"

APOLOGY_LINE = "I'd rather not repeat that, sorry."


@dataclass(frozen=True)
class SafetyVerdict:
    kind: str
    matched_term: Optional[str] = None

    def __post_init__(self):
        if (self.matched_term is not None) != (self.kind != SAFE):
            raise ValueError("matched_term present iff the verdict is not safe")

    @property
    def is_safe(self) -> bool:
        return self.kind == SAFE


def _phrase_pattern(phrase: str) -> re.Pattern:
    return re.compile(r"\b" + re.escape(phrase) + r"\b")


def _normalize(text: str) -> str:
    return " ".join(re.sub(r"[^\w\s']", " ", text.lower()).split())


def _find_term(text: str, terms: frozenset[str]) -> Optional[str]:
    normalized = _normalize(text)
    for term in sorted(terms):
        if _phrase_pattern(term).search(normalized):
            return term
    return None


def check_profanity(text: str, blacklist: Blacklist) -> SafetyVerdict:
    """Whole-word, case- and punctuation-insensitive profanity match."""
    term = _find_term(text, blacklist.profanity_terms)
    if term:
        return SafetyVerdict(PROFANE, term)
    return SafetyVerdict(SAFE)


def check_task_request(task_name: str, blacklist: Blacklist) -> SafetyVerdict:
    """Classify a task request; a dangerous match outranks a professional one."""
    term = _find_term(task_name, blacklist.dangerous_terms)
    if term:
        return SafetyVerdict(DANGEROUS_TASK, term)
    term = _find_term(task_name, blacklist.professional_terms)
    if term:
        return SafetyVerdict(PROFESSIONAL_TASK, term)
    return SafetyVerdict(SAFE)


_SENTENCE_SPLIT_RE = re.compile(r"[^.!?]+[.!?]*\s*")


def scrub_response(response: Response, blacklist: Blacklist) -> Response:
    """Drop sentences containing blacklisted terms; if nothing survives,
    replace the speech with a fixed apology line."""
    sentences = [s for s in _SENTENCE_SPLIT_RE.findall(response.speech) if s.strip()]
    kept = [
        s for s in sentences
        if _find_term(s, blacklist.profanity_terms) is None
    ]
    if len(kept) == len(sentences):
        return response
    speech = " ".join(s.strip() for s in kept)
    if not speech:
        speech = APOLOGY_LINE
    return replace(response, speech=speech)
