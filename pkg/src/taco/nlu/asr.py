"""String-matching correction of common speech-transcription errors,
scoped to the dialogue phases where they occur."""
from __future__ import annotations

import csv
import re
from dataclasses import dataclass
from pathlib import Path

from ..errors import ValidationError
from ..model import PHASES
from ..text import normalize_ws

ANY_PHASE = "any"


@dataclass(frozen=True)
class AsrRule:
    wrong: str
    right: str
    applicable_phases: frozenset[str]

    def __post_init__(self):
        if not self.wrong or not self.right:
            raise ValidationError("asr rule phrases must be non-empty")
        if self.wrong == self.right:
            raise ValidationError("asr rule must change the text")
        if self.wrong != self.wrong.lower() or self.right != self.right.lower():
            raise ValidationError("asr rule phrases must be lowercase")
        bad = self.applicable_phases - set(PHASES)
        if bad:
            raise ValidationError(f"unknown phases in asr rule: {sorted(bad)}")

    def applies_to(self, phase: str) -> bool:
        return not self.applicable_phases or phase in self.applicable_phases


def _word_pattern(phrase: str) -> re.Pattern:
    return re.compile(r"\b" + re.escape(phrase) + r"\b", re.IGNORECASE)


def correct_asr(utterance: str, phase: str, rules: list[AsrRule]) -> str:
    """Apply each phase-applicable rule as a whole-word replacement, in rule
    order; the result is lowercased and whitespace-normalized."""
    text = utterance.lower()
    for rule in rules:
        if rule.applies_to(phase):
            text = _word_pattern(rule.wrong).sub(rule.right, text)
    return normalize_ws(text)


def load_asr_rules(path: str | Path) -> list[AsrRule]:
    """Read a ``wrong,right,phases`` CSV; phases are '|'-separated or 'any'."""
    rules = []
    with open(path, newline="") as fh:
        for row in csv.reader(fh):
            if not row or row[0].startswith("#"):
                continue
            wrong, right, phases = (cell.strip() for cell in row)
            if phases == ANY_PHASE or not phases:
                applicable: frozenset[str] = frozenset()
            else:
                applicable = frozenset(p.strip() for p in phases.split("|"))
            rules.append(AsrRule(wrong, right, applicable))
    lint_rules(rules)
    return rules


def lint_rules(rules: list[AsrRule]) -> None:
    """Reject tables where one rule's output could feed another rule,
    which would break idempotence of :func:`correct_asr`."""
    for produced in rules:
        for consumer in rules:
            shared = (
                not produced.applicable_phases
                or not consumer.applicable_phases
                or produced.applicable_phases & consumer.applicable_phases
            )
            if shared and _word_pattern(consumer.wrong).search(produced.right):
                raise ValidationError(
                    f"rule output {produced.right!r} matches rule input {consumer.wrong!r}"
                )
