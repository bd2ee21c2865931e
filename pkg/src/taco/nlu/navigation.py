"""Regex parsing of fine-grained commands: navigation, on-screen selection,
list items, and timer durations."""
from __future__ import annotations

import re
from typing import Optional

from ..errors import UnparseableNavigation
from ..model import BACKWARD, FORWARD, GO_TO_STEP, LESS_CHOICE, MORE_CHOICE, NavCommand
from ..text import NUMBER_WORDS, ORDINAL_WORDS, parse_number

_NUM = r"(\d+|" + "|".join(NUMBER_WORDS) + r")"
_ORD = "|".join(ORDINAL_WORDS)

GOTO_RE = re.compile(
    rf"\b(?:go|jump|skip)\s+(?:back\s+)?to\s+(?:the\s+)?step\s+{_NUM}\b"
    rf"|\bstep\s+{_NUM}\b"
    rf"|\b(?:go|jump|skip)\s+to\s+the\s+({_ORD})\s+step\b"
)
MORE_RE = re.compile(
    r"\b(?:more|other|different|next)\s+(?:options?|choices?|results?|tasks?|recipes?|ideas?)\b"
    r"|\bshow\s+(?:me\s+)?more\b|\bwhat\s+else\b|\bnext\s+page\b|\bmore\s+please\b"
)
LESS_RE = re.compile(
    r"\b(?:less|fewer|previous|earlier)\s+(?:options?|choices?|results?|page)\b"
    r"|\bprevious\s+page\b|\bpage\s+back\b|\bshow\s+(?:me\s+)?(?:less|fewer)\b"
)
FORWARD_RE = re.compile(
    rf"\b(?:go|move|skip|jump)\s+forward(?:\s+{_NUM}\s+steps?)?\b"
    rf"|\b(?:go|move|skip|jump)\s+ahead\s+{_NUM}\s+steps?\b"
    rf"|\b(?:skip|forward)\s+{_NUM}\s+steps?\b"
    rf"|\bnext\s+step\b|\bnext\b|\bgo\s+on\b|\bmove\s+on\b|\bcontinue\b|\bproceed\b"
    rf"|\bskip\s+(?:this|it|that)(?:\s+step)?\b"
)
BACKWARD_RE = re.compile(
    rf"\b(?:go|move|step)\s+back(?:ward)?(?:\s+{_NUM}\s+steps?)?\b"
    rf"|\bback\s+{_NUM}\s+steps?\b"
    rf"|\bprevious\s+step\b|\bgo\s+back\b|\bback\s+up\b|\blast\s+step\b|\bback\b"
)


def _first_number(match: re.Match) -> Optional[int]:
    for group in match.groups():
        if group:
            value = parse_number(group)
            if value is None:
                value = ORDINAL_WORDS.get(group)
            if value is not None:
                return value
    return None


def parse_navigation(utterance: str) -> NavCommand:
    """Parse a navigation utterance into a command; number words one-twenty
    and digits are understood, and bare next/back default to one step."""
    text = utterance.lower()
    match = GOTO_RE.search(text)
    if match:
        target = _first_number(match)
        if target is not None and target >= 1:
            return NavCommand(GO_TO_STEP, target)
    if MORE_RE.search(text):
        return NavCommand(MORE_CHOICE)
    if LESS_RE.search(text):
        return NavCommand(LESS_CHOICE)
    match = FORWARD_RE.search(text)
    if match:
        return NavCommand(FORWARD, _first_number(match) or 1)
    match = BACKWARD_RE.search(text)
    if match:
        return NavCommand(BACKWARD, _first_number(match) or 1)
    raise UnparseableNavigation(utterance)


SELECT_RE = re.compile(
    rf"\bthe\s+({_ORD}|last)\s+(?:one|option|choice|task|recipe)?\b"
    rf"|\b(?:number|option|task|recipe)\s+{_NUM}\b"
    rf"|^\s*({_ORD}|last)\s*$"
)


def parse_selection(utterance: str) -> Optional[int]:
    """Extract a 1-based on-page pick ("the first one", "number two");
    'last' maps to the sentinel -1 for the caller to resolve."""
    match = SELECT_RE.search(utterance.lower())
    if not match:
        return None
    for group in match.groups():
        if not group:
            continue
        if group == "last":
            return -1
        value = ORDINAL_WORDS.get(group)
        if value is None:
            value = parse_number(group)
        if value is not None:
            return value
    return None


_UNIT_SECONDS = {"second": 1, "sec": 1, "minute": 60, "min": 60, "hour": 3600}
DURATION_RE = re.compile(
    rf"{_NUM}\s*(?:and\s+a\s+half\s+)?(seconds?|secs?|minutes?|mins?|hours?)\b"
)
HALF_RE = re.compile(r"\band\s+a\s+half\b")


def parse_duration(utterance: str) -> Optional[float]:
    """Parse a spoken duration ("five minutes", "1 hour and 30 minutes")
    into seconds; returns None when no duration is present."""
    text = utterance.lower()
    total = 0.0
    for match in DURATION_RE.finditer(text):
        number = None
        for group in match.groups():
            if group and (parsed := parse_number(group)) is not None:
                number = parsed
                break
        if number is None:
            continue
        unit = match.group(match.lastindex).rstrip("s")
        unit_seconds = _UNIT_SECONDS.get(unit, 0)
        amount = float(number)
        if HALF_RE.search(text[match.start() : match.end() + 12]):
            amount += 0.5
        total += amount * unit_seconds
    return total or None


LIST_ADD_RE = re.compile(
    r"\b(?:add|put)\s+(?:some\s+|a\s+|an\s+)?(?P<item>.+?)\s+(?:to|on|onto|in)\s+(?:my|the)\s+(?:shopping\s+)?list\b"
    r"|\badd\s+(?:some\s+|a\s+|an\s+)?(?P<item2>.+)$"
)
LIST_REMOVE_RE = re.compile(
    r"\b(?:remove|delete|take)\s+(?:the\s+)?(?P<item>.+?)\s+(?:from|off)\s+(?:my|the)\s+(?:shopping\s+)?list\b"
    r"|\b(?:remove|delete)\s+(?:the\s+)?(?P<item2>.+)$"
)


def parse_list_item(utterance: str, action: str) -> Optional[str]:
    """Pull the item span out of a list add/remove utterance."""
    pattern = LIST_ADD_RE if action == "add" else LIST_REMOVE_RE
    match = pattern.search(utterance.lower().rstrip(".!?"))
    if not match:
        return None
    item = match.group("item") or match.group("item2")
    if not item:
        return None
    item = re.sub(r"\s+(?:to|on|from|off)\s+(?:my|the)\s+(?:shopping\s+)?list\b.*$", "", item)
    item = item.strip(" .,!?")
    return item or None
