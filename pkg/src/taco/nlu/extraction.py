"""Task-name extraction: a pattern-and-stopword stripper that peels request
scaffolding off an utterance and returns the task span, if any remains.

The interface (text in, optional span out) is the same one a learned
extractor would implement.
"""
from __future__ import annotations

import re
from typing import Optional

from ..text import normalize_ws

_LEADING = [
    r"hey\b", r"hi\b", r"hello\b", r"alexa\b", r"taco\b", r"please\b",
    r"ok(?:ay)?\b", r"um+\b", r"uh+\b", r"well\b", r"so\b", r"actually\b",
    r"yes\b", r"yeah\b", r"no\b", r"nope\b", r"thanks\b", r"thank you\b",
]

_PREFIXES = [
    r"i\s+(?:would|d)\s+(?:like|love|want)\s+to\s+(?:know|learn|see|find\s+out)",
    r"i\s+(?:would|d)\s+(?:like|love)\s+to",
    r"i\s+want\s+to\s+(?:know|learn|see|find\s+out)",
    r"i\s+want\s+to",
    r"i\s+need\s+to(?:\s+know)?",
    r"i\s+wanna",
    r"can\s+you\s+(?:please\s+)?(?:show|tell|teach|find|search|help)(?:\s+me)?",
    r"could\s+you\s+(?:please\s+)?(?:show|tell|teach|find|search|help)(?:\s+me)?",
    r"show\s+me",
    r"tell\s+me",
    r"teach\s+me",
    r"help\s+me(?:\s+with)?",
    r"search\s+for",
    r"search",
    r"look\s+up",
    r"look\s+for",
    r"find\s+me",
    r"find",
    r"give\s+me",
    r"what\s+is\s+the\s+best\s+way\s+to",
    r"what\s+s\s+the\s+best\s+way\s+to",
    r"how\s+do\s+(?:i|you|we)",
    r"how\s+can\s+(?:i|you|we)",
    r"how\s+to",
    r"how\s+about",
    r"a\s+recipe\s+(?:for|of)",
    r"the\s+recipe\s+(?:for|of)",
    r"recipe\s+(?:for|of)",
    r"recipes\s+(?:for|of)",
    r"instructions\s+(?:for|on)",
    r"a\s+way\s+to",
    r"about",
]

_SUFFIXES = [
    r"for\s+me",
    r"please",
    r"thanks",
    r"thank\s+you",
    r"recipes?",
    r"instructions?",
    r"step\s+by\s+step",
    r"tutorial",
]

_LEADING_RE = re.compile(r"^(?:" + "|".join(_LEADING) + r")[\s,]*", re.IGNORECASE)
_PREFIX_RE = re.compile(r"^(?:" + "|".join(_PREFIXES) + r")\b\s*", re.IGNORECASE)
_SUFFIX_RE = re.compile(r"\s*\b(?:" + "|".join(_SUFFIXES) + r")\s*$", re.IGNORECASE)


def extract_task_name(utterance: str) -> Optional[str]:
    """Return the contiguous span naming the requested task, or None.

    Strips leading politeness, request scaffolding ("how to", "search",
    "... recipe for me"), and trailing courtesy words, leaving the task
    span untouched.
    """
    text = normalize_ws(re.sub(r"[^\w\s']", " ", utterance.lower()))
    text = text.replace("'", " ")
    text = normalize_ws(text)

    changed = True
    while changed:
        changed = False
        for pattern in (_LEADING_RE, _PREFIX_RE):
            new = pattern.sub("", text)
            if new != text:
                text = new.strip()
                changed = True
    changed = True
    while changed:
        new = _SUFFIX_RE.sub("", text)
        changed = new != text
        text = new.strip()

    return text or None
