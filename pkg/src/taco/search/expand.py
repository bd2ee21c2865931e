"""Query expansion: append lemmas and compound-word parts to raise recall.

The compound splitter greedily takes the longest vocabulary prefix of an
out-of-vocabulary token, requiring both parts to be known words of three or
more characters.
"""
from __future__ import annotations

from functools import lru_cache
from pathlib import Path

from ..text import lemmatize, tokenize

MIN_PART = 3


@lru_cache(maxsize=8)
def load_vocabulary(path: str | None = None) -> frozenset[str]:
    """The bundled word list used to recognize compound parts."""
    if path is None:
        path = Path(__file__).resolve().parent.parent / "data" / "vocabulary.txt"
    text = Path(path).read_text()
    return frozenset(w.strip().lower() for w in text.splitlines() if w.strip())


def split_compound(token: str, vocabulary: frozenset[str]) -> tuple[str, str] | None:
    """Longest-prefix split of an unrecognized token into two known words."""
    if token in vocabulary:
        return None
    for cut in range(len(token) - MIN_PART, MIN_PART - 1, -1):
        head, tail = token[:cut], token[cut:]
        if head in vocabulary and tail in vocabulary:
            return head, tail
    return None


def expand_query(task_name: str, vocabulary: frozenset[str] | None = None) -> list[str]:
    """Original tokens in order, followed by unseen lemmas and compound parts."""
    if vocabulary is None:
        vocabulary = load_vocabulary()
    tokens = tokenize(task_name)
    expanded = list(tokens)
    seen = set(tokens)
    for token in tokens:
        lemma = lemmatize(token)
        if lemma != token and lemma not in seen:
            expanded.append(lemma)
            seen.add(lemma)
        parts = split_compound(token, vocabulary)
        if parts:
            for part in parts:
                if part not in seen:
                    expanded.append(part)
                    seen.add(part)
    return expanded
