"""Extractive in-context answering over the current and previous steps.

The baseline scorer ranks context sentences by lemma-level IDF-weighted
overlap with the question (IDF taken over the context's own sentences),
boosting the wh-focus word so "what tools ..." prefers the sentence naming
the tools over one that merely echoes the question's phrasing. A learned
extractive model can replace it behind the same interface.
"""
from __future__ import annotations

import math
import re

from ..text import lemmatize, split_sentences, tokenize
from .router import MRC, QAAnswer, EXTRACTED, no_answer, QAConfig

FOCUS_BOOST = 3.0
_FOCUS_SKIP = {
    "is", "are", "was", "were", "do", "does", "did", "should", "can",
    "could", "would", "will", "the", "a", "an", "to", "of", "if", "i",
    "you", "we", "it", "about", "kind", "type", "sort", "else",
}
_FOCUS_RE = re.compile(r"\b(?:what|which)\s+(\w+)(?:\s+(\w+))?")


def build_context(steps: list[str], cursor: int, window: int) -> str:
    """Concatenate the current step with up to ``window`` previous steps."""
    start = max(1, cursor - window)
    return " ".join(steps[start - 1 : cursor])


def _focus_lemmas(question: str) -> set[str]:
    focus = set()
    for match in _FOCUS_RE.finditer(question.lower()):
        for word in match.groups():
            if word and word not in _FOCUS_SKIP:
                focus.add(lemmatize(word))
                break
    return focus


def answer_mrc(question: str, steps: list[str], cursor: int,
               config: QAConfig | None = None) -> QAAnswer:
    """Best-overlap sentence from the windowed context, or no answer when
    the score stays under the no-answer threshold."""
    config = config or QAConfig()
    if not steps or not 1 <= cursor <= len(steps):
        return no_answer(MRC)
    context = build_context(steps, cursor, config.context_window)
    sentences = split_sentences(context)
    if not sentences:
        return no_answer(MRC)

    question_lemmas = [lemmatize(t) for t in tokenize(question)]
    if not question_lemmas:
        return no_answer(MRC)
    sentence_lemmas = [{lemmatize(t) for t in tokenize(s)} for s in sentences]

    n = len(sentences)
    df: dict[str, int] = {}
    for lemmas in sentence_lemmas:
        for lemma in lemmas:
            df[lemma] = df.get(lemma, 0) + 1
    idf = lambda lemma: math.log((n + 1) / (df.get(lemma, 0) + 1)) + 1.0  # noqa: E731

    unique_question = sorted(set(question_lemmas))
    question_mass = sum(idf(l) for l in unique_question)
    focus = _focus_lemmas(question)

    best_index = None
    best_score = 0.0
    for i, lemmas in enumerate(sentence_lemmas):
        overlap = 0.0
        for lemma in unique_question:
            if lemma in lemmas:
                weight = idf(lemma)
                if lemma in focus:
                    weight *= FOCUS_BOOST
                overlap += weight
        score = overlap / question_mass if question_mass else 0.0
        if score > best_score:
            best_index = i
            best_score = score

    if best_index is None or best_score < config.no_answer_threshold:
        return no_answer(MRC)
    return QAAnswer(EXTRACTED, MRC, sentences[best_index], similarity=best_score)
