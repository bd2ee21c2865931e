"""FAQ retrieval by TF-IDF cosine similarity over the stored questions."""
from __future__ import annotations

import math
from collections import Counter

from ..text import tokenize
from .router import FAQ, FAQ_ANSWER, QAAnswer, QAConfig, no_answer


def _vector(tokens: list[str], idf: dict[str, float], default_idf: float) -> dict[str, float]:
    counts = Counter(tokens)
    return {t: c * idf.get(t, default_idf) for t, c in counts.items()}


def _cosine(a: dict[str, float], b: dict[str, float]) -> float:
    dot = sum(w * b[t] for t, w in a.items() if t in b)
    norm_a = math.sqrt(sum(w * w for w in a.values()))
    norm_b = math.sqrt(sum(w * w for w in b.values()))
    if norm_a == 0.0 or norm_b == 0.0:
        return 0.0
    return dot / (norm_a * norm_b)


def retrieve_faq(question: str, faqs: list[tuple[str, str]],
                 config: QAConfig | None = None) -> QAAnswer:
    """Return the best-matching FAQ answer when its cosine similarity clears
    the threshold; ties keep the earlier FAQ."""
    config = config or QAConfig()
    if not faqs:
        return no_answer(FAQ)
    stored_tokens = [tokenize(q) for q, _ in faqs]
    n = len(faqs)
    df: Counter[str] = Counter()
    for tokens in stored_tokens:
        df.update(set(tokens))
    idf = {t: math.log((1 + n) / (1 + d)) + 1.0 for t, d in df.items()}
    default_idf = math.log(1 + n) + 1.0

    query = _vector(tokenize(question), idf, default_idf)
    best_index = None
    best_similarity = 0.0
    for i, tokens in enumerate(stored_tokens):
        similarity = _cosine(query, _vector(tokens, idf, default_idf))
        if similarity > best_similarity:
            best_index = i
            best_similarity = similarity
    if best_index is None or best_similarity < config.faq_threshold:
        return no_answer(FAQ)
    return QAAnswer(FAQ_ANSWER, FAQ, faqs[best_index][1], similarity=best_similarity)
