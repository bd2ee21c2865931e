"""Hit-rate evaluation: HIT-k plus the easy/hard query split."""
from __future__ import annotations

from ..errors import MissingGold
from ..model import RankedResult
from .labels import WeakLabelSet


def _hit(result: RankedResult, positives: tuple[str, ...], k: int) -> bool:
    top = {c.doc_id for c in result.candidates[:k]}
    return any(p in top for p in positives)


def hit_at_k(results: list[RankedResult], gold: WeakLabelSet, k: int) -> float:
    """Fraction of queries with at least one positive in the top k."""
    by_query = gold.by_query()
    if not results:
        return 0.0
    hits = 0
    for result in results:
        entry = by_query.get(result.query)
        if entry is None:
            raise MissingGold(result.query)
        if _hit(result, entry.positives, k):
            hits += 1
    return hits / len(results)


def split_easy_hard(
    results: list[RankedResult], gold: WeakLabelSet, k: int
) -> tuple[set[str], set[str]]:
    """Partition queries by whether the given (pre-rerank) top-k already
    contains a positive."""
    by_query = gold.by_query()
    easy: set[str] = set()
    hard: set[str] = set()
    for result in results:
        entry = by_query.get(result.query)
        if entry is None:
            raise MissingGold(result.query)
        (easy if _hit(result, entry.positives, k) else hard).add(result.query)
    return easy, hard
