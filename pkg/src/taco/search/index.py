"""Inverted index with BM25 scoring and diet/cuisine constraint filtering."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from ..errors import EmptyCorpus
from ..model import Candidate, Clarification, COOKING, RankedResult, TaskDocument
from ..text import tokenize

K1 = 1.2
B = 0.75


def doc_text(doc: TaskDocument) -> str:
    """The indexed text: title plus ingredient names."""
    parts = [doc.title]
    parts.extend(line.name for line in doc.ingredients)
    return " ".join(parts)


@dataclass
class InvertedIndex:
    postings: dict[str, list[tuple[str, int]]]
    doc_lengths: dict[str, int]
    avg_doc_length: float
    vocabulary: frozenset[str]
    N: int
    titles: dict[str, str] = field(default_factory=dict)
    domains: dict[str, str] = field(default_factory=dict)
    diet_tags: dict[str, frozenset[str]] = field(default_factory=dict)
    cuisine_tags: dict[str, frozenset[str]] = field(default_factory=dict)

    def idf(self, term: str) -> float:
        """Lucene-style BM25 IDF: non-negative for any document frequency."""
        df = len(self.postings.get(term, ()))
        if df == 0:
            return 0.0
        return math.log(1.0 + (self.N - df + 0.5) / (df + 0.5))

    def bm25(self, doc_id: str, terms: Sequence[str]) -> float:
        length = self.doc_lengths[doc_id]
        norm = K1 * (1.0 - B + B * length / self.avg_doc_length)
        score = 0.0
        for term in terms:
            tf = 0
            for posting_doc, freq in self.postings.get(term, ()):
                if posting_doc == doc_id:
                    tf = freq
                    break
            if tf:
                score += self.idf(term) * tf * (K1 + 1.0) / (tf + norm)
        return score


def build_index(corpus: Iterable[TaskDocument]) -> InvertedIndex:
    """Tokenize title plus ingredient names into postings; deterministic."""
    docs = list(corpus)
    if not docs:
        raise EmptyCorpus("cannot index an empty corpus")
    postings: dict[str, list[tuple[str, int]]] = {}
    doc_lengths: dict[str, int] = {}
    index = InvertedIndex(postings, doc_lengths, 0.0, frozenset(), len(docs))
    for doc in docs:
        tokens = tokenize(doc_text(doc))
        doc_lengths[doc.id] = len(tokens)
        frequency: dict[str, int] = {}
        for token in tokens:
            frequency[token] = frequency.get(token, 0) + 1
        for token in sorted(frequency):
            postings.setdefault(token, []).append((doc.id, frequency[token]))
        index.titles[doc.id] = doc.title
        index.domains[doc.id] = doc.domain
        index.diet_tags[doc.id] = doc.diet_tags
        index.cuisine_tags[doc.id] = doc.cuisine_tags
    index.avg_doc_length = sum(doc_lengths.values()) / len(doc_lengths)
    index.vocabulary = frozenset(postings)
    return index


def _passes(index: InvertedIndex, doc_id: str, constraints: Clarification) -> bool:
    if constraints.diet:
        if index.domains[doc_id] != COOKING:
            return False
        if not set(constraints.diet) <= index.diet_tags[doc_id]:
            return False
    if constraints.cuisine:
        if index.domains[doc_id] != COOKING:
            return False
        if not set(constraints.cuisine) & index.cuisine_tags[doc_id]:
            return False
    return True


def retrieve(
    index: InvertedIndex,
    query: str,
    expanded: Sequence[str],
    constraints: Clarification | None = None,
    k: int = 25,
) -> RankedResult:
    """BM25 top-k over documents passing the constraint tags; ties break by
    ascending doc id."""
    if k < 1:
        raise ValueError("k must be >= 1")
    constraints = constraints or Clarification()
    candidate_ids: set[str] = set()
    for term in set(expanded):
        for doc_id, _ in index.postings.get(term, ()):
            candidate_ids.add(doc_id)
    scored = []
    for doc_id in candidate_ids:
        if not _passes(index, doc_id, constraints):
            continue
        score = index.bm25(doc_id, list(expanded))
        if score > 0.0:
            scored.append((doc_id, score))
    scored.sort(key=lambda pair: (-pair[1], pair[0]))
    candidates = tuple(Candidate(doc_id, score) for doc_id, score in scored[:k])
    return RankedResult(
        query=query,
        expanded_terms=tuple(expanded),
        candidates=candidates,
        constraints_applied=constraints,
    )
