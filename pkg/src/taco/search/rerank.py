"""Listwise re-ranking: a linear scorer over lexical features trained with a
softmax top-one ranking loss on weak labels (one positive, n sampled
negatives per list)."""
from __future__ import annotations

import json
import logging
import random
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np

from ..errors import NoUsableEntries, NonFiniteScore
from ..model import COOKING, DIY, RankedResult
from ..text import lemmatize, tokenize
from .expand import expand_query
from .index import InvertedIndex, retrieve
from .labels import WeakLabelSet

logger = logging.getLogger(__name__)

FEATURE_NAMES = (
    "bm25",
    "query_title_overlap",
    "expanded_title_overlap",
    "title_tokens",
    "exact_title_match",
    "domain_match",
)

_COOKING_CUES = frozenset({
    "recipe", "recipes", "cook", "cooking", "bake", "baking", "food",
    "dish", "meal", "dinner", "breakfast", "lunch", "dessert", "eat",
})
_DIY_CUES = frozenset({
    "fix", "repair", "install", "build", "diy", "patch", "unclog",
    "paint", "mount", "assemble",
})


def _domain_match(query_tokens: set[str], domain: str) -> float:
    wants_cooking = bool(query_tokens & _COOKING_CUES)
    wants_diy = bool(query_tokens & _DIY_CUES)
    if not wants_cooking and not wants_diy:
        return 0.5
    if (domain == COOKING and wants_cooking) or (domain == DIY and wants_diy):
        return 1.0
    return 0.0


def extract_features(
    index: InvertedIndex,
    query: str,
    expanded: list[str] | tuple[str, ...],
    doc_id: str,
    bm25: float | None = None,
) -> np.ndarray:
    """Fixed-order feature vector for one (query, document) pair."""
    if bm25 is None:
        bm25 = index.bm25(doc_id, list(expanded))
    title_tokens = tokenize(index.titles[doc_id])
    title_set = set(title_tokens) | {lemmatize(t) for t in title_tokens}
    query_tokens = tokenize(query)
    expanded_list = list(expanded)
    q_overlap = (
        sum(1 for t in query_tokens if t in title_set) / len(query_tokens)
        if query_tokens else 0.0
    )
    e_overlap = (
        sum(1 for t in expanded_list if t in title_set) / len(expanded_list)
        if expanded_list else 0.0
    )
    exact = 1.0 if query_tokens == title_tokens else 0.0
    return np.array([
        bm25,
        q_overlap,
        e_overlap,
        float(len(title_tokens)),
        exact,
        _domain_match(set(query_tokens), index.domains[doc_id]),
    ])


def listnet_loss(scores: np.ndarray, positive_index: int) -> tuple[float, np.ndarray]:
    """Cross-entropy between the softmax of scores and the one-hot positive:
    loss = -log softmax(scores)[positive_index], gradient = softmax - onehot."""
    scores = np.asarray(scores, dtype=np.float64)
    if scores.ndim != 1 or not 0 <= positive_index < scores.size:
        raise ValueError("need a 1-d score vector and a valid positive index")
    if not np.all(np.isfinite(scores)):
        raise NonFiniteScore(str(scores))
    shifted = scores - scores.max()
    exp = np.exp(shifted)
    probs = exp / exp.sum()
    loss = float(-(shifted[positive_index] - np.log(exp.sum())))
    gradient = probs.copy()
    gradient[positive_index] -= 1.0
    return loss, gradient


@dataclass
class RankerModel:
    weights: np.ndarray
    feature_names: tuple[str, ...] = FEATURE_NAMES

    def __post_init__(self):
        if len(self.weights) != len(self.feature_names):
            raise ValueError("one weight per feature")

    def score(self, features: np.ndarray) -> float:
        return float(features @ self.weights)

    def save(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps({
            "feature_names": list(self.feature_names),
            "weights": self.weights.tolist(),
        }))

    @classmethod
    def load(cls, path: str | Path) -> "RankerModel":
        doc = json.loads(Path(path).read_text())
        return cls(np.asarray(doc["weights"]), tuple(doc["feature_names"]))


@dataclass
class RankerTrainConfig:
    negatives_per_positive: int = 9
    learning_rate: float = 0.05
    max_epochs: int = 400
    rel_tol: float = 1e-6
    seed: int = 0
    pad_pool: int = 25

    def __post_init__(self):
        if self.negatives_per_positive < 1:
            raise ValueError("need at least one negative per positive")


def _build_lists(
    labels: WeakLabelSet, index: InvertedIndex, config: RankerTrainConfig
) -> np.ndarray:
    rng = random.Random(config.seed)
    n = config.negatives_per_positive
    lists: list[np.ndarray] = []
    for entry in labels.entries:
        expanded = expand_query(entry.query)
        negatives = list(entry.negatives)
        if len(negatives) < n:
            # pad with retrieved non-positives so every list has n negatives
            pool = retrieve(index, entry.query, expanded, k=config.pad_pool)
            extra = [
                c.doc_id for c in pool.candidates
                if c.doc_id not in entry.positives and c.doc_id not in negatives
            ]
            rng.shuffle(extra)
            negatives.extend(extra[: n - len(negatives)])
        if not negatives:
            logger.warning("skipping %r: no negatives available", entry.query)
            continue
        for positive in entry.positives:
            sampled = [rng.choice(negatives) for _ in range(n)] if len(negatives) < n \
                else rng.sample(negatives, n)
            doc_ids = [positive] + sampled
            lists.append(np.stack([
                extract_features(index, entry.query, expanded, doc_id)
                for doc_id in doc_ids
            ]))
    if not lists:
        raise NoUsableEntries("no weak-label entry produced a training list")
    return np.stack(lists)  # (L, n+1, n_features)


def ranker_objective(weights: np.ndarray, features: np.ndarray) -> tuple[float, np.ndarray]:
    """Mean listwise loss and gradient over stacked lists whose first row is
    the positive."""
    scores = features @ weights  # (L, n+1)
    shifted = scores - scores.max(axis=1, keepdims=True)
    exp = np.exp(shifted)
    probs = exp / exp.sum(axis=1, keepdims=True)
    losses = -(shifted[:, 0] - np.log(exp.sum(axis=1)))
    grad_scores = probs.copy()
    grad_scores[:, 0] -= 1.0
    grad = np.einsum("lif,li->f", features, grad_scores) / features.shape[0]
    return float(losses.mean()), grad


def train_reranker(
    labels: WeakLabelSet, index: InvertedIndex, config: RankerTrainConfig | None = None
) -> RankerModel:
    """Gradient descent on the mean listwise loss over seeded sample lists."""
    config = config or RankerTrainConfig()
    features = _build_lists(labels, index, config)
    weights = np.zeros(features.shape[2])
    prev = None
    lr = config.learning_rate
    for _ in range(config.max_epochs):
        loss, grad = ranker_objective(weights, features)
        if prev is not None:
            if loss > prev:
                lr *= 0.5
            elif abs(prev - loss) <= config.rel_tol * max(abs(prev), 1e-12):
                break
        prev = loss
        weights = weights - lr * grad
    return RankerModel(weights)


def rerank(model: RankerModel, result: RankedResult, index: InvertedIndex,
           pool_size: int = 25) -> RankedResult:
    """Rescore the top pool and re-sort it by model score (ties keep the
    original order); candidates beyond the pool keep their positions."""
    if not result.candidates:
        return result
    pool = result.candidates[:pool_size]
    tail = result.candidates[pool_size:]
    rescored = [
        replace(c, rerank=model.score(
            extract_features(index, result.query, result.expanded_terms, c.doc_id, c.bm25)
        ))
        for c in pool
    ]
    order = sorted(range(len(rescored)), key=lambda i: (-rescored[i].rerank, i))
    reordered = tuple(rescored[i] for i in order) + tail
    return replace(result, candidates=reordered)
