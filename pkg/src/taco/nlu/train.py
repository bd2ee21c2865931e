"""Training and evaluation for the multi-label intent model."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from ..errors import InsufficientData
from .features import NgramFeaturizer
from .intents import IntentModel, default_patterns, recognize_intents
from .linear import GdConfig, fit_logistic

LabeledData = list[tuple[str, frozenset[str]]]


@dataclass
class TrainConfig:
    min_count: int = 20
    learning_rate: float = 2.0
    max_epochs: int = 500
    rel_tol: float = 1e-6
    l2: float = 1e-5
    thresholds: dict[str, float] = field(default_factory=dict)
    default_threshold: float = 0.5


def train_intent_model(data: LabeledData, config: TrainConfig | None = None) -> IntentModel:
    """One-vs-rest logistic regression per label, gradient descent until the
    relative loss change drops below tolerance."""
    config = config or TrainConfig()
    counts: Counter[str] = Counter()
    for _, labels in data:
        counts.update(labels)
    if not counts:
        raise InsufficientData("(none)", 0, config.min_count)
    heads = sorted(counts)
    for head in heads:
        if counts[head] < config.min_count:
            raise InsufficientData(head, counts[head], config.min_count)

    texts = [utterance for utterance, _ in data]
    featurizer = NgramFeaturizer(word_orders=(1, 2, 3), char_orders=(2, 3), min_df=2).fit(texts)
    X = featurizer.transform(texts)
    head_index = {h: i for i, h in enumerate(heads)}
    Y = np.zeros((len(data), len(heads)))
    for row, (_, labels) in enumerate(data):
        for label in labels:
            Y[row, head_index[label]] = 1.0
    linear = fit_logistic(
        X, Y, heads,
        GdConfig(config.learning_rate, config.max_epochs, config.rel_tol, config.l2),
    )
    return IntentModel(
        pattern_rules=default_patterns(),
        featurizer=featurizer,
        linear=linear,
        thresholds=dict(config.thresholds),
        default_threshold=config.default_threshold,
    )


def evaluate_exact_set(model: IntentModel, data: LabeledData) -> float:
    """Fraction of utterances whose predicted label-key set equals gold."""
    if not data:
        return 0.0
    hits = 0
    for utterance, gold in data:
        predicted = frozenset(l.key for l in recognize_intents(utterance, model).labels)
        if predicted == gold:
            hits += 1
    return hits / len(data)
