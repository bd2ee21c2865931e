"""Binary cooking-vs-DIY classification of extracted task names."""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from ..errors import EmptyInput, InsufficientData
from ..model import COOKING, DIY
from ..text import tokenize
from .features import NgramFeaturizer
from .linear import GdConfig, LogisticModel, fit_logistic

import numpy as np


@dataclass
class DomainModel:
    featurizer: NgramFeaturizer
    linear: LogisticModel  # single head scoring the cooking class

    def score(self, task_name: str) -> float:
        X = self.featurizer.transform([task_name.lower()])
        return float(self.linear.scores(X)[0, 0])

    def save(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps({
            "version": 1,
            "featurizer": self.featurizer.to_dict(),
            "linear": self.linear.to_dict(),
        }))

    @classmethod
    def load(cls, path: str | Path) -> "DomainModel":
        doc = json.loads(Path(path).read_text())
        return cls(NgramFeaturizer.from_dict(doc["featurizer"]),
                   LogisticModel.from_dict(doc["linear"]))


def classify_domain(task_name: str, model: DomainModel) -> str:
    """Cooking when the classifier score clears 0.5, DIY otherwise."""
    if not tokenize(task_name):
        raise EmptyInput("blank task name")
    return COOKING if model.score(task_name) >= 0.5 else DIY


def train_domain_model(
    data: list[tuple[str, str]],
    learning_rate: float = 2.0,
    max_epochs: int = 400,
    l2: float = 1e-5,
    min_count: int = 10,
) -> DomainModel:
    """Fit the binary classifier on (task name, domain) pairs."""
    for domain in (COOKING, DIY):
        count = sum(1 for _, d in data if d == domain)
        if count < min_count:
            raise InsufficientData(domain, count, min_count)
    texts = [name.lower() for name, _ in data]
    featurizer = NgramFeaturizer(word_orders=(1, 2), char_orders=(2, 3, 4), min_df=1).fit(texts)
    X = featurizer.transform(texts)
    Y = np.asarray([[1.0 if d == COOKING else 0.0] for _, d in data])
    linear = fit_logistic(X, Y, [COOKING], GdConfig(learning_rate, max_epochs, l2=l2))
    return DomainModel(featurizer, linear)
