"""Question-type classification over n-gram features of the question
concatenated with the current step context."""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

import numpy as np

from ..errors import EmptyQuestion, InsufficientData
from ..model import DIY
from ..text import tokenize
from ..nlu.features import NgramFeaturizer
from ..nlu.linear import GdConfig, LogisticModel, fit_logistic
from .router import COOKING_ONLY_TYPES, QUESTION_TYPES

SEPARATOR = " [sep] "


def _input_text(question: str, current_step: Optional[str]) -> str:
    if current_step:
        return question.lower() + SEPARATOR + current_step.lower()
    return question.lower()


@dataclass
class QuestionModel:
    featurizer: NgramFeaturizer
    linear: LogisticModel  # one head per question type

    def scores(self, question: str, current_step: Optional[str]) -> dict[str, float]:
        X = self.featurizer.transform([_input_text(question, current_step)])
        row = self.linear.scores(X)[0]
        return dict(zip(self.linear.heads, row.tolist()))

    def save(self, path: str | Path) -> None:
        Path(path).write_text(json.dumps({
            "version": 1,
            "featurizer": self.featurizer.to_dict(),
            "linear": self.linear.to_dict(),
        }))

    @classmethod
    def load(cls, path: str | Path) -> "QuestionModel":
        doc = json.loads(Path(path).read_text())
        return cls(NgramFeaturizer.from_dict(doc["featurizer"]),
                   LogisticModel.from_dict(doc["linear"]))


def classify_question(
    question: str,
    current_step: Optional[str],
    domain: Optional[str],
    model: QuestionModel,
) -> str:
    """Argmax over type scores; ingredient and substitute are masked out for
    DIY tasks, and ties break in the fixed type order."""
    if not tokenize(question):
        raise EmptyQuestion("blank question")
    scores = model.scores(question, current_step)
    best_type = None
    best_score = -1.0
    for question_type in QUESTION_TYPES:  # fixed order is the tie-break
        if domain == DIY and question_type in COOKING_ONLY_TYPES:
            continue
        score = scores.get(question_type, 0.0)
        if score > best_score:
            best_type = question_type
            best_score = score
    return best_type


def train_question_model(
    data: list[tuple[str, Optional[str], str]],
    learning_rate: float = 2.0,
    max_epochs: int = 400,
    l2: float = 1e-5,
    min_count: int = 10,
) -> QuestionModel:
    """Fit per-type heads on (question, step context, type) triples."""
    counts = {t: 0 for t in QUESTION_TYPES}
    for _, _, question_type in data:
        counts[question_type] += 1
    for question_type, count in counts.items():
        if count < min_count:
            raise InsufficientData(question_type, count, min_count)
    texts = [_input_text(q, step) for q, step, _ in data]
    featurizer = NgramFeaturizer(word_orders=(1, 2, 3), char_orders=(2, 3), min_df=2).fit(texts)
    X = featurizer.transform(texts)
    heads = list(QUESTION_TYPES)
    Y = np.zeros((len(data), len(heads)))
    for row, (_, _, question_type) in enumerate(data):
        Y[row, heads.index(question_type)] = 1.0
    linear = fit_logistic(X, Y, heads, GdConfig(learning_rate, max_epochs, l2=l2))
    return QuestionModel(featurizer, linear)
