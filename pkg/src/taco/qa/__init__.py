"""Question answering: type routing, extractive in-context answers, FAQ
retrieval, and ingredient/substitute lookup."""

from .classify import QuestionModel, classify_question, train_question_model
from .cooking import answer_ingredient, answer_substitute
from .faq import retrieve_faq
from .mrc import answer_mrc, build_context
from .router import (
    FACTUAL_STUB,
    QAAnswer,
    QAConfig,
    QUESTION_TYPES,
    route_and_answer,
)

__all__ = [
    "QuestionModel", "classify_question", "train_question_model",
    "answer_ingredient", "answer_substitute",
    "retrieve_faq",
    "answer_mrc", "build_context",
    "FACTUAL_STUB", "QAAnswer", "QAConfig", "QUESTION_TYPES", "route_and_answer",
]
