"""Question-type dispatch and the shared QA answer/config types."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..errors import ValidationError
from ..ingest import SubstitutionTable
from ..model import COOKING, TaskDocument

MRC = "mrc"
FAQ = "faq"
FACTUAL = "factual"
INGREDIENT = "ingredient"
SUBSTITUTE = "substitute"
QUESTION_TYPES = (MRC, FAQ, FACTUAL, INGREDIENT, SUBSTITUTE)
COOKING_ONLY_TYPES = (INGREDIENT, SUBSTITUTE)

EXTRACTED = "extracted"
FAQ_ANSWER = "faq"
INGREDIENT_INFO = "ingredient_info"
SUBSTITUTE_INFO = "substitute_info"
NO_ANSWER = "no_answer"

FACTUAL_STUB = (
    "I can't look up general facts right now. "
    "I'm best with questions about the current task."
)


@dataclass(frozen=True)
class QAConfig:
    faq_threshold: float = 0.75
    context_window: int = 2
    no_answer_threshold: float = 0.25

    def __post_init__(self):
        if not 0.0 < self.faq_threshold <= 1.0:
            raise ValidationError("faq threshold must be in (0, 1]")
        if self.context_window < 0:
            raise ValidationError("context window must be non-negative")


@dataclass(frozen=True)
class QAAnswer:
    kind: str
    source: str
    text: str = ""
    similarity: Optional[float] = None

    @property
    def answered(self) -> bool:
        return self.kind != NO_ANSWER

    def to_dict(self) -> dict:
        return {"kind": self.kind, "source": self.source, "text": self.text,
                "similarity": self.similarity}


def no_answer(source: str, text: str = "") -> QAAnswer:
    return QAAnswer(NO_ANSWER, source, text)


def route_and_answer(
    question: str,
    task: Optional[TaskDocument],
    step_cursor: Optional[int],
    substitutions: SubstitutionTable,
    model: "QuestionModel",
    config: QAConfig | None = None,
) -> QAAnswer:
    """Classify the question and dispatch to the matching QA module.

    Factual questions get a fixed stub (no offline fact source); modules
    that need task context decline gracefully when no task is selected.
    """
    from .classify import classify_question
    from .cooking import answer_ingredient, answer_substitute
    from .faq import retrieve_faq
    from .mrc import answer_mrc

    config = config or QAConfig()
    domain = task.domain if task else None
    current_step = None
    if task and step_cursor:
        current_step = task.steps[step_cursor - 1].instruction
    question_type = classify_question(question, current_step, domain, model)

    if question_type == FACTUAL:
        # no offline fact source: a no-answer carrying the stub line
        return no_answer(FACTUAL, FACTUAL_STUB)
    if question_type == MRC:
        if task is None or step_cursor is None:
            return no_answer(MRC)
        steps = [s.instruction for s in task.steps]
        return answer_mrc(question, steps, step_cursor, config)
    if question_type == FAQ:
        if task is None:
            return no_answer(FAQ)
        return retrieve_faq(question, list(task.faqs), config)
    if question_type == INGREDIENT:
        if task is None or task.domain != COOKING:
            return no_answer(INGREDIENT)
        return answer_ingredient(question, task)
    if question_type == SUBSTITUTE:
        if task is None or task.domain != COOKING:
            return no_answer(SUBSTITUTE)
        return answer_substitute(question, task, substitutions)
    raise ValidationError(f"unknown question type {question_type!r}")
