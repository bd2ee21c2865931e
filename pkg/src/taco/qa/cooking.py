"""Ingredient and substitution answers for the selected recipe."""
from __future__ import annotations

import re
from typing import Optional

from ..ingest import SubstitutionTable
from ..model import TaskDocument
from ..text import strip_punct
from .router import (
    INGREDIENT,
    INGREDIENT_INFO,
    QAAnswer,
    SUBSTITUTE,
    SUBSTITUTE_INFO,
    no_answer,
)

SUBSTITUTE_MISS = "I don't know a good substitute for that one, sorry."


def _find_mention(question: str, names: list[str]) -> Optional[str]:
    """Longest whole-word ingredient mention in the question."""
    normalized = strip_punct(question)
    best = None
    for name in names:
        pattern = r"\b" + re.escape(name) + r"s?\b"
        if re.search(pattern, normalized) and (best is None or len(name) > len(best)):
            best = name
    return best


def answer_ingredient(question: str, recipe: TaskDocument) -> QAAnswer:
    """Quantity lookup for the longest recipe ingredient named in the question."""
    names = [line.name for line in recipe.ingredients]
    mention = _find_mention(question, names)
    if mention is None:
        return no_answer(INGREDIENT)
    line = next(l for l in recipe.ingredients if l.name == mention)
    if line.quantity:
        text = f"The recipe calls for {line.quantity} of {line.name}."
    else:
        text = f"Yes, the recipe uses {line.name}."
    return QAAnswer(INGREDIENT_INFO, INGREDIENT, text)


def answer_substitute(question: str, recipe: TaskDocument,
                      table: SubstitutionTable) -> QAAnswer:
    """First substitution suggestion for the mentioned ingredient; recipe
    ingredients are matched before the wider substitution table."""
    recipe_names = [line.name for line in recipe.ingredients]
    mention = _find_mention(question, recipe_names)
    if mention is None:
        mention = _find_mention(question, sorted(table.entries))
    if mention is None:
        return no_answer(SUBSTITUTE)
    suggestions = table.lookup(mention)
    if not suggestions:
        return no_answer(SUBSTITUTE, SUBSTITUTE_MISS)
    text = f"Instead of {mention}, you could use {suggestions[0]}."
    return QAAnswer(SUBSTITUTE_INFO, SUBSTITUTE, text)
