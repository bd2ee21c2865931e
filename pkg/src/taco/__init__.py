"""Task-assistance dialogue engine for multi-step cooking and DIY tasks.

The engine understands turn-level utterances, drives a hierarchical
finite-state dialogue, searches and re-ranks a task corpus, answers
questions about the current step, and renders templated multimodal
responses. See ``taco.engine.Engine`` for the turn pipeline and
``taco.cli`` for the command-line surface.
"""

__version__ = "0.1.0"
