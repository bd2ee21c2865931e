"""Turn-level language understanding: ASR correction, multi-label intent
recognition with state filtering, navigation parsing, task-name extraction,
domain classification, and the training-data simulator."""

from .asr import AsrRule, correct_asr, lint_rules, load_asr_rules
from .domain import DomainModel, classify_domain, train_domain_model
from .extraction import extract_task_name
from .intents import (
    ALLOWED_INTENTS,
    IntentModel,
    default_patterns,
    filter_by_state,
    recognize_intents,
)
from .navigation import parse_duration, parse_list_item, parse_navigation, parse_selection
from .simulator import SimulatorSpec, simulate_training_data, split_templates
from .train import TrainConfig, evaluate_exact_set, train_intent_model

__all__ = [
    "AsrRule", "correct_asr", "lint_rules", "load_asr_rules",
    "DomainModel", "classify_domain", "train_domain_model",
    "extract_task_name",
    "ALLOWED_INTENTS", "IntentModel", "default_patterns",
    "filter_by_state", "recognize_intents",
    "parse_duration", "parse_list_item", "parse_navigation", "parse_selection",
    "SimulatorSpec", "simulate_training_data", "split_templates",
    "TrainConfig", "evaluate_exact_set", "train_intent_model",
]
