"""Hierarchical finite-state dialogue management.

The transition table maps (state kind, intent key) to a rule with declared
target state kinds, so the whole graph can be dumped and model-checked:
phase guards keep Task Execution locked, invalid commands stay put and get
contextual help, and every state change pushes the prior state onto the
history stack.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field, replace
from typing import Callable, Optional

from .errors import EmptyHistory, InvalidTimerState, ItemNotFound, ValidationError
from .model import (
    BACKWARD,
    CATALOG,
    CLARIFICATION,
    COMPARISON,
    COMPLETED,
    COOKING,
    DETAIL,
    FORWARD,
    GO_TO_STEP,
    HALT,
    IGNORE,
    INSTRUCTION,
    LESS_CHOICE,
    MORE_CHOICE,
    OVERVIEW,
    STEP,
    TASK_EXECUTION,
    TIPS,
    WELCOME,
    Clarification,
    DialogueContext,
    IntentLabel,
    IntentSet,
    NavCommand,
    TaskDocument,
    catalog_state,
    clarification_state,
    comparison_state,
    completed_state,
    halt_state,
    overview_state,
    step_state,
)
from .nlu.intents import ALLOWED_INTENTS
from .nlu.navigation import parse_duration, parse_list_item, parse_selection
from .safety import DANGEROUS_TASK, PROFANE, PROFESSIONAL_TASK, SafetyVerdict
from . import utility

PAGE_SIZE = 3

SEARCH_KINDS = (WELCOME, CLARIFICATION, CATALOG, COMPARISON)
EXECUTION_KINDS = (STEP, COMPLETED)
POP_TARGETS = SEARCH_KINDS + (OVERVIEW,)

FAVORITES_RE = re.compile(
    r"\bfavou?rites?\b|\brecommend(?:ation)?s?\b|\bsuggest(?:ion)?s?\b"
    r"|\bwhat\s+can\s+you\s+(?:do|cook|make)\b"
)

# spoken variants for diet/cuisine tags used by the clarification parser
DIET_ALIASES = {
    "vegetarian": ("vegetarian", "veggie", "no meat", "meatless"),
    "vegan": ("vegan", "plant based", "no animal products"),
    "nut-free": ("nut free", "nuts free", "no nuts", "nut allergy", "without nuts"),
    "gluten-free": ("gluten free", "no gluten", "gluten allergy"),
    "dairy-free": ("dairy free", "no dairy", "lactose", "without milk"),
}
CUISINE_ALIASES = {
    "chinese": ("chinese",), "mexican": ("mexican",), "italian": ("italian",),
    "indian": ("indian",), "japanese": ("japanese",), "thai": ("thai",),
    "french": ("french",), "korean": ("korean",), "american": ("american",),
    "mediterranean": ("mediterranean", "greek"),
}

PRIORITY = (
    "stop",
    "navigation:go_to_step", "navigation:forward", "navigation:backward",
    "navigation:more_choice", "navigation:less_choice",
    "task_complete", "detail_request",
    "task_request",
    "sentiment:affirm", "sentiment:negate", "sentiment:neutral",
    "question",
    "list:add", "list:remove",
    "timer:set", "timer:pause", "timer:resume", "timer:cancel",
    "repeat", "help",
    "ignore",
)


@dataclass(frozen=True)
class ResponderPlan:
    """Which response generators run this turn, over which context."""

    responder_ids: tuple[str, ...]
    context_snapshot: DialogueContext
    notes: dict = field(default_factory=dict)

    def __post_init__(self):
        if not self.responder_ids:
            raise ValidationError("a plan needs at least one responder")


@dataclass(frozen=True)
class TurnEnv:
    """Per-call inputs the handlers need besides the context itself."""

    query_domain: Optional[str] = None
    now: float = 0.0


Handler = Callable[
    ["DialogueManager", DialogueContext, IntentSet, IntentLabel, TurnEnv],
    tuple[DialogueContext, tuple[str, ...], dict],
]


@dataclass(frozen=True)
class TransitionRule:
    name: str
    targets: tuple[str, ...]  # abstract state kinds this rule may land in
    handler: Handler


class DialogueManager:
    """Pure state-transition core over an immutable corpus."""

    def __init__(self, corpus: dict[str, TaskDocument]):
        self.corpus = corpus
        self.table = build_transition_table()

    # -- helpers ------------------------------------------------------------

    def _task(self, ctx: DialogueContext) -> Optional[TaskDocument]:
        if ctx.state.selected_task:
            return self.corpus.get(ctx.state.selected_task)
        return None

    def _step_count(self, ctx: DialogueContext) -> int:
        task = self._task(ctx)
        return len(task.steps) if task else 0

    def _result_count(self, ctx: DialogueContext) -> int:
        return len(ctx.search_results.candidates) if ctx.search_results else 0

    def _max_page(self, ctx: DialogueContext) -> int:
        return max(0, math.ceil(self._result_count(ctx) / PAGE_SIZE) - 1)

    def current_page(self, ctx: DialogueContext) -> int:
        if ctx.state.kind == CATALOG:
            return ctx.state.sub_state.page
        for state in reversed(ctx.state_history):
            if state.kind == CATALOG:
                return state.sub_state.page
        return 0

    # -- spec operations ----------------------------------------------------

    def transition(
        self,
        ctx: DialogueContext,
        intents: IntentSet,
        safety: SafetyVerdict,
        env: TurnEnv | None = None,
    ) -> tuple[DialogueContext, ResponderPlan]:
        """Apply the highest-priority actionable label under the phase guards."""
        env = env or TurnEnv()
        if safety.kind == DANGEROUS_TASK:
            new_ctx = ctx.with_state(halt_state())
            return new_ctx, ResponderPlan(("safety_dangerous",), new_ctx)
        if safety.kind == PROFANE:
            return ctx, ResponderPlan(("safety_profanity",), ctx)
        if safety.kind == PROFESSIONAL_TASK:
            return ctx, ResponderPlan(("safety_professional",), ctx)

        if ctx.state.phase == HALT:
            return ctx, ResponderPlan(("help",), ctx)

        label = self._pick_label(intents)
        rule = self.table.get((ctx.state.kind, label.key))
        if rule is None:
            # invalid command for this state: stay put, offer contextual help
            return ctx, ResponderPlan(("help",), ctx)
        new_ctx, responders, notes = rule.handler(self, ctx, intents, label, env)
        if new_ctx.state.kind not in rule.targets:
            raise ValidationError(
                f"rule {rule.name} landed in undeclared state {new_ctx.state.kind}")
        return new_ctx, ResponderPlan(tuple(responders), new_ctx, notes)

    def _pick_label(self, intents: IntentSet) -> IntentLabel:
        by_key = {label.key: label for label in intents.labels}
        for key in PRIORITY:
            if key in by_key:
                return by_key[key]
        return IntentLabel(IGNORE)

    def navigate(self, ctx: DialogueContext, cmd: NavCommand) -> DialogueContext:
        """Page and step movement with clamping; the step part resets to the
        instruction on any actual step change."""
        kind = ctx.state.kind
        if cmd.kind in (MORE_CHOICE, LESS_CHOICE):
            if kind not in (CATALOG, COMPARISON):
                return ctx
            page = self.current_page(ctx)
            page += 1 if cmd.kind == MORE_CHOICE else -1
            page = min(max(page, 0), self._max_page(ctx))
            return ctx.with_state(catalog_state(page))
        if kind != STEP:
            return ctx
        total = self._step_count(ctx)
        index = ctx.state.sub_state.index
        if cmd.kind == FORWARD:
            target = index + cmd.count
        elif cmd.kind == BACKWARD:
            target = index - cmd.count
        else:  # go_to_step
            if cmd.count > total:
                return ctx
            target = cmd.count
        target = min(max(target, 1), total)
        if target == index:
            return ctx
        return ctx.with_state(step_state(ctx.state.selected_task, target, INSTRUCTION))

    def handle_detail_request(self, ctx: DialogueContext) -> ResponderPlan:
        """Advance instruction -> detail -> tips, skipping absent parts."""
        if ctx.state.kind != STEP:
            return ResponderPlan(("help",), ctx)
        task = self._task(ctx)
        sub = ctx.state.sub_state
        step = task.steps[sub.index - 1]
        order = [INSTRUCTION, DETAIL, TIPS]
        available = {INSTRUCTION: True, DETAIL: step.detail is not None,
                     TIPS: step.tips is not None}
        position = order.index(sub.part)
        for part in order[position + 1 :]:
            if available[part]:
                new_ctx = ctx.with_state(
                    step_state(ctx.state.selected_task, sub.index, part))
                responder = "step_detail" if part == DETAIL else "step_tips"
                return ResponderPlan((responder,), new_ctx)
        return ResponderPlan(("no_more_detail",), ctx)

    def clarify_recipe(self, ctx: DialogueContext,
                       constraints: Optional[Clarification] = None) -> DialogueContext:
        """Without constraints: ask the single-turn diet/cuisine question.
        With constraints (parsed from the answer): record them and move on
        to the catalog."""
        if constraints is None:
            return ctx.with_state(clarification_state())
        return replace(ctx, clarification=constraints).with_state(catalog_state(0))

    def pop_state(self, ctx: DialogueContext) -> DialogueContext:
        """Return to the top of the history stack; never lets Execution
        re-enter an earlier phase."""
        if not ctx.state_history:
            raise EmptyHistory(ctx.session_id)
        top = ctx.state_history[-1]
        if ctx.state.phase == TASK_EXECUTION and top.phase != TASK_EXECUTION:
            return ctx
        return replace(ctx, state=top, state_history=ctx.state_history[:-1])

    def parse_constraints(self, utterance: str) -> Clarification:
        """Keyword-match the clarification answer against the tag vocabulary;
        anything without a recognized tag counts as no preference."""
        text = " " + " ".join(utterance.lower().split()) + " "
        diet = []
        for tag, aliases in DIET_ALIASES.items():
            if any(alias in text for alias in aliases + (tag,)):
                diet.append(tag)
        cuisine = []
        for tag, aliases in CUISINE_ALIASES.items():
            if any(alias in text for alias in aliases):
                cuisine.append(tag)
        return Clarification(diet=tuple(sorted(diet)), cuisine=tuple(sorted(cuisine)))

    # -- graph dump and model checking ---------------------------------------

    def dump_graph(self) -> str:
        """DOT-style text of the abstract transition graph for review."""
        lines = ["digraph dialogue {"]
        for kind in list(SEARCH_KINDS) + [OVERVIEW] + list(EXECUTION_KINDS) + [HALT]:
            lines.append(f'  "{kind}";')
        for (kind, intent_key), rule in sorted(self.table.items()):
            for target in rule.targets:
                lines.append(f'  "{kind}" -> "{target}" [label="{intent_key}"];')
        lines.append("}")
        return "\n".join(lines)

    def coverage_gaps(self) -> list[tuple[str, str]]:
        """(state, allowed intent) pairs missing a transition entry."""
        gaps = []
        for kind, allowed in ALLOWED_INTENTS.items():
            if kind == HALT:
                continue  # terminal: the engine starts a fresh conversation
            for key in sorted(allowed):
                if (kind, key) not in self.table:
                    gaps.append((kind, key))
        return gaps

    def execution_lock_edges(self) -> list[tuple[str, str, str]]:
        """Declared edges that would leave Execution for an earlier phase."""
        bad = []
        pre_execution = set(SEARCH_KINDS) | {OVERVIEW}
        for (kind, intent_key), rule in self.table.items():
            if kind in EXECUTION_KINDS:
                for target in rule.targets:
                    if target in pre_execution:
                        bad.append((kind, intent_key, target))
        return bad

    def halt_edges_outside_stop(self) -> list[tuple[str, str]]:
        """Entries targeting Halt through anything but the stop intent."""
        return [
            (kind, intent_key)
            for (kind, intent_key), rule in self.table.items()
            if HALT in rule.targets and intent_key != "stop"
        ]

    def reachable_kinds(self, start: str = WELCOME) -> set[str]:
        """Exhaustive BFS over the abstract graph."""
        seen = {start}
        frontier = [start]
        while frontier:
            kind = frontier.pop()
            for (source, _), rule in self.table.items():
                if source != kind:
                    continue
                for target in rule.targets:
                    if target not in seen:
                        seen.add(target)
                        frontier.append(target)
        return seen


# --- handlers ----------------------------------------------------------------

def _h_stop(dm, ctx, intents, label, env):
    return ctx.with_state(halt_state()), ("goodbye",), {}


def _h_help(dm, ctx, intents, label, env):
    return ctx, ("help",), {}


def _h_repeat(dm, ctx, intents, label, env):
    return ctx, ("repeat",), {}


def _h_question(dm, ctx, intents, label, env):
    return ctx, ("qa",), {}


def _h_task_request(dm, ctx, intents, label, env):
    if FAVORITES_RE.search(intents.corrected_utterance):
        return ctx, ("favorites",), {}
    if env.query_domain == COOKING and ctx.clarification is None:
        return dm.clarify_recipe(ctx), ("clarify_question",), {}
    return ctx.with_state(catalog_state(0)), ("catalog",), {}


def _h_clarify_answer(dm, ctx, intents, label, env):
    constraints = dm.parse_constraints(intents.corrected_utterance)
    new_ctx = dm.clarify_recipe(ctx, constraints)
    return new_ctx, ("catalog",), {"apply_constraints": True}


def _h_page(dm, ctx, intents, label, env):
    return dm.navigate(ctx, label.nav), ("catalog",), {}


def _arrival_responder(ctx: DialogueContext) -> str:
    return {
        WELCOME: "welcome_prompt", CLARIFICATION: "clarify_question",
        CATALOG: "catalog", COMPARISON: "comparison", OVERVIEW: "overview",
        STEP: "step", COMPLETED: "completed",
    }.get(ctx.state.kind, "help")


def _h_pop(dm, ctx, intents, label, env):
    try:
        new_ctx = dm.pop_state(ctx)
    except EmptyHistory:
        return ctx, ("help",), {}
    return new_ctx, (_arrival_responder(new_ctx),), {}


def _h_select(dm, ctx, intents, label, env):
    if not dm._result_count(ctx):
        return ctx, ("help",), {}
    page = dm.current_page(ctx)
    start = page * PAGE_SIZE
    visible = ctx.search_results.candidates[start : start + PAGE_SIZE]
    if not visible:
        return ctx, ("choose_prompt",), {}
    pick = parse_selection(intents.corrected_utterance)
    if pick == -1:
        pick = len(visible)
    if pick is None and len(visible) == 1:
        pick = 1
    if pick is None or not 1 <= pick <= len(visible):
        return ctx, ("choose_prompt",), {}
    doc_id = visible[pick - 1].doc_id
    return ctx.with_state(overview_state(doc_id)), ("overview",), {}


def _h_negate_search(dm, ctx, intents, label, env):
    return ctx, ("no_problem",), {}


def _h_compare(dm, ctx, intents, label, env):
    return ctx.with_state(comparison_state()), ("comparison",), {}


def _h_commit(dm, ctx, intents, label, env):
    new_ctx = ctx.with_state(step_state(ctx.state.selected_task, 1, INSTRUCTION))
    return new_ctx, ("step",), {}


def _h_overview_detail(dm, ctx, intents, label, env):
    return ctx, ("overview_detail",), {}


def _h_navigate_step(dm, ctx, intents, label, env):
    cmd = label.nav
    if cmd.kind == GO_TO_STEP and cmd.count > dm._step_count(ctx):
        return ctx, ("help",), {"out_of_range": True}
    return dm.navigate(ctx, cmd), ("step",), {}


def _h_step_affirm(dm, ctx, intents, label, env):
    if ctx.state.sub_state.index >= dm._step_count(ctx):
        return ctx, ("last_step_prompt",), {}
    return dm.navigate(ctx, NavCommand(FORWARD, 1)), ("step",), {}


def _h_detail(dm, ctx, intents, label, env):
    plan = dm.handle_detail_request(ctx)
    return plan.context_snapshot, plan.responder_ids, dict(plan.notes)


def _h_complete(dm, ctx, intents, label, env):
    new_ctx = ctx.with_state(completed_state(ctx.state.selected_task))
    return new_ctx, ("completed",), {}


def _h_completed_back(dm, ctx, intents, label, env):
    total = dm._step_count(ctx)
    new_ctx = ctx.with_state(step_state(ctx.state.selected_task, total, INSTRUCTION))
    return new_ctx, ("step",), {}


def _h_welcome_prompt(dm, ctx, intents, label, env):
    return ctx, ("welcome_prompt",), {}


def _h_list(dm, ctx, intents, label, env):
    action = label.variant
    item = parse_list_item(intents.corrected_utterance, action)
    if item is None:
        return ctx, (f"list_{action}_miss",), {"item": ""}
    if action == "add":
        return utility.list_add(ctx, item), ("list_add_ack",), {"item": item}
    try:
        new_ctx = utility.list_remove(ctx, item)
    except ItemNotFound:
        return ctx, ("list_remove_miss",), {"item": item}
    return new_ctx, ("list_remove_ack",), {"item": item}


def _h_timer(dm, ctx, intents, label, env):
    action = label.variant
    try:
        if action == "set":
            seconds = parse_duration(intents.corrected_utterance)
            if seconds is None:
                return ctx, ("timer_set_miss",), {}
            new_ctx = utility.timer_set(ctx, seconds, env.now)
            return new_ctx, ("timer_set_ack",), {"seconds": seconds}
        if action == "pause":
            return utility.timer_pause(ctx, env.now), ("timer_pause_ack",), {}
        if action == "resume":
            return utility.timer_resume(ctx, env.now), ("timer_resume_ack",), {}
        return utility.timer_cancel(ctx, env.now), ("timer_cancel_ack",), {}
    except (InvalidTimerState, ValueError):
        return ctx, (f"timer_{action}_miss",), {}


# --- the table ----------------------------------------------------------------

def build_transition_table() -> dict[tuple[str, str], TransitionRule]:
    table: dict[tuple[str, str], TransitionRule] = {}

    def add(kinds, intent_keys, name, targets, handler):
        for kind in kinds:
            for key in intent_keys:
                table[(kind, key)] = TransitionRule(name, tuple(targets), handler)

    everywhere = SEARCH_KINDS + (OVERVIEW,) + EXECUTION_KINDS

    # universal utilities (specific rules below overwrite where needed)
    for kind in everywhere:
        add([kind], ["stop"], "stop", (HALT,), _h_stop)
        add([kind], ["help"], "help", (kind,), _h_help)
        add([kind], ["ignore"], "contextual_help", (kind,), _h_help)
        add([kind], ["repeat"], "repeat", (kind,), _h_repeat)
        add([kind], ["question"], "question", (kind,), _h_question)
        add([kind], ["sentiment:neutral"], "neutral_prompt", (kind,), _h_help)

    # task search
    add([WELCOME], ["task_request"], "search",
        (CLARIFICATION, CATALOG, WELCOME), _h_task_request)
    add([WELCOME], ["sentiment:affirm", "sentiment:negate"], "welcome_prompt",
        (WELCOME,), _h_welcome_prompt)

    add([CLARIFICATION], ["task_request"], "search",
        (CLARIFICATION, CATALOG), _h_task_request)
    add([CLARIFICATION],
        ["sentiment:affirm", "sentiment:negate", "sentiment:neutral", "ignore"],
        "clarify_answer", (CATALOG,), _h_clarify_answer)
    add([CLARIFICATION], ["navigation:backward"], "back", POP_TARGETS, _h_pop)

    add([CATALOG], ["task_request"], "search",
        (CLARIFICATION, CATALOG), _h_task_request)
    add([CATALOG], ["navigation:more_choice", "navigation:less_choice"], "page",
        (CATALOG,), _h_page)
    add([CATALOG], ["navigation:backward"], "back", POP_TARGETS, _h_pop)
    add([CATALOG], ["sentiment:affirm"], "select", (OVERVIEW, CATALOG), _h_select)
    add([CATALOG], ["sentiment:negate"], "rephrase", (CATALOG,), _h_negate_search)
    add([CATALOG], ["detail_request"], "compare", (COMPARISON,), _h_compare)

    add([COMPARISON], ["task_request"], "search",
        (CLARIFICATION, CATALOG, COMPARISON), _h_task_request)
    add([COMPARISON], ["navigation:more_choice", "navigation:less_choice"], "page",
        (CATALOG,), _h_page)
    add([COMPARISON], ["navigation:backward"], "back", POP_TARGETS, _h_pop)
    add([COMPARISON], ["sentiment:affirm"], "select", (OVERVIEW, COMPARISON), _h_select)
    add([COMPARISON], ["sentiment:negate"], "back", POP_TARGETS, _h_pop)
    add([COMPARISON], ["detail_request"], "compare_again", (COMPARISON,), _h_compare)

    # task preparation
    add([OVERVIEW], ["task_request"], "search",
        (CLARIFICATION, CATALOG, OVERVIEW), _h_task_request)
    add([OVERVIEW], ["sentiment:affirm", "navigation:forward"], "commit", (STEP,), _h_commit)
    add([OVERVIEW], ["sentiment:negate", "navigation:backward"], "back",
        POP_TARGETS, _h_pop)
    add([OVERVIEW], ["detail_request"], "overview_detail", (OVERVIEW,), _h_overview_detail)
    add([OVERVIEW], ["list:add", "list:remove"], "list", (OVERVIEW,), _h_list)

    # task execution (never targets an earlier phase)
    add([STEP], ["navigation:forward", "navigation:backward", "navigation:go_to_step"],
        "step_nav", (STEP,), _h_navigate_step)
    add([STEP], ["sentiment:affirm"], "step_advance", (STEP,), _h_step_affirm)
    add([STEP], ["sentiment:negate"], "step_help", (STEP,), _h_help)
    add([STEP], ["detail_request"], "detail", (STEP,), _h_detail)
    add([STEP], ["task_complete"], "complete", (COMPLETED,), _h_complete)
    add([STEP], ["list:add", "list:remove"], "list", (STEP,), _h_list)
    add([STEP], ["timer:set", "timer:pause", "timer:resume", "timer:cancel"],
        "timer", (STEP,), _h_timer)

    add([COMPLETED], ["navigation:backward"], "review", (STEP,), _h_completed_back)
    add([COMPLETED], ["task_complete"], "already_done", (COMPLETED,), _h_help)
    add([COMPLETED], ["sentiment:affirm", "sentiment:negate"], "completed_prompt",
        (COMPLETED,), _h_help)
    add([COMPLETED], ["list:add", "list:remove"], "list", (COMPLETED,), _h_list)
    add([COMPLETED], ["timer:set", "timer:pause", "timer:resume", "timer:cancel"],
        "timer", (COMPLETED,), _h_timer)

    return table
