"""The per-turn orchestration pipeline: ASR correction, parallel NLU, safety
checks, search, dialogue management, response composition, scrubbing, and
persistence."""
from __future__ import annotations

import random
import threading
import time
import traceback
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace
from pathlib import Path
from typing import Callable, Optional

from .dm import FAVORITES_RE, DialogueManager, ResponderPlan, TurnEnv
from .errors import EmptyInput, NotFound, SessionBusy
from .ingest import (
    Blacklist,
    SubstitutionTable,
    corpus_by_id,
    load_blacklist,
    load_corpus,
    load_substitutions,
)
from .model import (
    CATALOG,
    COOKING,
    HALT,
    IGNORE,
    QUESTION,
    SENTIMENT,
    STEP,
    TASK_REQUEST,
    TOUCH,
    DialogueContext,
    DialogueState,
    DisplayPayload,
    IntentLabel,
    IntentSet,
    Response,
    TaskDocument,
    TurnInput,
    fresh_context,
    welcome_state,
)
from .nlg import (
    Fragment,
    TemplateRegistry,
    greet,
    render,
    render_catalog,
    render_favorites,
    render_step,
    render_step_part,
    render_utility_ack,
)
from .nlu import (
    AsrRule,
    DomainModel,
    IntentModel,
    classify_domain,
    correct_asr,
    extract_task_name,
    filter_by_state,
    load_asr_rules,
    recognize_intents,
)
from .qa import QAConfig, QuestionModel, route_and_answer
from .safety import check_profanity, check_task_request, scrub_response
from .search import (
    InvertedIndex,
    RankerModel,
    build_index,
    expand_query,
    load_vocabulary,
    rerank,
    retrieve,
)
from .store import MemoryStore, SessionStore
from .utility import fire_elapsed_timers


def data_root() -> Path:
    return Path(__file__).resolve().parent / "data"


@dataclass
class Resources:
    """Everything the engine needs, loaded once and shared read-only."""

    corpus: list[TaskDocument]
    by_id: dict[str, TaskDocument]
    index: InvertedIndex
    vocabulary: frozenset[str]
    substitutions: SubstitutionTable
    blacklist: Blacklist
    registry: TemplateRegistry
    asr_rules: list[AsrRule]
    intent_model: IntentModel
    domain_model: DomainModel
    question_model: QuestionModel
    reranker: Optional[RankerModel]
    qa_config: QAConfig = field(default_factory=QAConfig)

    @classmethod
    def load(cls, directory: str | Path | None = None) -> "Resources":
        root = Path(directory) if directory else data_root()
        corpus = load_corpus(root / "corpus.json")
        reranker_path = root / "reranker.json"
        return cls(
            corpus=corpus,
            by_id=corpus_by_id(corpus),
            index=build_index(corpus),
            vocabulary=load_vocabulary(str(root / "vocabulary.txt")),
            substitutions=load_substitutions(root / "substitutions.json"),
            blacklist=load_blacklist(
                root / "blacklist_dangerous.txt",
                root / "blacklist_professional.txt",
                root / "blacklist_profanity.txt",
            ),
            registry=TemplateRegistry.load(root / "templates.json"),
            asr_rules=load_asr_rules(root / "asr_rules.csv"),
            intent_model=IntentModel.load(root / "intent_model.json"),
            domain_model=DomainModel.load(root / "domain_model.json"),
            question_model=QuestionModel.load(root / "question_model.json"),
            reranker=RankerModel.load(reranker_path) if reranker_path.exists() else None,
        )


@dataclass(frozen=True)
class TurnRecord:
    input: TurnInput
    intents: IntentSet
    state_before: DialogueState
    state_after: DialogueState
    response: Response

    def to_dict(self) -> dict:
        return {
            "input": self.input.to_dict(),
            "intents": self.intents.to_dict(),
            "state_before": self.state_before.to_dict(),
            "state_after": self.state_after.to_dict(),
            "response": self.response.to_dict(),
        }


# touch actions arrive as argument-value pairs; each maps to the spoken
# command it is equivalent to
TOUCH_UTTERANCES = {
    "select": "number {index}",
    "next": "next",
    "back": "go back",
    "more": "show me more options",
    "less": "show me fewer options",
    "detail": "more details",
    "complete": "i am done",
    "stop": "stop",
}


def _blank_intents() -> IntentSet:
    return IntentSet(frozenset({IntentLabel(IGNORE)}), "", "")


class Engine:
    """Turn pipeline over one corpus; safe for concurrent sessions."""

    def __init__(
        self,
        resources: Resources,
        store: SessionStore | None = None,
        seed: int = 0,
        parallel: bool = True,
        clock: Callable[[], float] = time.time,
        hour_fn: Callable[[], int] | None = None,
    ):
        self.resources = resources
        self.store = store or MemoryStore()
        self.seed = seed
        self.parallel = parallel
        self.clock = clock
        self.hour_fn = hour_fn or (lambda: time.localtime(self.clock()).tm_hour)
        self.dm = DialogueManager(resources.by_id)
        self._transcripts: dict[str, list[TurnRecord]] = {}
        self._locks: dict[str, threading.Lock] = {}
        self._registry_lock = threading.Lock()
        self._session_counter = 0
        self._executor = ThreadPoolExecutor(max_workers=4) if parallel else None

    # -- sessions -------------------------------------------------------------

    def create_session(self) -> str:
        with self._registry_lock:
            self._session_counter += 1
            session_id = f"s{self._session_counter:06d}"
            self._locks[session_id] = threading.Lock()
            self._transcripts[session_id] = []
        return session_id

    def get_transcript(self, session_id: str) -> list[TurnRecord]:
        if session_id not in self._transcripts:
            raise NotFound(session_id)
        return list(self._transcripts[session_id])

    def _session_lock(self, session_id: str) -> threading.Lock:
        with self._registry_lock:
            if session_id not in self._locks:
                self._locks[session_id] = threading.Lock()
                self._transcripts.setdefault(session_id, [])
            return self._locks[session_id]

    # -- turn pipeline ---------------------------------------------------------

    def handle_turn(self, session_id: str, turn: TurnInput) -> Response:
        lock = self._session_lock(session_id)
        if not lock.acquire(blocking=False):
            raise SessionBusy(session_id)
        try:
            ctx = self.store.get(session_id)
            if ctx is None:
                ctx = fresh_context(session_id, rng_seed=self._derive_seed(session_id))
            state_before = ctx.state
            intents = _blank_intents()
            try:
                ctx, response, intents = self._run_turn(ctx, turn)
            except Exception as exc:  # degrade to an apology, never a transport error
                rng = random.Random(ctx.rng_seed)
                speech = render(self.resources.registry, "apology", rng)
                response = Response(speech=speech, debug={
                    "error": f"{type(exc).__name__}: {exc}",
                    "trace": traceback.format_exc(limit=3),
                })
                ctx = replace(ctx, turn_count=ctx.turn_count + 1,
                              rng_seed=rng.getrandbits(63))
            self.store.put(ctx)
            record = TurnRecord(turn, intents, state_before, ctx.state, response)
            self._transcripts.setdefault(session_id, []).append(record)
            return response
        finally:
            lock.release()

    def _derive_seed(self, session_id: str) -> int:
        return random.Random(f"{self.seed}:{session_id}").getrandbits(63)

    def _run_turn(
        self, ctx: DialogueContext, turn: TurnInput
    ) -> tuple[DialogueContext, Response, IntentSet]:
        res = self.resources
        now = self.clock()
        rng = random.Random(ctx.rng_seed)
        next_seed = rng.getrandbits(63)

        if ctx.state.phase == HALT:
            ctx = self._revive(ctx)

        ctx, fired = fire_elapsed_timers(ctx, now)

        # understand the input
        if turn.kind == TOUCH:
            corrected = self._touch_utterance(turn)
            raw_text = corrected
        else:
            raw_text = turn.text
            corrected = correct_asr(turn.text, ctx.state.phase, res.asr_rules)

        intents, task_name, query_domain = self._run_nlu(corrected, raw_text)

        # safety gates
        verdict = check_profanity(raw_text, res.blacklist)
        if verdict.is_safe and intents.has(TASK_REQUEST) and task_name:
            verdict = check_task_request(task_name, res.blacklist)

        filtered = filter_by_state(intents, ctx.state)

        # search on a surviving task request (favorites requests skip it)
        is_favorites = bool(FAVORITES_RE.search(corrected))
        if verdict.is_safe and filtered.has(TASK_REQUEST) and not is_favorites:
            query = task_name or corrected
            result = self._search(query, None)
            ctx = replace(ctx, search_results=result, clarification=None)

        # answer questions before composing
        qa_answer = None
        picked = self.dm._pick_label(filtered)
        if verdict.is_safe and picked.kind == QUESTION:
            task = res.by_id.get(ctx.state.selected_task) if ctx.state.selected_task else None
            cursor = None
            if task:
                cursor = ctx.state.sub_state.index if ctx.state.kind == STEP else 1
            qa_answer = route_and_answer(
                corrected, task, cursor, res.substitutions,
                res.question_model, res.qa_config)

        env = TurnEnv(query_domain=query_domain, now=now)
        first_turn = ctx.turn_count == 0
        new_ctx, plan = self.dm.transition(ctx, filtered, verdict, env)

        # a clarification answer re-runs retrieval with the stored constraints
        if plan.notes.get("apply_constraints") and new_ctx.search_results is not None:
            result = self._search(new_ctx.search_results.query, new_ctx.clarification)
            new_ctx = replace(new_ctx, search_results=result)
            plan = ResponderPlan(plan.responder_ids, new_ctx, plan.notes)

        responders = plan.responder_ids
        if first_turn and verdict.is_safe and picked.kind in (IGNORE, SENTIMENT):
            responders = ("greeting",)

        response = self._compose(responders, new_ctx, plan, rng, qa_answer, fired)
        response = scrub_response(response, res.blacklist)

        new_ctx = replace(new_ctx, turn_count=new_ctx.turn_count + 1, rng_seed=next_seed)
        return new_ctx, response, filtered

    def _search(self, query: str, constraints):
        res = self.resources
        expanded = expand_query(query, res.vocabulary)
        result = retrieve(res.index, query, expanded, constraints, k=25)
        if res.reranker is not None:
            result = rerank(res.reranker, result, res.index)
        return result

    def _revive(self, ctx: DialogueContext) -> DialogueContext:
        """A turn on a halted session resumes where the conversation left off."""
        if ctx.state_history:
            return replace(ctx, state=ctx.state_history[-1],
                           state_history=ctx.state_history[:-1])
        return replace(ctx, state=welcome_state())

    def _touch_utterance(self, turn: TurnInput) -> str:
        args = dict(turn.args)
        action = args.get("action", "")
        template = TOUCH_UTTERANCES.get(action)
        if template is None:
            raise EmptyInput(f"unknown touch action {action!r}")
        return template.format(**args) if "{" in template else template

    def _run_nlu(self, corrected: str, raw: str) -> tuple[IntentSet, Optional[str], Optional[str]]:
        """Intent recognition and task-name extraction may run in parallel;
        both join before domain classification and dialogue management."""
        res = self.resources
        if self._executor is not None:
            intent_future = self._executor.submit(recognize_intents, corrected, res.intent_model)
            name_future = self._executor.submit(extract_task_name, corrected)
            intents = intent_future.result()
            task_name = name_future.result()
        else:
            intents = recognize_intents(corrected, res.intent_model)
            task_name = extract_task_name(corrected)
        intents = IntentSet(intents.labels, raw, intents.corrected_utterance)
        query_domain = None
        if task_name and intents.has(TASK_REQUEST):
            query_domain = classify_domain(task_name, res.domain_model)
        return intents, task_name, query_domain

    # -- composition -------------------------------------------------------------

    def _compose(self, responder_ids, ctx: DialogueContext, plan: ResponderPlan,
                 rng: random.Random, qa_answer, fired) -> Response:
        fragments: list[Fragment] = []
        if fired:
            fragments.append(Fragment(speech=render(
                self.resources.registry, "timer_fired", rng)))
        for responder_id in responder_ids:
            fragments.append(self._fragment(responder_id, ctx, plan, rng, qa_answer))
        speech = " ".join(f.speech for f in fragments if f.speech).strip()
        display = next((f.display for f in fragments if f.display is not None), None)
        end_session = ctx.state.phase == HALT
        return Response(speech=speech, display=display, end_session=end_session)

    def _fragment(self, responder_id: str, ctx: DialogueContext, plan: ResponderPlan,
                  rng: random.Random, qa_answer) -> Fragment:
        res = self.resources
        registry = res.registry
        task = res.by_id.get(ctx.state.selected_task) if ctx.state.selected_task else None

        if responder_id == "greeting":
            return greet(self.hour_fn(), registry, rng)
        if responder_id == "catalog":
            if ctx.search_results is None:
                return Fragment(speech=render(registry, "no_results", rng))
            page = ctx.state.sub_state.page if ctx.state.kind == CATALOG else 0
            return render_catalog(ctx.search_results, page, res.by_id, rng, registry)
        if responder_id == "comparison":
            return self._comparison_fragment(ctx, rng)
        if responder_id == "overview":
            return self._overview_fragment(task, rng)
        if responder_id == "overview_detail":
            return self._overview_detail_fragment(task, rng)
        if responder_id == "step":
            sub = ctx.state.sub_state
            return render_step(task.steps[sub.index - 1], sub.index,
                               len(task.steps), rng, registry, task.title)
        if responder_id in ("step_detail", "step_tips"):
            sub = ctx.state.sub_state
            part = "detail" if responder_id == "step_detail" else "tips"
            return render_step_part(task.steps[sub.index - 1], sub.index,
                                    len(task.steps), part, rng, registry, task.title)
        if responder_id == "favorites":
            return render_favorites(registry, rng)
        if responder_id == "qa":
            return self._qa_fragment(qa_answer, rng)
        if responder_id == "repeat":
            transcript = self._transcripts.get(ctx.session_id) or []
            if transcript:
                return Fragment(speech=transcript[-1].response.speech)
            return Fragment(speech=render(registry, "repeat_empty", rng))
        if responder_id == "help":
            return Fragment(speech=self._help_speech(ctx, rng))
        if responder_id.startswith("list_") or responder_id.startswith("timer_"):
            base, _, outcome = responder_id.rpartition("_")
            return render_utility_ack(
                base, registry, rng,
                item=plan.notes.get("item", ""),
                seconds=plan.notes.get("seconds"),
                ok=outcome == "ack",
            )
        # plain template responders: goodbye, clarify_question, welcome_prompt,
        # no_problem, choose_prompt, no_more_detail, last_step_prompt, completed,
        # safety_*, apology, no_results
        return Fragment(speech=render(registry, responder_id, rng))

    def _help_speech(self, ctx: DialogueContext, rng: random.Random) -> str:
        registry = self.resources.registry
        contextual_id = f"help_{ctx.state.kind}"
        if contextual_id in registry.entries:
            return render(registry, contextual_id, rng)
        return render(registry, "help", rng)

    def _comparison_fragment(self, ctx: DialogueContext, rng: random.Random) -> Fragment:
        res = self.resources
        if ctx.search_results is None or not ctx.search_results.candidates:
            return Fragment(speech=render(res.registry, "no_results", rng))
        page = self.dm.current_page(ctx)
        visible = ctx.search_results.candidates[page * 3 : page * 3 + 3]
        lead = render(res.registry, "comparison", rng)
        clauses = []
        ordinals = ("The first", "The second", "The third")
        for i, candidate in enumerate(visible):
            doc = res.by_id[candidate.doc_id]
            bits = [f"{ordinals[i]}, {doc.title}, has {len(doc.steps)} steps"]
            if doc.rating is not None:
                bits.append(f"is rated {doc.rating:g} stars")
            if doc.estimated_time is not None:
                bits.append(f"takes about {doc.estimated_time} minutes")
            clauses.append(" and ".join(bits) + ".")
        return Fragment(speech=f"{lead} " + " ".join(clauses))

    def _overview_fragment(self, task: TaskDocument, rng: random.Random) -> Fragment:
        registry = self.resources.registry
        lead = render(registry, "overview", rng, {"title": task.title})
        bits = []
        if task.rating is not None:
            bits.append(f"It's rated {task.rating:g} stars.")
        if task.estimated_time is not None:
            bits.append(f"It takes about {task.estimated_time} minutes.")
        if task.domain == COOKING and task.ingredients:
            bits.append(f"You'll need {len(task.ingredients)} ingredients.")
        bits.append(f"There are {len(task.steps)} steps.")
        closing = render(registry, "overview_confirm", rng)
        display = DisplayPayload(kind="info", title=task.title, body=" ".join(bits))
        return Fragment(speech=f"{lead} " + " ".join(bits) + f" {closing}",
                        display=display)

    def _overview_detail_fragment(self, task: TaskDocument, rng: random.Random) -> Fragment:
        registry = self.resources.registry
        if task.domain == COOKING and task.ingredients:
            listing = ", ".join(
                f"{line.quantity} {line.name}" if line.quantity else line.name
                for line in task.ingredients
            )
            speech = render(registry, "overview_detail_recipe", rng) + " " + listing + "."
        else:
            speech = render(registry, "overview_detail_diy", rng,
                            {"steps": str(len(task.steps))})
        return Fragment(speech=speech)

    def _qa_fragment(self, qa_answer, rng: random.Random) -> Fragment:
        registry = self.resources.registry
        if qa_answer is None or (not qa_answer.answered and not qa_answer.text):
            return Fragment(speech=render(registry, "qa_decline", rng))
        return Fragment(speech=qa_answer.text)
