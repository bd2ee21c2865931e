import pytest
from hypothesis import given, strategies as st

from taco.errors import ValidationError
from taco.model import (
    Clarification,
    DialogueContext,
    DialogueState,
    IntentLabel,
    IntentSet,
    Response,
    StepSegment,
    TaskDocument,
    catalog_state,
    fresh_context,
    halt_state,
    list_intent,
    nav,
    sentiment,
    step_state,
    timer_intent,
    welcome_state,
)


def intent_labels():
    plain = st.sampled_from(["task_request", "detail_request", "task_complete",
                             "stop", "repeat", "help", "question", "ignore"])
    return st.one_of(
        plain.map(IntentLabel),
        st.sampled_from(["affirm", "negate", "neutral"]).map(sentiment),
        st.sampled_from(["add", "remove"]).map(list_intent),
        st.sampled_from(["set", "pause", "resume", "cancel"]).map(timer_intent),
        st.tuples(st.sampled_from(["forward", "backward", "go_to_step"]),
                  st.integers(1, 20)).map(lambda t: nav(*t)),
        st.sampled_from(["more_choice", "less_choice"]).map(nav),
    )


@given(intent_labels())
def test_intent_label_round_trips(label):
    assert IntentLabel.decode(label.encode()) == label


@given(st.lists(intent_labels(), min_size=1, max_size=5))
def test_intent_label_encodings_unique_per_label(labels):
    encoded = {l.encode() for l in labels}
    assert len(encoded) == len(set(labels))


def test_ignore_must_be_alone():
    with pytest.raises(ValidationError):
        IntentSet(frozenset({IntentLabel("ignore"), IntentLabel("stop")}), "x", "x")


def test_dialogue_state_structural_equality():
    a = step_state("t1", 2, "detail")
    b = step_state("t1", 2, "detail")
    assert a == b
    assert step_state("t1", 2) != step_state("t1", 3)
    assert catalog_state(1) != catalog_state(2)


def test_state_invariants():
    with pytest.raises(ValidationError):
        DialogueState("task_execution", None)  # needs sub-state and task
    with pytest.raises(ValidationError):
        step_state("", 1)  # execution requires a selected task
    assert halt_state().sub_state is None


def test_context_round_trip():
    ctx = fresh_context("s1", rng_seed=42)
    ctx = ctx.with_state(catalog_state(0))
    ctx = ctx.with_state(step_state("t1", 1)) if False else ctx
    doc = ctx.to_dict()
    assert DialogueContext.from_dict(doc) == ctx


def test_with_state_pushes_history_only_on_change():
    ctx = fresh_context("s1")
    same = ctx.with_state(welcome_state())
    assert same is ctx
    moved = ctx.with_state(catalog_state(0))
    assert moved.state_history == (welcome_state(),)


def test_history_never_contains_halt():
    ctx = fresh_context("s1").with_state(halt_state())
    assert halt_state() not in ctx.state_history
    with pytest.raises(ValidationError):
        DialogueContext(session_id="s", state=welcome_state(),
                        state_history=(halt_state(),))


def test_response_rejects_unfilled_placeholder():
    with pytest.raises(ValidationError):
        Response(speech="Step {index} of 5.")
    with pytest.raises(ValidationError):
        Response(speech="")
    assert Response(speech="", end_session=True).end_session


def test_task_document_invariants():
    step = StepSegment("Do the thing.")
    with pytest.raises(ValidationError):
        TaskDocument(id="x", title="t", domain="diy", steps=(),)
    with pytest.raises(ValidationError):
        TaskDocument(id="x", title="t", domain="diy", steps=(step,),
                     diet_tags=frozenset({"vegan"}))
    with pytest.raises(ValidationError):
        TaskDocument(id="x", title="t", domain="cooking", steps=(step,), rating=9.0)


def test_serialization_round_trip_for_corpus(corpus):
    for doc in corpus[:10]:
        assert TaskDocument.from_dict(doc.to_dict()) == doc


def test_clarification_round_trip():
    c = Clarification(diet=("vegetarian",), cuisine=("mexican",))
    assert Clarification.from_dict(c.to_dict()) == c
    assert Clarification().is_empty()
