import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy import sparse

from taco.engine import data_root
from taco.errors import (
    EmptyInput,
    InsufficientData,
    SpecError,
    UnparseableNavigation,
    ValidationError,
)
from taco.model import IGNORE, catalog_state, fresh_context, step_state, welcome_state
from taco.nlu import (
    AsrRule,
    IntentModel,
    classify_domain,
    correct_asr,
    filter_by_state,
    lint_rules,
    load_asr_rules,
    parse_duration,
    parse_list_item,
    parse_navigation,
    parse_selection,
    recognize_intents,
    simulate_training_data,
    split_templates,
    train_intent_model,
)
from taco.nlu.features import NgramFeaturizer
from taco.nlu.linear import GdConfig, fit_logistic, loss_and_grad
from taco.nlu.simulator import SimulatorSpec
from taco.nlu.train import TrainConfig


# --- asr correction -----------------------------------------------------------

RULES = [
    AsrRule("step for", "step four", frozenset({"task_execution"})),
    AsrRule("next stop", "next step", frozenset({"task_execution"})),
    AsrRule("show me moor", "show me more", frozenset()),
]


def test_asr_corrects_in_scope_phase():
    assert correct_asr("go to step for", "task_execution", RULES) == "go to step four"


def test_asr_rule_scoped_out_of_phase():
    assert correct_asr("step for", "task_search", RULES) == "step for"


def test_asr_identity_when_nothing_matches():
    assert correct_asr("Hello There", "task_search", RULES) == "hello there"


def test_asr_idempotent_on_bundled_table():
    rules = load_asr_rules(data_root() / "asr_rules.csv")
    samples = ["go to step for", "next stop please", "show me moor options",
               "time her for five minutes"]
    for phase in ("task_execution", "task_search"):
        for text in samples:
            once = correct_asr(text, phase, rules)
            assert correct_asr(once, phase, rules) == once


def test_asr_lint_rejects_feeding_rules():
    bad = [AsrRule("step for", "step four", frozenset()),
           AsrRule("step four", "step 4", frozenset())]
    with pytest.raises(ValidationError):
        lint_rules(bad)


# --- navigation parsing ---------------------------------------------------------

@pytest.mark.parametrize("text,kind,count", [
    ("go to step four", "go_to_step", 4),
    ("step 12", "go_to_step", 12),
    ("jump to the fourth step", "go_to_step", 4),
    ("next", "forward", 1),
    ("skip ahead 3 steps", "forward", 3),
    ("continue", "forward", 1),
    ("go back two steps", "backward", 2),
    ("previous step", "backward", 1),
    ("back", "backward", 1),
    ("show me more options", "more_choice", 1),
    ("what else do you have", "more_choice", 1),
    ("show me fewer options", "less_choice", 1),
])
def test_parse_navigation(text, kind, count):
    cmd = parse_navigation(text)
    assert cmd.kind == kind
    assert cmd.count == count


def test_parse_navigation_unparseable():
    with pytest.raises(UnparseableNavigation):
        parse_navigation("bake the bread")


@pytest.mark.parametrize("text,pick", [
    ("the first one", 1),
    ("number two", 2),
    ("the third one please", 3),
    ("option 2", 2),
    ("the last one", -1),
    ("none of those", None),
])
def test_parse_selection(text, pick):
    assert parse_selection(text) == pick


@pytest.mark.parametrize("text,seconds", [
    ("set a timer for five minutes", 300),
    ("timer for 30 seconds", 30),
    ("remind me in one hour", 3600),
    ("set a timer for 1 hour and 30 minutes", 5400),
    ("set a timer", None),
])
def test_parse_duration(text, seconds):
    assert parse_duration(text) == seconds


def test_parse_list_item():
    assert parse_list_item("add flour to my shopping list", "add") == "flour"
    assert parse_list_item("put some olive oil on the list", "add") == "olive oil"
    assert parse_list_item("remove flour from my list", "remove") == "flour"


# --- recognition + filtering ------------------------------------------------------

@pytest.fixture(scope="module")
def model():
    return IntentModel.load(data_root() / "intent_model.json")


def keys(intents):
    return sorted(l.key for l in intents.labels)


def test_mixed_intent_golden(model):
    got = recognize_intents("No, I want to know how to wash my car.", model)
    assert keys(got) == ["sentiment:negate", "task_request"]


def test_blank_is_ignore(model):
    got = recognize_intents("   ", model)
    assert keys(got) == ["ignore"]


def test_repeat_pattern(model):
    assert keys(recognize_intents("repeat that please", model)) == ["repeat"]


def test_greeting_is_ignore(model):
    assert keys(recognize_intents("hello there", model)) == ["ignore"]


def test_timer_words_suppress_navigation(model):
    got = recognize_intents("continue the timer", model)
    assert keys(got) == ["timer:resume"]
    got = recognize_intents("stop the timer", model)
    assert keys(got) == ["timer:cancel"]


def test_navigation_carries_parsed_command(model):
    got = recognize_intents("go to step four", model)
    nav = next(l for l in got.labels if l.kind == "navigation")
    assert nav.nav.kind == "go_to_step" and nav.nav.count == 4


def test_filter_drops_catalog_only_commands_in_execution(model):
    intents = recognize_intents("show me more options", model)
    filtered = filter_by_state(intents, step_state("t", 1))
    assert keys(filtered) == ["ignore"]


def test_filter_keeps_stop_everywhere(model):
    intents = recognize_intents("stop", model)
    for state in (welcome_state(), catalog_state(0), step_state("t", 2)):
        assert keys(filter_by_state(intents, state)) == ["stop"]


def test_filter_keeps_mixed_request_in_catalog(model):
    intents = recognize_intents("no, i want to know how to wash my car", model)
    filtered = filter_by_state(intents, catalog_state(0))
    assert keys(filtered) == ["sentiment:negate", "task_request"]


def test_filter_output_subset_plus_ignore(model):
    utterances = ["next", "stop", "how to wash a car", "any tips", "pause the timer"]
    states = [welcome_state(), catalog_state(2), step_state("t", 3)]
    for u in utterances:
        intents = recognize_intents(u, model)
        for state in states:
            filtered = filter_by_state(intents, state)
            assert filtered.labels
            extra = filtered.labels - intents.labels
            assert all(l.kind == IGNORE for l in extra)


# --- simulator --------------------------------------------------------------------

SPEC = SimulatorSpec(
    templates={
        "task_request": ("i want to make {dish}", "how to {diy}"),
        "sentiment:negate": ("no", "nope"),
        "repeat": ("repeat that", "say it again"),
    },
    slot_values={"dish": ("tacos", "soup"), "diy": ("wash a car",)},
    noise_tokens=("um",),
)


def test_simulator_direct_substitution():
    rows = simulate_training_data(SPEC, 50, seed=1)
    assert all(("{" not in u) for u, _ in rows)
    assert any(u.startswith("i want to make") and labels == {"task_request"}
               for u, labels in rows)


def test_simulator_mixed_intent_composition():
    rows = simulate_training_data(SPEC, 300, seed=3)
    mixed = [r for r in rows if r[1] == {"sentiment:negate", "task_request"}]
    assert mixed
    assert any(u.startswith(("no", "nope")) for u, _ in mixed)


def test_simulator_deterministic():
    a = simulate_training_data(SPEC, 200, seed=9)
    b = simulate_training_data(SPEC, 200, seed=9)
    assert a == b


def test_simulator_unresolved_placeholder():
    with pytest.raises(SpecError):
        SimulatorSpec(templates={"x": ("do {missing}",)}, slot_values={})


def test_split_templates_disjoint():
    spec = SimulatorSpec(
        templates={"a": tuple(f"t{i} {{dish}}" for i in range(8))},
        slot_values={"dish": ("x",)})
    train, held = split_templates(spec, 0.25, seed=4)
    assert set(train.templates["a"]).isdisjoint(held.templates["a"])
    assert len(held.templates["a"]) == 2


# --- training ----------------------------------------------------------------------

def toy_data():
    rows = []
    for i in range(30):
        rows.append((f"please play song number {i}", frozenset({"play"})))
        rows.append((f"turn off lamp {i}", frozenset({"off"})))
    return rows


def test_training_reaches_low_loss_on_separable_data():
    model = train_intent_model(toy_data(), TrainConfig(
        min_count=20, learning_rate=4.0, max_epochs=2000, l2=0.0))
    assert model.linear.train_loss < 0.01


def test_training_insufficient_data():
    with pytest.raises(InsufficientData):
        train_intent_model([], TrainConfig())
    with pytest.raises(InsufficientData, match="rare"):
        train_intent_model(
            [("hello world", frozenset({"rare"}))] * 5
            + [("goodbye now", frozenset({"common"}))] * 25,
            TrainConfig(min_count=20))


def test_logistic_gradient_matches_finite_differences():
    rng = np.random.default_rng(0)
    X = sparse.csr_matrix((rng.random((12, 7)) < 0.4).astype(float))
    Y = (rng.random((12, 3)) < 0.5).astype(float)
    weights = rng.normal(scale=0.5, size=(7, 3))
    loss, grad = loss_and_grad(weights, X, Y, l2=1e-3)
    h = 1e-6
    for i in range(7):
        for j in range(3):
            up = weights.copy(); up[i, j] += h
            down = weights.copy(); down[i, j] -= h
            numeric = (loss_and_grad(up, X, Y, 1e-3)[0] - loss_and_grad(down, X, Y, 1e-3)[0]) / (2 * h)
            assert grad[i, j] == pytest.approx(numeric, rel=1e-4, abs=1e-8)


def test_trained_model_gradient_near_zero_at_optimum():
    rows = toy_data()
    model = train_intent_model(rows, TrainConfig(min_count=20, learning_rate=4.0,
                                                 max_epochs=3000, l2=1e-4))
    X = model.featurizer.transform([u for u, _ in rows])
    heads = model.linear.heads
    Y = np.zeros((len(rows), len(heads)))
    for r, (_, labels) in enumerate(rows):
        for l in labels:
            Y[r, heads.index(l)] = 1.0
    loss, grad = loss_and_grad(model.linear.weights, X, Y, l2=1e-4)
    # central finite differences along a few random directions
    rng = np.random.default_rng(1)
    h = 1e-5
    for _ in range(5):
        direction = rng.normal(size=model.linear.weights.shape)
        direction /= np.linalg.norm(direction)
        plus = loss_and_grad(model.linear.weights + h * direction, X, Y, 1e-4)[0]
        minus = loss_and_grad(model.linear.weights - h * direction, X, Y, 1e-4)[0]
        numeric = (plus - minus) / (2 * h)
        analytic = float(np.sum(grad * direction))
        assert analytic == pytest.approx(numeric, rel=1e-4, abs=1e-7)


def test_intent_model_round_trips_through_json(tmp_path, model):
    path = tmp_path / "m.json"
    model.save(path)
    loaded = IntentModel.load(path)
    for utterance in ("next", "how to wash a car", "no thanks", "set a timer for five minutes"):
        assert keys(recognize_intents(utterance, loaded)) == keys(recognize_intents(utterance, model))


# --- extraction and domain ------------------------------------------------------------

def test_extraction_goldens():
    from taco.nlu import extract_task_name
    assert extract_task_name("How to wash a car?") == "wash a car"
    assert extract_task_name("Search bubble tea recipe for me.") == "bubble tea"
    assert extract_task_name("how to") is None


def test_extraction_is_contiguous_substring():
    from taco.nlu import extract_task_name
    from taco.text import normalize_ws
    import re
    samples = ["please find me a banana bread recipe", "I want to know how to fix a flat bike tire",
               "alexa search for how to clean grout", "can you teach me to knit a scarf please"]
    for text in samples:
        span = extract_task_name(text)
        normalized = normalize_ws(re.sub(r"[^\w\s']", " ", text.lower()).replace("'", " "))
        assert span and span in normalized


def test_domain_goldens(resources):
    assert classify_domain("wash a car", resources.domain_model) == "diy"
    assert classify_domain("bubble tea", resources.domain_model) == "cooking"
    with pytest.raises(EmptyInput):
        classify_domain("  ", resources.domain_model)


def test_domain_eval_set(resources, eval_dir):
    import json
    records = json.loads((eval_dir / "domain_eval.json").read_text())
    hits = sum(classify_domain(r["task_name"], resources.domain_model) == r["domain"]
               for r in records)
    assert hits / len(records) >= 0.85
