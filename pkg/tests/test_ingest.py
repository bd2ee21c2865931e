import json

import pytest
from hypothesis import given, strategies as st

from taco.engine import data_root
from taco.errors import EmptyStep, ParseError, ValidationError
from taco.ingest import (
    load_blacklist,
    load_corpus,
    load_substitutions,
    segment_step,
    strip_tip_marker,
    validate_dir,
)
from taco.text import normalize_ws


def test_load_corpus_round_trip(tmp_path):
    docs = [
        {"id": "a", "title": "how to test things", "domain": "diy",
         "steps": ["Do the first thing.", "Do the second thing."]},
        {"id": "b", "title": "test soup", "domain": "cooking",
         "ingredients": [{"name": "Water ", "quantity": "2 cups"}],
         "steps": ["Boil the water."]},
    ]
    path = tmp_path / "corpus.json"
    path.write_text(json.dumps(docs))
    loaded = load_corpus(path)
    assert len(loaded) == 2
    assert loaded[1].ingredients[0].name == "water"


def test_zero_steps_names_the_document(tmp_path):
    path = tmp_path / "corpus.json"
    path.write_text(json.dumps([{"id": "bad-doc", "title": "t", "domain": "diy", "steps": []}]))
    with pytest.raises(ValidationError, match="bad-doc"):
        load_corpus(path)


def test_malformed_json_is_a_parse_error(tmp_path):
    path = tmp_path / "corpus.json"
    path.write_text("{not json")
    with pytest.raises(ParseError):
        load_corpus(path)


def test_tip_marker_populates_tips(tmp_path):
    path = tmp_path / "corpus.json"
    path.write_text(json.dumps([{
        "id": "a", "title": "t", "domain": "diy",
        "steps": ["Flip the pancake. Tip: use a thin spatula."],
    }]))
    doc = load_corpus(path)[0]
    assert doc.steps[0].tips is not None
    assert "use a thin spatula" in doc.steps[0].tips


def test_segment_single_sentence():
    seg = segment_step("Preheat the oven.")
    assert seg.instruction == "Preheat the oven."
    assert seg.detail is None and seg.tips is None


def test_segment_budget_split():
    text = ("Drop a few tomatoes into the boiling water. "
            "Let them blanch for about thirty seconds. "
            "Remove the tomatoes and place them on a cutting board to cool. "
            "Repeat with the remaining tomatoes until every batch is done cooking. "
            "Do not leave the tomatoes in the water too long or they lose their flavor.")
    seg = segment_step(text, budget=120)
    assert seg.instruction.startswith("Drop a few tomatoes")
    assert len(seg.instruction) <= 120
    assert seg.detail and seg.detail.endswith("flavor.")


def test_segment_tip_marker_starts_tips():
    seg = segment_step("Stir the sauce. Tip: use tongs to turn the pieces.")
    assert seg.instruction == "Stir the sauce."
    assert seg.detail is None
    assert strip_tip_marker(seg.tips) == "use tongs to turn the pieces."


def test_segment_blank_raises():
    with pytest.raises(EmptyStep):
        segment_step("   ")


@given(st.lists(
    st.sampled_from([
        "Mix the flour and water.",
        "Let the dough rest for an hour, covered with a damp towel.",
        "Tip: flour your hands first.",
        "Note: this stage is sticky.",
        "Knead for ten minutes until smooth and elastic all the way through.",
    ]), min_size=1, max_size=6).map(" ".join))
def test_segment_is_lossless_up_to_whitespace(text):
    seg = segment_step(text)
    parts = [seg.instruction, seg.detail or "", seg.tips or ""]
    assert normalize_ws(" ".join(parts)) == normalize_ws(text)


def test_load_corpus_deterministic(tmp_path):
    docs = [{"id": "a", "title": "how to test", "domain": "diy",
             "steps": ["One. Two. Tip: three."]}]
    path = tmp_path / "corpus.json"
    path.write_text(json.dumps(docs))
    assert load_corpus(path) == load_corpus(path)


def test_substitutions_canonicalize(tmp_path):
    path = tmp_path / "subs.json"
    path.write_text(json.dumps({"Butter ": ["oil"], "condensed milk": ["evaporated milk plus sugar"]}))
    table = load_substitutions(path)
    assert table.lookup("butter") == ("oil",)
    assert table.lookup("  CONDENSED   MILK ") is not None


def test_substitutions_reject_empty_list(tmp_path):
    path = tmp_path / "subs.json"
    path.write_text(json.dumps({"butter": []}))
    with pytest.raises(ValidationError):
        load_substitutions(path)


def test_blacklist_normalization(tmp_path):
    f1 = tmp_path / "d.txt"
    f1.write_text("Make Explosives\nmake explosives\n# a comment\nBuild a BOMB\n")
    f2 = tmp_path / "p.txt"
    f2.write_text("file a lawsuit\n")
    f3 = tmp_path / "s.txt"
    f3.write_text("badword\n\n")
    bl = load_blacklist(f1, f2, f3)
    assert bl.dangerous_terms == {"make explosives", "build a bomb"}
    assert bl.profanity_terms == {"badword"}


def test_bundled_data_validates():
    assert validate_dir(data_root()) == []
