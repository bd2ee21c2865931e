import pytest

from taco.text import format_duration, lemmatize, parse_number, split_sentences, tokenize


@pytest.mark.parametrize("word,lemma", [
    ("washing", "wash"),
    ("cars", "car"),
    ("removing", "remove"),
    ("blanching", "blanch"),
    ("boiling", "boil"),
    ("tomatoes", "tomato"),
    ("tools", "tool"),
    ("stopped", "stop"),
    ("tried", "try"),
    ("baked", "bake"),
    ("cleaned", "clean"),
    ("dishes", "dish"),
    ("cookies", "cookie"),
    ("berries", "berry"),
    ("knives", "knife"),
    ("glass", "glass"),
    ("less", "less"),
    ("frosting", "frosting"),
    ("remove", "remove"),
    ("paint", "paint"),
])
def test_lemmatizer_table(word, lemma):
    assert lemmatize(word) == lemma


def test_tokenize_lowercases_and_splits():
    assert tokenize("How to Wash a Car!") == ["how", "to", "wash", "a", "car"]
    assert tokenize("") == []


def test_split_sentences_keeps_punctuation():
    parts = split_sentences("First. Second! Third? Fourth")
    assert parts == ["First.", "Second!", "Third?", "Fourth"]


@pytest.mark.parametrize("text,expected", [
    ("step four", 4), ("7", 7), ("twenty", 20), ("zillion", None),
])
def test_parse_number(text, expected):
    token = text.split()[-1]
    assert parse_number(token) == expected


@pytest.mark.parametrize("seconds,spoken", [
    (300, "5 minutes"),
    (60, "1 minute"),
    (45, "45 seconds"),
    (90, "1 minute and 30 seconds"),
    (3600, "1 hour"),
    (7200, "2 hours"),
])
def test_format_duration(seconds, spoken):
    assert format_duration(seconds) == spoken
