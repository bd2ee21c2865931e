"""Shared text utilities: tokenization, sentence splitting, rule lemmatizer,
and number-word parsing.

The lemmatizer is a bundled suffix-rule table with an exception list, not an
NLP toolkit; it targets the plural and -ing/-ed verb forms that show up in
task requests ("washing cars" -> wash, car).
"""
from __future__ import annotations

import re

TOKEN_RE = re.compile(r"[a-z0-9]+")
SENTENCE_RE = re.compile(r"[^.!?]+[.!?]*\s*")

VOWELS = set("aeiou")

# irregular forms the suffix rules get wrong
LEMMA_EXCEPTIONS = {
    "children": "child", "men": "man", "women": "woman", "feet": "foot",
    "teeth": "tooth", "mice": "mouse", "geese": "goose", "people": "person",
    "knives": "knife", "leaves": "leaf", "loaves": "loaf", "halves": "half",
    "shelves": "shelf", "wolves": "wolf", "lives": "life", "wives": "wife",
    "potatoes": "potato", "tomatoes": "tomato", "mangoes": "mango",
    "heroes": "hero", "echoes": "echo",
    "dying": "die", "lying": "lie", "tying": "tie",
    "frying": "fry", "drying": "dry", "trying": "try",
    "being": "be", "having": "have", "doing": "do", "going": "go",
    "coming": "come", "using": "use", "making": "make", "taking": "take",
    "giving": "give", "losing": "lose", "rising": "rise", "serving": "serve",
    "saving": "save", "storing": "store", "sharing": "share",
    "did": "do", "done": "do", "made": "make", "went": "go", "said": "say",
    "left": "leave", "kept": "keep", "got": "get", "took": "take",
    "bought": "buy", "brought": "bring", "built": "build", "cut": "cut",
    "put": "put", "set": "set", "let": "let", "hung": "hang",
    "this": "this", "his": "his", "is": "is", "was": "was", "has": "has",
    "does": "does", "goes": "go", "its": "its", "as": "as", "us": "us",
    "yes": "yes", "less": "less", "gas": "gas", "glass": "glass",
    "grass": "grass", "molasses": "molasses", "hummus": "hummus",
    "couscous": "couscous", "asparagus": "asparagus", "citrus": "citrus",
    "always": "always", "perhaps": "perhaps", "thus": "thus",
    "during": "during", "something": "something", "anything": "anything",
    "everything": "everything", "nothing": "nothing", "thing": "thing",
    "morning": "morning", "evening": "evening", "ceiling": "ceiling",
    "spring": "spring", "string": "string", "ring": "ring", "king": "king",
    "icing": "icing", "frosting": "frosting", "seasoning": "seasoning",
    "dressing": "dressing", "pudding": "pudding", "dumpling": "dumpling",
    "filling": "filling", "topping": "topping", "stuffing": "stuffing",
    "lightning": "lightning", "wedding": "wedding", "building": "building",
    "bed": "bed", "red": "red", "shed": "shed", "seed": "seed",
    "need": "need", "feed": "feed", "speed": "speed", "bread": "bread",
    "shred": "shred", "thread": "thread", "bled": "bleed", "fed": "feed",
    "series": "series", "species": "species", "cookies": "cookie",
    "pastries": "pastry", "berries": "berry", "fries": "fry",
    "dishes": "dish", "sauces": "sauce", "recipes": "recipe",
    "noodles": "noodle", "pancakes": "pancake", "shoes": "shoe",
    "clothes": "clothes", "scissors": "scissors", "pliers": "pliers",
    "jeans": "jeans", "stairs": "stairs",
}


def tokenize(text: str) -> list[str]:
    """Lowercase and split on non-alphanumerics, dropping empty tokens."""
    return TOKEN_RE.findall(text.lower())


def normalize_ws(text: str) -> str:
    return " ".join(text.split())


def split_sentences(text: str) -> list[str]:
    """Split on sentence-final punctuation, keeping the punctuation."""
    return [s.strip() for s in SENTENCE_RE.findall(text) if s.strip()]


def strip_punct(text: str) -> str:
    """Lowercase and remove everything but word characters and spaces."""
    return normalize_ws(re.sub(r"[^a-z0-9\s]", "", text.lower()))


def _undouble(stem: str) -> str:
    if len(stem) >= 2 and stem[-1] == stem[-2] and stem[-1] not in "lsz":
        return stem[:-1]
    return stem


def _needs_e(stem: str) -> bool:
    # CVC ending (consonant-vowel-consonant, final consonant not w/x/y)
    # usually came from dropping a silent e: mak->make, remov->remove
    if len(stem) < 3:
        return False
    a, b, c = stem[-3], stem[-2], stem[-1]
    return c not in VOWELS and c not in "wxy" and b in VOWELS and a not in VOWELS


def _strip_ing_ed(word: str, suffix: str) -> str:
    stem = word[: -len(suffix)]
    if len(stem) < 2:
        return word
    undoubled = _undouble(stem)
    if undoubled != stem:
        return undoubled
    if stem.endswith("i"):  # tried -> try (for -ed only in practice)
        return stem[:-1] + "y"
    if _needs_e(stem):
        return stem + "e"
    return stem


def lemmatize(word: str) -> str:
    """Reduce a lowercase token to a base form via suffix rules + exceptions."""
    if word in LEMMA_EXCEPTIONS:
        return LEMMA_EXCEPTIONS[word]
    if len(word) <= 3:
        return word
    if word.endswith("ies") and len(word) > 4:
        return word[:-3] + "y"
    if word.endswith("sses") or word.endswith("shes") or word.endswith("ches") or word.endswith("xes") or word.endswith("zes"):
        return word[:-2]
    if word.endswith("oes") and len(word) > 4:
        return word[:-2]
    if word.endswith("ing") and len(word) > 4:
        return _strip_ing_ed(word, "ing")
    if word.endswith("ed") and len(word) > 3:
        return _strip_ing_ed(word, "ed")
    if word.endswith("s") and not word.endswith("ss") and not word.endswith("us") and not word.endswith("is"):
        return word[:-1]
    return word


NUMBER_WORDS = {
    "one": 1, "two": 2, "three": 3, "four": 4, "five": 5,
    "six": 6, "seven": 7, "eight": 8, "nine": 9, "ten": 10,
    "eleven": 11, "twelve": 12, "thirteen": 13, "fourteen": 14,
    "fifteen": 15, "sixteen": 16, "seventeen": 17, "eighteen": 18,
    "nineteen": 19, "twenty": 20,
}

ORDINAL_WORDS = {
    "first": 1, "second": 2, "third": 3, "fourth": 4, "fifth": 5,
    "sixth": 6, "seventh": 7, "eighth": 8, "ninth": 9, "tenth": 10,
}


def parse_number(token: str) -> int | None:
    """Parse a digit string or a number word one..twenty."""
    if token.isdigit():
        return int(token)
    return NUMBER_WORDS.get(token)


def format_duration(seconds: float) -> str:
    """Render a duration the way it would be spoken: '5 minutes', '90 seconds'."""
    total = int(round(seconds))
    if total < 60 or total % 60 != 0:
        if total >= 3600 and total % 3600 == 0:
            hours = total // 3600
            return f"{hours} hour" + ("s" if hours != 1 else "")
        if total >= 60:
            minutes, rest = divmod(total, 60)
            return f"{minutes} minute" + ("s" if minutes != 1 else "") + f" and {rest} seconds"
        return f"{total} second" + ("s" if total != 1 else "")
    if total % 3600 == 0:
        hours = total // 3600
        return f"{hours} hour" + ("s" if hours != 1 else "")
    minutes = total // 60
    return f"{minutes} minute" + ("s" if minutes != 1 else "")
