"""Word and character n-gram featurizer shared by the linear classifiers."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy import sparse

from ..text import tokenize

BIAS = "<bias>"


def _word_ngrams(tokens: list[str], orders: tuple[int, ...]) -> list[str]:
    grams = []
    for n in orders:
        for i in range(len(tokens) - n + 1):
            grams.append("w:" + " ".join(tokens[i : i + n]))
    return grams


def _char_ngrams(tokens: list[str], orders: tuple[int, ...]) -> list[str]:
    grams = []
    for token in tokens:
        padded = f" {token} "
        for n in orders:
            for i in range(len(padded) - n + 1):
                grams.append("c:" + padded[i : i + n])
    return grams


@dataclass
class NgramFeaturizer:
    """Maps text to a sparse binary vector of word/char n-grams plus a bias."""

    word_orders: tuple[int, ...] = (1, 2, 3)
    char_orders: tuple[int, ...] = (2, 3)
    min_df: int = 1
    vocab: dict[str, int] = field(default_factory=dict)

    def grams(self, text: str) -> list[str]:
        tokens = tokenize(text)
        return [BIAS] + _word_ngrams(tokens, self.word_orders) + _char_ngrams(tokens, self.char_orders)

    def fit(self, texts: list[str]) -> "NgramFeaturizer":
        counts: dict[str, int] = {}
        for text in texts:
            for gram in set(self.grams(text)):
                counts[gram] = counts.get(gram, 0) + 1
        kept = sorted(g for g, c in counts.items() if c >= self.min_df or g == BIAS)
        self.vocab = {g: i for i, g in enumerate(kept)}
        return self

    def transform(self, texts: list[str]) -> sparse.csr_matrix:
        indptr = [0]
        indices: list[int] = []
        for text in texts:
            cols = {self.vocab[g] for g in self.grams(text) if g in self.vocab}
            indices.extend(sorted(cols))
            indptr.append(len(indices))
        data = np.ones(len(indices), dtype=np.float64)
        return sparse.csr_matrix(
            (data, np.asarray(indices, dtype=np.int64), np.asarray(indptr, dtype=np.int64)),
            shape=(len(texts), len(self.vocab)),
        )

    @property
    def n_features(self) -> int:
        return len(self.vocab)

    def to_dict(self) -> dict:
        return {
            "word_orders": list(self.word_orders),
            "char_orders": list(self.char_orders),
            "min_df": self.min_df,
            "vocab": sorted(self.vocab, key=self.vocab.get),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "NgramFeaturizer":
        return cls(
            word_orders=tuple(d["word_orders"]),
            char_orders=tuple(d["char_orders"]),
            min_df=d["min_df"],
            vocab={g: i for i, g in enumerate(d["vocab"])},
        )
