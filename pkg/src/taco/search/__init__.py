"""Task retrieval: BM25 over an inverted index, query expansion, constraint
filtering, listwise re-ranking on weak labels, and hit-rate evaluation."""

from .expand import expand_query, load_vocabulary
from .index import InvertedIndex, build_index, retrieve
from .labels import WeakLabelEntry, WeakLabelSet, load_weak_labels, save_weak_labels
from .metrics import hit_at_k, split_easy_hard
from .rerank import (
    FEATURE_NAMES,
    RankerModel,
    RankerTrainConfig,
    extract_features,
    listnet_loss,
    rerank,
    train_reranker,
)

__all__ = [
    "expand_query", "load_vocabulary",
    "InvertedIndex", "build_index", "retrieve",
    "WeakLabelEntry", "WeakLabelSet", "load_weak_labels", "save_weak_labels",
    "hit_at_k", "split_easy_hard",
    "FEATURE_NAMES", "RankerModel", "RankerTrainConfig",
    "extract_features", "listnet_loss", "rerank", "train_reranker",
]
