import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from taco.errors import EmptyCorpus, MissingGold, NoUsableEntries, NonFiniteScore
from taco.ingest import load_corpus
from taco.model import Clarification, StepSegment, TaskDocument
from taco.search import (
    RankerModel,
    RankerTrainConfig,
    WeakLabelEntry,
    WeakLabelSet,
    build_index,
    expand_query,
    extract_features,
    hit_at_k,
    listnet_loss,
    load_vocabulary,
    rerank,
    retrieve,
    split_easy_hard,
    train_reranker,
)
from taco.search.rerank import ranker_objective
from taco.text import tokenize


def doc(doc_id, title, domain="diy", **kw):
    return TaskDocument(id=doc_id, title=title, domain=domain,
                        steps=(StepSegment("Do it."),), **kw)


@pytest.fixture(scope="module")
def small_index():
    docs = [
        doc("d1", "how to wash a car"),
        doc("d2", "how to paint a wall"),
        doc("d3", "quick tomato soup", domain="cooking",
            ingredients=(), diet_tags=frozenset({"vegetarian"}),
            cuisine_tags=frozenset({"american"})),
    ]
    return build_index(docs)


# --- indexing ----------------------------------------------------------------

def test_single_doc_query_by_title_scores_positive():
    index = build_index([doc("only", "how to wash a car")])
    result = retrieve(index, "how to wash a car", tokenize("how to wash a car"))
    assert [c.doc_id for c in result.candidates] == ["only"]
    assert result.candidates[0].bm25 > 0


def test_empty_corpus_rejected():
    with pytest.raises(EmptyCorpus):
        build_index([])


def test_duplicate_titles_both_indexed():
    index = build_index([doc("a", "how to wash a car"), doc("b", "how to wash a car")])
    result = retrieve(index, "wash a car", ["wash", "a", "car"])
    assert {c.doc_id for c in result.candidates} == {"a", "b"}


def test_doc_lengths_and_avg_match_hand_count(small_index):
    # d1: how,to,wash,a,car = 5; d2: 5; d3: quick,tomato,soup = 3
    assert small_index.doc_lengths == {"d1": 5, "d2": 5, "d3": 3}
    assert small_index.avg_doc_length == pytest.approx((5 + 5 + 3) / 3)
    assert small_index.N == 3


def test_bm25_matches_hand_computation(small_index):
    # df(wash)=1, df(car)=1; idf = ln(1 + (3 - 1 + 0.5)/1.5); tf=1; len(d1)=5
    idf = math.log(1 + 2.5 / 1.5)
    norm = 1.2 * (1 - 0.75 + 0.75 * 5 / small_index.avg_doc_length)
    expected = 2 * idf * (1 * 2.2) / (1 + norm)
    result = retrieve(small_index, "wash car", ["wash", "car"])
    assert result.candidates[0].bm25 == pytest.approx(expected, abs=1e-9)


def test_retrieve_disjoint_query_is_empty(small_index):
    result = retrieve(small_index, "zebra", ["zebra"])
    assert result.candidates == ()


def test_constraints_exclude_untagged_docs(small_index):
    constraints = Clarification(diet=("vegetarian",))
    result = retrieve(small_index, "quick soup car", ["quick", "soup", "car"],
                      constraints)
    assert [c.doc_id for c in result.candidates] == ["d3"]


def test_retrieve_ties_break_by_doc_id():
    index = build_index([doc("b", "fix a sink"), doc("a", "fix a sink")])
    result = retrieve(index, "fix a sink", ["fix", "sink"])
    assert [c.doc_id for c in result.candidates] == ["a", "b"]


def test_score_monotone_in_added_matching_term(small_index):
    base = retrieve(small_index, "wash", ["wash"]).candidates[0].bm25
    more = retrieve(small_index, "wash car", ["wash", "car"]).candidates[0].bm25
    assert more >= base


# --- query expansion --------------------------------------------------------------

def test_expansion_golden_spraypaint():
    assert expand_query("How to remove spraypaint") == [
        "how", "to", "remove", "spraypaint", "spray", "paint"]


def test_expansion_empty():
    assert expand_query("") == []


def test_expansion_lemmas():
    assert expand_query("washing cars") == ["washing", "cars", "wash", "car"]


def test_expansion_prefix_and_uniqueness():
    @given(st.text(alphabet="abcdefghij ", min_size=0, max_size=40))
    @settings(max_examples=200, deadline=None)
    def check(text):
        tokens = tokenize(text)
        expanded = expand_query(text)
        assert expanded[: len(tokens)] == tokens
        appended = expanded[len(tokens):]
        assert len(appended) == len(set(appended))
        assert not set(appended) & set(tokens)
    check()


def test_compound_needs_both_parts_in_vocabulary():
    vocab = frozenset({"spray", "paint", "washcloth"})
    assert expand_query("spraypaint", vocab) == ["spraypaint", "spray", "paint"]
    assert expand_query("washcloth", vocab) == ["washcloth"]  # known word, no split
    assert expand_query("xyzzyqq", vocab) == ["xyzzyqq"]


# --- listnet ----------------------------------------------------------------------

def test_listnet_singleton():
    loss, grad = listnet_loss(np.array([3.7]), 0)
    assert loss == pytest.approx(0.0, abs=1e-12)
    assert grad == pytest.approx([0.0], abs=1e-12)


def test_listnet_uniform_ten():
    loss, _ = listnet_loss(np.zeros(10), 0)
    assert loss == pytest.approx(math.log(10), abs=1e-9)


def test_listnet_symmetric_pair():
    loss, grad = listnet_loss(np.array([2.0, 2.0]), 0)
    assert loss == pytest.approx(math.log(2), abs=1e-12)
    assert grad == pytest.approx([-0.5, 0.5])


def test_listnet_rejects_nonfinite():
    with pytest.raises(NonFiniteScore):
        listnet_loss(np.array([1.0, float("nan")]), 0)


def test_listnet_nonnegative_property():
    @given(st.lists(st.floats(-30, 30), min_size=1, max_size=12), st.data())
    @settings(max_examples=200, deadline=None)
    def check(scores, data):
        index = data.draw(st.integers(0, len(scores) - 1))
        loss, _ = listnet_loss(np.array(scores), index)
        assert loss >= -1e-12
    check()


def test_listnet_gradient_finite_differences():
    rng = np.random.default_rng(5)
    h = 1e-5
    for _ in range(100):
        scores = rng.normal(scale=3.0, size=10)
        positive = int(rng.integers(0, 10))
        _, grad = listnet_loss(scores, positive)
        numeric = np.empty(10)
        for i in range(10):
            up = scores.copy(); up[i] += h
            down = scores.copy(); down[i] -= h
            numeric[i] = (listnet_loss(up, positive)[0] - listnet_loss(down, positive)[0]) / (2 * h)
        rel = np.linalg.norm(grad - numeric) / max(np.linalg.norm(numeric), 1e-12)
        assert rel < 1e-5


def test_ranker_objective_gradient():
    rng = np.random.default_rng(7)
    features = rng.normal(size=(6, 10, 4))
    weights = rng.normal(size=4)
    loss, grad = ranker_objective(weights, features)
    h = 1e-6
    for i in range(4):
        up = weights.copy(); up[i] += h
        down = weights.copy(); down[i] -= h
        numeric = (ranker_objective(up, features)[0] - ranker_objective(down, features)[0]) / (2 * h)
        assert grad[i] == pytest.approx(numeric, rel=1e-4, abs=1e-8)


# --- features, training, rerank ------------------------------------------------------

def test_features_exact_title_match(small_index):
    vector = extract_features(small_index, "how to wash a car",
                              ["how", "to", "wash", "a", "car"], "d1")
    names = dict(zip(
        ("bm25", "q", "e", "len", "exact", "domain"), vector))
    assert names["exact"] == 1.0
    assert names["q"] == 1.0 and names["e"] == 1.0
    assert names["len"] == 5.0


def test_features_disjoint(small_index):
    vector = extract_features(small_index, "zebra stripes", ["zebra", "stripes"], "d2")
    assert vector[1] == 0.0 and vector[2] == 0.0 and vector[4] == 0.0


def test_features_hand_computed(small_index):
    vector = extract_features(small_index, "paint the wall",
                              ["paint", "the", "wall"], "d2", bm25=1.5)
    # title: how to paint a wall; query hits paint, wall -> 2/3
    assert vector[0] == 1.5
    assert vector[1] == pytest.approx(2 / 3)
    assert vector[2] == pytest.approx(2 / 3)
    assert vector[3] == 5.0
    assert vector[5] == 1.0  # "paint" is a diy cue and d2 is a diy doc
    cue_free = extract_features(small_index, "the wall", ["the", "wall"], "d2", bm25=0.0)
    assert cue_free[5] == 0.5


def test_train_reranker_separates_toy_positives():
    docs = [doc(f"p{i}", f"fix the {w} handle") for i, w in
            enumerate(["door", "window", "drawer"])]
    docs += [doc(f"n{i}", f"{w} trivia quiz night", domain="cooking")
             for i, w in enumerate(["door", "window", "drawer"])]
    index = build_index(docs)
    entries = tuple(
        WeakLabelEntry(f"fix the {w} handle", (f"p{i}",), (f"n{i}",))
        for i, w in enumerate(["door", "window", "drawer"])
    )
    model = train_reranker(WeakLabelSet(entries), index,
                           RankerTrainConfig(negatives_per_positive=1, seed=3))
    for i, w in enumerate(["door", "window", "drawer"]):
        query = f"fix the {w} handle"
        expanded = expand_query(query)
        pos = model.score(extract_features(index, query, expanded, f"p{i}"))
        neg = model.score(extract_features(index, query, expanded, f"n{i}"))
        assert pos > neg


def test_train_reranker_empty_labels(small_index):
    with pytest.raises(NoUsableEntries):
        train_reranker(WeakLabelSet(()), small_index)


def test_rerank_empty_and_singleton(small_index):
    model = RankerModel(np.zeros(6))
    empty = retrieve(small_index, "zebra", ["zebra"])
    assert rerank(model, empty, small_index) == empty
    single = retrieve(small_index, "soup", ["soup"])
    out = rerank(model, single, small_index, pool_size=1)
    assert [c.doc_id for c in out.candidates] == [c.doc_id for c in single.candidates]


def test_rerank_is_permutation(resources):
    gold_query = "easy cake recipe"
    result = retrieve(resources.index, gold_query, expand_query(gold_query), None, 25)
    out = rerank(resources.reranker, result, resources.index)
    assert sorted(c.doc_id for c in out.candidates) == sorted(c.doc_id for c in result.candidates)
    assert {c.doc_id: c.bm25 for c in out.candidates} == {c.doc_id: c.bm25 for c in result.candidates}


def test_rerank_pool_boundary(resources):
    query = "how to clean grout"
    result = retrieve(resources.index, query, expand_query(query), None, 25)
    if len(result.candidates) > 4:
        out = rerank(resources.reranker, result, resources.index, pool_size=4)
        tail_in = [c.doc_id for c in result.candidates[4:]]
        tail_out = [c.doc_id for c in out.candidates[4:]]
        assert tail_in == tail_out


# --- metrics ----------------------------------------------------------------------

def make_result(query, ids):
    from taco.model import Candidate, RankedResult
    return RankedResult(query, (), tuple(
        Candidate(d, float(len(ids) - i)) for i, d in enumerate(ids)), Clarification())


GOLD = WeakLabelSet((
    WeakLabelEntry("q1", ("a",), ("x",)),
    WeakLabelEntry("q2", ("b",), ("y",)),
))


def test_hit_at_k_all_top():
    results = [make_result("q1", ["a", "x"]), make_result("q2", ["b", "y"])]
    for k in (1, 2, 3):
        assert hit_at_k(results, GOLD, k) == 1.0


def test_hit_at_k_none():
    results = [make_result("q1", ["x"]), make_result("q2", ["y"])]
    assert hit_at_k(results, GOLD, 3) == 0.0


def test_hit_at_k_brute_force_fixture():
    results = [make_result("q1", ["x", "a"]), make_result("q2", ["b"])]
    assert hit_at_k(results, GOLD, 1) == 0.5
    assert hit_at_k(results, GOLD, 2) == 1.0


def test_hit_at_k_missing_gold():
    with pytest.raises(MissingGold):
        hit_at_k([make_result("unknown", ["a"])], GOLD, 3)


def test_hit_monotone_in_k():
    results = [make_result("q1", ["x", "a"]), make_result("q2", ["y", "w", "b"])]
    values = [hit_at_k(results, GOLD, k) for k in range(1, 5)]
    assert values == sorted(values)


def test_split_easy_hard_partition():
    results = [make_result("q1", ["a", "x"]), make_result("q2", ["y", "w", "b"])]
    easy, hard = split_easy_hard(results, GOLD, 1)
    assert easy == {"q1"} and hard == {"q2"}
    easy, hard = split_easy_hard(results, GOLD, 3)
    assert easy == {"q1", "q2"} and hard == set()
