import random

import pytest
from hypothesis import given, settings, strategies as st

from concept_ir.boolean import (
    AND,
    NOT,
    OR,
    BooleanQuery,
    eval_and,
    eval_not,
    eval_or,
    eval_query,
    eval_semantic,
    parse_boolean,
)
from concept_ir.corpus import Collection
from concept_ir.errors import EmptyQuery
from concept_ir.fixtures import load_fixture
from concept_ir.index import IndexPair, SemanticPosting, build_index
from concept_ir.ontology import UNKNOWN

from helpers import GRAPH, doc_set, random_index


def index_of(postings, n_docs=10):
    semantic = {(t, UNKNOWN): SemanticPosting(t, tuple((d, 1) for d in docs), UNKNOWN) for t, docs in postings.items()}
    return IndexPair.from_semantic(semantic, n_docs)


def test_parse_or():
    assert parse_boolean("Keyboard or mouse") == BooleanQuery(OR, ("keyboard", "mouse"))


def test_parse_default_and():
    assert parse_boolean("Mouse corn") == BooleanQuery(AND, ("mouse", "corn"))
    assert parse_boolean("Mouse and corn").operator == AND


def test_parse_arabic_not():
    q = parse_boolean("العين ليس الفراهيدي")
    assert q == BooleanQuery(NOT, ("عين",), ("فراهيد",))


def test_parse_arabic_or_with_hamza():
    assert parse_boolean("تفاحة أو مانجو").operator == OR


def test_parse_four_word_not():
    q = parse_boolean("تفاحة أبل بيضاء ليس خضراء")
    assert q.operator == NOT
    assert q.terms == ("تفاح", "ابل", "بيضاء")
    assert q.negated == ("خضراء",)


@pytest.mark.parametrize("raw", ["", "the and", "not mouse", "ليس"])
def test_parse_empty(raw):
    with pytest.raises(EmptyQuery):
        parse_boolean(raw)


def test_and_examples():
    ix = index_of({"a": [1, 3, 5], "b": [3, 5, 8]})
    assert eval_and(ix, ["a", "b"]) == [3, 5]
    assert eval_and(ix, ["a"]) == [1, 3, 5]
    assert eval_and(ix, ["a", "zzz"]) == []


def test_or_examples():
    ix = index_of({"a": [1, 3], "b": [2, 3], "c": [5]})
    assert eval_or(ix, ["a", "b"]) == [1, 2, 3]
    assert eval_or(ix, ["zzz", "c"]) == [5]


def test_not_example():
    ix = index_of({"a": [1, 2, 3, 4], "b": [2, 4]})
    assert eval_not(ix, ["a"], ["b"]) == [1, 3]


def test_semantic_device_filter(device_graph):
    c = Collection.from_pairs([(1, "mouse keyboard"), (2, "mouse. keyboard"), (3, "mouse")])
    ix = build_index(c, device_graph)
    q = parse_boolean("mouse and keyboard")
    assert eval_query(ix, q) == [1, 2]
    # doc 2's lone mouse resolves to animal, so it drops out
    assert eval_semantic(ix, device_graph, q) == [1]


def test_semantic_unknown_rc_falls_back(device_graph):
    ix = build_index(Collection.from_pairs([(1, "zzz yyy")]), device_graph)
    q = parse_boolean("zzz and yyy")
    assert eval_semantic(ix, device_graph, q) == eval_query(ix, q) == [1]


def test_arabic_logo_query():
    fx = load_fixture("arabic-vsm")
    q = parse_boolean("تفاحة و بيضاء")
    assert set(eval_semantic(fx.index, fx.graph, q)) <= {1, 8}


def brute(ix, q):
    if q.operator == AND:
        return set.intersection(*(doc_set(ix, t) for t in q.terms))
    if q.operator == OR:
        return set.union(*(doc_set(ix, t) for t in q.terms))
    neg = set().union(*(doc_set(ix, t) for t in q.negated))
    return set.intersection(*(doc_set(ix, t) for t in q.terms)) - neg


def random_query(rng, ix):
    terms = sorted(ix.traditional) + ["missing"]
    op = rng.choice([AND, OR, NOT])
    pos = tuple(rng.sample(terms, rng.randint(1, min(3, len(terms)))))
    neg = tuple(rng.sample(terms, rng.randint(1, 2))) if op == NOT else ()
    return BooleanQuery(op, pos, neg)


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(0, 2))
def test_operators_match_set_algebra(seed, h):
    rng = random.Random(seed)
    ix = random_index(rng)
    q = random_query(rng, ix)
    expected = sorted(brute(ix, q))
    got = eval_query(ix, q)
    assert got == expected
    assert set(eval_semantic(ix, GRAPH, q, h)) <= set(got)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_and_ignores_term_order(seed):
    rng = random.Random(seed)
    ix = random_index(rng)
    terms = sorted(ix.traditional)
    shuffled = list(terms)
    rng.shuffle(shuffled)
    assert eval_and(ix, terms) == eval_and(ix, shuffled)


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 2**32 - 1))
def test_early_exit_does_not_change_and(seed):
    rng = random.Random(seed)
    ix = random_index(rng)
    terms = sorted(ix.traditional) + ["missing"]
    full = set(range(1, ix.n_docs + 1))
    for t in terms:
        full &= doc_set(ix, t)
    assert eval_and(ix, terms) == sorted(full) == []
