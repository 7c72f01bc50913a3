import pytest
from sklearn.base import clone
from sklearn.exceptions import NotFittedError

from concept_ir.corpus import Collection
from concept_ir.errors import EmptyCollection
from concept_ir.estimators import (
    BooleanRetriever,
    ConceptIndexer,
    VectorSpaceRanker,
    check_collection,
    make_retriever,
)
from concept_ir.fixtures import FIXTURE_HOPS, load_fixture

DOCS = ["mouse keyboard", "mouse. keyboard", "mouse eats corn"]


def test_check_collection_forms():
    as_strings = check_collection(DOCS)
    assert [d.doc_id for d in as_strings] == [1, 2, 3]
    assert check_collection([(5, "a"), (9, "b")]).documents[1].doc_id == 9
    assert check_collection([{"id": 2, "text": "x"}]).documents[0].text == "x"
    assert check_collection(as_strings) is as_strings
    with pytest.raises(EmptyCollection):
        check_collection([])
    with pytest.raises(TypeError):
        check_collection("mouse")


def test_indexer_fit_transform(device_graph):
    indexer = ConceptIndexer(device_graph).fit(DOCS)
    assert indexer.n_docs_ == 3
    assert indexer.index_.posting("mouse").df == 3
    annotated = indexer.transform(["mouse and keyboard. corn"])
    assert annotated == [[(("mouse", "keyboard"), "computer"), (("corn",), None)]]


def test_boolean_retriever(device_graph):
    sem = BooleanRetriever(device_graph).fit(DOCS)
    trad = BooleanRetriever(device_graph, mode="traditional").fit(DOCS)
    assert trad.predict("mouse and keyboard") == [[1, 2]]
    assert sem.predict(["mouse and keyboard", "corn"]) == [[1], [3]]
    assert sem.query_rc("mouse keyboard") == "computer"


def test_vsm_ranker_fixture():
    fx = load_fixture("arabic-vsm")
    ranker = VectorSpaceRanker(fx.graph, hops=FIXTURE_HOPS, topk=2).fit(fx.index)
    assert ranker.predict("ألم العين") == [[5, 2]]
    (pairs,) = ranker.decision_function("ألم العين")
    assert pairs[0][1] == pytest.approx(0.99996, abs=0.002)


def test_params_and_clone(device_graph):
    ranker = VectorSpaceRanker(device_graph, hops=2, topk=3, norm="full")
    params = ranker.get_params()
    assert params["hops"] == 2 and params["topk"] == 3 and params["norm"] == "full"
    twin = clone(ranker)
    assert twin.get_params()["topk"] == 3
    assert twin is not ranker
    twin.set_params(topk=5)
    assert ranker.topk == 3


def test_not_fitted(device_graph):
    with pytest.raises(NotFittedError):
        BooleanRetriever(device_graph).search("mouse")
    with pytest.raises(NotFittedError):
        VectorSpaceRanker(device_graph).rank("mouse")


@pytest.mark.parametrize(
    "estimator",
    [
        BooleanRetriever(mode="fuzzy"),
        BooleanRetriever(hops=-1),
        VectorSpaceRanker(),
        VectorSpaceRanker(mode="traditional", topk=0),
        VectorSpaceRanker(mode="traditional", norm="l1"),
    ],
)
def test_invalid_params_fail_at_fit(estimator):
    with pytest.raises(ValueError):
        estimator.fit(DOCS)


def test_ontology_path(device_path):
    r = BooleanRetriever(str(device_path)).fit(DOCS)
    assert r.graph_.senses("mouse")


def test_make_retriever(device_graph):
    assert isinstance(make_retriever("boolean", ontology=device_graph, topk=4), BooleanRetriever)
    assert isinstance(make_retriever("vsm", ontology=device_graph), VectorSpaceRanker)
    with pytest.raises(ValueError):
        make_retriever("bm25")


def test_fit_on_collection_equals_fit_on_index(device_graph):
    c = Collection.from_pairs(enumerate(DOCS, start=1))
    a = BooleanRetriever(device_graph).fit(c)
    b = BooleanRetriever(device_graph).fit(ConceptIndexer(device_graph).fit(c).index_)
    assert a.index_ == b.index_
