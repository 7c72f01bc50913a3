import pytest
from hypothesis import given, strategies as st

from concept_ir.corpus import Phrase
from concept_ir.textpipe import (
    StopWordList,
    StopWords,
    default_stopwords,
    normalize,
    pipeline,
    remove_stop_words,
    stem,
    stem_arabic,
    stem_english,
)


def test_stop_words_english():
    assert remove_stop_words(["mouse", "and", "keyboard"]) == ["mouse", "keyboard"]
    assert remove_stop_words(["the", "and"]) == []


def test_stop_words_arabic():
    assert remove_stop_words(["في", "عن", "عين"]) == ["عين"]


@pytest.mark.parametrize(
    "word, expected",
    [("corns", "corn"), ("flies", "fly"), ("eats", "eat"), ("thing", "thing"), ("mouse", "mouse")],
)
def test_stem_english(word, expected):
    assert stem_english(word) == expected


@pytest.mark.parametrize(
    "word, expected",
    [("العين", "عين"), ("تفاحة", "تفاح"), ("مدينة", "مدن"), ("مدن", "مدن"), ("الكتاب", "كتاب")],
)
def test_stem_arabic(word, expected):
    assert stem_arabic(normalize(word)) == expected


def test_city_and_cities_collide():
    assert stem_arabic("مدينة") == stem_arabic("مدن")


def test_normalize_folds_hamza_and_strips_marks():
    assert normalize("ألم") == "الم"
    assert normalize("كِتَاب") == "كتاب"
    assert normalize("Mouse") == "mouse"


def test_pipeline_examples():
    assert pipeline("Mouse and keyboard") == ["mouse", "keyboard"]
    assert pipeline("ألم العين") == ["الم", "عين"]
    assert pipeline("") == []
    assert pipeline(Phrase(("Corns",))) == ["corn"]


def test_pipeline_mixed_script():
    assert pipeline("Apple تفاحة") == ["apple", "تفاح"]


def test_pipeline_rejects_unknown_language():
    with pytest.raises(ValueError):
        pipeline("x", language="fr")


def test_user_stop_words(tmp_path):
    path = tmp_path / "en.txt"
    path.write_text("mouse\n# comment\n", encoding="utf-8")
    sw = StopWords.from_paths([path])
    assert pipeline("mouse and keyboard", stopwords=sw) == ["and", "keyboard"]


def test_stop_word_dir_override(tmp_path, monkeypatch):
    (tmp_path / "en.txt").write_text("keyboard\n", encoding="utf-8")
    monkeypatch.setenv("CONCEPT_IR_STOPWORDS_DIR", str(tmp_path))
    default_stopwords.cache_clear()
    try:
        assert "keyboard" in default_stopwords("en")
        assert "the" not in default_stopwords("en")
    finally:
        monkeypatch.delenv("CONCEPT_IR_STOPWORDS_DIR")
        default_stopwords.cache_clear()


def test_stop_word_list_is_immutable():
    sw = StopWordList.from_lines("en", ["a"])
    with pytest.raises(Exception):
        sw.words.add("b")


words = st.text(alphabet="abcdefghijklmnopqrstuvwxyzتفاحعينمدكبلةيو", min_size=1, max_size=12)


@pytest.mark.parametrize("name", ["arabic-boolean", "english-boolean", "arabic-vsm", "english-vsm"])
def test_pipeline_idempotent_on_fixture_vocabulary(name):
    from concept_ir.fixtures import load_fixture

    fx = load_fixture(name)
    for doc in fx.collection:
        for phrase in doc.phrases:
            once = pipeline(phrase)
            assert pipeline(once) == once


@given(st.lists(words, max_size=6))
def test_pipeline_drops_every_stop_word(ws):
    sw = StopWords()
    assert not [t for t in pipeline(ws) if t in sw]


@given(words)
def test_stem_never_grows(w):
    n = normalize(w)
    assert len(stem(n)) <= len(n) + 1
