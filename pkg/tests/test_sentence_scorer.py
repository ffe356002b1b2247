import pytest
from hypothesis import given, settings, strategies as st

from analysis.document import AnalyzedDocument, Token
from analysis.pos_tags import PosTag
from analysis.sentence_flags import build_sentence
from summarizer.sentence_scorer import (
    Heuristic, contains, count_occurrences, score_merged, score_ncs, score_nks, score_nss, score_sentences,
)
from utils.errors import ArgumentEmpty
from doc_builders import documents, make_doc, make_ranking, ranked, rankings


def test_contains_on_phrase_sample(phrase_doc):
    sentence = phrase_doc.sentences[0]
    assert contains(sentence, "مشروع تعليم")
    assert contains(sentence, ("تعليم", "عن", "بعد"))
    # both lemmas present but not adjacent
    assert not contains(sentence, "مشروع بعد")


def test_empty_keyphrase():
    doc = make_doc("كتاب/NN")
    with pytest.raises(ArgumentEmpty):
        contains(doc.sentences[0], "")
    with pytest.raises(ArgumentEmpty):
        contains(doc.sentences[0], ())


def test_count_occurrences():
    doc = make_doc("كتاب/NN بيت/NN كتاب/NN")
    assert count_occurrences(doc.sentences[0], "كتاب") == 2
    assert count_occurrences(doc.sentences[0], ranked("كتاب بيت")) == 1


def test_nss_values():
    doc = make_doc("ا/NN ب/NN ج/NN", "ا/NN", "ب/NN", "د/NN")
    ranking = make_ranking([ranked("ا", 1.0), ranked("ب", 0.5), ranked("ج", 0.5)])
    scores = score_nss(doc, ranking)
    assert scores.raw == pytest.approx((2.0, 1.0, 0.5, 0.0))
    assert scores.normalized == pytest.approx((1.0, 0.5, 0.25, 0.0))


def test_nss_single_sentence():
    doc = make_doc("ا/NN")
    assert score_nss(doc, make_ranking([ranked("ا", 0.3)])).normalized == (1.0,)


def test_ncs_counts_distinct_keyphrases():
    doc = make_doc("ا/NN ا/NN", "ب/NN ج/NN", "د/NN")
    ranking = make_ranking([ranked("ا", 1.0), ranked("ب", 0.1), ranked("ج", 0.1)])

    ncs = score_ncs(doc, ranking)
    assert ncs.raw == (1.0, 2.0, 0.0)
    assert ncs.normalized == (0.5, 1.0, 0.0)

    # sum and count disagree on the best sentence
    assert score_nss(doc, ranking).normalized[0] == 1.0

    # occurrence counting credits the repeat
    assert score_ncs(doc, ranking, occurrence_mode=True).raw == (2.0, 2.0, 0.0)


def test_ncs_all_zero():
    doc = make_doc("د/NN", "ه/NN")
    assert score_ncs(doc, make_ranking([ranked("ا")])).normalized == (0.0, 0.0)


def test_nks_credits_first_sentence_only():
    doc = make_doc("د/NN", "د/NN", "ا/NN", "د/NN", "د/NN", "ا/NN")
    nks = score_nks(doc, make_ranking([ranked("ا")]))
    assert nks.raw == (0.0, 0.0, 1.0, 0.0, 0.0, 0.0)


def test_nks_distinct_first_sentences():
    lemmas = [f"ك{i}" for i in range(12)]
    doc = make_doc(*(f"{lemma}/NN" for lemma in lemmas))
    nks = score_nks(doc, make_ranking([ranked(lemma) for lemma in lemmas]))
    assert nks.normalized == (1.0,) * 12


def test_empty_ranking():
    doc = make_doc("ا/NN", "ب/NN")
    scores = score_sentences(doc, make_ranking([]))
    assert scores.values(Heuristic.COVERAGE) == [0.0, 0.0]
    assert scores.values(Heuristic.MERGED) == [0.0, 0.0]


def test_merged_components():
    doc = make_doc("ا/NN ب/NN", "ا/NN", "ج/NN")
    ranking = make_ranking([ranked("ا", 1.0), ranked("ب", 1.0)])
    scores = score_sentences(doc, ranking)
    first = scores.rows[0]
    assert (first.nss, first.ncs, first.nks) == (1.0, 1.0, 1.0)
    assert first.merged == 3.0
    second = scores.rows[1]
    assert (second.nss, second.ncs, second.nks) == (0.5, 0.5, 0.0)
    assert second.merged == 1.0
    assert scores.rows[2].merged == 0.0
    assert score_merged(doc, ranking) == [3.0, 1.0, 0.0]
    assert first.contained_keyphrases == ("ا", "ب")
    assert first.first_hits == ("ا", "ب")


def test_sentence_score_value_accepts_strings():
    doc = make_doc("ا/NN")
    row = score_sentences(doc, make_ranking([ranked("ا")])).rows[0]
    assert row.value("sum") == row.nss
    assert row.to_dict()["merged"] == 3.0


@settings(max_examples=1000, deadline=None)
@given(documents(), rankings())
def test_score_invariants(doc, ranking):
    scores = score_sentences(doc, ranking)
    for row in scores.rows:
        assert row.merged == row.nss + row.ncs + row.nks
        for value in (row.nss, row.ncs, row.nks):
            assert 0.0 <= value <= 1.0

    # every contained keyphrase is a first hit of exactly one sentence, the earliest containing it
    for entry in ranking:
        containing = [r.index for r in scores.rows if entry.abstract_form in r.contained_keyphrases]
        hits = [r.index for r in scores.rows if entry.abstract_form in r.first_hits]
        assert hits == containing[:1]


def _append_phrase(doc, sent_index, lemmas):
    """在指定句末追加一次关键短语出现"""
    sentence = doc.sentences[sent_index]
    start = len(sentence.tokens)
    extra = [
        Token(surface=lemma, lemma=lemma, pos=PosTag.NN, sent_index=sent_index, word_index=start + i)
        for i, lemma in enumerate(lemmas)
    ]
    grown = build_sentence(sentence.tokens + tuple(extra), sentence.terminator)
    sentences = doc.sentences[:sent_index] + (grown,) + doc.sentences[sent_index + 1:]
    return AnalyzedDocument(sentences=sentences, source_id=doc.source_id)


@settings(max_examples=500, deadline=None)
@given(documents(), rankings(max_keyphrases=6).filter(lambda r: len(r) > 0), st.data())
def test_adding_an_occurrence_never_lowers_raw_scores(doc, ranking, data):
    s = data.draw(st.integers(0, doc.sentence_count - 1))
    entry = data.draw(st.sampled_from(list(ranking)))
    grown = _append_phrase(doc, s, entry.lemmas)

    for occurrence_mode in (False, True):
        before = score_ncs(doc, ranking, occurrence_mode=occurrence_mode).raw[s]
        after = score_ncs(grown, ranking, occurrence_mode=occurrence_mode).raw[s]
        assert after >= before
    for occurrence_mode in (False, True):
        before = score_nss(doc, ranking, occurrence_mode=occurrence_mode).raw[s]
        assert score_nss(grown, ranking, occurrence_mode=occurrence_mode).raw[s] >= before
    assert contains(grown.sentences[s], entry.lemmas)
