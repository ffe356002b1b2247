import pytest

from analysis.document import AnalyzedDocument
from summarizer.sentence_scorer import Heuristic, SentenceScore, SentenceScores
from summarizer.summary_builder import assemble_summary, compute_budget, render_summary_text
from utils.errors import EmptyDocument
from doc_builders import make_doc


def _scores(values):
    return SentenceScores(rows=tuple(
        SentenceScore(index=i, nss=v, ncs=v, nks=v, merged=3 * v, contained_keyphrases=(), first_hits=())
        for i, v in enumerate(values)
    ))


def test_budget():
    assert compute_budget(0.25, 40) == 10
    assert compute_budget(0.25, 26) == 7
    assert compute_budget(0.25, 1) == 1
    assert compute_budget(1.0, 5) == 5
    # float artefacts do not round up
    assert compute_budget(0.1 * 3, 10) == 3
    # any valid ratio keeps at least one sentence
    assert compute_budget(1e-10, 1) == 1
    assert compute_budget(1e-10, 500) == 1
    assert compute_budget(0.5, 0) == 0


@pytest.mark.parametrize("ratio", [0.0, -0.5, 1.5])
def test_invalid_ratio(ratio):
    with pytest.raises(ValueError):
        compute_budget(ratio, 10)


def test_forty_sentences_quarter_ratio():
    doc = make_doc(*["كتاب/NN"] * 40)
    summary = assemble_summary(doc, _scores([0.5] * 40), Heuristic.SUM, 0.25)
    assert len(summary.selected) == 10
    assert summary.budget == 10


def test_tie_prefers_earlier_sentence():
    doc = make_doc("ا/NN", "ب/NN", "ج/NN")
    summary = assemble_summary(doc, _scores([0.9, 0.9, 0.1]), Heuristic.COUNT, ratio=0.2)
    assert summary.budget == 1
    assert summary.selected == (0,)


def test_full_ratio_keeps_nonzero_sentences_in_order():
    doc = make_doc("ا/NN", "ب/NN", "ج/NN", "د/NN")
    summary = assemble_summary(doc, _scores([0.2, 0.0, 1.0, 0.5]), Heuristic.MERGED, ratio=1.0)
    assert summary.selected == (0, 2, 3)


def test_selection_is_sorted_by_position():
    doc = make_doc("ا/NN", "ب/NN", "ج/NN", "د/NN")
    summary = assemble_summary(doc, _scores([0.1, 0.2, 1.0, 0.9]), Heuristic.SUM, ratio=0.5)
    assert summary.selected == (2, 3)


def test_empty_document():
    with pytest.raises(EmptyDocument):
        assemble_summary(AnalyzedDocument(), _scores([]), Heuristic.MERGED, 0.25)


def test_render_uses_original_terminators(unicef_doc):
    doc = make_doc("كتاب/NN جديد/JJ", "بيت/NN", terminator="،")
    summary = assemble_summary(doc, _scores([1.0, 1.0]), Heuristic.SUM, 1.0)
    assert render_summary_text(doc, summary) == "كتاب جديد، بيت،"

    title = assemble_summary(unicef_doc, _scores([1.0] + [0.0] * 25), Heuristic.SUM, 0.25)
    assert render_summary_text(unicef_doc, title) == "الععمل الإنساني لليونسيف والصمود"


def test_title_unit_ends_its_own_line(unicef_doc):
    summary = assemble_summary(unicef_doc, _scores([1.0, 1.0] + [0.0] * 24), Heuristic.SUM, 1.0)
    first = unicef_doc.sentences[1]
    title, body = render_summary_text(unicef_doc, summary).split("\n")
    assert title == "الععمل الإنساني لليونسيف والصمود"
    assert body == first.display_text() + first.terminator


def test_summary_to_dict():
    doc = make_doc("ا/NN")
    summary = assemble_summary(doc, _scores([1.0]), "coverage", 1.0)
    assert summary.to_dict() == {"selected": [0], "heuristic": "coverage", "ratio": 1.0, "budget": 1}
