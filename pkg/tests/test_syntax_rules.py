import pytest

from analysis.pos_tags import PosTag
from config import DEFAULT_RULES_FILE
from keyphrases.candidates import filter_by_syntax, generate_ngrams, window_allowed
from keyphrases.syntax_rules import DEFAULT_RULES, SyntaxRuleSet, load_rules
from utils.errors import ParseError, UnknownTag
from doc_builders import make_doc


def _single_window(spec):
    doc = make_doc(spec)
    n = len(doc.sentences[0])
    return next(w for w in generate_ngrams(doc, n) if w.occurrence.length == n)


def test_shipped_rules_file_matches_defaults():
    assert load_rules(DEFAULT_RULES_FILE) == DEFAULT_RULES
    assert load_rules(None) is DEFAULT_RULES


def test_serialize_round_trip():
    rules = SyntaxRuleSet(
        boundary_tags=frozenset({PosTag.NN}),
        content_tags=frozenset({PosTag.NN, PosTag.JJ}),
        allow_conj_initial=True,
    )
    assert SyntaxRuleSet.from_lines(rules.serialize().splitlines()) == rules


@pytest.mark.parametrize("spec, kept", [
    ("تعليم/DTNN", True),
    ("اعتمد/VV معظم/PART", False),
    ("تعليم/NN عن/IN بعد/NN", True),
    ("عن/IN بعد/NN", False),
    ("تعليم/NN عن/IN", False),
    ("مشروع/NNS قال/VV تعليم/NN", False),
    ("كتاب/NN هذا/PART بيت/NN", False),
    ("معلومة/DTNNS+", False),
    ("اتصال/DTNNS معلومة/DTNNS+", True),
])
def test_default_window_rules(spec, kept):
    assert window_allowed(_single_window(spec)) is kept


def test_conj_initial_allowed_when_configured():
    rules = SyntaxRuleSet(allow_conj_initial=True)
    assert window_allowed(_single_window("معلومة/DTNNS+"), rules)


def test_punctuation_never_allowed():
    permissive = SyntaxRuleSet(
        boundary_tags=frozenset({PosTag.NN}),
        content_tags=frozenset({PosTag.NN, PosTag.PART}),
    )
    assert not window_allowed(_single_window("كتاب/NN ،/PUNC بيت/NN"), permissive)
    assert window_allowed(_single_window("كتاب/NN هذا/PART بيت/NN"), permissive)


def test_filter_preserves_order():
    doc = make_doc("مشروع/NNS تعليم/DTNN")
    kept = filter_by_syntax(generate_ngrams(doc))
    assert [w.abstract_form for w in kept] == ["مشروع", "مشروع تعليم", "تعليم"]


def test_invalid_rule_set():
    with pytest.raises(ValueError):
        SyntaxRuleSet(boundary_tags=frozenset({PosTag.NN}), content_tags=frozenset({PosTag.JJ}))
    with pytest.raises(ValueError):
        SyntaxRuleSet(bridge_tags=frozenset({PosTag.NN}))


def test_parse_errors():
    with pytest.raises(UnknownTag) as info:
        SyntaxRuleSet.from_lines(["boundary: NN, NOUN", "content: NN", "bridge: IN"])
    assert info.value.line_no == 1

    with pytest.raises(ParseError):
        SyntaxRuleSet.from_lines(["boundary: NN", "content: NN"])

    with pytest.raises(ParseError):
        SyntaxRuleSet.from_lines(["boundary: NN", "boundary: NN", "content: NN", "bridge: IN"])

    with pytest.raises(ParseError) as info:
        SyntaxRuleSet.from_lines(["boundary: NN, JJ", "content: NN", "bridge: IN"])
    assert info.value.line_no == 1

    with pytest.raises(ParseError):
        SyntaxRuleSet.from_lines(["boundary: NN", "content: NN", "bridge: IN", "conj_initial: maybe"])


def test_comments_and_blank_lines(tmp_path):
    path = tmp_path / "rules.txt"
    path.write_text("# rules\n\nboundary: NN  # nouns only\ncontent: NN, JJ\nbridge: IN\n", encoding="utf-8")
    rules = load_rules(path)
    assert rules.boundary_tags == frozenset({PosTag.NN})
    assert rules.content_tags == frozenset({PosTag.NN, PosTag.JJ})
    assert not rules.allow_conj_initial
