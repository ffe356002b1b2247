import io

import pytest

from config import FIXTURE_TRAINING_FILE
from keyphrases.feature_io import (
    CSV_HEADER, FeatureRow, feature_rows_to_csv, label_candidates, load_feature_csv, read_feature_csv,
)
from keyphrases.candidates import extract_candidates
from keyphrases.features import FeatureVector
from utils.errors import ParseError
from doc_builders import make_doc

HEADER = ','.join(CSV_HEADER)


def test_fixture_corpus_is_labeled():
    rows = load_feature_csv(FIXTURE_TRAINING_FILE)
    assert len(rows) == 24
    assert all(row.label is not None for row in rows)
    assert any(row.label for row in rows)
    assert not all(row.label for row in rows)


def test_write_then_read_keeps_exact_floats():
    rows = [
        FeatureRow("طفل", FeatureVector.from_sequence([1 / 3, 0.1, 0.2, 1.0, 0.7, 1 / 7, 0.0, 1.0]), True),
        FeatureRow("عمل إنساني", FeatureVector.from_sequence([2 / 3] + [0.5] * 7), None),
    ]
    assert read_feature_csv(feature_rows_to_csv(rows)) == rows


def test_label_spellings():
    text = (
        f"{HEADER}\n"
        "a,1,1,1,1,1,1,0,0,keyphrase\n"
        "b,1,1,1,1,1,1,0,0,non-keyphrase\n"
        "c,1,1,1,1,1,1,0,0,0\n"
        "\n"
    )
    assert [r.label for r in read_feature_csv(io.StringIO(text))] == [True, False, False]


@pytest.mark.parametrize("text, line_no", [
    ("", 1),
    ("form,npw\n", 1),
    (f"{HEADER}\na,1,1\n", 2),
    (f"{HEADER}\na,1,1,1,1,1,1,0,x,1\n", 2),
    (f"{HEADER}\na,1,1,1,1,1,1,0,0,maybe\n", 2),
])
def test_malformed_csv(text, line_no):
    with pytest.raises(ParseError) as excinfo:
        read_feature_csv(text)
    assert excinfo.value.line_no == line_no


def test_label_candidates():
    candidates = extract_candidates(make_doc("كتاب/NN بيت/NN"))
    assert label_candidates(candidates, {"كتاب بيت"}) == [False, True, False]
