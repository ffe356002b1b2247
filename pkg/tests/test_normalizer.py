import pytest
from hypothesis import given, settings, strategies as st

from ingest.normalizer import normalize_text, read_raw_document, decode_utf8
from utils.errors import InvalidEncoding


def test_empty_input():
    assert normalize_text("") == ""


def test_whitespace_collapse():
    assert normalize_text("a  b") == "a b"
    assert normalize_text("  a\t\n b  ") == "a b"


def test_tatweel_removed():
    assert normalize_text("الـــحاسب") == "الحاسب"


def test_decomposed_hamza_is_composed():
    assert normalize_text("\u0627\u0654") == "\u0623"
    assert normalize_text("\u0627\u0640\u0654") == "\u0623"
    # letters are kept as written
    assert normalize_text("\u0625\u0649") == "\u0625\u0649"


def test_arabic_indic_digits_become_ascii():
    assert normalize_text("عام ٢٠١٠") == "عام 2010"
    assert normalize_text("۱۲۳") == "123"


def test_bytes_are_decoded():
    assert normalize_text("التعليم".encode("utf-8")) == "التعليم"


def test_invalid_utf8_raises():
    with pytest.raises(InvalidEncoding) as info:
        normalize_text(b"\xff\xfe\xfa")
    assert "UTF-8" in str(info.value)


def test_lone_surrogate_raises():
    with pytest.raises(InvalidEncoding):
        normalize_text("abc\ud800")


def test_decode_utf8_reports_offset():
    with pytest.raises(InvalidEncoding) as info:
        decode_utf8("ok".encode() + b"\xc3\x28")
    assert "byte 2" in str(info.value)


def test_read_raw_document(tmp_path):
    path = tmp_path / "doc.txt"
    path.write_text("إن  مشاريع\nالتعليم", encoding="utf-8")
    doc = read_raw_document(path)
    assert doc.text == "إن مشاريع التعليم"
    assert doc.source_id == str(path)


@settings(max_examples=300, deadline=None)
@given(st.text() | st.text(alphabet="\u0627\u0648\u064a\u0640\u0654\u0655\u0653 \u064b\u0651"))
def test_normalize_is_idempotent(text):
    once = normalize_text(text)
    assert normalize_text(once) == once


@settings(max_examples=300, deadline=None)
@given(st.text(alphabet="ابتـ ٠١٢ \t\n"))
def test_no_tatweel_or_double_space_survives(text):
    result = normalize_text(text)
    assert "ـ" not in result
    assert "  " not in result
    assert result == result.strip()
