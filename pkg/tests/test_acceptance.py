"""
端到端验收: 内置模型在人道主义新闻样例上的关键短语与摘要
"""

import json

from evaluation.metrics import keyphrase_pr, load_gold, summary_similarity
from main import main
from summarizer.pipeline import summarize

# 人工参考摘要选中的句子单元（0 为标题）
REFERENCE_UNITS = {1, 2, 6, 7, 11}


def test_keyphrases_overlap_gold_list(capsys, fixtures_dir):
    assert main(["keyphrases", str(fixtures_dir / "unicef_ar.tok"), "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    forms = [entry["abstract_form"] for entry in payload["keyphrases"]]
    assert len(forms) == 12

    gold = load_gold(fixtures_dir / "unicef_gold_lemmas.txt")
    report = keyphrase_pr(forms, gold)
    assert report.gold_size == 12
    assert report.matches >= 6
    assert forms[0] == "طفل"


def test_merged_summary_covers_reference(capsys, fixtures_dir):
    assert main(["summarize", str(fixtures_dir / "unicef_ar.tok"), "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    selected = set(payload["summary"]["selected"])
    assert payload["summary"]["budget"] == 7
    assert len(selected) <= 7
    assert len(selected & REFERENCE_UNITS) >= 3


def test_every_heuristic_produces_a_full_summary(unicef_doc, default_model):
    for heuristic in ("sum", "count", "coverage", "merged"):
        result = summarize(unicef_doc, default_model, heuristic=heuristic, ratio=0.25)
        assert 0 < len(result.summary.selected) <= 7
        report = summary_similarity(result.summary.selected, REFERENCE_UNITS)
        assert 0.0 <= report.jaccard <= 1.0


def test_phrase_sample_sentence_has_ten_candidates(capsys, fixtures_dir):
    assert main(["keyphrases", str(fixtures_dir / "phrase_sample.tok"), "--top-k", "50"]) == 0
    assert len(capsys.readouterr().out.splitlines()) == 10


def test_raw_text_runs_end_to_end(capsys, fixtures_dir):
    assert main(["summarize", str(fixtures_dir / "unicef_ar.txt"), "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["sentence_count"] > 10
    assert payload["summary"]["selected"]
