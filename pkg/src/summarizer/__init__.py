"""
摘要模块

- ranking: 前 K 个关键短语及其归一化得分
- sentence_scorer: NSS / NCS / NKS / merged 句子分数
- summary_builder: 按压缩比组装摘要
- pipeline: 端到端流水线
"""

from .ranking import KeyphraseRanking, RankedKeyphrase, rank_keyphrases
from .sentence_scorer import (
    Heuristic, SentenceScores, contains,
    score_nss, score_ncs, score_nks, score_merged, score_sentences,
)
from .summary_builder import Summary, assemble_summary, render_summary_text
from .pipeline import summarize, summarize_with_ranking, extract_keyphrases, SummaryResult

__all__ = [
    'KeyphraseRanking', 'RankedKeyphrase', 'rank_keyphrases',
    'Heuristic', 'SentenceScores', 'contains',
    'score_nss', 'score_ncs', 'score_nks', 'score_merged', 'score_sentences',
    'Summary', 'assemble_summary', 'render_summary_text',
    'summarize', 'summarize_with_ranking', 'extract_keyphrases', 'SummaryResult',
]
