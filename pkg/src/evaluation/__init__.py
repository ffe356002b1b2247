"""
评测模块

- metrics: 关键短语 P/R 与摘要相似度
- report: 摘要文件读取与报告渲染
"""

from .metrics import (
    GoldKeyphrases, KeyphraseReport, SimilarityReport,
    parse_gold, load_gold, keyphrase_pr, summary_similarity, macro_average,
)
from .report import parse_summary_indices, load_summary_indices, build_report, report_to_json

__all__ = [
    'GoldKeyphrases', 'KeyphraseReport', 'SimilarityReport',
    'parse_gold', 'load_gold', 'keyphrase_pr', 'summary_similarity', 'macro_average',
    'parse_summary_indices', 'load_summary_indices', 'build_report', 'report_to_json',
]
