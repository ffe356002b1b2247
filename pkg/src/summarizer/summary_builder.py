"""
摘要组装 - 按分数降序选句，按原文顺序输出
"""

import math
import logging
from dataclasses import dataclass
from typing import Tuple

from analysis.document import AnalyzedDocument
from config import BUDGET_EPSILON
from summarizer.sentence_scorer import Heuristic, SentenceScores
from utils.errors import EmptyDocument

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Summary:
    """抽取式摘要"""

    selected: Tuple[int, ...]
    heuristic: Heuristic
    ratio: float
    budget: int

    def to_dict(self) -> dict:
        return {
            "selected": list(self.selected),
            "heuristic": Heuristic(self.heuristic).value,
            "ratio": self.ratio,
            "budget": self.budget,
        }


def compute_budget(ratio: float, sentence_count: int) -> int:
    """ceil(ratio × S)，容忍浮点误差（0.25 × 40 不会变成 11）；非空文档至少为 1"""
    if not 0 < ratio <= 1:
        raise ValueError(f"ratio must be in (0, 1], got {ratio}")
    if sentence_count <= 0:
        return 0
    return max(1, math.ceil(ratio * sentence_count - BUDGET_EPSILON))


def assemble_summary(
    doc: AnalyzedDocument,
    scores: SentenceScores,
    heuristic: Heuristic = Heuristic.MERGED,
    ratio: float = 0.25,
) -> Summary:
    """
    组装摘要

    只选择分数大于 0 的句子，分数相同时取序号小的；预算用完即停止。

    Args:
        doc: 分析后的文档
        scores: 同一文档的句子分数
        heuristic: 选句依据
        ratio: 压缩比 (0, 1]

    Returns:
        Summary，selected 严格递增

    Raises:
        EmptyDocument: 文档没有句子
    """
    if doc.sentence_count == 0:
        raise EmptyDocument(f"document {doc.source_id or '<input>'} has no sentences")

    heuristic = Heuristic(heuristic)
    budget = compute_budget(ratio, doc.sentence_count)
    values = scores.values(heuristic)

    ranked = sorted(
        (i for i, v in enumerate(values) if v > 0),
        key=lambda i: (-values[i], i),
    )
    selected = tuple(sorted(ranked[:budget]))

    logger.debug(f"Selected {len(selected)}/{budget} sentences by {heuristic.value}")
    return Summary(selected=selected, heuristic=heuristic, ratio=ratio, budget=budget)


def render_summary_text(doc: AnalyzedDocument, summary: Summary) -> str:
    """
    选中句子按原文顺序拼接，各自带上原终止符

    没有终止符的单元（如标题）单独成行，其余单元以空格相连。
    """
    text = ''
    previous_open = False
    for index in summary.selected:
        sentence = doc.sentences[index]
        if text:
            text += '\n' if previous_open else ' '
        text += sentence.display_text() + (sentence.terminator or '')
        previous_open = sentence.terminator is None
    return text
