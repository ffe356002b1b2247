"""
评测指标

- 关键短语: 与标准列表比较的 precision / recall（精确或模糊匹配）
- 摘要: 两个句子集合之间的 overlap / precision / recall / jaccard / dice
"""

import logging
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Collection, FrozenSet, Iterable, List, Sequence, TypeVar, Union

from ingest.normalizer import decode_utf8
from utils.errors import ArgumentEmpty, EmptyGold, EmptySummary

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GoldKeyphrases:
    """一篇文档的标准关键短语（词元形式）"""

    doc_id: str
    phrases: FrozenSet[str]

    def __post_init__(self):
        if not self.phrases:
            raise EmptyGold(f"gold list for {self.doc_id or '<input>'} is empty")


@dataclass(frozen=True)
class KeyphraseReport:
    matches: int
    k: int
    gold_size: int
    precision: float
    recall: float


@dataclass(frozen=True)
class SimilarityReport:
    overlap_count: int
    precision: float
    recall: float
    jaccard: float
    dice: float


def _canonical(phrase: str) -> str:
    return ' '.join(phrase.split())


def parse_gold(text: str, doc_id: str = "") -> GoldKeyphrases:
    """每行一个词元形式短语；空行与 '#' 注释忽略"""
    phrases = frozenset(
        _canonical(line) for line in text.splitlines()
        if line.strip() and not line.lstrip().startswith('#')
    )
    return GoldKeyphrases(doc_id=doc_id, phrases=phrases)


def load_gold(path: Union[str, Path]) -> GoldKeyphrases:
    """
    读取标准关键短语文件

    Raises:
        EmptyGold: 文件中没有短语
    """
    path = Path(path)
    return parse_gold(decode_utf8(path.read_bytes()), doc_id=str(path))


def _fuzzy_match(phrase: str, gold: Iterable[str]) -> bool:
    """一方的词元集合是另一方的子集即视为匹配"""
    lemmas = set(phrase.split())
    return any(lemmas <= set(g.split()) or set(g.split()) <= lemmas for g in gold)


def keyphrase_pr(
    extracted: Sequence[str],
    gold: Union[GoldKeyphrases, Collection[str]],
    fuzzy: bool = False,
) -> KeyphraseReport:
    """
    关键短语 precision / recall

    precision = 匹配数 / k，recall = 匹配数 / |gold|。

    Args:
        extracted: 抽取出的前 k 个抽象形式
        gold: 标准列表
        fuzzy: 启用子集/超集模糊匹配

    Raises:
        EmptyGold: 标准列表为空
        ArgumentEmpty: extracted 为空
    """
    phrases = gold.phrases if isinstance(gold, GoldKeyphrases) else frozenset(_canonical(g) for g in gold)
    if not phrases:
        raise EmptyGold("gold list is empty")
    if not extracted:
        raise ArgumentEmpty("no extracted keyphrases to evaluate")

    forms = [_canonical(e) for e in extracted]
    if fuzzy:
        matches = sum(1 for form in forms if _fuzzy_match(form, phrases))
    else:
        matches = sum(1 for form in forms if form in phrases)

    # 模糊模式下多个抽取短语可能对应同一标准短语，recall 不超过 1
    recall = min(matches, len(phrases)) / len(phrases)

    return KeyphraseReport(
        matches=matches,
        k=len(forms),
        gold_size=len(phrases),
        precision=matches / len(forms),
        recall=recall,
    )


def summary_similarity(a: Collection[int], b: Collection[int]) -> SimilarityReport:
    """
    两个摘要（句子序号集合）的相似度

    Raises:
        EmptySummary: 任一摘要为空
    """
    set_a, set_b = set(a), set(b)
    if not set_a or not set_b:
        raise EmptySummary("cannot compare an empty summary")

    overlap = len(set_a & set_b)
    return SimilarityReport(
        overlap_count=overlap,
        precision=overlap / len(set_a),
        recall=overlap / len(set_b),
        jaccard=overlap / len(set_a | set_b),
        dice=2 * overlap / (len(set_a) + len(set_b)),
    )


ReportT = TypeVar('ReportT', KeyphraseReport, SimilarityReport)


def macro_average(reports: Sequence[ReportT]) -> dict:
    """
    逐字段取平均（宏平均）

    Returns:
        字段名 -> 平均值，reports 为空时返回空字典
    """
    if not reports:
        return {}
    names: List[str] = [f.name for f in fields(reports[0])]
    return {
        name: sum(getattr(r, name) for r in reports) / len(reports)
        for name in names
    }
