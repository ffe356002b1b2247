"""
句子打分 - 基于关键短语的四种启发式

- sum (NSS):      句中所含关键短语归一化得分之和
- count (NCS):    句中所含不同关键短语的个数
- coverage (NKS): 关键短语首次出现所在句子计数
- merged:         NSS + NCS + NKS

三个基础分数各自除以全文最大值；全为 0 时保持 0。
包含判断在词元层面进行：关键短语的词元序列需在句中连续出现。
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Sequence, Tuple, Union

from analysis.document import AnalyzedDocument, SentenceRecord
from summarizer.ranking import KeyphraseRanking, RankedKeyphrase
from utils.errors import ArgumentEmpty

logger = logging.getLogger(__name__)


class Heuristic(str, Enum):
    """句子选择启发式"""

    SUM = 'sum'
    COUNT = 'count'
    COVERAGE = 'coverage'
    MERGED = 'merged'


KeyphraseLike = Union[str, Sequence[str], RankedKeyphrase]


def _lemmas_of(keyphrase: KeyphraseLike) -> Tuple[str, ...]:
    if isinstance(keyphrase, RankedKeyphrase):
        return keyphrase.lemmas
    if isinstance(keyphrase, str):
        return tuple(keyphrase.split())
    return tuple(keyphrase)


def count_occurrences(sentence: SentenceRecord, keyphrase: KeyphraseLike) -> int:
    """关键短语词元序列在句中连续出现的次数"""
    lemmas = _lemmas_of(keyphrase)
    if not lemmas:
        raise ArgumentEmpty("keyphrase has no lemmas")

    sentence_lemmas = sentence.lemmas
    n = len(lemmas)
    return sum(
        1 for start in range(len(sentence_lemmas) - n + 1)
        if sentence_lemmas[start:start + n] == lemmas
    )


def contains(sentence: SentenceRecord, keyphrase: KeyphraseLike) -> bool:
    """
    句子是否包含关键短语

    Args:
        sentence: 句子记录
        keyphrase: 抽象形式字符串、词元序列或排序项

    Raises:
        ArgumentEmpty: 关键短语为空
    """
    return count_occurrences(sentence, keyphrase) > 0


@dataclass(frozen=True)
class HeuristicScores:
    """单一启发式的原始分数与归一化分数"""

    raw: Tuple[float, ...]
    normalized: Tuple[float, ...]


@dataclass(frozen=True)
class SentenceScore:
    """一个句子的全部分数"""

    index: int
    nss: float
    ncs: float
    nks: float
    merged: float
    contained_keyphrases: Tuple[str, ...]
    first_hits: Tuple[str, ...]

    def value(self, heuristic: Heuristic) -> float:
        return {
            Heuristic.SUM: self.nss,
            Heuristic.COUNT: self.ncs,
            Heuristic.COVERAGE: self.nks,
            Heuristic.MERGED: self.merged,
        }[Heuristic(heuristic)]

    def to_dict(self) -> dict:
        return {
            "index": self.index,
            "nss": self.nss,
            "ncs": self.ncs,
            "nks": self.nks,
            "merged": self.merged,
            "contained_keyphrases": list(self.contained_keyphrases),
            "first_hits": list(self.first_hits),
        }


@dataclass(frozen=True)
class SentenceScores:
    """整篇文档的句子分数"""

    rows: Tuple[SentenceScore, ...]

    def __len__(self) -> int:
        return len(self.rows)

    def values(self, heuristic: Heuristic) -> List[float]:
        return [row.value(heuristic) for row in self.rows]

    def to_list(self) -> List[dict]:
        return [row.to_dict() for row in self.rows]


def occurrence_matrix(doc: AnalyzedDocument, ranking: KeyphraseRanking) -> List[List[int]]:
    """matrix[s][k] = 第 k 个关键短语在句子 s 中的出现次数"""
    return [
        [count_occurrences(sentence, entry) for entry in ranking.entries]
        for sentence in doc.sentences
    ]


def _normalize(raw: Sequence[float]) -> Tuple[float, ...]:
    top = max(raw, default=0)
    if top <= 0:
        return tuple(0.0 for _ in raw)
    return tuple(r / top for r in raw)


def _sum_raw(matrix, ranking: KeyphraseRanking, occurrence_mode: bool) -> List[float]:
    weights = [e.normalized_score for e in ranking.entries]
    return [
        sum(w * (c if occurrence_mode else min(c, 1)) for w, c in zip(weights, row))
        for row in matrix
    ]


def _count_raw(matrix, occurrence_mode: bool) -> List[float]:
    return [float(sum(c if occurrence_mode else min(c, 1) for c in row)) for row in matrix]


def _first_hits(matrix, n_keyphrases: int) -> List[List[int]]:
    """每个句子作为首次出现句的关键短语下标"""
    hits: List[List[int]] = [[] for _ in matrix]
    for k in range(n_keyphrases):
        for s, row in enumerate(matrix):
            if row[k]:
                hits[s].append(k)
                break
    return hits


def score_nss(doc: AnalyzedDocument, ranking: KeyphraseRanking, occurrence_mode: bool = False) -> HeuristicScores:
    """NSS: 所含关键短语归一化得分之和，再除以最大值"""
    raw = _sum_raw(occurrence_matrix(doc, ranking), ranking, occurrence_mode)
    return HeuristicScores(raw=tuple(raw), normalized=_normalize(raw))


def score_ncs(doc: AnalyzedDocument, ranking: KeyphraseRanking, occurrence_mode: bool = False) -> HeuristicScores:
    """NCS: 所含不同关键短语个数，再除以最大值"""
    raw = _count_raw(occurrence_matrix(doc, ranking), occurrence_mode)
    return HeuristicScores(raw=tuple(raw), normalized=_normalize(raw))


def score_nks(doc: AnalyzedDocument, ranking: KeyphraseRanking) -> HeuristicScores:
    """NKS: 以该句为首次出现句的关键短语个数，再除以最大值"""
    hits = _first_hits(occurrence_matrix(doc, ranking), len(ranking))
    raw = [float(len(h)) for h in hits]
    return HeuristicScores(raw=tuple(raw), normalized=_normalize(raw))


def score_merged(doc: AnalyzedDocument, ranking: KeyphraseRanking, occurrence_mode: bool = False) -> List[float]:
    """合并分数 NSS + NCS + NKS"""
    return score_sentences(doc, ranking, occurrence_mode).values(Heuristic.MERGED)


def score_sentences(
    doc: AnalyzedDocument,
    ranking: KeyphraseRanking,
    occurrence_mode: bool = False,
) -> SentenceScores:
    """
    一次性计算全部四种分数

    Args:
        doc: 分析后的文档
        ranking: 关键短语排序
        occurrence_mode: NSS/NCS 按出现次数而非不同短语计数

    Returns:
        SentenceScores
    """
    matrix = occurrence_matrix(doc, ranking)
    hits = _first_hits(matrix, len(ranking))

    nss = _normalize(_sum_raw(matrix, ranking, occurrence_mode))
    ncs = _normalize(_count_raw(matrix, occurrence_mode))
    nks = _normalize([float(len(h)) for h in hits])

    forms = ranking.abstract_forms
    rows = tuple(
        SentenceScore(
            index=s,
            nss=nss[s],
            ncs=ncs[s],
            nks=nks[s],
            merged=nss[s] + ncs[s] + nks[s],
            contained_keyphrases=tuple(forms[k] for k, c in enumerate(row) if c),
            first_hits=tuple(forms[k] for k in hits[s]),
        )
        for s, row in enumerate(matrix)
    )

    logger.debug(f"Scored {len(rows)} sentences against {len(ranking)} keyphrases")
    return SentenceScores(rows=rows)
