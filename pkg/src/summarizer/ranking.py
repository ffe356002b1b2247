"""
关键短语排序 - 取判别得分最高的 K 个候选短语并归一化
"""

import logging
from dataclasses import dataclass
from typing import List, Sequence, Tuple

from config import SCORE_FLOOR
from keyphrases.candidates import CandidatePhrase, PhraseOccurrence

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RankedKeyphrase:
    """排序结果中的一项"""

    abstract_form: str
    lemmas: Tuple[str, ...]
    lda_score: float
    normalized_score: float
    first: PhraseOccurrence
    frequency: int = 1

    def to_dict(self) -> dict:
        return {
            "abstract_form": self.abstract_form,
            "lda_score": self.lda_score,
            "normalized_score": self.normalized_score,
            "first_sentence": self.first.sent_index,
            "first_word": self.first.word_index,
            "frequency": self.frequency,
        }


@dataclass(frozen=True)
class KeyphraseRanking:
    """前 K 个关键短语，按得分降序"""

    entries: Tuple[RankedKeyphrase, ...]
    k: int

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    @property
    def abstract_forms(self) -> List[str]:
        return [e.abstract_form for e in self.entries]

    def to_list(self) -> List[dict]:
        return [e.to_dict() for e in self.entries]


def ranking_key(candidate: CandidatePhrase, lda_score: float) -> tuple:
    """
    排序键

    得分降序，其次首次出现更早，再其次词数更少、字符更少，最后按字典序。
    """
    return (
        -lda_score,
        candidate.first.sent_index,
        candidate.first.word_index,
        candidate.n,
        len(candidate.abstract_form),
        candidate.abstract_form,
    )


def normalize_scores(scores: Sequence[float], floor: float = SCORE_FLOOR) -> List[float]:
    """
    最小-最大归一化到 [floor, 1]，最低分恰好映射为 floor

    所有得分相等时全部为 1。
    """
    if not scores:
        return []
    low, high = min(scores), max(scores)
    if high == low:
        return [1.0] * len(scores)
    return [floor + (1.0 - floor) * (s - low) / (high - low) for s in scores]


def rank_keyphrases(
    candidates: Sequence[CandidatePhrase],
    scores: Sequence[float],
    k: int,
) -> KeyphraseRanking:
    """
    选出前 k 个关键短语

    Args:
        candidates: 候选短语
        scores: 与 candidates 对应的判别得分
        k: 保留数量

    Returns:
        KeyphraseRanking（候选不足 k 个时全部保留）
    """
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    if len(candidates) != len(scores):
        raise ValueError("candidates and scores differ in length")

    ordered = sorted(zip(candidates, scores), key=lambda pair: ranking_key(*pair))[:k]
    normalized = normalize_scores([float(s) for _, s in ordered])

    entries = tuple(
        RankedKeyphrase(
            abstract_form=c.abstract_form,
            lemmas=c.lemmas,
            lda_score=float(s),
            normalized_score=norm,
            first=c.first,
            frequency=c.frequency,
        )
        for (c, s), norm in zip(ordered, normalized)
    )

    logger.debug(f"Ranked {len(candidates)} candidates, kept {len(entries)}")
    return KeyphraseRanking(entries=entries, k=k)
