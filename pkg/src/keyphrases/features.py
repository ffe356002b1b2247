"""
候选短语特征计算

每个候选短语计算 8 维特征（顺序见 FEATURE_NAMES）:
    npw    短语词数 / 最大短语词数
    prf    抽象形式出现次数 / 最高频短语的出现次数
    wrf    短语内最高频实词词元的文档频次 / 候选窗口内实词词元的最高文档频次
    nsl    句子位置
    npl    句内位置
    nplen  短语词数 / 所在句子词数
    scv    所在句子含动词为 0，否则为 1
    iit    所在句子为问句为 1，否则为 0

位置类特征均以首次出现为锚点。
"""

import logging
from collections import Counter
from dataclasses import dataclass, astuple, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from analysis.document import AnalyzedDocument, Token
from analysis.pos_tags import PosTag
from config import DEFAULT_MAX_N, FUNCTION_TAGS, STOP_LEMMAS
from keyphrases.candidates import CandidatePhrase
from utils.errors import InconsistentStats

logger = logging.getLogger(__name__)

FEATURE_NAMES: Tuple[str, ...] = ('npw', 'prf', 'wrf', 'nsl', 'npl', 'nplen', 'scv', 'iit')

FEATURE_COUNT = len(FEATURE_NAMES)

_FUNCTION_TAGS = frozenset(PosTag(t) for t in FUNCTION_TAGS)


@dataclass(frozen=True)
class FeatureVector:
    """一个候选短语的特征向量"""

    npw: float
    prf: float
    wrf: float
    nsl: float
    npl: float
    nplen: float
    scv: float
    iit: float

    def as_tuple(self) -> Tuple[float, ...]:
        return astuple(self)

    @classmethod
    def from_sequence(cls, values: Sequence[float]) -> 'FeatureVector':
        if len(values) != FEATURE_COUNT:
            raise ValueError(f"expected {FEATURE_COUNT} feature values, got {len(values)}")
        return cls(*(float(v) for v in values))


@dataclass(frozen=True)
class DocumentStats:
    """文档级统计量，计算一次后只读"""

    max_phrase_words: int
    max_phrase_freq: int
    max_word_freq: int
    sentence_count: int
    sentence_lengths: Tuple[int, ...]
    word_freq: Dict[str, int] = field(default_factory=dict)


def is_content_token(token: Token) -> bool:
    """实词：词性不属于功能词标签"""
    return token.pos not in _FUNCTION_TAGS


def compute_document_stats(
    doc: AnalyzedDocument,
    candidates: Sequence[CandidatePhrase],
    max_phrase_words: int = DEFAULT_MAX_N,
    stop_lemmas: FrozenSet[str] = STOP_LEMMAS,
) -> DocumentStats:
    """
    计算文档统计量

    词频按全文实词计数；最高词频只在候选窗口内的实词词元上取，
    与 WRF 分子同一口径，因此总有候选的 wrf = 1。

    Args:
        doc: 分析后的文档
        candidates: 同一文档的候选短语
        max_phrase_words: 短语最大词数（NPW 的分母）
        stop_lemmas: WRF 分子额外跳过的词元

    Returns:
        DocumentStats
    """
    word_freq = Counter(t.lemma for t in doc.iter_tokens() if is_content_token(t))
    return DocumentStats(
        max_phrase_words=max_phrase_words,
        max_phrase_freq=max((c.frequency for c in candidates), default=0),
        max_word_freq=max(
            (_phrase_word_freq(c, doc, word_freq, stop_lemmas) for c in candidates), default=0
        ),
        sentence_count=doc.sentence_count,
        sentence_lengths=tuple(len(s) for s in doc.sentences),
        word_freq=dict(word_freq),
    )


def _phrase_word_freq(
    candidate: CandidatePhrase,
    doc: AnalyzedDocument,
    word_freq: Dict[str, int],
    stop_lemmas: FrozenSet[str],
) -> int:
    """短语首次出现中实词词元的最高文档频次"""
    first = candidate.first
    tokens = doc.sentences[first.sent_index].tokens[first.word_index:first.word_index + first.length]
    content = [t.lemma for t in tokens if is_content_token(t)]
    preferred = [lemma for lemma in content if lemma not in stop_lemmas] or content
    return max((word_freq.get(lemma, 0) for lemma in preferred), default=0)


def compute_features(
    candidate: CandidatePhrase,
    doc: AnalyzedDocument,
    stats: DocumentStats,
    nsl_early_high: bool = True,
    npl_early_high: bool = True,
    stop_lemmas: FrozenSet[str] = STOP_LEMMAS,
) -> FeatureVector:
    """
    计算单个候选短语的特征向量

    Args:
        candidate: 候选短语
        doc: 所属文档
        stats: 同一文档的统计量
        nsl_early_high: 句子越靠前 nsl 越大
        npl_early_high: 句内越靠前 npl 越大
        stop_lemmas: WRF 分子额外跳过的词元

    Returns:
        FeatureVector

    Raises:
        InconsistentStats: 任一分母为 0
    """
    s, w, n = candidate.first.sent_index, candidate.first.word_index, candidate.n
    S = stats.sentence_count

    if stats.max_phrase_words <= 0 or stats.max_phrase_freq <= 0 or stats.max_word_freq <= 0 or S <= 0:
        raise InconsistentStats(
            f"zero denominator in document stats for {candidate.abstract_form!r}"
        )
    if s >= S:
        raise InconsistentStats(f"sentence index {s} outside document of {S} sentences")

    L = stats.sentence_lengths[s]
    if L <= 0:
        raise InconsistentStats(f"sentence {s} has no tokens")

    sentence = doc.sentences[s]

    return FeatureVector(
        npw=n / stats.max_phrase_words,
        prf=candidate.frequency / stats.max_phrase_freq,
        wrf=_phrase_word_freq(candidate, doc, stats.word_freq, stop_lemmas) / stats.max_word_freq,
        nsl=(S - s) / S if nsl_early_high else (s + 1) / S,
        npl=(L - w) / L if npl_early_high else (w + 1) / L,
        nplen=n / L,
        scv=0.0 if sentence.contains_verb else 1.0,
        iit=1.0 if sentence.is_question else 0.0,
    )


def compute_all_features(
    doc: AnalyzedDocument,
    candidates: Sequence[CandidatePhrase],
    max_phrase_words: int = DEFAULT_MAX_N,
    nsl_early_high: bool = True,
    npl_early_high: bool = True,
    stop_lemmas: FrozenSet[str] = STOP_LEMMAS,
    stats: Optional[DocumentStats] = None,
) -> List[FeatureVector]:
    """
    计算全部候选短语的特征

    Returns:
        与 candidates 一一对应的特征向量列表
    """
    if not candidates:
        return []

    stats = stats or compute_document_stats(doc, candidates, max_phrase_words, stop_lemmas)
    vectors = [
        compute_features(c, doc, stats, nsl_early_high, npl_early_high, stop_lemmas)
        for c in candidates
    ]
    logger.debug(f"Computed features for {len(vectors)} candidates "
                 f"(max_phrase_freq={stats.max_phrase_freq}, max_word_freq={stats.max_word_freq})")
    return vectors
