"""
端到端流水线

候选短语 -> 特征 -> 判别得分 -> 关键短语排序 -> 句子打分 -> 摘要组装
给定 (文档, 模型, 参数) 时结果完全确定。
"""

import logging
from dataclasses import dataclass, field
from typing import FrozenSet, List, Optional, Tuple

from analysis.document import AnalyzedDocument
from config import DEFAULT_MAX_N, DEFAULT_RATIO, DEFAULT_TOP_K, STOP_LEMMAS
from keyphrases.candidates import CandidatePhrase, extract_candidates
from keyphrases.classifier import LdaModel, score_many
from keyphrases.features import FeatureVector, compute_all_features
from keyphrases.syntax_rules import SyntaxRuleSet
from summarizer.ranking import KeyphraseRanking, rank_keyphrases
from summarizer.sentence_scorer import Heuristic, SentenceScores, score_sentences
from summarizer.summary_builder import Summary, assemble_summary
from utils.errors import EmptyDocument

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class KeyphraseExtraction:
    """关键短语抽取各阶段的产物"""

    candidates: Tuple[CandidatePhrase, ...]
    features: Tuple[FeatureVector, ...]
    scores: Tuple[float, ...]
    ranking: KeyphraseRanking


@dataclass(frozen=True)
class SummaryResult:
    """摘要及其诊断信息"""

    summary: Summary
    ranking: KeyphraseRanking
    sentence_scores: SentenceScores
    extraction: Optional[KeyphraseExtraction] = field(default=None, compare=False)


def extract_keyphrases(
    doc: AnalyzedDocument,
    model: LdaModel,
    k: int = DEFAULT_TOP_K,
    rules: Optional[SyntaxRuleSet] = None,
    max_n: int = DEFAULT_MAX_N,
    nsl_early_high: Optional[bool] = None,
    npl_early_high: Optional[bool] = None,
    stop_lemmas: FrozenSet[str] = STOP_LEMMAS,
) -> KeyphraseExtraction:
    """
    抽取并排序关键短语

    方向标志为 None 时沿用模型训练时的约定。

    Raises:
        EmptyDocument: 文档没有句子
    """
    if doc.sentence_count == 0:
        raise EmptyDocument(f"document {doc.source_id or '<input>'} has no sentences")

    nsl = model.nsl_early_high if nsl_early_high is None else nsl_early_high
    npl = model.npl_early_high if npl_early_high is None else npl_early_high

    candidates = extract_candidates(doc, rules, max_n)
    features = compute_all_features(
        doc, candidates,
        max_phrase_words=max_n,
        nsl_early_high=nsl,
        npl_early_high=npl,
        stop_lemmas=stop_lemmas,
    )
    scores: List[float] = score_many(model, [f.as_tuple() for f in features]).tolist() if features else []
    ranking = rank_keyphrases(candidates, scores, k)

    logger.info(f"{doc.source_id or '<input>'}: {len(candidates)} candidates, top {len(ranking)} kept")
    return KeyphraseExtraction(
        candidates=tuple(candidates),
        features=tuple(features),
        scores=tuple(scores),
        ranking=ranking,
    )


def summarize_with_ranking(
    doc: AnalyzedDocument,
    ranking: KeyphraseRanking,
    heuristic: Heuristic = Heuristic.MERGED,
    ratio: float = DEFAULT_RATIO,
    occurrence_mode: bool = False,
) -> Tuple[Summary, SentenceScores]:
    """给定关键短语排序，对句子打分并组装摘要"""
    scores = score_sentences(doc, ranking, occurrence_mode)
    summary = assemble_summary(doc, scores, heuristic, ratio)
    return summary, scores


def summarize(
    doc: AnalyzedDocument,
    model: LdaModel,
    k: int = DEFAULT_TOP_K,
    heuristic: Heuristic = Heuristic.MERGED,
    ratio: float = DEFAULT_RATIO,
    rules: Optional[SyntaxRuleSet] = None,
    max_n: int = DEFAULT_MAX_N,
    occurrence_mode: bool = False,
    nsl_early_high: Optional[bool] = None,
    npl_early_high: Optional[bool] = None,
) -> SummaryResult:
    """
    生成摘要

    Args:
        doc: 分析后的文档
        model: LDA 模型
        k: 参与打分的关键短语数
        heuristic: 选句启发式
        ratio: 压缩比
        rules: 候选短语句法规则
        max_n: 候选短语最大词数
        occurrence_mode: NSS/NCS 按出现次数计数

    Returns:
        SummaryResult
    """
    extraction = extract_keyphrases(
        doc, model, k, rules, max_n,
        nsl_early_high=nsl_early_high,
        npl_early_high=npl_early_high,
    )
    summary, scores = summarize_with_ranking(doc, extraction.ranking, heuristic, ratio, occurrence_mode)
    return SummaryResult(
        summary=summary,
        ranking=extraction.ranking,
        sentence_scores=scores,
        extraction=extraction,
    )
