"""
候选短语生成

流程: 句内 1..max_n 元窗口 -> 句法规则过滤 -> 按词元抽象形式分组
窗口从不跨越句子单元边界。
"""

import logging
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Tuple

from analysis.document import AnalyzedDocument
from analysis.pos_tags import PosTag
from config import DEFAULT_MAX_N
from keyphrases.syntax_rules import SyntaxRuleSet, DEFAULT_RULES, FORBIDDEN_TAGS

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class PhraseOccurrence:
    """候选短语的一次出现"""

    sent_index: int
    word_index: int
    length: int


@dataclass(frozen=True)
class NgramWindow:
    """一个句内 n 元窗口，携带过滤所需的全部信息"""

    lemmas: Tuple[str, ...]
    occurrence: PhraseOccurrence
    tags: Tuple[PosTag, ...]
    surfaces: Tuple[str, ...]
    conj_flags: Tuple[bool, ...]

    @property
    def abstract_form(self) -> str:
        return ' '.join(self.lemmas)


@dataclass(frozen=True)
class CandidatePhrase:
    """按抽象形式合并后的候选短语"""

    abstract_form: str
    lemmas: Tuple[str, ...]
    surface_example: str
    occurrences: Tuple[PhraseOccurrence, ...]

    @property
    def n(self) -> int:
        return len(self.lemmas)

    @property
    def first(self) -> PhraseOccurrence:
        return self.occurrences[0]

    @property
    def frequency(self) -> int:
        return len(self.occurrences)


def generate_ngrams(doc: AnalyzedDocument, max_n: int = DEFAULT_MAX_N) -> List[NgramWindow]:
    """
    枚举所有句内窗口

    Args:
        doc: 分析后的文档
        max_n: 窗口最大词数

    Returns:
        按 (句子, 起始位置, 长度) 排序的窗口列表
    """
    if max_n < 1:
        raise ValueError(f"max_n must be >= 1, got {max_n}")

    windows: List[NgramWindow] = []
    for sent_index, sentence in enumerate(doc.sentences):
        tokens = sentence.tokens
        for start in range(len(tokens)):
            for length in range(1, min(max_n, len(tokens) - start) + 1):
                span = tokens[start:start + length]
                windows.append(NgramWindow(
                    lemmas=tuple(t.lemma for t in span),
                    occurrence=PhraseOccurrence(sent_index, start, length),
                    tags=tuple(t.pos for t in span),
                    surfaces=tuple(t.surface for t in span),
                    conj_flags=tuple(t.conj_prefix for t in span),
                ))
    return windows


def window_allowed(window: NgramWindow, rules: SyntaxRuleSet = DEFAULT_RULES) -> bool:
    """判断单个窗口是否满足句法规则（只看窗口自身）"""
    tags = window.tags
    if any(tag in FORBIDDEN_TAGS for tag in tags):
        return False
    if tags[0] not in rules.boundary_tags or tags[-1] not in rules.boundary_tags:
        return False
    if window.conj_flags[0] and not rules.allow_conj_initial:
        return False
    interior = rules.interior_tags()
    return all(tag in interior for tag in tags[1:-1])


def filter_by_syntax(
    windows: Iterable[NgramWindow],
    rules: SyntaxRuleSet = DEFAULT_RULES,
) -> List[NgramWindow]:
    """保留满足句法规则的窗口，顺序不变"""
    return [w for w in windows if window_allowed(w, rules)]


def abstract_and_group(windows: Iterable[NgramWindow]) -> List[CandidatePhrase]:
    """
    按词元抽象形式分组

    Args:
        windows: 过滤后的窗口

    Returns:
        候选短语列表，按首次出现位置排序；每个短语的出现位置有序
    """
    groups: Dict[Tuple[str, ...], List[NgramWindow]] = {}
    for window in windows:
        groups.setdefault(window.lemmas, []).append(window)

    candidates = []
    for lemmas, members in groups.items():
        members.sort(key=lambda w: w.occurrence)
        candidates.append(CandidatePhrase(
            abstract_form=' '.join(lemmas),
            lemmas=lemmas,
            surface_example=' '.join(members[0].surfaces),
            occurrences=tuple(w.occurrence for w in members),
        ))

    candidates.sort(key=lambda c: (c.first, c.abstract_form))
    return candidates


def extract_candidates(
    doc: AnalyzedDocument,
    rules: Optional[SyntaxRuleSet] = None,
    max_n: int = DEFAULT_MAX_N,
) -> List[CandidatePhrase]:
    """
    生成文档的全部候选短语

    Args:
        doc: 分析后的文档
        rules: 句法规则（None 使用默认规则）
        max_n: 最大词数

    Returns:
        CandidatePhrase 列表
    """
    windows = generate_ngrams(doc, max_n)
    kept = filter_by_syntax(windows, rules or DEFAULT_RULES)
    candidates = abstract_and_group(kept)
    logger.debug(f"{len(windows)} windows, {len(kept)} kept, {len(candidates)} candidates")
    return candidates
