"""
句子标志位 - SCV 与 IIT 特征依赖的动词/问句判断
"""

from typing import Iterable, Optional, Sequence, FrozenSet, Union

from analysis.document import Token, SentenceRecord
from analysis.pos_tags import PosTag
from config import INTERROGATIVE_WORDS, QUESTION_TERMINATORS, CONJUNCTION_PREFIXES

# 独立出现时视为连接词的词
_STANDALONE_CONJUNCTIONS = frozenset({'و', 'ف', 'ثم', 'أو'})


def contains_verb(tokens: Iterable[Token]) -> bool:
    """句子中是否存在动词"""
    return any(t.pos is PosTag.VV for t in tokens)


def _without_conjunction(token: Token) -> str:
    surface = token.surface
    if token.conj_prefix and surface[:1] in CONJUNCTION_PREFIXES and len(surface) > 1:
        return surface[1:]
    return surface


def detect_question(
    sentence: Union[SentenceRecord, Sequence[Token]],
    terminator: Optional[str],
    interrogatives: FrozenSet[str] = INTERROGATIVE_WORDS,
) -> bool:
    """
    判断句子是否为问句

    终止符为问号，或第一个非连接词的词属于疑问词表。

    Args:
        sentence: 句子记录或词序列
        terminator: 句子终止符
        interrogatives: 疑问词表

    Returns:
        是否为问句
    """
    if terminator in QUESTION_TERMINATORS:
        return True

    tokens = sentence.tokens if isinstance(sentence, SentenceRecord) else sentence
    for token in tokens:
        if token.surface in _STANDALONE_CONJUNCTIONS:
            continue
        return _without_conjunction(token) in interrogatives

    return False


def build_sentence(
    tokens: Sequence[Token],
    terminator: Optional[str],
    text: Optional[str] = None,
) -> SentenceRecord:
    """根据词序列构造带标志位的句子记录"""
    tokens = tuple(tokens)
    return SentenceRecord(
        tokens=tokens,
        contains_verb=contains_verb(tokens),
        is_question=detect_question(tokens, terminator),
        terminator=terminator,
        text=text,
    )
