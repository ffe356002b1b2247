"""
分析后文档的数据模型

Token -> SentenceRecord -> AnalyzedDocument，全部为不可变对象，
可在多个工作线程间共享。
"""

from dataclasses import dataclass, field
from typing import Optional, Tuple, Iterator

from analysis.pos_tags import PosTag


@dataclass(frozen=True, slots=True)
class Token:
    """一个经过分析的词"""

    surface: str
    lemma: str
    pos: PosTag
    conj_prefix: bool = False
    root: Optional[str] = None
    pattern: Optional[str] = None
    sent_index: int = 0
    word_index: int = 0


@dataclass(frozen=True)
class SentenceRecord:
    """一个句子单元及其标志位"""

    tokens: Tuple[Token, ...]
    contains_verb: bool
    is_question: bool
    terminator: Optional[str] = None
    text: Optional[str] = None

    def __len__(self) -> int:
        return len(self.tokens)

    @property
    def lemmas(self) -> Tuple[str, ...]:
        return tuple(t.lemma for t in self.tokens)

    def display_text(self) -> str:
        """摘要输出使用的表层文本（不含终止符）"""
        if self.text is not None:
            return self.text
        return ' '.join(t.surface for t in self.tokens)


@dataclass(frozen=True)
class AnalyzedDocument:
    """按顺序排列的句子单元"""

    sentences: Tuple[SentenceRecord, ...] = field(default_factory=tuple)
    source_id: str = ""

    @property
    def token_count(self) -> int:
        return sum(len(s.tokens) for s in self.sentences)

    @property
    def sentence_count(self) -> int:
        return len(self.sentences)

    def iter_tokens(self) -> Iterator[Token]:
        for sentence in self.sentences:
            yield from sentence.tokens
