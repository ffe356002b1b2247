"""
朴素形态分析器 - 没有预标注文件时的兜底分析

策略:
1. 数字串 -> NUM，标点 -> PUNC，拉丁词 -> FW
2. 整词查封闭虚词表 / 词典
3. 剥离连接词前缀 و/ف 后再查
4. 剥离定冠词 ال 后查词典，得到 DT 变体
5. 其余未知词 -> NN / DTNN，词元取剥离后的形式

分析器是全函数：任何输入都会得到一个带标签的词。
"""

import re
import logging
from typing import List, Optional, Sequence, Tuple

from analysis.document import Token, AnalyzedDocument
from analysis.lexicon import Lexicon
from analysis.pos_tags import PosTag
from analysis.script_detector import get_script_detector
from analysis.sentence_flags import build_sentence
from config import CONJUNCTION_PREFIXES, DEFINITE_ARTICLE
from ingest.normalizer import RawDocument
from ingest.segmenter import SentenceSpan

logger = logging.getLogger(__name__)

# 数字串 | 拉丁词（保留词内连字符和撇号）| 阿拉伯词 | 其余单个非空白字符
_TOKEN_PATTERN = re.compile(
    r"\d+(?:[.,،]\d+)*"
    r"|[A-Za-zÀ-ɏ]+(?:['’\-][A-Za-zÀ-ɏ]+)*"
    r"|[ء-ٟٮ-ۓۺ-ۿݐ-ݿ]+"
    r"|\S"
)

# 剥离前缀后至少保留的字母数
_MIN_STEM = 2


class NaiveAnalyzer:
    """基于词缀剥离和词典查询的浅层分析器"""

    PREPOSITIONS = frozenset({
        'في', 'من', 'على', 'إلى', 'عن', 'مع', 'حتى', 'منذ',
        'خلال', 'بين', 'نحو', 'عند', 'لدى', 'قبل',
    })

    ADVERBS = frozenset({
        'الآن', 'أيضا', 'أيضاً', 'فقط', 'هنا', 'هناك', 'جدا', 'كذلك',
    })

    PARTICLES = frozenset({
        'إن', 'أن', 'لا', 'لم', 'لن', 'قد', 'ما', 'هل',
        'هذا', 'هذه', 'ذلك', 'تلك', 'التي', 'الذي', 'الذين',
        'كل', 'معظم', 'بعض', 'بها', 'به', 'لها', 'له',
        'هو', 'هي', 'هم', 'كما', 'مما', 'ثم', 'أو', 'و',
    })

    def __init__(self, lexicon: Optional[Lexicon] = None):
        """
        初始化分析器

        Args:
            lexicon: 词典（None 时只依赖虚词表和默认规则）
        """
        self.lexicon = lexicon or Lexicon()
        self.detector = get_script_detector()

    def tokenize(self, text: str) -> List[str]:
        """将一个句子单元切成词"""
        return _TOKEN_PATTERN.findall(text)

    def _closed_class(self, form: str) -> Optional[PosTag]:
        if form in self.PREPOSITIONS:
            return PosTag.IN
        if form in self.ADVERBS:
            return PosTag.RB
        if form in self.PARTICLES:
            return PosTag.PART
        return None

    def _lookup(self, form: str) -> Optional[Tuple[str, PosTag]]:
        """查虚词表和词典，词典标签取基础形式"""
        tag = self._closed_class(form)
        if tag is not None:
            return form, tag
        entry = self.lexicon.lookup(form)
        if entry is not None:
            lemma, pos = entry
            return lemma, pos.base
        return None

    def _strip_article(self, form: str) -> Optional[str]:
        if form.startswith(DEFINITE_ARTICLE) and len(form) - len(DEFINITE_ARTICLE) >= _MIN_STEM:
            return form[len(DEFINITE_ARTICLE):]
        return None

    def _analyze_arabic(self, surface: str) -> Tuple[str, PosTag, bool]:
        """分析阿拉伯词，返回 (lemma, pos, conj_prefix)"""
        found = self._lookup(surface)
        if found is not None:
            return found[0], found[1], False

        # 剥离连接词：只有剥离后可识别（查得到或带定冠词）才采信
        if surface[:1] in CONJUNCTION_PREFIXES and len(surface) - 1 >= _MIN_STEM:
            rest = surface[1:]
            found = self._lookup(rest)
            if found is not None:
                return found[0], found[1], True
            if self._strip_article(rest) is not None:
                lemma, pos = self._analyze_definite(rest)
                return lemma, pos, True

        if self._strip_article(surface) is not None:
            lemma, pos = self._analyze_definite(surface)
            return lemma, pos, False

        return surface, PosTag.NN, False

    def _analyze_definite(self, form: str) -> Tuple[str, PosTag]:
        stem = self._strip_article(form)
        entry = self.lexicon.lookup(stem)
        if entry is not None:
            lemma, pos = entry
            return lemma, pos.with_article()
        return stem, PosTag.DTNN

    def analyze_word(self, surface: str, sent_index: int = 0, word_index: int = 0) -> Token:
        """
        分析单个词

        Args:
            surface: 词的表层形式
            sent_index: 所在句子序号
            word_index: 句内位置

        Returns:
            Token
        """
        script = self.detector.detect_script(surface)

        if script == 'digit':
            lemma, pos, conj = surface, PosTag.NUM, False
        elif script == 'punct':
            lemma, pos, conj = surface, PosTag.PUNC, False
        elif script == 'arabic':
            lemma, pos, conj = self._analyze_arabic(surface)
        else:
            # 拉丁词和无法识别的文字按外来词处理
            lemma, pos, conj = surface, PosTag.FW, False

        return Token(
            surface=surface,
            lemma=lemma,
            pos=pos,
            conj_prefix=conj,
            sent_index=sent_index,
            word_index=word_index,
        )

    def analyze(self, document: RawDocument, spans: Sequence[SentenceSpan]) -> AnalyzedDocument:
        """
        分析整篇文档

        Args:
            document: 规范化后的原始文档
            spans: segment_sentences 的输出

        Returns:
            AnalyzedDocument，句子顺序与 spans 一致
        """
        sentences = []
        for sent_index, span in enumerate(spans):
            text = span.text_of(document.text)
            tokens = [
                self.analyze_word(word, sent_index, word_index)
                for word_index, word in enumerate(self.tokenize(text))
            ]
            sentences.append(build_sentence(tokens, span.terminator, text=text))

        analyzed = AnalyzedDocument(sentences=tuple(sentences), source_id=document.source_id)
        logger.debug(f"Naive analysis: {analyzed.sentence_count} sentences, "
                     f"{analyzed.token_count} tokens")
        return analyzed


def naive_analyze(
    document: RawDocument,
    spans: Sequence[SentenceSpan],
    lexicon: Optional[Lexicon] = None,
) -> AnalyzedDocument:
    """快捷函数：用朴素分析器分析文档"""
    return NaiveAnalyzer(lexicon).analyze(document, spans)
