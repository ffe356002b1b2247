"""
句子切分器 - 按阿拉伯文短语分隔符将文本切分为句子单元

切分规则:
1. 逗号、分号、冒号、句点、问号、感叹号（阿拉伯文与拉丁文两套）
2. 破折号仅在两侧均为空白时切分，词内连字符保留
3. 两个数字之间的 '.' ',' '،' 视为数字分隔符
4. 只含空白的片段丢弃
"""

from dataclasses import dataclass
from typing import List, Optional
import logging

from config import (
    SENTENCE_DELIMITERS,
    DASH_DELIMITERS,
    STRONG_DELIMITERS,
    NUMERIC_SEPARATORS,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SentenceSpan:
    """一个句子单元在规范化文本中的位置"""

    index: int
    start: int
    end: int
    terminator: Optional[str]

    def text_of(self, text: str) -> str:
        """取出该单元的文本"""
        return text[self.start:self.end]


class SentenceSegmenter:
    """基于分隔符集合的句子切分器"""

    def __init__(self, strong_only: bool = False):
        """
        初始化切分器

        Args:
            strong_only: 只在强终止符 (. ؟ ? !) 处切分
        """
        self.strong_only = strong_only
        self.delimiters = STRONG_DELIMITERS if strong_only else SENTENCE_DELIMITERS

    def is_delimiter(self, text: str, i: int) -> bool:
        """判断 text[i] 在上下文中是否为分隔符"""
        char = text[i]
        prev_char = text[i - 1] if i > 0 else ''
        next_char = text[i + 1] if i + 1 < len(text) else ''

        if char in self.delimiters:
            if char in NUMERIC_SEPARATORS and prev_char.isdigit() and next_char.isdigit():
                return False
            return True

        if not self.strong_only and char in DASH_DELIMITERS:
            left_free = not prev_char or prev_char.isspace()
            right_free = not next_char or next_char.isspace()
            return left_free and right_free

        return False

    def segment(self, text: str) -> List[SentenceSpan]:
        """
        切分规范化文本

        Args:
            text: 规范化后的文本

        Returns:
            按位置排序的 SentenceSpan 列表，index 从 0 连续编号
        """
        spans: List[SentenceSpan] = []
        seg_start = 0

        for i in range(len(text)):
            if self.is_delimiter(text, i):
                self._close(text, seg_start, i, text[i], spans)
                seg_start = i + 1

        self._close(text, seg_start, len(text), None, spans)

        logger.debug(f"Segmented {len(text)} chars into {len(spans)} spans")
        return spans

    @staticmethod
    def _close(
        text: str,
        seg_start: int,
        seg_end: int,
        terminator: Optional[str],
        spans: List[SentenceSpan],
    ):
        """收尾一个片段，去掉首尾空白后非空才保留"""
        start, end = seg_start, seg_end
        while start < end and text[start].isspace():
            start += 1
        while end > start and text[end - 1].isspace():
            end -= 1
        if start == end:
            return
        spans.append(SentenceSpan(index=len(spans), start=start, end=end, terminator=terminator))


def segment_sentences(text: str, strong_only: bool = False) -> List[SentenceSpan]:
    """快捷函数：切分文本为句子单元"""
    return SentenceSegmenter(strong_only=strong_only).segment(text)
