"""
文本接入模块

- normalizer: 读取与规范化原始文本
- segmenter: 按分隔符切分句子单元
"""

from .normalizer import RawDocument, normalize_text, read_raw_document
from .segmenter import SentenceSpan, SentenceSegmenter, segment_sentences

__all__ = [
    'RawDocument', 'normalize_text', 'read_raw_document',
    'SentenceSpan', 'SentenceSegmenter', 'segment_sentences',
]
