"""
形态分析模块

- pos_tags: 封闭词性标签集
- document: Token / SentenceRecord / AnalyzedDocument 数据模型
- pretagged: 预标注词文件读写
- lexicon: 词元词典
- naive_analyzer: 兜底的朴素分析器
- sentence_flags: 动词 / 问句标志位
- script_detector: 书写系统检测
"""

from .pos_tags import PosTag
from .document import Token, SentenceRecord, AnalyzedDocument
from .pretagged import read_pretagged, load_pretagged, serialize_pretagged
from .lexicon import Lexicon, load_lexicon
from .naive_analyzer import NaiveAnalyzer, naive_analyze
from .sentence_flags import contains_verb, detect_question, build_sentence

__all__ = [
    'PosTag', 'Token', 'SentenceRecord', 'AnalyzedDocument',
    'read_pretagged', 'load_pretagged', 'serialize_pretagged',
    'Lexicon', 'load_lexicon', 'NaiveAnalyzer', 'naive_analyze',
    'contains_verb', 'detect_question', 'build_sentence',
]
