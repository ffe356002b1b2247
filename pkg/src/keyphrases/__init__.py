"""
关键短语模块

- syntax_rules: 候选短语的词性序列规则
- candidates: n 元窗口生成、过滤与分组
- features: 8 维特征
- feature_io: 特征 CSV 读写
- classifier: Fisher LDA 训练、打分与持久化
"""

from .syntax_rules import SyntaxRuleSet, DEFAULT_RULES, load_rules
from .candidates import (
    PhraseOccurrence, NgramWindow, CandidatePhrase,
    generate_ngrams, filter_by_syntax, abstract_and_group, extract_candidates,
)
from .features import FEATURE_NAMES, FeatureVector, DocumentStats, compute_document_stats, compute_features
from .classifier import LabeledSample, LdaModel, train, score, save_model, load_model

__all__ = [
    'SyntaxRuleSet', 'DEFAULT_RULES', 'load_rules',
    'PhraseOccurrence', 'NgramWindow', 'CandidatePhrase',
    'generate_ngrams', 'filter_by_syntax', 'abstract_and_group', 'extract_candidates',
    'FEATURE_NAMES', 'FeatureVector', 'DocumentStats', 'compute_document_stats', 'compute_features',
    'LabeledSample', 'LdaModel', 'train', 'score', 'save_model', 'load_model',
]
