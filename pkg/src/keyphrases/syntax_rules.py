"""
候选短语句法规则

规则文件格式（每行 key: TAG, TAG, ...）:
    boundary: NN, NNS, DTNN, DTNNS, JJ, DTJJ, NUM, FW
    content: NN, NNS, DTNN, DTNNS, JJ, DTJJ, NUM, FW
    bridge: IN
    conj_initial: no            # 可选
"""

import logging
from dataclasses import dataclass
from pathlib import Path
from typing import FrozenSet, Iterable, Union

from analysis.pos_tags import PosTag
from ingest.normalizer import decode_utf8
from utils.errors import ParseError, UnknownTag

logger = logging.getLogger(__name__)

# 任何位置都不允许出现的标签
FORBIDDEN_TAGS = frozenset({PosTag.VV, PosTag.PUNC})

_NOMINAL_TAGS = frozenset({
    PosTag.NN, PosTag.NNS, PosTag.DTNN, PosTag.DTNNS,
    PosTag.JJ, PosTag.DTJJ, PosTag.NUM, PosTag.FW,
})

_REQUIRED_KEYS = ('boundary', 'content', 'bridge')
_YES = {'yes', 'true', '1'}
_NO = {'no', 'false', '0'}


@dataclass(frozen=True)
class SyntaxRuleSet:
    """允许的词性序列"""

    boundary_tags: FrozenSet[PosTag] = _NOMINAL_TAGS
    content_tags: FrozenSet[PosTag] = _NOMINAL_TAGS
    bridge_tags: FrozenSet[PosTag] = frozenset({PosTag.IN})
    allow_conj_initial: bool = False

    def __post_init__(self):
        if not self.boundary_tags <= self.content_tags:
            raise ValueError("boundary tags must be a subset of content tags")
        if self.bridge_tags & self.boundary_tags:
            raise ValueError("bridge tags must not overlap boundary tags")

    def interior_tags(self) -> FrozenSet[PosTag]:
        return self.content_tags | self.bridge_tags

    def serialize(self) -> str:
        """写回规则文件格式"""
        def names(tags):
            return ', '.join(sorted(t.value for t in tags))

        return (
            f"boundary: {names(self.boundary_tags)}\n"
            f"content: {names(self.content_tags)}\n"
            f"bridge: {names(self.bridge_tags)}\n"
            f"conj_initial: {'yes' if self.allow_conj_initial else 'no'}\n"
        )

    @classmethod
    def from_lines(cls, lines: Iterable[str]) -> 'SyntaxRuleSet':
        """
        解析规则文件内容

        Raises:
            ParseError: 缺少必需行、重复或无法识别的行、规则集不满足约束
            UnknownTag: 未知词性
        """
        sections = {}
        conj_initial = False

        for line_no, raw_line in enumerate(lines, start=1):
            line = raw_line.split('#', 1)[0].strip()
            if not line:
                continue

            key, sep, value = line.partition(':')
            key = key.strip().lower()
            if not sep:
                raise ParseError(line_no, f"expected 'key: value', got {line!r}")

            if key == 'conj_initial':
                flag = value.strip().lower()
                if flag not in _YES | _NO:
                    raise ParseError(line_no, f"conj_initial must be yes or no, got {flag!r}")
                conj_initial = flag in _YES
                continue

            if key not in _REQUIRED_KEYS:
                raise ParseError(line_no, f"unknown rule key {key!r}")
            if key in sections:
                raise ParseError(line_no, f"duplicate rule key {key!r}")

            tags = set()
            for name in filter(None, (part.strip() for part in value.split(','))):
                try:
                    tags.add(PosTag.parse(name))
                except ValueError:
                    raise UnknownTag(line_no, name) from None
            sections[key] = (frozenset(tags), line_no)

        missing = [k for k in _REQUIRED_KEYS if k not in sections]
        if missing:
            raise ParseError(0, f"missing rule lines: {', '.join(missing)}")

        try:
            return cls(
                boundary_tags=sections['boundary'][0],
                content_tags=sections['content'][0],
                bridge_tags=sections['bridge'][0],
                allow_conj_initial=conj_initial,
            )
        except ValueError as e:
            raise ParseError(sections['boundary'][1], str(e)) from None


DEFAULT_RULES = SyntaxRuleSet()


def load_rules(path: Union[str, Path, None] = None) -> SyntaxRuleSet:
    """
    加载规则文件

    Args:
        path: 规则文件路径（None 返回内置默认规则）

    Returns:
        SyntaxRuleSet
    """
    if path is None:
        return DEFAULT_RULES
    path = Path(path)
    rules = SyntaxRuleSet.from_lines(decode_utf8(path.read_bytes()).splitlines())
    logger.info(f"Loaded syntax rules from {path}")
    return rules
