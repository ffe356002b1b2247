"""
词元词典 - 朴素分析器查询的 form -> (lemma, pos) 映射

文件格式: form<TAB>lemma<TAB>pos，每行一条，'#' 开头为注释。
"""

import logging
from pathlib import Path
from typing import Dict, Iterable, Optional, Tuple, Union

from analysis.pos_tags import PosTag
from config import DEFAULT_LEXICON_FILE
from utils.errors import ParseError, UnknownTag
from ingest.normalizer import decode_utf8

logger = logging.getLogger(__name__)


class Lexicon:
    """只读词典，加载后可在多个分析任务间共享"""

    def __init__(self, entries: Optional[Dict[str, Tuple[str, PosTag]]] = None):
        self._entries: Dict[str, Tuple[str, PosTag]] = dict(entries or {})

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, form: str) -> bool:
        return form in self._entries

    def lookup(self, form: str) -> Optional[Tuple[str, PosTag]]:
        """查询词形，返回 (lemma, pos) 或 None"""
        return self._entries.get(form)

    @classmethod
    def from_lines(cls, lines: Iterable[str]) -> 'Lexicon':
        """
        从文本行构造词典

        Raises:
            ParseError: 字段数不为 3
            UnknownTag: 未知词性
        """
        entries: Dict[str, Tuple[str, PosTag]] = {}
        for line_no, raw_line in enumerate(lines, start=1):
            line = raw_line.rstrip('\r\n')
            if not line.strip() or line.startswith('#'):
                continue

            fields = line.split('\t')
            if len(fields) != 3 or not fields[0] or not fields[1]:
                raise ParseError(line_no, "lexicon entry must be form<TAB>lemma<TAB>pos")

            form, lemma, tag = fields
            try:
                pos = PosTag.parse(tag)
            except ValueError:
                raise UnknownTag(line_no, tag) from None

            if form in entries:
                logger.debug(f"Duplicate lexicon form {form!r} at line {line_no}, keeping last")
            entries[form] = (lemma, pos)

        return cls(entries)


def load_lexicon(path: Union[str, Path, None] = None) -> Lexicon:
    """
    加载词典文件

    Args:
        path: 词典路径（None 使用内置默认词典）

    Returns:
        Lexicon 实例
    """
    path = Path(path) if path else DEFAULT_LEXICON_FILE
    text = decode_utf8(path.read_bytes())
    lexicon = Lexicon.from_lines(text.splitlines())
    logger.info(f"Loaded {len(lexicon)} lexicon entries from {path}")
    return lexicon
