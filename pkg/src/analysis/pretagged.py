"""
预标注词文件读写

文件格式（UTF-8，每行一个词）:
    surface<TAB>lemma<TAB>pos<TAB>conj(0|1)[<TAB>root[<TAB>pattern]]
    #SENT<TAB><terminator>      结束一个句子（终止符可为空）

空行忽略。文件末尾未被 #SENT 关闭的词组成最后一个句子，终止符为 None。
"""

import io
import logging
from pathlib import Path
from typing import List, Optional, TextIO, Union

from analysis.document import Token, AnalyzedDocument, SentenceRecord
from analysis.pos_tags import PosTag, LEMMA_REQUIRED_TAGS
from analysis.sentence_flags import build_sentence
from utils.errors import ParseError, UnknownTag
from ingest.normalizer import decode_utf8

logger = logging.getLogger(__name__)

SENTENCE_MARK = '#SENT'


def _parse_token_line(fields: List[str], line_no: int, sent_index: int, word_index: int) -> Token:
    """解析一行词记录"""
    if not 4 <= len(fields) <= 6:
        raise ParseError(line_no, f"expected 4-6 tab-separated fields, got {len(fields)}")

    surface, lemma, tag, conj = fields[:4]
    root = fields[4] if len(fields) > 4 and fields[4] else None
    pattern = fields[5] if len(fields) > 5 and fields[5] else None

    if not surface:
        raise ParseError(line_no, "empty surface form")

    try:
        pos = PosTag.parse(tag)
    except ValueError:
        raise UnknownTag(line_no, tag) from None

    if conj not in ('0', '1'):
        raise ParseError(line_no, f"conj field must be 0 or 1, got {conj!r}")

    if pos in LEMMA_REQUIRED_TAGS and not lemma:
        raise ParseError(line_no, f"empty lemma for {pos.value} token {surface!r}")

    return Token(
        surface=surface,
        lemma=lemma,
        pos=pos,
        conj_prefix=conj == '1',
        root=root,
        pattern=pattern,
        sent_index=sent_index,
        word_index=word_index,
    )


def read_pretagged(stream: Union[str, bytes, TextIO], source_id: str = "") -> AnalyzedDocument:
    """
    读取预标注词文件

    Args:
        stream: 文件内容（str / bytes）或文本流
        source_id: 文档标识

    Returns:
        AnalyzedDocument

    Raises:
        ParseError: 行格式错误
        UnknownTag: 未知词性标签
    """
    if isinstance(stream, bytes):
        stream = decode_utf8(stream)
    if isinstance(stream, str):
        stream = io.StringIO(stream)

    sentences: List[SentenceRecord] = []
    current: List[Token] = []

    for line_no, raw_line in enumerate(stream, start=1):
        line = raw_line.rstrip('\r\n')
        if not line.strip():
            continue

        fields = line.split('\t')

        if fields[0] == SENTENCE_MARK:
            if len(fields) > 2:
                raise ParseError(line_no, "sentence marker takes at most one terminator field")
            if not current:
                raise ParseError(line_no, "sentence marker closes an empty sentence")
            terminator = fields[1] if len(fields) == 2 and fields[1] else None
            sentences.append(build_sentence(current, terminator))
            current = []
            continue

        current.append(_parse_token_line(fields, line_no, len(sentences), len(current)))

    if current:
        sentences.append(build_sentence(current, None))

    document = AnalyzedDocument(sentences=tuple(sentences), source_id=source_id)
    logger.debug(f"Read pre-tagged document: {document.sentence_count} sentences, "
                 f"{document.token_count} tokens")
    return document


def load_pretagged(path: Union[str, Path]) -> AnalyzedDocument:
    """从文件读取预标注文档"""
    path = Path(path)
    return read_pretagged(path.read_bytes(), source_id=str(path))


def _format_token(token: Token) -> str:
    fields = [token.surface, token.lemma, token.pos.value, '1' if token.conj_prefix else '0']
    if token.pattern is not None:
        fields += [token.root or '', token.pattern]
    elif token.root is not None:
        fields.append(token.root)
    return '\t'.join(fields)


def serialize_pretagged(document: AnalyzedDocument) -> str:
    """
    将文档写回预标注格式（read_pretagged 的逆操作）

    Args:
        document: 分析后的文档

    Returns:
        预标注文件内容
    """
    lines: List[str] = []
    last = document.sentence_count - 1

    for i, sentence in enumerate(document.sentences):
        lines.extend(_format_token(t) for t in sentence.tokens)
        terminator: Optional[str] = sentence.terminator
        if terminator is None and i == last:
            continue
        lines.append(f"{SENTENCE_MARK}\t{terminator or ''}")

    return ''.join(line + '\n' for line in lines)
