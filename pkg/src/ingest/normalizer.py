"""
文本规范化 - 将原始 UTF-8 文本整理为可切分的统一形式

功能:
1. 严格 UTF-8 解码（失败时借助 chardet 给出编码猜测）
2. 去除阿拉伯文延长符 (tatweel, U+0640)
3. 阿拉伯-印度数字转换为 ASCII 数字
4. Unicode NFC 组合（如 ا + U+0654 合成 أ），不改写字母本身
5. 合并连续空白
"""

import re
import logging
import unicodedata
from dataclasses import dataclass
from pathlib import Path
from typing import Union

try:
    import chardet
    HAS_CHARDET = True
except ImportError:
    HAS_CHARDET = False
    logging.warning("chardet not installed, encoding guesses disabled")

from utils.errors import InvalidEncoding

logger = logging.getLogger(__name__)

TATWEEL = 'ـ'

# ٠-٩ 与 ۰-۹ 映射到 0-9
_DIGIT_TABLE = {
    **{0x0660 + i: str(i) for i in range(10)},
    **{0x06F0 + i: str(i) for i in range(10)},
}
_DIGIT_TABLE[ord(TATWEEL)] = None

_WHITESPACE_RUN = re.compile(r'\s+')


@dataclass(frozen=True)
class RawDocument:
    """一篇原始文档"""

    text: str
    source_id: str = ""


def _guess_encoding(raw: bytes) -> str | None:
    """猜测字节串的编码，仅用于错误提示"""
    if not HAS_CHARDET:
        return None
    guess = chardet.detect(raw[:65536])
    return guess.get('encoding')


def decode_utf8(raw: bytes) -> str:
    """
    严格按 UTF-8 解码

    Args:
        raw: 原始字节

    Returns:
        解码后的文本

    Raises:
        InvalidEncoding: 字节串不是合法 UTF-8
    """
    try:
        return raw.decode('utf-8')
    except UnicodeDecodeError as e:
        guessed = _guess_encoding(raw)
        hint = f" (looks like {guessed})" if guessed else ""
        raise InvalidEncoding(
            f"input is not valid UTF-8 at byte {e.start}{hint}",
            guessed_encoding=guessed,
        ) from e


def normalize_text(raw: Union[str, bytes]) -> str:
    """
    规范化文本

    去延长符与数字转换 -> NFC -> 合并空白 -> 去首尾空白。
    延长符须在 NFC 之前去除，否则被它隔开的组合符号要到第二遍才会合成。
    该顺序保证幂等：normalize_text(normalize_text(t)) == normalize_text(t)。

    Args:
        raw: 原始文本或 UTF-8 字节

    Returns:
        规范化后的文本

    Raises:
        InvalidEncoding: 输入不是合法 UTF-8
    """
    if isinstance(raw, bytes):
        text = decode_utf8(raw)
    else:
        text = raw
        try:
            # 孤立代理项无法编码为 UTF-8
            text.encode('utf-8')
        except UnicodeEncodeError as e:
            raise InvalidEncoding(f"input contains unencodable character at {e.start}") from e

    text = text.translate(_DIGIT_TABLE)
    text = unicodedata.normalize('NFC', text)
    text = _WHITESPACE_RUN.sub(' ', text)
    return text.strip()


def read_raw_document(path: Union[str, Path]) -> RawDocument:
    """
    读取纯文本文件，整个文件视为一篇文档

    Args:
        path: 文件路径

    Returns:
        RawDocument（text 已规范化）
    """
    path = Path(path)
    raw = path.read_bytes()
    logger.debug(f"Read {len(raw)} bytes from {path}")
    return RawDocument(text=normalize_text(raw), source_id=str(path))
