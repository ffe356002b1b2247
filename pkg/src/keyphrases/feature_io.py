"""
特征 CSV 读写（训练与调试用）

表头: abstract_form,npw,prf,wrf,nsl,npl,nplen,scv,iit,label
label 列接受 1/0、keyphrase/non-keyphrase 或留空（未标注）。
"""

import csv
import io
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import Collection, Iterable, List, Optional, TextIO, Union

from keyphrases.candidates import CandidatePhrase
from keyphrases.features import FEATURE_NAMES, FeatureVector
from ingest.normalizer import decode_utf8
from utils.errors import ParseError

logger = logging.getLogger(__name__)

CSV_HEADER = ('abstract_form',) + FEATURE_NAMES + ('label',)

_POSITIVE = {'1', 'keyphrase'}
_NEGATIVE = {'0', 'non-keyphrase'}


@dataclass(frozen=True)
class FeatureRow:
    """CSV 中的一行"""

    abstract_form: str
    features: FeatureVector
    label: Optional[bool] = None


def _format_label(label: Optional[bool]) -> str:
    if label is None:
        return ''
    return '1' if label else '0'


def _parse_label(value: str, line_no: int) -> Optional[bool]:
    value = value.strip().lower()
    if not value:
        return None
    if value in _POSITIVE:
        return True
    if value in _NEGATIVE:
        return False
    raise ParseError(line_no, f"unrecognized label {value!r}")


def label_candidates(candidates: Iterable[CandidatePhrase], gold: Collection[str]) -> List[bool]:
    """抽象形式在标准列表中的候选标为关键短语"""
    return [c.abstract_form in gold for c in candidates]


def write_feature_csv(rows: Iterable[FeatureRow], stream: TextIO):
    """
    写出特征 CSV

    浮点数使用 repr 输出，读回时精确还原。
    """
    writer = csv.writer(stream, lineterminator='\n')
    writer.writerow(CSV_HEADER)
    for row in rows:
        writer.writerow(
            [row.abstract_form]
            + [repr(v) for v in row.features.as_tuple()]
            + [_format_label(row.label)]
        )


def feature_rows_to_csv(rows: Iterable[FeatureRow]) -> str:
    """特征行渲染为 CSV 字符串"""
    buffer = io.StringIO()
    write_feature_csv(rows, buffer)
    return buffer.getvalue()


def read_feature_csv(stream: Union[str, bytes, TextIO]) -> List[FeatureRow]:
    """
    读取特征 CSV

    Args:
        stream: CSV 内容或文本流

    Returns:
        FeatureRow 列表

    Raises:
        ParseError: 表头不符、列数错误、数值或标签无法解析
    """
    if isinstance(stream, bytes):
        stream = decode_utf8(stream)
    if isinstance(stream, str):
        stream = io.StringIO(stream)

    reader = csv.reader(stream)
    rows: List[FeatureRow] = []

    header = next(reader, None)
    if header is None:
        raise ParseError(1, "empty feature file")
    if tuple(h.strip() for h in header) != CSV_HEADER:
        raise ParseError(1, f"expected header {','.join(CSV_HEADER)}")

    for record in reader:
        line_no = reader.line_num
        if not record or all(not field.strip() for field in record):
            continue
        if len(record) != len(CSV_HEADER):
            raise ParseError(line_no, f"expected {len(CSV_HEADER)} columns, got {len(record)}")

        try:
            values = [float(v) for v in record[1:-1]]
        except ValueError:
            raise ParseError(line_no, "non-numeric feature value") from None

        rows.append(FeatureRow(
            abstract_form=record[0],
            features=FeatureVector.from_sequence(values),
            label=_parse_label(record[-1], line_no),
        ))

    logger.debug(f"Read {len(rows)} feature rows")
    return rows


def load_feature_csv(path: Union[str, Path]) -> List[FeatureRow]:
    """从文件读取特征 CSV"""
    return read_feature_csv(Path(path).read_bytes())
