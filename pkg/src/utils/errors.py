"""
异常定义

流水线各阶段抛出的具名异常。每个异常携带 exit_code，
由 main.py 统一转换为进程退出码。
"""

from typing import Optional


class SummarizerError(Exception):
    """所有流水线异常的基类"""

    exit_code = 3


class InvalidEncoding(SummarizerError, ValueError):
    """输入不是合法的 UTF-8"""

    def __init__(self, message: str, guessed_encoding: Optional[str] = None):
        super().__init__(message)
        self.guessed_encoding = guessed_encoding


class ParseError(SummarizerError, ValueError):
    """预标注文件、规则文件或特征 CSV 的格式错误"""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class UnknownTag(ParseError):
    """词性标签不在 PosTag 集合内"""

    def __init__(self, line_no: int, tag: str):
        super().__init__(line_no, f"unknown POS tag {tag!r}")
        self.tag = tag


class InconsistentStats(SummarizerError, ValueError):
    """文档统计量的某个分母为 0"""

    exit_code = 4


class DegenerateClasses(SummarizerError, ValueError):
    """训练样本缺少某一类，或两类无法区分"""


class SingularScatter(SummarizerError, ValueError):
    """未正则化的类内散度矩阵不可逆"""


class ModelFormatError(SummarizerError, ValueError):
    """模型文件版本或字段不匹配"""


class ArgumentEmpty(SummarizerError, ValueError):
    """必需参数为空"""

    exit_code = 1


class EmptyDocument(SummarizerError, ValueError):
    """文档没有任何句子"""

    exit_code = 4


class EmptyGold(SummarizerError, ValueError):
    """标准关键短语列表为空"""


class EmptySummary(SummarizerError, ValueError):
    """参与比较的摘要为空"""


class NoCandidates(SummarizerError):
    """文档中没有任何候选短语；partial_output 携带仍需写出的空结果"""

    exit_code = 4

    def __init__(self, message: str, partial_output: str = ""):
        super().__init__(message)
        self.partial_output = partial_output
