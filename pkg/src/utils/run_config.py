"""
单次运行的配置（pydantic 校验）

静态默认值来自 config.py；命令行参数在读取任何输入之前先经过这里校验。
"""

from enum import Enum
from pathlib import Path
from typing import List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from config import DEFAULT_MAX_N, DEFAULT_RATIO, DEFAULT_REG_LAMBDA, DEFAULT_TOP_K
from summarizer.sentence_scorer import Heuristic


class AnalysisMode(str, Enum):
    """文档分析方式；auto 按扩展名选择（.tok 为预标注）"""

    AUTO = 'auto'
    PRETAGGED = 'pretagged'
    NAIVE = 'naive'

    def resolve(self, path: Path) -> 'AnalysisMode':
        if self is not AnalysisMode.AUTO:
            return self
        return AnalysisMode.PRETAGGED if path.suffix.lower() == '.tok' else AnalysisMode.NAIVE


class OutputFormat(str, Enum):
    TEXT = 'text'
    JSON = 'json'


class DumpStage(str, Enum):
    CANDIDATES = 'candidates'
    FEATURES = 'features'
    SCORES = 'scores'


class RunConfig(BaseModel):
    """summarize / keyphrases / analyze 共用的运行配置"""

    model_config = ConfigDict(frozen=True, use_enum_values=False)

    inputs: List[Path] = Field(min_length=1)
    mode: AnalysisMode = AnalysisMode.AUTO
    lexicon: Optional[Path] = None
    rules: Optional[Path] = None
    model: Optional[Path] = None
    heuristic: Heuristic = Heuristic.MERGED
    top_k: int = Field(default=DEFAULT_TOP_K, ge=1)
    ratio: float = Field(default=DEFAULT_RATIO, gt=0, le=1)
    max_n: int = Field(default=DEFAULT_MAX_N, ge=1)
    output_format: OutputFormat = OutputFormat.TEXT
    nsl_early_high: Optional[bool] = None
    npl_early_high: Optional[bool] = None
    strong_only: bool = False
    occurrence_mode: bool = False
    dump: Optional[DumpStage] = None
    dump_dir: Optional[Path] = None
    gold: Optional[Path] = None
    output_dir: Optional[Path] = None
    exclude: List[str] = Field(default_factory=list)

    def echo(self) -> dict:
        """写入每个 JSON 输出的配置回显（可 JSON 序列化，不含输出位置）"""
        data = self.model_dump(mode='json', exclude={'output_dir', 'dump_dir'})
        data['inputs'] = [str(p) for p in self.inputs]
        return data


class TrainConfig(BaseModel):
    """train 子命令配置"""

    model_config = ConfigDict(frozen=True)

    features: Path
    output: Optional[Path] = None
    reg_lambda: float = Field(default=DEFAULT_REG_LAMBDA, ge=0)
    holdout: Optional[float] = Field(default=None, gt=0, le=0.5)
    nsl_early_high: bool = True
    npl_early_high: bool = True


class EvalConfig(BaseModel):
    """eval 子命令配置；files 按 (被评测, 参照) 成对出现"""

    model_config = ConfigDict(frozen=True)

    target: str
    files: List[Path] = Field(min_length=2)
    fuzzy: bool = False
    top_k: Optional[int] = Field(default=None, ge=1)
    output_format: OutputFormat = OutputFormat.TEXT

    @field_validator('target')
    @classmethod
    def check_target(cls, value: str) -> str:
        if value not in ('keyphrases', 'summaries'):
            raise ValueError(f"eval target must be keyphrases or summaries, got {value!r}")
        return value

    @field_validator('files')
    @classmethod
    def check_pairs(cls, value: List[Path]) -> List[Path]:
        if len(value) % 2:
            raise ValueError("eval expects files in (candidate, reference) pairs")
        return value

    @property
    def pairs(self) -> List[tuple]:
        return list(zip(self.files[0::2], self.files[1::2]))
