"""
两类 Fisher 线性判别分析

训练:
    S_w = Σ_c Σ_i (x_i − μ_c)(x_i − μ_c)ᵀ          未归一化的合并类内散度
    w   = (S_w + λ·tr(S_w)/d·I)⁻¹ (μ₊ − μ₋)        tr(S_w) = 0 时 w = μ₊ − μ₋
    b   = −w·(μ₊ + μ₋)/2
打分:
    score(x) = w·x + b，正类均值得分高于负类均值
"""

import json
import logging
from dataclasses import dataclass
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

import numpy as np
from pydantic import BaseModel, Field, ValidationError, field_validator

from config import DEFAULT_MODEL_FILE, DEFAULT_REG_LAMBDA, MODEL_VERSION
from keyphrases.features import FEATURE_COUNT, FeatureVector
from utils.errors import DegenerateClasses, ModelFormatError, SingularScatter

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LabeledSample:
    """一条带标签的训练样本"""

    features: FeatureVector
    label: bool


@dataclass(frozen=True)
class LdaModel:
    """训练好的判别模型，不可变，可在多个线程间共享"""

    weights: Tuple[float, ...]
    bias: float
    mean_pos: Tuple[float, ...]
    mean_neg: Tuple[float, ...]
    reg_lambda: float = DEFAULT_REG_LAMBDA
    nsl_early_high: bool = True
    npl_early_high: bool = True

    @property
    def weight_array(self) -> np.ndarray:
        return np.asarray(self.weights, dtype=float)


def _as_vector(fv: Union[FeatureVector, Sequence[float]]) -> np.ndarray:
    values = fv.as_tuple() if isinstance(fv, FeatureVector) else fv
    return np.asarray(values, dtype=float)


def train_arrays(
    positives: np.ndarray,
    negatives: np.ndarray,
    reg_lambda: float = DEFAULT_REG_LAMBDA,
) -> Tuple[np.ndarray, float, np.ndarray, np.ndarray]:
    """
    在原始数组上训练判别方向

    Args:
        positives: (n₊, d) 正类样本
        negatives: (n₋, d) 负类样本
        reg_lambda: 岭正则系数

    Returns:
        (weights, bias, mean_pos, mean_neg)

    Raises:
        DegenerateClasses: 某类样本少于 2 个，或两类均值相同
        SingularScatter: λ = 0 且散度矩阵秩亏
    """
    positives = np.atleast_2d(np.asarray(positives, dtype=float))
    negatives = np.atleast_2d(np.asarray(negatives, dtype=float))

    if reg_lambda < 0:
        raise ValueError(f"reg_lambda must be >= 0, got {reg_lambda}")
    if positives.shape[0] < 2 or negatives.shape[0] < 2:
        raise DegenerateClasses(
            f"need >= 2 samples per class, got {positives.shape[0]} positive "
            f"and {negatives.shape[0]} negative"
        )
    if positives.shape[1] != negatives.shape[1]:
        raise ValueError("class matrices have different feature dimensions")

    dim = positives.shape[1]
    mean_pos = positives.mean(axis=0)
    mean_neg = negatives.mean(axis=0)
    delta = mean_pos - mean_neg

    if not np.any(np.abs(delta) > 1e-12):
        raise DegenerateClasses("class means coincide, classes are indistinguishable")

    centered_pos = positives - mean_pos
    centered_neg = negatives - mean_neg
    scatter = centered_pos.T @ centered_pos + centered_neg.T @ centered_neg
    trace = float(np.trace(scatter))

    if trace == 0.0:
        # 类内无散度: 判别方向即均值差
        weights = delta.copy()
    else:
        matrix = scatter + (reg_lambda * trace / dim) * np.eye(dim)
        if reg_lambda == 0.0 and np.linalg.matrix_rank(matrix) < dim:
            raise SingularScatter(f"within-class scatter is rank deficient ({dim} features)")
        try:
            weights = np.linalg.solve(matrix, delta)
        except np.linalg.LinAlgError as e:
            raise SingularScatter(f"within-class scatter is not invertible: {e}") from e

    bias = -float(weights @ (mean_pos + mean_neg)) / 2.0

    if weights @ delta < 0:
        weights, bias = -weights, -bias

    return weights, bias, mean_pos, mean_neg


def train(
    samples: Sequence[LabeledSample],
    reg_lambda: float = DEFAULT_REG_LAMBDA,
    nsl_early_high: bool = True,
    npl_early_high: bool = True,
) -> LdaModel:
    """
    训练 LDA 模型

    Args:
        samples: 带标签样本
        reg_lambda: 岭正则系数
        nsl_early_high / npl_early_high: 生成特征时使用的方向约定，写入模型

    Returns:
        LdaModel
    """
    positives = [_as_vector(s.features) for s in samples if s.label]
    negatives = [_as_vector(s.features) for s in samples if not s.label]

    if len(positives) < 2 or len(negatives) < 2:
        raise DegenerateClasses(
            f"need >= 2 samples per class, got {len(positives)} positive "
            f"and {len(negatives)} negative"
        )

    weights, bias, mean_pos, mean_neg = train_arrays(
        np.vstack(positives), np.vstack(negatives), reg_lambda
    )

    logger.info(f"Trained LDA on {len(positives)} positive / {len(negatives)} negative samples")

    return LdaModel(
        weights=tuple(float(v) for v in weights),
        bias=bias,
        mean_pos=tuple(float(v) for v in mean_pos),
        mean_neg=tuple(float(v) for v in mean_neg),
        reg_lambda=float(reg_lambda),
        nsl_early_high=nsl_early_high,
        npl_early_high=npl_early_high,
    )


def score(model: LdaModel, fv: Union[FeatureVector, Sequence[float]]) -> float:
    """线性判别得分 w·x + b"""
    return float(model.weight_array @ _as_vector(fv) + model.bias)


def score_many(model: LdaModel, matrix: Union[np.ndarray, Sequence[Sequence[float]]]) -> np.ndarray:
    """批量打分，matrix 每行一个特征向量"""
    matrix = np.atleast_2d(np.asarray(matrix, dtype=float))
    if matrix.size == 0:
        return np.zeros(0)
    return matrix @ model.weight_array + model.bias


@dataclass(frozen=True)
class SplitReport:
    """简单留出验证的结果"""

    model: LdaModel
    accuracy: float
    train_size: int
    test_size: int


def evaluate_split(
    samples: Sequence[LabeledSample],
    holdout: float,
    reg_lambda: float = DEFAULT_REG_LAMBDA,
) -> SplitReport:
    """
    确定性留出验证：每隔 round(1/holdout) 个样本取一个作为测试集

    Args:
        samples: 带标签样本
        holdout: 测试集比例，(0, 0.5]
        reg_lambda: 岭正则系数

    Returns:
        SplitReport
    """
    if not 0 < holdout <= 0.5:
        raise ValueError(f"holdout must be in (0, 0.5], got {holdout}")

    stride = max(2, round(1 / holdout))
    held = [s for i, s in enumerate(samples) if i % stride == stride - 1]
    kept = [s for i, s in enumerate(samples) if i % stride != stride - 1]

    model = train(kept, reg_lambda)
    if not held:
        return SplitReport(model=model, accuracy=float('nan'), train_size=len(kept), test_size=0)

    predictions = score_many(model, [s.features.as_tuple() for s in held]) > 0
    labels = np.array([s.label for s in held])
    accuracy = float(np.mean(predictions == labels))

    logger.info(f"Held-out accuracy {accuracy:.3f} on {len(held)} samples")
    return SplitReport(model=model, accuracy=accuracy, train_size=len(kept), test_size=len(held))


# ============================================================================
# 模型持久化
# ============================================================================

class ModelFile(BaseModel):
    """模型 JSON 文件的结构"""

    version: int
    weights: List[float] = Field(min_length=FEATURE_COUNT, max_length=FEATURE_COUNT)
    bias: float
    mean_pos: List[float] = Field(min_length=FEATURE_COUNT, max_length=FEATURE_COUNT)
    mean_neg: List[float] = Field(min_length=FEATURE_COUNT, max_length=FEATURE_COUNT)
    reg_lambda: float = Field(ge=0)
    nsl_early_high: bool
    npl_early_high: bool

    @field_validator('version')
    @classmethod
    def check_version(cls, value: int) -> int:
        if value != MODEL_VERSION:
            raise ValueError(f"unsupported model version {value}, expected {MODEL_VERSION}")
        return value


def model_to_json(model: LdaModel) -> str:
    """序列化模型；json 使用 repr 输出浮点数，读回时逐位一致"""
    payload = {
        "version": MODEL_VERSION,
        "weights": list(model.weights),
        "bias": model.bias,
        "mean_pos": list(model.mean_pos),
        "mean_neg": list(model.mean_neg),
        "reg_lambda": model.reg_lambda,
        "nsl_early_high": model.nsl_early_high,
        "npl_early_high": model.npl_early_high,
    }
    return json.dumps(payload, indent=2) + "\n"


def model_from_json(text: Union[str, bytes]) -> LdaModel:
    """
    反序列化模型

    Raises:
        ModelFormatError: JSON 不完整、版本或字段不符
    """
    try:
        parsed = ModelFile.model_validate_json(text)
    except ValidationError as e:
        first = e.errors()[0]
        where = '.'.join(str(p) for p in first.get('loc', ())) or 'document'
        raise ModelFormatError(f"invalid model file at {where}: {first.get('msg')}") from None

    return LdaModel(
        weights=tuple(parsed.weights),
        bias=parsed.bias,
        mean_pos=tuple(parsed.mean_pos),
        mean_neg=tuple(parsed.mean_neg),
        reg_lambda=parsed.reg_lambda,
        nsl_early_high=parsed.nsl_early_high,
        npl_early_high=parsed.npl_early_high,
    )


def save_model(model: LdaModel, destination: Union[str, Path]):
    """写出模型文件"""
    path = Path(destination)
    path.write_text(model_to_json(model), encoding='utf-8')
    logger.info(f"Saved model to {path}")


def load_model(source: Union[str, Path]) -> LdaModel:
    """
    读取模型文件

    Raises:
        OSError: 文件不可读
        ModelFormatError: 内容不符合模型格式
    """
    path = Path(source)
    model = model_from_json(path.read_bytes())
    logger.debug(f"Loaded model from {path}")
    return model


_default_model: Optional[LdaModel] = None


def get_default_model() -> LdaModel:
    """获取随包发布的默认模型（首次调用时加载）"""
    global _default_model
    if _default_model is None:
        _default_model = load_model(DEFAULT_MODEL_FILE)
    return _default_model
