"""
全局配置文件
"""

from pathlib import Path
from typing import Optional
import os

# ============================================================================
# 目录配置
# ============================================================================

# 随包发布的资源目录（默认模型、词典、规则）
DATA_DIR = Path(__file__).parent / "data"

# 默认 LDA 模型（在 fixture_training.csv 上训练得到）
DEFAULT_MODEL_FILE = DATA_DIR / "default_model.json"

# 朴素分析器使用的默认词典
DEFAULT_LEXICON_FILE = DATA_DIR / "default_lexicon.tsv"

# 默认候选短语句法规则
DEFAULT_RULES_FILE = DATA_DIR / "default_rules.txt"

# 默认模型对应的合成训练语料
FIXTURE_TRAINING_FILE = DATA_DIR / "fixture_training.csv"


# ============================================================================
# 流水线默认参数
# ============================================================================

# 参与句子打分的关键短语数量
DEFAULT_TOP_K = 12

# 压缩比（保留句子的比例）
DEFAULT_RATIO = 0.25

# 候选短语最大词数（n-gram 上限）
DEFAULT_MAX_N = 3

# LDA 岭正则系数
DEFAULT_REG_LAMBDA = 1e-3

# 关键短语分数归一化下界
SCORE_FLOOR = 0.01

# 预算计算时对浮点误差的容忍量
BUDGET_EPSILON = 1e-9

# 模型文件版本
MODEL_VERSION = 1


# ============================================================================
# 语言资源配置
# ============================================================================

# 句子分隔符（阿拉伯文与拉丁文两套）
SENTENCE_DELIMITERS = frozenset({'.', '،', ',', '؛', ';', ':', '؟', '?', '!'})

# 仅在两侧均为空白时才切分的破折号
DASH_DELIMITERS = frozenset({'-', '–', '—'})

# strong_only 模式下保留的强终止符
STRONG_DELIMITERS = frozenset({'.', '؟', '?', '!'})

# 位于两个数字之间时视为数字分隔符的字符
NUMERIC_SEPARATORS = frozenset({'.', ',', '،'})

# 问句终止符
QUESTION_TERMINATORS = frozenset({'؟', '?'})

# 疑问词表（句首出现即视为问句）
INTERROGATIVE_WORDS = frozenset({
    'هل', 'ماذا', 'لماذا', 'كيف', 'متى', 'أين', 'من', 'ما', 'أ',
})

# 连接词前缀
CONJUNCTION_PREFIXES = ('و', 'ف')

# 定冠词
DEFINITE_ARTICLE = 'ال'

# 计算 WRF 时排除的功能词词性
FUNCTION_TAGS = frozenset({'IN', 'PART', 'RB', 'PUNC'})

# 计算 WRF 时额外排除的词元（可按需扩充）
STOP_LEMMAS: frozenset = frozenset()


# ============================================================================
# 环境变量
# ============================================================================

# 模型路径环境变量
MODEL_ENV_VAR = "KPAS_MODEL"

# 日志级别环境变量
LOG_LEVEL_ENV_VAR = "KPAS_LOG_LEVEL"


# ============================================================================
# 日志配置
# ============================================================================

# 日志级别
LOG_LEVEL = os.environ.get(LOG_LEVEL_ENV_VAR, "WARNING")

# 是否输出详细日志
VERBOSE = False


# ============================================================================
# 工具函数
# ============================================================================

def resolve_model_path(cli_value: Optional[str] = None) -> Path:
    """
    解析模型路径

    优先级: 命令行参数 > KPAS_MODEL 环境变量 > 内置默认模型

    Args:
        cli_value: 命令行传入的模型路径

    Returns:
        模型文件路径
    """
    if cli_value:
        return Path(cli_value)

    env_value = os.environ.get(MODEL_ENV_VAR)
    if env_value:
        return Path(env_value)

    return DEFAULT_MODEL_FILE


def get_config_summary() -> dict:
    """获取配置摘要"""
    return {
        "data_dir": str(DATA_DIR),
        "default_model": str(DEFAULT_MODEL_FILE),
        "default_lexicon": str(DEFAULT_LEXICON_FILE),
        "top_k": DEFAULT_TOP_K,
        "ratio": DEFAULT_RATIO,
        "max_n": DEFAULT_MAX_N,
        "reg_lambda": DEFAULT_REG_LAMBDA,
        "log_level": LOG_LEVEL,
        "verbose": VERBOSE,
    }
