"""
测试公共配置

把 src/ 加入 sys.path（与 main.py 的导入方式一致），并提供共享夹具。
"""

import sys
from pathlib import Path

import pytest

ROOT = Path(__file__).parent.parent
SRC_DIR = ROOT / "src"
FIXTURES_DIR = Path(__file__).parent / "fixtures"

if str(SRC_DIR) not in sys.path:
    sys.path.insert(0, str(SRC_DIR))


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES_DIR


@pytest.fixture(scope="session")
def default_model():
    from keyphrases.classifier import get_default_model
    return get_default_model()


@pytest.fixture(scope="session")
def token_doc():
    from analysis.pretagged import load_pretagged
    return load_pretagged(FIXTURES_DIR / "token_sample.tok")


@pytest.fixture(scope="session")
def phrase_doc():
    from analysis.pretagged import load_pretagged
    return load_pretagged(FIXTURES_DIR / "phrase_sample.tok")


@pytest.fixture(scope="session")
def unicef_doc():
    from analysis.pretagged import load_pretagged
    return load_pretagged(FIXTURES_DIR / "unicef_ar.tok")


@pytest.fixture(scope="session")
def default_lexicon():
    from analysis.lexicon import load_lexicon
    return load_lexicon()
