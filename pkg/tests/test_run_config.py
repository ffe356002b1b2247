from pathlib import Path

import pytest
from pydantic import ValidationError

from summarizer.sentence_scorer import Heuristic
from utils.run_config import AnalysisMode, EvalConfig, OutputFormat, RunConfig, TrainConfig


def test_defaults():
    config = RunConfig(inputs=[Path("a.txt")])
    assert config.heuristic is Heuristic.MERGED
    assert config.top_k == 12
    assert config.ratio == 0.25
    assert config.max_n == 3
    assert config.output_format is OutputFormat.TEXT


@pytest.mark.parametrize("field, value", [
    ("ratio", 0.0),
    ("ratio", 1.5),
    ("top_k", 0),
    ("max_n", 0),
    ("heuristic", "longest"),
    ("inputs", []),
])
def test_invalid_values(field, value):
    kwargs = {"inputs": [Path("a.txt")], field: value}
    with pytest.raises(ValidationError):
        RunConfig(**kwargs)


def test_mode_resolution():
    assert AnalysisMode.AUTO.resolve(Path("doc.tok")) is AnalysisMode.PRETAGGED
    assert AnalysisMode.AUTO.resolve(Path("DOC.TOK")) is AnalysisMode.PRETAGGED
    assert AnalysisMode.AUTO.resolve(Path("doc.txt")) is AnalysisMode.NAIVE
    assert AnalysisMode.NAIVE.resolve(Path("doc.tok")) is AnalysisMode.NAIVE


def test_echo_is_serializable_and_omits_locations():
    config = RunConfig(
        inputs=[Path("a.txt")],
        heuristic="coverage",
        output_dir=Path("/tmp/out"),
        dump_dir=Path("/tmp/dump"),
    )
    echo = config.echo()
    assert echo["heuristic"] == "coverage"
    assert echo["inputs"] == ["a.txt"]
    assert "output_dir" not in echo
    assert "dump_dir" not in echo


def test_config_is_frozen():
    config = RunConfig(inputs=[Path("a.txt")])
    with pytest.raises(ValidationError):
        config.ratio = 0.5


def test_train_config():
    assert TrainConfig(features=Path("f.csv")).reg_lambda == 1e-3
    with pytest.raises(ValidationError):
        TrainConfig(features=Path("f.csv"), reg_lambda=-0.1)
    with pytest.raises(ValidationError):
        TrainConfig(features=Path("f.csv"), holdout=0.9)


def test_eval_config_pairs():
    config = EvalConfig(target="summaries", files=["a", "b", "c", "d"])
    assert config.pairs == [(Path("a"), Path("b")), (Path("c"), Path("d"))]
    with pytest.raises(ValidationError):
        EvalConfig(target="summaries", files=["a", "b", "c"])
    with pytest.raises(ValidationError):
        EvalConfig(target="sentences", files=["a", "b"])
