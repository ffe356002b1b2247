from pathlib import Path

import config


def test_model_path_precedence(monkeypatch, tmp_path):
    monkeypatch.delenv(config.MODEL_ENV_VAR, raising=False)
    assert config.resolve_model_path() == config.DEFAULT_MODEL_FILE

    monkeypatch.setenv(config.MODEL_ENV_VAR, str(tmp_path / "env.json"))
    assert config.resolve_model_path() == tmp_path / "env.json"
    assert config.resolve_model_path("cli.json") == Path("cli.json")


def test_shipped_resources_exist():
    for path in (config.DEFAULT_MODEL_FILE, config.DEFAULT_LEXICON_FILE,
                 config.DEFAULT_RULES_FILE, config.FIXTURE_TRAINING_FILE):
        assert path.is_file(), path


def test_config_summary():
    summary = config.get_config_summary()
    assert summary["top_k"] == 12
    assert summary["ratio"] == 0.25
    assert summary["default_model"].endswith("default_model.json")
