from pathlib import Path

import pytest
from pydantic import ValidationError

from src.config import RunConfig

ENV_KEYS = ["PERMCODE_CACHE", "PERMCODE_WORKERS", "PERMCODE_BUDGET", "PERMCODE_LOG_LEVEL"]


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for key in ENV_KEYS:
        monkeypatch.delenv(key, raising=False)


def test_defaults():
    config = RunConfig.from_env()
    assert config.format == "table"
    assert config.cache_path is None
    assert config.worker_count is None
    assert config.enumeration_budget == 10 ** 8


def test_environment_is_read(monkeypatch):
    monkeypatch.setenv("PERMCODE_CACHE", "/tmp/volumes.csv")
    monkeypatch.setenv("PERMCODE_WORKERS", "4")
    monkeypatch.setenv("PERMCODE_BUDGET", "5000")
    config = RunConfig.from_env()
    assert config.cache_path == Path("/tmp/volumes.csv")
    assert config.worker_count == 4
    assert config.enumeration_budget == 5000


def test_overrides_beat_environment(monkeypatch):
    monkeypatch.setenv("PERMCODE_BUDGET", "5000")
    config = RunConfig.from_env(enumeration_budget=42, worker_count=None)
    assert config.enumeration_budget == 42
    assert config.worker_count is None


@pytest.mark.parametrize("field,value", [("worker_count", 0), ("enumeration_budget", -1), ("format", "xml")])
def test_invalid_values(field, value):
    with pytest.raises(ValidationError):
        RunConfig(**{field: value})
