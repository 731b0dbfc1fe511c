from __future__ import annotations

from pathlib import Path

import pytest

from qtough.config import COMPARE_TOL, ENUMERATION_LIMIT, env_bool, load_config
from qtough.errors import InvalidParameters

ENV = (
    "Q_TOUGH_THREADS",
    "QTOUGH_LOG_LEVEL",
    "LOG_LEVEL",
    "QTOUGH_LOG_FILE",
    "QTOUGH_TOL",
    "QTOUGH_SAMPLES",
    "QTOUGH_SEED",
    "QTOUGH_TOUGHNESS_BUDGET",
    "QTOUGH_ENUMERATION_LIMIT",
    "QTOUGH_DEDUP",
)


@pytest.fixture(autouse=True)
def clean_env(monkeypatch: pytest.MonkeyPatch) -> None:
    for name in ENV:
        monkeypatch.delenv(name, raising=False)


def test_defaults() -> None:
    cfg = load_config()
    assert cfg.tol == COMPARE_TOL
    assert cfg.samples == 1000
    assert cfg.seed == 0
    assert cfg.toughness_budget == 26
    assert cfg.enumeration_limit == 64
    assert cfg.dedup is True
    assert cfg.log_level == "INFO"
    assert cfg.log_file is None
    assert cfg.threads >= 1


def test_environment_overrides(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("Q_TOUGH_THREADS", "0")
    monkeypatch.setenv("LOG_LEVEL", "DEBUG")
    monkeypatch.setenv("QTOUGH_LOG_FILE", "logs/run.log")
    monkeypatch.setenv("QTOUGH_TOL", "1e-6")
    monkeypatch.setenv("QTOUGH_SEED", "42")
    cfg = load_config()
    assert cfg.threads == 1
    assert cfg.log_level == "DEBUG"
    assert cfg.log_file == Path("logs/run.log")
    assert cfg.tol == 1e-6
    assert cfg.seed == 42


def test_bad_values_raise(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("QTOUGH_SAMPLES", "many")
    with pytest.raises(InvalidParameters):
        load_config()


def test_with_overrides_ignores_unset_flags() -> None:
    cfg = load_config().with_overrides(seed=7, tol=None)
    assert cfg.seed == 7
    assert cfg.tol == COMPARE_TOL


@pytest.mark.parametrize("raw,expected", [("1", True), ("yes", True), ("ON", True), ("0", False), ("off", False)])
def test_env_bool(monkeypatch: pytest.MonkeyPatch, raw: str, expected: bool) -> None:
    monkeypatch.setenv("QTOUGH_DEDUP", raw)
    assert env_bool("QTOUGH_DEDUP", not expected) is expected
    assert load_config().dedup is expected


def test_env_bool_default_when_blank(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("QTOUGH_DEDUP", " ")
    assert env_bool("QTOUGH_DEDUP", True) is True


@pytest.mark.parametrize("raw,expected", [("200", ENUMERATION_LIMIT), ("40", 40), ("0", 1)])
def test_enumeration_limit_is_clamped(monkeypatch: pytest.MonkeyPatch, raw: str, expected: int) -> None:
    monkeypatch.setenv("QTOUGH_ENUMERATION_LIMIT", raw)
    assert load_config().enumeration_limit == expected
