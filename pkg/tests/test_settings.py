import pytest

from app.errors import ConfigurationError
from app.main import run
from app.settings import get_settings


@pytest.fixture
def env(monkeypatch):
    yield monkeypatch
    monkeypatch.undo()
    get_settings().reload()


def test_defaults(env):
    for name in ("ORTHOLOGIC_CAP", "ORTHOLOGIC_HARD_CAP", "ORTHOLOGIC_WORKERS", "ORTHOLOGIC_SEED"):
        env.delenv(name, raising=False)
    settings = get_settings().reload()
    assert settings.cap == 7
    assert settings.hard_cap == 8
    assert settings.workers == 1
    assert settings.seed == 0


def test_singleton():
    assert get_settings() is get_settings()


def test_environment_overrides(env):
    env.setenv("ORTHOLOGIC_CAP", "5")
    env.setenv("ORTHOLOGIC_SEED", "42")
    env.setenv("ORTHOLOGIC_LOG_LEVEL", "debug")
    settings = get_settings().reload()
    assert settings.cap == 5
    assert settings.seed == 42
    assert settings.log_level == "DEBUG"


@pytest.mark.parametrize("name, value", [
    ("ORTHOLOGIC_CAP", "seven"),
    ("ORTHOLOGIC_CAP", "0"),
    ("ORTHOLOGIC_WORKERS", "0"),
    ("ORTHOLOGIC_HARD_CAP", "3"),
])
def test_bad_values(env, name, value):
    env.setenv(name, value)
    with pytest.raises(ConfigurationError):
        get_settings().reload()


def test_lower_cap_limits_enumeration(env, capsys):
    env.setenv("ORTHOLOGIC_CAP", "3")
    env.setenv("ORTHOLOGIC_HARD_CAP", "4")
    get_settings().reload()
    assert run(["harness", "--max", "4", "--graphs-max", "0"]) == 1
    assert "--allow-large" in capsys.readouterr().err
