import pytest
from faker import Faker

from src.config import Settings


@pytest.fixture
def faker():
    """Fixture that provides a Faker instance."""
    return Faker()


@pytest.fixture
def make_settings(monkeypatch):
    """Fixture that builds Settings from overridden environment variables."""

    def _make(**env: str) -> Settings:
        for key, value in env.items():
            monkeypatch.setenv(key, value)
        return Settings(_env_file=None)

    return _make
