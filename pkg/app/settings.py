"""
Runtime settings for the orthologic toolkit.
Values come from the environment (optionally a .env file).
"""
import os
import logging
from typing import Optional

from dotenv import load_dotenv

from app.errors import ConfigurationError

logger = logging.getLogger(__name__)


class Settings:
    """Singleton settings object for the application."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super(Settings, cls).__new__(cls)
            cls._instance._initialized = False
        return cls._instance

    def __init__(self):
        """Load settings from the environment."""
        if self._initialized:
            return
        self.load()
        self._initialized = True

    def load(self) -> None:
        """Read every setting from the environment."""
        load_dotenv()
        self.cap = self._read_int("ORTHOLOGIC_CAP", 7, minimum=1)
        self.hard_cap = self._read_int("ORTHOLOGIC_HARD_CAP", 8, minimum=1)
        self.distributivity_limit = self._read_int("ORTHOLOGIC_DISTRIBUTIVITY_LIMIT", 512, minimum=0)
        self.sample_size = self._read_int("ORTHOLOGIC_SAMPLE_SIZE", 64, minimum=1)
        self.exhaustive_max = self._read_int("ORTHOLOGIC_EXHAUSTIVE_MAX", 6, minimum=0)
        self.graph_max = self._read_int("ORTHOLOGIC_GRAPH_MAX", 5, minimum=0)
        self.workers = self._read_int("ORTHOLOGIC_WORKERS", 1, minimum=1)
        self.seed = self._read_int("ORTHOLOGIC_SEED", 0)
        self.log_level = os.getenv("ORTHOLOGIC_LOG_LEVEL", "WARNING").upper()
        if self.hard_cap < self.cap:
            raise ConfigurationError(
                f"ORTHOLOGIC_HARD_CAP ({self.hard_cap}) must not be below ORTHOLOGIC_CAP ({self.cap})"
            )
        logger.debug(f"Settings loaded: cap={self.cap}, workers={self.workers}, seed={self.seed}")

    def reload(self) -> "Settings":
        """Re-read the environment, e.g. after a test changed it."""
        self.load()
        return self

    @staticmethod
    def _read_int(name: str, default: int, minimum: Optional[int] = None) -> int:
        raw = os.getenv(name)
        if raw is None or raw.strip() == "":
            return default
        try:
            value = int(raw)
        except ValueError:
            raise ConfigurationError(f"{name} must be an integer, got {raw!r}")
        if minimum is not None and value < minimum:
            raise ConfigurationError(f"{name} must be at least {minimum}, got {value}")
        return value


def get_settings() -> Settings:
    """Return the process-wide settings instance."""
    return Settings()
