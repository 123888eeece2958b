from pathlib import Path

from pydantic import computed_field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Workbench configuration loaded from environment variables and .env file.

    Every field can be overridden by the upper-case environment variable of
    the same name (``CACHE_DIR``, ``WORKERS``, ``SEARCH_BUDGET``, ...).
    """

    model_config = SettingsConfigDict(
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )

    # Paths & logging; data_dir defaults to <project_root>/data
    data_dir: Path = Path(__file__).resolve().parent.parent / "data"
    cache_dir: Path | None = None
    log_level: str = "INFO"

    # Checker
    workers: int = 1
    search_budget: int = 2_000_000
    search_seed: int = 0

    # States / generators
    readoff_attempts: int = 8
    wagon_wheel_validate_max: int = 5

    @computed_field  # type: ignore[prop-decorator]
    @property
    def cache_path(self) -> Path:
        base = self.cache_dir if self.cache_dir is not None else self.data_dir / "cache"
        return base / "verdicts.db"

    @computed_field  # type: ignore[prop-decorator]
    @property
    def log_path(self) -> Path:
        return self.data_dir / "workbench.log"


_settings: Settings | None = None


def get_settings() -> Settings:
    """Return the cached Settings singleton. Created on first call."""
    global _settings  # noqa: PLW0603
    if _settings is None:
        _settings = Settings()
    return _settings


def reset_settings() -> None:
    """Clear the cached settings. Used in tests."""
    global _settings  # noqa: PLW0603
    _settings = None
