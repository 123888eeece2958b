from pathlib import Path

import pytest

from src.config import Settings, get_settings, reset_settings


class TestSettings:
    """Test Settings class field defaults and computed properties."""

    def test_default_data_dir(self, monkeypatch: pytest.MonkeyPatch):
        monkeypatch.delenv("DATA_DIR", raising=False)
        s = Settings(_env_file=None)
        expected = Path(__file__).resolve().parent.parent / "data"
        assert s.data_dir == expected

    def test_custom_data_dir(self, monkeypatch: pytest.MonkeyPatch):
        monkeypatch.setenv("DATA_DIR", "/tmp/custom")
        s = Settings(_env_file=None)
        assert s.data_dir == Path("/tmp/custom")

    def test_default_log_level(self, monkeypatch: pytest.MonkeyPatch):
        monkeypatch.delenv("LOG_LEVEL", raising=False)
        s = Settings(_env_file=None)
        assert s.log_level == "INFO"

    def test_custom_log_level(self, monkeypatch: pytest.MonkeyPatch):
        monkeypatch.setenv("LOG_LEVEL", "DEBUG")
        s = Settings(_env_file=None)
        assert s.log_level == "DEBUG"

    def test_checker_defaults(self, monkeypatch: pytest.MonkeyPatch):
        for name in (
            "WORKERS",
            "SEARCH_BUDGET",
            "SEARCH_SEED",
            "READOFF_ATTEMPTS",
            "WAGON_WHEEL_VALIDATE_MAX",
        ):
            monkeypatch.delenv(name, raising=False)
        s = Settings(_env_file=None)
        assert s.workers == 1
        assert s.search_budget == 2_000_000
        assert s.search_seed == 0
        assert s.readoff_attempts == 8
        assert s.wagon_wheel_validate_max == 5

    def test_checker_fields_from_env(self, monkeypatch: pytest.MonkeyPatch):
        monkeypatch.setenv("WORKERS", "4")
        monkeypatch.setenv("SEARCH_BUDGET", "1000")
        monkeypatch.setenv("SEARCH_SEED", "42")
        s = Settings(_env_file=None)
        assert (s.workers, s.search_budget, s.search_seed) == (4, 1000, 42)

    def test_cache_path_under_data_dir(self, monkeypatch: pytest.MonkeyPatch):
        monkeypatch.setenv("DATA_DIR", "/srv/data")
        s = Settings(_env_file=None)
        assert s.cache_path == Path("/srv/data/cache/verdicts.db")

    def test_cache_dir_overrides(self, monkeypatch: pytest.MonkeyPatch):
        monkeypatch.setenv("CACHE_DIR", "/var/cache/qlw")
        s = Settings(_env_file=None)
        assert s.cache_path == Path("/var/cache/qlw/verdicts.db")

    def test_log_path_computed(self, monkeypatch: pytest.MonkeyPatch):
        monkeypatch.setenv("DATA_DIR", "/srv/data")
        s = Settings(_env_file=None)
        assert s.log_path == Path("/srv/data/workbench.log")


class TestGetSettings:
    """Test the lazy singleton get_settings / reset_settings."""

    def setup_method(self):
        reset_settings()

    def teardown_method(self):
        reset_settings()

    def test_get_settings_returns_settings(self, tmp_data_dir):
        s = get_settings()
        assert isinstance(s, Settings)
        assert s.data_dir == tmp_data_dir

    def test_get_settings_is_singleton(self):
        s1 = get_settings()
        s2 = get_settings()
        assert s1 is s2

    def test_reset_settings_clears_cache(self):
        s1 = get_settings()
        reset_settings()
        s2 = get_settings()
        assert s1 is not s2
