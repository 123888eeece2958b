import logging
from logging.handlers import RotatingFileHandler

from src.cli.main import setup_logging
from src.config import get_settings


def _added(before: list[logging.Handler]) -> list[logging.Handler]:
    return [h for h in logging.getLogger().handlers if h not in before]


def _file_handlers() -> list[RotatingFileHandler]:
    return [h for h in logging.getLogger().handlers if isinstance(h, RotatingFileHandler)]


class TestSetupLogging:
    """Test setup_logging configuration; the package conftest removes added handlers."""

    def test_sets_root_logger_level(self, tmp_path):
        setup_logging("DEBUG", tmp_path / "workbench.log")
        assert logging.getLogger().level == logging.DEBUG

    def test_unknown_level_falls_back_to_info(self, tmp_path):
        setup_logging("chatty", tmp_path / "workbench.log")
        assert logging.getLogger().level == logging.INFO

    def test_adds_console_and_file_handlers(self, tmp_path):
        before = logging.getLogger().handlers[:]
        log_path = tmp_path / "data" / "logs" / "workbench.log"
        setup_logging("INFO", log_path)
        added = _added(before)
        assert sum(type(h) is logging.StreamHandler for h in added) == 1
        (file_handler,) = [h for h in added if isinstance(h, RotatingFileHandler)]
        assert file_handler.baseFilename == str(log_path)
        assert log_path.parent.is_dir()

    def test_idempotent(self, tmp_path):
        before = logging.getLogger().handlers[:]
        setup_logging("INFO", tmp_path / "workbench.log")
        setup_logging("INFO", tmp_path / "workbench.log")
        assert len(_added(before)) == 2


class TestMainLogFile:
    def test_main_logs_to_settings_log_path(self, run_cli):
        code, _, _ = run_cli("build", "--builtin", "MO2")
        assert code == 0
        paths = [h.baseFilename for h in _file_handlers()]
        assert str(get_settings().log_path) in paths
        assert get_settings().log_path.exists()
