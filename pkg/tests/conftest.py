import pytest

from src.config import reset_settings
from src.storage.verdicts import VerdictCache


@pytest.fixture(autouse=True)
def _isolated_settings(monkeypatch: pytest.MonkeyPatch, tmp_path) -> None:
    """Point every test at a scratch data directory and fresh settings."""
    monkeypatch.setenv("DATA_DIR", str(tmp_path / "data"))
    monkeypatch.delenv("CACHE_DIR", raising=False)
    monkeypatch.delenv("WORKERS", raising=False)
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def tmp_data_dir(tmp_path):
    """Provide a temporary data directory for tests that touch the filesystem."""
    return tmp_path / "data"


@pytest.fixture
async def cache():
    """In-memory verdict cache with schema applied."""
    store = VerdictCache(":memory:")
    await store.initialize()
    yield store
    await store.close()
