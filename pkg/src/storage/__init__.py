from src.storage.verdicts import VerdictCache

__all__ = ["VerdictCache"]
