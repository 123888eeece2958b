from src.checker.engine import check, falsifies
from src.checker.matrix import check_matrix
from src.checker.plan import build_plan, enumerate_assignments, naive_assignments

__all__ = [
    "build_plan",
    "check",
    "check_matrix",
    "enumerate_assignments",
    "falsifies",
    "naive_assignments",
]
