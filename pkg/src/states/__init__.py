from src.states.fourier_motzkin import fourier_motzkin_optimum
from src.states.polytope import StatePolytope, state_polytope, state_violations, verify_state
from src.states.readoff import mge_readoff
from src.states.simplex import LPProblem, LPResult, simplex_solve
from src.states.strong import (
    admits_state,
    pair_certificate,
    pair_problem,
    strong_classical,
    strong_quantum,
)

__all__ = [
    "LPProblem",
    "LPResult",
    "StatePolytope",
    "admits_state",
    "fourier_motzkin_optimum",
    "mge_readoff",
    "pair_certificate",
    "pair_problem",
    "simplex_solve",
    "state_polytope",
    "state_violations",
    "strong_classical",
    "strong_quantum",
    "verify_state",
]
