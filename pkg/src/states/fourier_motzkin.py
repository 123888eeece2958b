"""Fourier–Motzkin elimination, an independent oracle for small LPs.

The objective becomes an extra variable ``t`` tied to the objective by an
equality; every original variable is then eliminated, leaving bounds on ``t``.
Exponential in the number of variables, so only meant for a handful of them.
"""

from __future__ import annotations

from fractions import Fraction

from src.models.enums import LPStatus, Sense
from src.states.simplex import LPProblem

# (coefficients, rhs) meaning Σ coefficients[j] x_j <= rhs
_Ineq = tuple[tuple[Fraction, ...], Fraction]


def _normalize(coeffs: list[Fraction], rhs: Fraction) -> _Ineq:
    scale = max((abs(c) for c in coeffs), default=Fraction(0))
    if scale:
        coeffs = [c / scale for c in coeffs]
        rhs = rhs / scale
    return tuple(coeffs), rhs


def _substitute(
    target: list[Fraction], rhs: Fraction, eq: list[Fraction], eq_rhs: Fraction, j: int
) -> tuple[list[Fraction], Fraction]:
    """Eliminate x_j from ``target`` using the equality ``eq`` (eq[j] != 0)."""
    f = target[j] / eq[j]
    if not f:
        return target, rhs
    return [a - f * b for a, b in zip(target, eq, strict=True)], rhs - f * eq_rhs


def fourier_motzkin_optimum(problem: LPProblem) -> tuple[LPStatus, Fraction | None]:
    n = len(problem.variables)
    width = n + 1  # column n is t
    equalities: list[tuple[list[Fraction], Fraction]] = []
    inequalities: list[tuple[list[Fraction], Fraction]] = []

    for row in problem.rows:
        coeffs = [Fraction(0)] * width
        for j, c in row.coeffs.items():
            coeffs[j] = c
        if row.sense == Sense.EQ:
            equalities.append((coeffs, row.rhs))
        elif row.sense == Sense.LE:
            inequalities.append((coeffs, row.rhs))
        else:
            inequalities.append(([-c for c in coeffs], -row.rhs))
    for j in range(n):
        coeffs = [Fraction(0)] * width
        coeffs[j] = Fraction(-1)
        inequalities.append((coeffs, Fraction(0)))
    objective = [Fraction(0)] * width
    for j, c in problem.objective.items():
        objective[j] = -c
    objective[n] = Fraction(1)
    equalities.append((objective, Fraction(0)))

    eliminated: set[int] = set()
    while equalities:
        coeffs, rhs = equalities.pop()
        j = next((k for k in range(n) if k not in eliminated and coeffs[k]), None)
        if j is None:
            if coeffs[n]:
                inequalities.append((coeffs, rhs))
                inequalities.append(([-c for c in coeffs], -rhs))
            elif rhs:
                return LPStatus.INFEASIBLE, None
            continue
        eliminated.add(j)
        equalities = [_substitute(c, r, coeffs, rhs, j) for c, r in equalities]
        inequalities = [_substitute(c, r, coeffs, rhs, j) for c, r in inequalities]

    current = {_normalize(c, r) for c, r in inequalities}
    for j in range(n):
        if j in eliminated:
            continue
        upper = [q for q in current if q[0][j] > 0]
        lower = [q for q in current if q[0][j] < 0]
        rest = {q for q in current if q[0][j] == 0}
        for cu, ru in upper:
            for cl, rl in lower:
                fu, fl = cu[j], -cl[j]
                coeffs = [a * fl + b * fu for a, b in zip(cu, cl, strict=True)]
                rest.add(_normalize(coeffs, ru * fl + rl * fu))
        current = rest

    lo: Fraction | None = None
    hi: Fraction | None = None
    for coeffs, rhs in current:
        a = coeffs[n]
        if a == 0:
            if rhs < 0:
                return LPStatus.INFEASIBLE, None
        elif a > 0:
            bound = rhs / a
            hi = bound if hi is None else min(hi, bound)
        else:
            bound = rhs / a
            lo = bound if lo is None else max(lo, bound)
    if lo is not None and hi is not None and lo > hi:
        return LPStatus.INFEASIBLE, None
    value = hi if problem.maximize else lo
    if value is None:
        return LPStatus.UNBOUNDED, None
    return LPStatus.OPTIMAL, value
