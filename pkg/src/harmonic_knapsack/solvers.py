"""Fast paths to the optimal score: closed form, greedy, and a dispatcher.

Two degenerate cases are immediate: with k = 1 there are no classes and the
optimum is mu, and with mu >= 2 every class coefficient 1/j - mu/(j+1) is
non-positive, so the all-zero vector wins and the optimum is again mu.

In the remaining band 1 <= mu < 2 (k >= 2) the optimum is reached on a
prefix of the reciprocal-splitting sequence: let m be the last class whose
score coefficient is positive and q the last sequence index with term <= m;
then the optimum equals the reciprocal prefix sum through q+1 plus
(mu-1)/r_{q+1}. greedy_solution builds that same prefix one increment at a
time. Both routes are checked against the exhaustive solver in the tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .harmonic import HarmonicParams
from .ip_model import IpSolution, SolveReport, score, solve_brute
from .sylvester import largest_index_below, table_covering

__all__ = [
    "CASE_K1",
    "CASE_MU_GE_2",
    "CASE_SYLVESTER",
    "ClosedFormResult",
    "SolveOutcome",
    "compute_m",
    "solve_closed_form",
    "greedy_solution",
    "solve",
]

CASE_K1 = "k_equals_1"
CASE_MU_GE_2 = "mu_ge_2"
CASE_SYLVESTER = "sylvester_sum"


@dataclass(frozen=True)
class ClosedFormResult:
    """Closed-form optimum plus the quantities it was assembled from.

    m, q, r_next (= term q+1) and s_next (= reciprocal prefix sum through
    q+1) are filled only in the sylvester_sum case.
    """

    case: str
    opt: Fraction
    m: Optional[int] = None
    q: Optional[int] = None
    r_next: Optional[int] = None
    s_next: Optional[Fraction] = None


def compute_m(params: HarmonicParams) -> int:
    """Largest class index with a strictly positive score coefficient.

    Equals ceil(1 / max(mu - 1, 1/k)) - 1, evaluated with exact rational
    arithmetic; only defined for k >= 2 and mu < 2.
    """
    if params.k < 2 or params.mu >= 2:
        raise ValueError(f"m needs k >= 2 and mu < 2, got k={params.k}, mu={params.mu}")
    slack = max(params.mu - 1, Fraction(1, params.k))
    return math.ceil(1 / slack) - 1


def solve_closed_form(params: HarmonicParams) -> ClosedFormResult:
    """Optimal score without enumeration.

    Never materializes a count vector, so it works for astronomically large
    k. For k >= 2 with mu < 1 no closed form is claimed; use solve_brute.
    """
    if params.k == 1:
        return ClosedFormResult(CASE_K1, opt=params.mu)
    if params.mu >= 2:
        return ClosedFormResult(CASE_MU_GE_2, opt=params.mu)
    if params.mu < 1:
        raise ValueError(
            f"no closed form for k >= 2 with mu < 1 (got mu={params.mu}); use solve_brute"
        )
    m = compute_m(params)
    table = table_covering(m)
    q = largest_index_below(table, m)
    r_next = table.r_at(q + 1)
    s_next = table.s_at(q + 1)
    opt = s_next + (params.mu - 1) / r_next
    return ClosedFormResult(CASE_SYLVESTER, opt=opt, m=m, q=q, r_next=r_next, s_next=s_next)


def greedy_solution(params: HarmonicParams) -> tuple[IpSolution, Fraction]:
    """Greedy construction: always increment the cheapest useful class.

    Starting from all zeros, repeatedly bump the count at the smallest class
    index i <= m that keeps the cost strictly below 1. The indices picked
    turn out to be the reciprocal-splitting sequence terms up to m. For
    1 <= mu < 2 the result is optimal; for mu < 1 it is a heuristic and is
    validated against the exhaustive solver in the tests only.
    """
    if params.k < 2 or params.mu >= 2:
        raise ValueError(f"greedy needs k >= 2 and mu < 2, got k={params.k}, mu={params.mu}")
    m = compute_m(params)
    counts = [0] * (params.k - 1)
    load = Fraction(0)
    while True:
        b = 1 / (1 - load)
        # smallest i with 1/(i+1) < 1 - load, i.e. i + 1 > b: that is floor(b)
        i = b.numerator // b.denominator
        if i > m:
            break
        counts[i - 1] += 1
        load += Fraction(1, i + 1)
    picked = tuple(counts)
    return picked, score(picked, params)


@dataclass(frozen=True)
class SolveOutcome:
    """Optimal (or greedy) score together with which route produced it."""

    opt: Fraction
    method: str
    counts: Optional[IpSolution] = None
    report: Optional[SolveReport] = None
    closed: Optional[ClosedFormResult] = None


def solve(params: HarmonicParams, method: str = "auto", cap: Optional[int] = None) -> SolveOutcome:
    """Dispatch to a solver.

    auto prefers the closed form and falls back to exhaustive search only in
    the k >= 2, mu < 1 corner the closed form does not cover.
    """
    if method == "auto":
        method = "brute" if (params.k >= 2 and params.mu < 1) else "closed"
    if method == "brute":
        report = solve_brute(params, cap=cap)
        return SolveOutcome(report.opt, "brute", counts=report.argmax, report=report)
    if method == "closed":
        closed = solve_closed_form(params)
        return SolveOutcome(closed.opt, "closed", closed=closed)
    if method == "greedy":
        counts, value = greedy_solution(params)
        return SolveOutcome(value, "greedy", counts=counts)
    raise ValueError(f"unknown method {method!r}; expected auto, brute, closed or greedy")
