"""
Finite-range surrogates for the asymptotic statements about the bound family.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from ..engines.base import CountTable
from ..exceptions import InvalidInputError
from .family import (
    BoundParams,
    h,
    hbar,
    iter_ln,
    rho,
    rho_unchecked,
    sigma_unchecked,
    threshold,
)

# Relative margin added to float bound values before comparing with exact counts.
BOUND_MARGIN = 1e-9


def holds_with_margin(count: int, bound: float) -> bool:
    """count <= bound, with the bound rounded outward by BOUND_MARGIN."""
    return count <= bound * (1.0 + BOUND_MARGIN)


def _covered(table: CountTable, n_min: int) -> list[int]:
    ns = [n for n in table.lengths() if n >= n_min]
    if not ns:
        raise InvalidInputError(f"census table covers no n >= {n_min}")
    return ns


def empirical_alpha(j: int, table: CountTable, params: BoundParams) -> float:
    """
    Smallest constant making B(n) <= alpha rho^[j](n) q^n on the census range.

    Parameters
    ----------
    j : int
        Level of the bound family.
    table : CountTable
        Census rows; only n >= N_j are used.
    params : BoundParams
        Alphabet size must match the table.

    Returns
    -------
    float
        max over covered n >= N_j of B(n) / (rho^[j](n) q^n).

    Raises
    ------
    InvalidInputError
        If the table covers no n >= N_j or its q differs from params.q.
    """
    if table.q != params.q:
        raise InvalidInputError("table and params disagree on q")
    ns = _covered(table, threshold(j))
    return max(table.B(n) / (rho(j, n) * float(params.q) ** n) for n in ns)


def theorem_slack(
    j: int, table: CountTable, alpha: float, params: BoundParams
) -> list[tuple[int, float]]:
    """Per-n ratio B(n) / (alpha rho^[j](n) q^n); at most 1 everywhere when alpha is fitted."""
    ns = _covered(table, threshold(j))
    return [(n, table.B(n) / (alpha * rho(j, n) * float(params.q) ** n)) for n in ns]


def empirical_closed_constant(table: CountTable, params: BoundParams) -> float:
    """max over n >= 2 of C(n) / (ln n q^n / sqrt(n))."""
    ns = _covered(table, 2)
    return max(table.C(n) / (math.log(n) * float(params.q) ** n / math.sqrt(n)) for n in ns)


def closed_slack(table: CountTable, c: float, params: BoundParams) -> list[tuple[int, float]]:
    ns = _covered(table, 2)
    return [(n, table.C(n) / (c * math.log(n) * float(params.q) ** n / math.sqrt(n))) for n in ns]


def rho_function(j: int) -> Callable[[int], float]:
    return lambda n: rho(j, n)



@dataclass(frozen=True)
class UpPoint:
    n: int
    bounds_count: bool | None
    non_increasing: bool
    growth: bool



@dataclass(frozen=True)
class UpReport:
    """Per-n truth values of the three Up properties of alpha * rho.

    crossover[p] is the smallest n in range from which property p holds up to
    the end of the range, or None when it fails at the last n.
    """
    alpha: float
    points: list[UpPoint]
    crossover: dict[str, int | None]
    verdict: bool



def _crossover(ns: Sequence[int], flags: Sequence[bool | None]) -> int | None:
    start = None
    for n, ok in zip(reversed(ns), reversed(flags)):
        if ok is False:
            break
        start = n
    return start


def up_membership_check(
    rho_fn: Callable[[int], float],
    alpha: float,
    n_range: Iterable[int],
    params: BoundParams,
    table: CountTable | None = None,
) -> UpReport:
    """
    Evaluate, on a finite range, the properties
    1. q^n alpha rho(n) >= B(n)            (only where the table has a row),
    2. rho(n) >= rho(n + 1),
    3. q^n rho(n) <= q^(n+1) rho(n + 1).
    """
    ns = list(n_range)
    q = float(params.q)
    points = []
    for n in ns:
        r0 = alpha * rho_fn(n)
        r1 = alpha * rho_fn(n + 1)
        bounds_count = None
        if table is not None and n in table.rows:
            bounds_count = holds_with_margin(table.B(n), r0 * q**n)
        points.append(
            UpPoint(n=n, bounds_count=bounds_count, non_increasing=r0 >= r1, growth=r0 <= q * r1)
        )
    crossover = {
        "bounds_count": _crossover(ns, [p.bounds_count for p in points]),
        "non_increasing": _crossover(ns, [p.non_increasing for p in points]),
        "growth": _crossover(ns, [p.growth for p in points]),
    }
    verdict = all(
        p.bounds_count is not False and p.non_increasing and p.growth for p in points
    )
    return UpReport(alpha=alpha, points=points, crossover=crossover, verdict=verdict)



@dataclass(frozen=True)
class RatioPoint:
    """y is sigma^[j](hbar) sqrt(ln hbar) / sigma^[j+1](n), expected to tend to 1;
    technical is sqrt(ln n) / sqrt(hbar), expected to tend to sqrt(kappa ln q).
    in_range is False where n < N_{j+1} or hbar(n) < N_j."""
    n: int
    hbar: int
    y: float
    technical: float
    in_range: bool



def ratio_diagnostics(j: int, n_grid: Iterable[int], params: BoundParams) -> list[RatioPoint]:
    out = []
    for n in n_grid:
        hb = hbar(n, params)
        y = sigma_unchecked(j, hb) * math.sqrt(math.log(hb)) / sigma_unchecked(j + 1, n)
        technical = math.sqrt(math.log(n)) / math.sqrt(hb)
        in_range = n >= threshold(j + 1) and hb >= threshold(j)
        out.append(RatioPoint(n=n, hbar=hb, y=y, technical=technical, in_range=in_range))
    return out


def technical_limit(params: BoundParams) -> float:
    return math.sqrt(params.kappa * math.log(params.q))


def strictly_decreasing(values: Sequence[float]) -> bool:
    return bool(np.all(np.diff(np.asarray(values, dtype=float)) < 0.0))


def dominance_trend(j: int, n_grid: Iterable[int]) -> list[tuple[int, float, bool]]:
    """
    rho^[j](n) / rho^[j+1](n) on a grid. The ratio equals sqrt(x) / ln x with
    x = ln^[j](n), which increases only once x > e^2; points below that are
    flagged out of range.
    """
    out = []
    for n in n_grid:
        ratio = rho_unchecked(j, n) / rho_unchecked(j + 1, n)
        in_range = n >= threshold(j + 1) and iter_ln(j, n) > math.e**2
        out.append((n, ratio, in_range))
    return out


def technical_shape_ratio(n: int, params: BoundParams) -> float:
    """q^(hbar(n) - h(n)) / n^(1/kappa - 1)."""
    q = float(params.q)
    return q ** (hbar(n, params) - h(n, params)) / n ** (1.0 / params.kappa - 1.0)


def corollary_shape_ratio(n: int, params: BoundParams, mu_value: int) -> float:
    """mu(n - 2 hbar(n), hbar(n)) / q^(n - h(n)), given the exact mu value."""
    return mu_value / float(params.q) ** (n - h(n, params))


def geometric_grid(start: float, stop: float, num: int) -> list[int]:
    """Distinct integers spaced geometrically between start and stop."""
    return sorted({int(round(x)) for x in np.geomspace(start, stop, num)})
