from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from ..exceptions import DomainError, InvalidInputError


@dataclass(frozen=True)
class BoundParams:
    q: int
    j: int = 1
    kappa: float = 2.0

    def __post_init__(self) -> None:
        if self.q < 2:
            raise InvalidInputError("q must be >= 2")
        if self.j < 1:
            raise InvalidInputError("j must be >= 1")
        if not self.kappa > 1.0:
            raise InvalidInputError("kappa must be > 1")

    @property
    def beta(self) -> float:
        return 1.0 / math.log(self.q)



@dataclass(frozen=True)
class ValidityThreshold:
    """N: the smallest integer n with ln^[j](n) > 0."""
    j: int
    N: int



def iter_ln(j: int, n: float) -> float:
    """
    j-fold iterated natural logarithm ln^[j](n), with ln^[0](n) = n.

    Parameters
    ----------
    j : int
        Number of logarithms, >= 0.
    n : float
        Argument.

    Returns
    -------
    float
        ln^[j](n). The final level may be negative or zero.

    Raises
    ------
    DomainError
        If some intermediate level ln^[i](n), i < j, is <= 0; `level` names it.
    """
    if j < 0:
        raise InvalidInputError("j must be >= 0")
    x = float(n)
    for level in range(j):
        if x <= 0.0:
            raise DomainError(
                f"ln^[{level + 1}]({n}) undefined: ln^[{level}]({n}) = {x!r} <= 0",
                level=level,
            )
        x = math.log(x)
    return x


def _levels(j: int, n: float) -> list[float]:
    # [ln^[0](n), ..., ln^[j](n)]
    out = [float(n)]
    for _ in range(j):
        x = out[-1]
        if x <= 0.0:
            raise DomainError(
                f"ln^[{len(out)}]({n}) undefined: ln^[{len(out) - 1}]({n}) = {x!r} <= 0",
                level=len(out) - 1,
            )
        out.append(math.log(x))
    return out


def sigma_unchecked(j: int, n: float) -> float:
    """sigma^[j](n) without the validity-threshold guard.

    Only iter_ln domain errors are raised; the result may be negative below N_j.
    """
    if j < 1:
        raise InvalidInputError("j must be >= 1")
    lv = _levels(j, n)
    if j == 1:
        return math.sqrt(lv[1])
    out = lv[j]
    for i in range(2, j):
        out *= math.sqrt(lv[i])
    return out


def rho_unchecked(j: int, n: float) -> float:
    return sigma_unchecked(j, n) * math.sqrt(math.log(n)) / math.sqrt(n)


def _require_threshold(j: int, n: float) -> None:
    N = threshold(j)
    if n < N:
        raise DomainError(f"n={n} below validity threshold N_{j}={N}", level=j, threshold=N)


def sigma(j: int, n: float) -> float:
    """sigma^[1] = sqrt(ln n), sigma^[2] = ln ln n,
    sigma^[j] = ln^[j] n * prod_{i=2}^{j-1} sqrt(ln^[i] n)."""
    _require_threshold(j, n)
    return sigma_unchecked(j, n)


def rho(j: int, n: float) -> float:
    """rho^[j](n) = sigma^[j](n) sqrt(ln n) / sqrt(n)."""
    _require_threshold(j, n)
    return rho_unchecked(j, n)


@lru_cache(maxsize=None)
def validity_threshold(j: int) -> ValidityThreshold:
    """
    ln^[j](n) > 0 exactly when n exceeds the tower E_j = exp^(j-1)(1), so the
    candidate floor(E_j) + 1 is confirmed (and nudged if rounding disagrees)
    by evaluating ln^[j] on both sides of the boundary.
    """
    if j < 1:
        raise InvalidInputError("j must be >= 1")
    tower = 1.0
    try:
        for _ in range(j - 1):
            tower = math.exp(tower)
    except OverflowError:
        raise DomainError(f"N_{j} exceeds floating point range", level=j) from None

    def positive(n: int) -> bool:
        try:
            return iter_ln(j, n) > 0.0
        except DomainError:
            return False

    N = math.floor(tower) + 1
    while not positive(N):
        N += 1
    while N > 1 and positive(N - 1):
        N -= 1
    return ValidityThreshold(j=j, N=N)


def threshold(j: int) -> int:
    return validity_threshold(j).N


def _require_n(n: float) -> None:
    if n < 2:
        raise DomainError(f"n={n} < 2: ln ln n undefined", level=2, threshold=2)


def omega(n: float, params: BoundParams) -> float:
    """(ln n - ln ln n) / ln q."""
    _require_n(n)
    ln_n = math.log(n)
    return (ln_n - math.log(ln_n)) / math.log(params.q)


def h(n: int, params: BoundParams) -> int:
    """floor(beta ln n) = floor(log_q n), computed exactly for integer n."""
    _require_n(n)
    k = 0
    while params.q ** (k + 1) <= n:
        k += 1
    return k


def hbar(n: int, params: BoundParams) -> int:
    """max{1, floor(omega(n) / kappa)}."""
    return max(1, math.floor(omega(n, params) / params.kappa))



@dataclass(frozen=True)
class PiPoint:
    n: int
    hbar: int
    upper: float
    in_bounds: bool
    non_decreasing: bool



def hbar_in_pi(n_range: range, params: BoundParams) -> tuple[list[PiPoint], bool]:
    """Finite-range membership of hbar in the threshold family:
    1 <= hbar(n) <= max{1, omega(n)} and hbar(n) <= hbar(n + 1)."""
    points = []
    for n in n_range:
        if n < 2:
            raise DomainError(f"n={n} < 2", level=2, threshold=2)
        value = hbar(n, params)
        upper = max(1.0, omega(n, params))
        points.append(
            PiPoint(
                n=n,
                hbar=value,
                upper=upper,
                in_bounds=1 <= value <= upper,
                non_decreasing=value <= hbar(n + 1, params),
            )
        )
    return points, all(p.in_bounds and p.non_decreasing for p in points)
