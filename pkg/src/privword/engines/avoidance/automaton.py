from __future__ import annotations

import itertools
import logging
import math
import multiprocessing as mp
from collections.abc import Iterable
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from ...config import DEFAULT_BUDGET
from ...exceptions import BudgetExceededError, InvalidInputError
from ...words.borders import failure_array
from ...words.word import Word
from ..base import partition_depth

logger = logging.getLogger(__name__)

# Largest q**n for which int64 accumulation cannot overflow.
_INT64_SAFE = 2**62
# Sweeps over fewer patterns run in-process whatever the worker count.
MU_PARALLEL_MIN_PATTERNS = 2**10


@dataclass(frozen=True)
class MuConfig:
    """Configuration of the mu(n, m) pattern sweep.

    group_by_autocorrelation evaluates one pattern per self-overlap class;
    off by default so the plain sweep stays the trusted path. workers > 1
    splits the patterns by prefix across a process pool.
    """
    group_by_autocorrelation: bool = False
    workers: int = 1
    budget: int = DEFAULT_BUDGET

    def __post_init__(self) -> None:
        if self.workers < 1:
            raise InvalidInputError("workers must be >= 1")
        if self.budget < 1:
            raise InvalidInputError("budget must be >= 1")


@dataclass(frozen=True)
class MuResult:
    value: int
    witness: Word
    meta: dict[str, int | bool] | None = None



@dataclass(frozen=True)
class AvoidanceAutomaton:
    """Pattern-matching automaton of w.

    Live states 0..m-1 record the longest prefix of w that is a suffix of the
    input read so far; state m (w matched) is absorbing and dropped from the DP.
    """
    pattern: Word
    transitions: np.ndarray

    @classmethod
    def from_pattern(cls, w: Word) -> AvoidanceAutomaton:
        m = len(w)
        if m == 0:
            raise InvalidInputError("pattern must be non-empty")
        p = w.symbols
        f = failure_array(p)
        delta = np.zeros((m, w.q), dtype=np.int64)
        for state in range(m):
            for s in range(w.q):
                if p[state] == s:
                    delta[state, s] = state + 1
                elif state == 0:
                    delta[state, s] = 0
                else:
                    delta[state, s] = delta[f[state - 1], s]
        return cls(pattern=w, transitions=delta)

    @property
    def death(self) -> int:
        return len(self.pattern)

    def step(self, state: int, symbol: int) -> int:
        return int(self.transitions[state, symbol])

    def transfer_matrix(self) -> np.ndarray:
        """T[i, j] = number of symbols taking live state i to live state j."""
        m = self.death
        t = np.zeros((m, m), dtype=np.int64)
        for i in range(m):
            for target in self.transitions[i]:
                if target < m:
                    t[i, target] += 1
        return t


def count_avoiding(w: Word, n: int) -> int:
    """Exact A_w(n): number of length-n words over w's alphabet avoiding the factor w.

    The count vector is int64 while q**n fits and Python ints (object arrays)
    beyond that.
    """
    if len(w) == 0:
        raise InvalidInputError("pattern must be non-empty")
    if n < 0:
        raise InvalidInputError("n must be >= 0")
    if n == 0:
        return 1
    t = AvoidanceAutomaton.from_pattern(w).transfer_matrix()
    dtype: type | np.dtype = np.int64 if w.q**n <= _INT64_SAFE else object
    t = t.astype(dtype)
    v = np.zeros(t.shape[0], dtype=dtype)
    v[0] = 1
    for _ in range(n):
        v = v @ t
    return int(v.sum())


def _autocorrelation_key(p: tuple[int, ...]) -> tuple[int, ...]:
    f = failure_array(p)
    key = []
    k = f[-1]
    while k:
        key.append(k)
        k = f[k - 1]
    return tuple(key)


def _sweep(task: tuple[int, int, int, tuple[int, ...], bool]) -> tuple[int, tuple[int, ...], int]:
    q, n, m, head, grouped = task
    cache: dict[tuple[int, ...], int] = {}
    best_value = -1
    best: tuple[int, ...] = ()
    evaluated = 0
    for tail in itertools.product(range(q), repeat=m - len(head)):
        p = head + tail
        if grouped:
            key = _autocorrelation_key(p)
            if key not in cache:
                cache[key] = count_avoiding(Word(p, q), n)
                evaluated += 1
            value = cache[key]
        else:
            value = count_avoiding(Word(p, q), n)
            evaluated += 1
        if value > best_value:
            best_value, best = value, p
    return best_value, best, evaluated


def _better(value: int, p: tuple[int, ...], best_value: int, best: tuple[int, ...]) -> bool:
    return value > best_value or (value == best_value and p < best)


@lru_cache(maxsize=None)
def mu(q: int, n: int, m: int, *, cfg: MuConfig | None = None) -> MuResult:
    """mu(n, m): the largest A_w(n) over all w of length m.

    The witness is the lexicographically least maximizing pattern. With
    cfg.workers > 1, sweeps of at least MU_PARALLEL_MIN_PATTERNS patterns are
    split by prefix across a process pool; value and witness do not depend on
    the worker count.
    """
    cfg = cfg or MuConfig()
    if q < 1:
        raise InvalidInputError("q must be >= 1")
    if m < 1:
        raise InvalidInputError("m must be >= 1")
    if n < 0:
        raise InvalidInputError("n must be >= 0")
    work = q**m
    if work > cfg.budget:
        logger.warning("mu sweep refused: q=%d m=%d", q, m)
        raise BudgetExceededError(
            f"mu sweep over {q}^{m} patterns", estimated=work, budget=cfg.budget
        )

    grouped = cfg.group_by_autocorrelation
    if cfg.workers == 1 or work < MU_PARALLEL_MIN_PATTERNS:
        tasks = [(q, n, m, (), grouped)]
        partials: Iterable[tuple[int, tuple[int, ...], int]] = map(_sweep, tasks)
        best_value, best, evaluated = _reduce(partials)
    else:
        depth = partition_depth(q, m, cfg.workers)
        tasks = [(q, n, m, p, grouped) for p in itertools.product(range(q), repeat=depth)]
        logger.info(
            "mu q=%d n=%d m=%d: %d partitions on %d workers", q, n, m, len(tasks), cfg.workers
        )
        with mp.get_context().Pool(cfg.workers) as pool:
            best_value, best, evaluated = _reduce(pool.imap(_sweep, tasks, chunksize=1))
    logger.debug("mu(q=%d, n=%d, m=%d)=%d from %d evaluations", q, n, m, best_value, evaluated)
    return MuResult(
        value=best_value,
        witness=Word(best, q),
        meta={"evaluated": evaluated, "grouped": grouped, "partitions": len(tasks)},
    )


def _reduce(
    partials: Iterable[tuple[int, tuple[int, ...], int]],
) -> tuple[int, tuple[int, ...], int]:
    best_value = -1
    best: tuple[int, ...] = ()
    evaluated = 0
    for value, p, count in partials:
        evaluated += count
        if _better(value, p, best_value, best):
            best_value, best = value, p
    return best_value, best, evaluated


def lemma21_exact(q: int, n: int, m: int) -> int:
    """q**n * (1 - q**-m)**floor(n/m) as an exact integer."""
    if n < 1 or m < 1:
        raise InvalidInputError("n and m must be >= 1")
    k = n // m
    return (q**m - 1) ** k * q ** (n - m * k)


def mu_bound_lemma21(q: int, n: int, m: int) -> float:
    """Closed-form upper bound q**n (1 - 1/q**m)**floor(n/m) on mu(n, m).

    Evaluated in log space; math.inf once the value leaves the float range.
    """
    if n < 1 or m < 1:
        raise InvalidInputError("n and m must be >= 1")
    if q < 2:
        return float(lemma21_exact(q, n, m))
    log_value = n * math.log(q) + (n // m) * math.log1p(-(float(q) ** -m))
    try:
        return math.exp(log_value)
    except OverflowError:
        return math.inf
