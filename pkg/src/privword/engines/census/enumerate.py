from __future__ import annotations

import itertools
import logging
import multiprocessing as mp
from collections.abc import Iterable
from dataclasses import dataclass

from ...config import DEFAULT_BUDGET
from ...exceptions import BudgetExceededError, InvalidInputError
from ...words.borders import classify, count_occurrences
from ...words.word import Word
from ..avoidance.automaton import MuConfig, mu
from ..base import CountRow, CountTable, partition_depth

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CensusConfig:
    """Exhaustive census configuration.

    workers > 1 scans disjoint word ranges in a process pool; budget caps the
    number of words actually scanned.
    """
    workers: int = 1
    budget: int = DEFAULT_BUDGET

    def __post_init__(self) -> None:
        if self.workers < 1:
            raise InvalidInputError("workers must be >= 1")
        if self.budget < 1:
            raise InvalidInputError("budget must be >= 1")


@dataclass(frozen=True)
class RecursiveBoundCheck:
    m: int
    lhs: int
    rhs: int
    branch: str
    ok: bool


def _check_alphabet(q: int) -> None:
    if q < 2:
        raise InvalidInputError("q must be >= 2")


def _guard(what: str, work: int, budget: int) -> None:
    if work > budget:
        logger.warning("%s refused: %d words over budget %d", what, work, budget)
        raise BudgetExceededError(what, estimated=work, budget=budget)


def _scan(task: tuple[int, int, tuple[int, ...]]) -> tuple[int, int, dict[int, int]]:
    q, n, head = task
    privileged = closed = 0
    by_border: dict[int, int] = {}
    for tail in itertools.product(range(q), repeat=n - len(head)):
        is_closed, is_priv, b = classify(head + tail)
        closed += is_closed
        if is_priv:
            privileged += 1
            if b:
                by_border[b] = by_border.get(b, 0) + 1
    return privileged, closed, by_border


def census(
    q: int,
    n: int,
    *,
    cfg: CensusConfig | None = None,
    symmetry: bool = True,
) -> CountRow:
    """Exact B(n), C(n) and priv(n, m) by exhaustive enumeration.

    With symmetry=True only words starting with symbol 0 are scanned and every
    count is multiplied by q; privilege and closedness are invariant under
    alphabet permutations, so the result is exact.
    """
    cfg = cfg or CensusConfig()
    _check_alphabet(q)
    if n < 1:
        raise InvalidInputError("n must be >= 1")

    lead: tuple[int, ...] = (0,) if symmetry else ()
    free = n - len(lead)
    _guard(f"census q={q} n={n}", q**free, cfg.budget)

    depth = partition_depth(q, free, cfg.workers)
    tasks = [(q, n, lead + p) for p in itertools.product(range(q), repeat=depth)]
    logger.info("census q=%d n=%d: %d partitions on %d workers", q, n, len(tasks), cfg.workers)

    if cfg.workers == 1:
        partials: Iterable[tuple[int, int, dict[int, int]]] = map(_scan, tasks)
        privileged, closed, by_border = _reduce(partials)
    else:
        with mp.get_context().Pool(cfg.workers) as pool:
            privileged, closed, by_border = _reduce(pool.imap(_scan, tasks, chunksize=1))

    scale = q if symmetry else 1
    return CountRow(
        n=n,
        q=q,
        privileged=privileged * scale,
        closed=closed * scale,
        by_border={m: c * scale for m, c in by_border.items()},
        meta={"workers": cfg.workers, "partitions": len(tasks), "symmetry": symmetry},
    )


def _reduce(partials: Iterable[tuple[int, int, dict[int, int]]]) -> tuple[int, int, dict[int, int]]:
    privileged = closed = 0
    by_border: dict[int, int] = {}
    for p, c, b in partials:
        privileged += p
        closed += c
        for m, count in b.items():
            by_border[m] = by_border.get(m, 0) + count
        logger.debug("partition done: B+=%d C+=%d", p, c)
    return privileged, closed, by_border


def census_table(
    q: int,
    n_max: int,
    *,
    n_min: int = 1,
    cfg: CensusConfig | None = None,
) -> CountTable:
    if n_min < 1 or n_max < n_min:
        raise InvalidInputError("need 1 <= n_min <= n_max")
    table = CountTable(q=q)
    for n in range(n_min, n_max + 1):
        table.add(census(q, n, cfg=cfg))
    return table


def priv_table(q: int, n: int, *, cfg: CensusConfig | None = None) -> dict[int, int]:
    """priv(n, m) for every 1 <= m <= n-1 (zero entries included)."""
    return dict(census(q, n, cfg=cfg).by_border)


def privileged_by_border(q: int, n: int, *, budget: int = DEFAULT_BUDGET) -> dict[int, set[Word]]:
    """Privileged words of length n grouped by maximal border length (0 only for n <= 1)."""
    _check_alphabet(q)
    if n < 0:
        raise InvalidInputError("n must be >= 0")
    _guard(f"privileged words q={q} n={n}", q**n, budget)
    out: dict[int, set[Word]] = {}
    for s in itertools.product(range(q), repeat=n):
        _, is_priv, b = classify(s)
        if is_priv:
            out.setdefault(b, set()).add(Word(s, q))
    return out


def privileged_words(
    q: int,
    n: int,
    *,
    border: int | None = None,
    budget: int = DEFAULT_BUDGET,
) -> set[Word]:
    """All privileged words of length n, optionally only those with maximal border `border`."""
    groups = privileged_by_border(q, n, budget=budget)
    if border is not None:
        return set(groups.get(border, ()))
    return set().union(*groups.values())


def construct_T(q: int, n: int, m: int, *, budget: int = DEFAULT_BUDGET) -> set[Word]:
    """{w u w : u of length n-2m, w privileged of length m, w not a factor of u}.

    w may still occur across the w/u junctions, so this set can be strictly
    larger than the privileged words of length n with maximal border m.
    """
    _check_alphabet(q)
    if m < 1 or n < 2 * m:
        raise InvalidInputError("need n >= 2m >= 2")
    borders = sorted(privileged_words(q, m, budget=budget), key=lambda w: w.symbols)
    _guard(f"T({n},{m})", q ** (n - 2 * m) * len(borders), budget)
    out = set()
    for w in borders:
        for u in itertools.product(range(q), repeat=n - 2 * m):
            if count_occurrences(w, Word(u, q)) == 0:
                out.add(Word(w.symbols + u + w.symbols, q))
    return out


def verify_recursive_bound(
    q: int,
    n: int,
    *,
    table: CountTable | None = None,
    cfg: CensusConfig | None = None,
    mu_cfg: MuConfig | None = None,
) -> list[RecursiveBoundCheck]:
    """Check priv(n, m) <= q^ceil(n/2) for 2m > n and priv(n, m) <= B(m) mu(n-2m, m) otherwise."""
    _check_alphabet(q)
    if n < 2:
        raise InvalidInputError("n must be >= 2")
    if table is None:
        table = census_table(q, n, cfg=cfg)
    row = table.row(n)
    checks = []
    for m in range(1, n):
        lhs = row.by_border[m]
        if 2 * m > n:
            rhs = q ** ((n + 1) // 2)
            branch = "overlap"
        else:
            rhs = table.B(m) * mu(q, n - 2 * m, m, cfg=mu_cfg).value
            branch = "split"
        checks.append(RecursiveBoundCheck(m=m, lhs=lhs, rhs=rhs, branch=branch, ok=lhs <= rhs))
    return checks
