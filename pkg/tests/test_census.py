import itertools
import os
import time

import pytest

from privword.engines.base import CountRow, CountTable
from privword.engines.census import (
    CensusConfig,
    census,
    census_table,
    construct_T,
    priv_table,
    privileged_by_border,
    privileged_words,
    verify_recursive_bound,
)
from privword.exceptions import BudgetExceededError, InvalidInputError
from privword.words import Word
from privword.words.oracle import border_lengths_naive, is_closed_any_border, privileged_naive

# q=2 counts for n <= 14, recounted independently of this package from the
# literal definitions of closed and privileged words.
# fmt: off
GOLDEN_B = {
    1: 2, 2: 2, 3: 4, 4: 4, 5: 8, 6: 8, 7: 16,
    8: 20, 9: 40, 10: 60, 11: 108, 12: 176, 13: 328, 14: 568,
}
GOLDEN_C = {
    1: 0, 2: 2, 3: 4, 4: 6, 5: 12, 6: 20, 7: 36,
    8: 62, 9: 116, 10: 204, 11: 364, 12: 664, 13: 1220, 14: 2240,
}
# fmt: on
# priv(n, m) for 1 <= m <= n-1, listed by m.
GOLDEN_PRIV = {
    1: [],
    2: [2],
    3: [2, 2],
    4: [2, 0, 2],
    5: [2, 2, 2, 2],
    6: [2, 2, 2, 0, 2],
    7: [2, 4, 4, 2, 2, 2],
    8: [2, 6, 6, 2, 2, 0, 2],
    9: [2, 10, 12, 6, 4, 2, 2, 2],
    10: [2, 16, 22, 8, 6, 2, 2, 0, 2],
    11: [2, 26, 38, 16, 10, 6, 4, 2, 2, 2],
    12: [2, 42, 68, 30, 18, 4, 6, 2, 2, 0, 2],
    13: [2, 68, 122, 58, 38, 14, 10, 6, 4, 2, 2, 2],
    14: [2, 110, 218, 108, 76, 20, 14, 8, 6, 2, 2, 0, 2],
}


def _oracle_row(q: int, n: int) -> tuple[int, int, dict[int, int]]:
    total = closed = 0
    by_border: dict[int, int] = {}
    for s in itertools.product(range(q), repeat=n):
        closed += is_closed_any_border(s)
        if privileged_naive(s):
            total += 1
            borders = border_lengths_naive(s)
            if borders:
                by_border[borders[0]] = by_border.get(borders[0], 0) + 1
    return total, closed, by_border


def test_golden_counts():
    table = census_table(2, 14)
    for n in range(1, 15):
        row = table.row(n)
        assert table.B(n) == GOLDEN_B[n]
        assert table.C(n) == GOLDEN_C[n]
        assert [row.by_border[m] for m in range(1, n)] == GOLDEN_PRIV[n]
        assert sum(GOLDEN_PRIV[n]) == (GOLDEN_B[n] if n > 1 else 0)


def test_census_q2_n3():
    row = census(2, 3)
    assert (row.privileged, row.closed) == (4, 4)
    assert row.by_border == {1: 2, 2: 2}


def test_priv_table_examples():
    assert priv_table(2, 2) == {1: 2}
    assert priv_table(2, 3) == {1: 2, 2: 2}
    assert sorted(priv_table(2, 5)) == [1, 2, 3, 4]


@pytest.mark.parametrize("q, n", [(2, 8), (2, 12), (3, 6)])
def test_census_matches_oracle_recount(q, n):
    row = census(q, n)
    total, closed, by_border = _oracle_row(q, n)
    assert row.privileged == total
    assert row.closed == closed
    assert row.by_border == {m: by_border.get(m, 0) for m in range(1, n)}


@pytest.mark.parametrize("q, n", [(2, 10), (3, 7)])
def test_symmetry_reduction_equals_full_scan(q, n):
    fast = census(q, n)
    full = census(q, n, symmetry=False)
    assert (fast.privileged, fast.closed, fast.by_border) == (
        full.privileged,
        full.closed,
        full.by_border,
    )


def test_parallel_census_equals_sequential():
    seq = census(2, 11, cfg=CensusConfig(workers=1))
    par = census(2, 11, cfg=CensusConfig(workers=3))
    assert (seq.privileged, seq.closed, seq.by_border) == (
        par.privileged,
        par.closed,
        par.by_border,
    )
    assert par.meta["partitions"] >= 12


def test_partition_identity_and_closed_dominance():
    table = census_table(2, 12)
    for n in range(2, 13):
        row = table.row(n)
        assert sum(row.by_border.values()) == row.privileged
        assert row.privileged <= row.closed <= 2**n


def test_census_budget_guard():
    with pytest.raises(BudgetExceededError) as err:
        census(2, 12, cfg=CensusConfig(budget=100))
    assert err.value.estimated == 2**11
    assert err.value.budget == 100


def test_census_config_validation():
    with pytest.raises(InvalidInputError):
        CensusConfig(workers=0)
    with pytest.raises(InvalidInputError):
        CensusConfig(budget=0)


def test_census_rejects_bad_alphabet_and_length():
    with pytest.raises(InvalidInputError):
        census(1, 3)
    with pytest.raises(InvalidInputError):
        census(2, 0)


def test_construct_T_examples():
    assert construct_T(2, 2, 1) == {Word((0, 0), 2), Word((1, 1), 2)}
    with pytest.raises(InvalidInputError):
        construct_T(2, 3, 2)


def test_T_contains_privileged_words_with_that_border():
    for n in range(2, 11):
        groups = privileged_by_border(2, n)
        for m in range(1, n // 2 + 1):
            assert groups.get(m, set()) <= construct_T(2, n, m)


def test_privileged_words_filter():
    assert privileged_words(2, 3, border=2) == {Word((0, 0, 0), 2), Word((1, 1, 1), 2)}
    assert len(privileged_words(2, 4)) == 4


def test_verify_recursive_bound_examples():
    checks = {c.m: c for c in verify_recursive_bound(2, 8)}
    assert checks[2].branch == "split"
    assert checks[2].rhs == 2 * 8
    assert checks[6].branch == "overlap"
    assert checks[6].rhs == 2**4
    assert all(c.ok for c in checks.values())

    (only,) = verify_recursive_bound(2, 2)
    assert (only.lhs, only.rhs, only.ok) == (2, 2, True)

    overlap = {c.m: c for c in verify_recursive_bound(2, 6)}
    assert overlap[4].rhs == 8 and overlap[4].ok

    odd = {c.m: c for c in verify_recursive_bound(2, 7)}
    assert odd[5].branch == "overlap"
    assert odd[5].rhs == 2**4


def test_count_row_fills_missing_borders():
    row = CountRow(n=4, q=2, privileged=4, closed=6, by_border={1: 2})
    assert row.by_border == {1: 2, 2: 0, 3: 0}
    with pytest.raises(InvalidInputError):
        CountRow(n=3, q=2, privileged=0, closed=0, by_border={3: 1})


def test_count_table_frame_columns():
    table = census_table(2, 4)
    frame = table.to_frame()
    assert list(frame.columns) == ["n", "q", "B", "C", "m1", "m2", "m3"]
    assert frame["B"].tolist() == [2, 2, 4, 4]
    with pytest.raises(InvalidInputError):
        table.row(9)
    with pytest.raises(InvalidInputError):
        CountTable(q=3).add(table.row(2))


@pytest.mark.slow
@pytest.mark.skipif((os.cpu_count() or 1) < 8, reason="needs 8 CPUs")
def test_parallel_census_speedup_at_n22():
    def timed(workers: int) -> tuple[float, str]:
        start = time.perf_counter()
        row = census(2, 22, cfg=CensusConfig(workers=workers))
        elapsed = time.perf_counter() - start
        table = CountTable(q=2)
        table.add(row)
        return elapsed, table.to_frame().to_csv(index=False, lineterminator="\n")

    t1, one = timed(1)
    t8, eight = timed(8)
    assert eight == one
    assert t1 / t8 >= 3.0
