from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import pandas as pd

from ..exceptions import InvalidInputError


def partition_depth(q: int, free: int, workers: int) -> int:
    """Smallest k <= free with q**k >= 4 * workers: the prefix length used to split work."""
    k = 0
    while k < free and q**k < 4 * workers:
        k += 1
    return k


@dataclass(frozen=True)
class CountRow:
    """Census of one word length n.

    privileged is B(n), closed is C(n); by_border[m] is priv(n, m) for
    1 <= m <= n-1, present (possibly zero) for every m in that range.
    """
    n: int
    q: int
    privileged: int
    closed: int
    by_border: dict[int, int]
    meta: dict[str, Any] | None = None

    def __post_init__(self) -> None:
        if self.n < 1:
            raise InvalidInputError("n must be >= 1")
        full = {m: int(self.by_border.get(m, 0)) for m in range(1, self.n)}
        extra = set(self.by_border) - set(full)
        if extra:
            raise InvalidInputError(f"border lengths {sorted(extra)} outside 1..n-1")
        object.__setattr__(self, "by_border", full)


@dataclass
class CountTable:
    """Census rows B(n), C(n), priv(n, m) for a fixed alphabet size q."""
    q: int
    rows: dict[int, CountRow] = field(default_factory=dict)

    def add(self, row: CountRow) -> None:
        if row.q != self.q:
            raise InvalidInputError("row alphabet size does not match table")
        self.rows[row.n] = row

    def row(self, n: int) -> CountRow:
        try:
            return self.rows[n]
        except KeyError:
            raise InvalidInputError(f"census table has no row for n={n}") from None

    def B(self, n: int) -> int:
        return self.row(n).privileged

    def C(self, n: int) -> int:
        return self.row(n).closed

    def priv(self, n: int, m: int) -> int:
        return self.row(n).by_border.get(m, 0)

    def lengths(self) -> list[int]:
        return sorted(self.rows)

    def to_frame(self) -> pd.DataFrame:
        """Rows as a DataFrame with columns n, q, B, C, m1..m<max_n - 1>."""
        ns = self.lengths()
        max_m = max(ns, default=1) - 1
        records = []
        for n in ns:
            r = self.rows[n]
            rec: dict[str, int] = {"n": n, "q": r.q, "B": r.privileged, "C": r.closed}
            for m in range(1, max_m + 1):
                rec[f"m{m}"] = r.by_border.get(m, 0)
            records.append(rec)
        columns = ["n", "q", "B", "C"] + [f"m{m}" for m in range(1, max_m + 1)]
        return pd.DataFrame.from_records(records, columns=columns)
