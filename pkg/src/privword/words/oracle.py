"""
Definitional reference implementations.

Everything here follows the definitions literally with naive scans; it exists to
cross-check the chain algorithm in borders.py and the census engine.
"""

from __future__ import annotations

from collections.abc import Sequence
from functools import lru_cache

from ..exceptions import InvalidInputError
from .word import Word

ORACLE_MAX_LENGTH = 20


def border_lengths_naive(s: Sequence[int]) -> list[int]:
    """All border lengths of s by direct prefix/suffix comparison, descending."""
    n = len(s)
    return [b for b in range(n - 1, 0, -1) if tuple(s[:b]) == tuple(s[n - b :])]


def occurrences_naive(w: Sequence[int], s: Sequence[int]) -> int:
    m = len(w)
    w = tuple(w)
    return sum(1 for i in range(len(s) - m + 1) if tuple(s[i : i + m]) == w)


def is_closed_any_border(s: Sequence[int]) -> bool:
    """Closedness tested over every border, not just the maximal one."""
    return any(occurrences_naive(s[:b], s) == 2 for b in border_lengths_naive(s))


@lru_cache(maxsize=None)
def _privileged(s: tuple[int, ...]) -> bool:
    if len(s) <= 1:
        return True
    for b in border_lengths_naive(s):
        w = s[:b]
        if occurrences_naive(w, s) == 2 and _privileged(w):
            return True
    return False


def privileged_naive(s: Sequence[int]) -> bool:
    return _privileged(tuple(s))


def is_privileged_oracle(u: Word, *, max_length: int = ORACLE_MAX_LENGTH) -> bool:
    """Privilege by the literal recursive definition over all borders.

    Raises InvalidInputError when |u| exceeds max_length, since the recursion
    is exponential in the worst case.
    """
    if len(u) > max_length:
        raise InvalidInputError(f"oracle length cap exceeded: |u|={len(u)} > {max_length}")
    return _privileged(u.symbols)
