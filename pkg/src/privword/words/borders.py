from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

from ..exceptions import InvalidInputError
from .word import Word


def failure_array(s: Sequence[int]) -> list[int]:
    # f[i] = length of the maximal border of s[: i + 1]
    n = len(s)
    f = [0] * n
    k = 0
    for i in range(1, n):
        c = s[i]
        while k and c != s[k]:
            k = f[k - 1]
        if c == s[k]:
            k += 1
        f[i] = k
    return f


def z_array(s: Sequence[int]) -> list[int]:
    # z[i] = length of the longest common prefix of s and s[i:]; z[0] = len(s)
    n = len(s)
    z = [0] * n
    if n == 0:
        return z
    z[0] = n
    lo = hi = 0
    for i in range(1, n):
        k = min(hi - i, z[i - lo]) if i < hi else 0
        while i + k < n and s[k] == s[i + k]:
            k += 1
        z[i] = k
        if i + k > hi:
            lo, hi = i, i + k
    return z


def _only_at_ends(z: list[int], b: int, k: int) -> bool:
    """True iff the length-b prefix occurs in s[:k] only as prefix and suffix."""
    for i in range(1, k - b):
        if z[i] >= b:
            return False
    return True


def classify(s: Sequence[int]) -> tuple[bool, bool, int]:
    """Return (closed, privileged, maximal border length) for a raw symbol sequence.

    Privilege follows the chain of maximal borders: each link must occur exactly
    twice inside the prefix it borders. Cost is O(n * chain length).
    """
    n = len(s)
    if n <= 1:
        return False, True, 0
    f = failure_array(s)
    b = f[-1]
    if b == 0:
        return False, False, 0
    z = z_array(s)
    if not _only_at_ends(z, b, n):
        return False, False, b
    k = b
    while k > 1:
        c = f[k - 1]
        if c == 0 or not _only_at_ends(z, c, k):
            return True, False, b
        k = c
    return True, True, b


@dataclass(frozen=True)
class BorderChain:
    """Border array of a word plus its chain of maximal borders.

    border_array[i - 1] is the maximal border length of the length-i prefix.
    occ maps each chain length to its number of occurrences in the whole word.
    """
    border_array: tuple[int, ...]
    chain: tuple[int, ...]
    occ: dict[int, int]


def border_array(u: Word) -> list[int]:
    return failure_array(u.symbols)


def border_chain(u: Word) -> BorderChain:
    f = failure_array(u.symbols)
    chain = []
    k = f[-1] if f else 0
    while k > 0:
        chain.append(k)
        k = f[k - 1]
    z = z_array(u.symbols)
    occ = {m: sum(1 for v in z if v >= m) for m in chain}
    return BorderChain(border_array=tuple(f), chain=tuple(chain), occ=occ)


def count_occurrences(w: Word, u: Word) -> int:
    """Number of (possibly overlapping) occurrences of w as a factor of u."""
    m = len(w)
    if m == 0:
        raise InvalidInputError("pattern must be non-empty")
    p = w.symbols
    f = failure_array(p)
    count = 0
    k = 0
    for c in u.symbols:
        while k and c != p[k]:
            k = f[k - 1]
        if c == p[k]:
            k += 1
        if k == m:
            count += 1
            k = f[k - 1]
    return count


def maximal_border(u: Word) -> Word | None:
    f = failure_array(u.symbols)
    if not f or f[-1] == 0:
        return None
    return u.prefix(f[-1])


def is_closed(u: Word) -> bool:
    return classify(u.symbols)[0]


def is_privileged(u: Word) -> bool:
    return classify(u.symbols)[1]
