from __future__ import annotations

import string
from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from ..exceptions import InvalidInputError

LETTERS = string.ascii_lowercase



@dataclass(frozen=True)
class Word:
    """Finite word over the integer alphabet {0, ..., q-1}.

    Letters a, b, c, ... map to 0, 1, 2, ... only through from_text/to_text.
    """
    symbols: tuple[int, ...]
    q: int

    def __post_init__(self) -> None:
        if self.q < 1:
            raise InvalidInputError("q must be >= 1")
        symbols = tuple(int(s) for s in self.symbols)
        for s in symbols:
            if not 0 <= s < self.q:
                raise InvalidInputError(f"symbol {s} outside alphabet [0, {self.q - 1}]")
        object.__setattr__(self, "symbols", symbols)

    @classmethod
    def from_text(cls, text: str, q: int | None = None) -> Word:
        """Parse lowercase letters; q defaults to (largest letter index + 1), at least 1."""
        symbols = []
        for ch in text:
            idx = LETTERS.find(ch)
            if idx < 0:
                raise InvalidInputError(f"unexpected character {ch!r}; expected letters a-z")
            symbols.append(idx)
        if q is None:
            q = max(symbols, default=0) + 1
        return cls(tuple(symbols), q)

    def to_text(self) -> str:
        if self.q > len(LETTERS):
            raise InvalidInputError(f"q={self.q} has no letter rendering")
        return "".join(LETTERS[s] for s in self.symbols)

    def prefix(self, length: int) -> Word:
        if not 0 <= length <= len(self.symbols):
            raise InvalidInputError("prefix length out of range")
        return Word(self.symbols[:length], self.q)

    def permuted(self, perm: Sequence[int]) -> Word:
        """Apply a bijection of the alphabet given as perm[s] = image of s."""
        if sorted(perm) != list(range(self.q)):
            raise InvalidInputError("perm must be a permutation of range(q)")
        return Word(tuple(perm[s] for s in self.symbols), self.q)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __str__(self) -> str:
        if self.q <= len(LETTERS):
            return self.to_text()
        return " ".join(map(str, self.symbols))
