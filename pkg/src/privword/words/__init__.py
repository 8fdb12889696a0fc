from .borders import (
    BorderChain,
    border_array,
    border_chain,
    classify,
    count_occurrences,
    is_closed,
    is_privileged,
    maximal_border,
)
from .oracle import is_privileged_oracle
from .word import Word

__all__ = [
    "BorderChain",
    "Word",
    "border_array",
    "border_chain",
    "classify",
    "count_occurrences",
    "is_closed",
    "is_privileged",
    "is_privileged_oracle",
    "maximal_border",
]
