from .enumerate import (
    CensusConfig,
    RecursiveBoundCheck,
    census,
    census_table,
    construct_T,
    priv_table,
    privileged_by_border,
    privileged_words,
    verify_recursive_bound,
)

__all__ = [
    "CensusConfig",
    "RecursiveBoundCheck",
    "census",
    "census_table",
    "construct_T",
    "priv_table",
    "privileged_by_border",
    "privileged_words",
    "verify_recursive_bound",
]
