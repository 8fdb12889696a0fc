from .automaton import (
    MU_PARALLEL_MIN_PATTERNS,
    AvoidanceAutomaton,
    MuConfig,
    MuResult,
    count_avoiding,
    lemma21_exact,
    mu,
    mu_bound_lemma21,
)

__all__ = [
    "MU_PARALLEL_MIN_PATTERNS",
    "AvoidanceAutomaton",
    "MuConfig",
    "MuResult",
    "count_avoiding",
    "lemma21_exact",
    "mu",
    "mu_bound_lemma21",
]
