from __future__ import annotations

# Environment variables read by the CLI: PRIVWORD_THREADS, PRIVWORD_BUDGET.
ENV_PREFIX = "PRIVWORD_"
DEFAULT_BUDGET = 2**34
