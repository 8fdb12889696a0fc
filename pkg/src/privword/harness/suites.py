"""
Verification suites binding census, avoidance and the bound family.

Each suite returns a VerifyReport. Records with verdict None are diagnostics:
fitted constants, crossovers, and guards for checks whose validity range is
empty at the requested parameters.
"""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import asdict, dataclass
from functools import cached_property

from ..bounds.family import BoundParams, h, hbar, hbar_in_pi, iter_ln, omega, rho, threshold
from ..bounds.fitting import (
    BOUND_MARGIN,
    closed_slack,
    corollary_shape_ratio,
    dominance_trend,
    empirical_alpha,
    empirical_closed_constant,
    geometric_grid,
    ratio_diagnostics,
    rho_function,
    strictly_decreasing,
    technical_limit,
    technical_shape_ratio,
    theorem_slack,
    up_membership_check,
)
from ..config import DEFAULT_BUDGET
from ..engines.avoidance.automaton import MuConfig, count_avoiding, lemma21_exact, mu
from ..engines.base import CountTable
from ..engines.census.enumerate import (
    CensusConfig,
    census,
    census_table,
    construct_T,
    privileged_by_border,
    verify_recursive_bound,
)
from ..exceptions import DomainError, InvalidInputError
from ..words.borders import border_chain, classify
from ..words.oracle import (
    ORACLE_MAX_LENGTH,
    border_lengths_naive,
    is_closed_any_border,
    privileged_naive,
)
from ..words.word import Word
from .report import VerifyReport

logger = logging.getLogger(__name__)

LIMIT_GRID = (10**6, 10**9, 10**12, 10**15)
TECHNICAL_TOLERANCE = 0.25
EXAMPLE_TOLERANCE = 1e-12
# Exhaustive words per length in the automaton cross-check.
DP_CROSSCHECK_WORDS = 2**12


@dataclass(frozen=True)
class SuiteConfig:
    q: int = 2
    max_n: int = 14
    kappa: float = 2.0
    workers: int = 1
    budget: int = DEFAULT_BUDGET

    def __post_init__(self) -> None:
        if self.q < 2:
            raise InvalidInputError("q must be >= 2")
        if self.max_n < 2:
            raise InvalidInputError("max_n must be >= 2")
        if not self.kappa > 1.0:
            raise InvalidInputError("kappa must be > 1")



class SuiteContext:
    """Shared, lazily computed inputs for the suites of one run."""

    def __init__(self, cfg: SuiteConfig) -> None:
        self.cfg = cfg
        self.params = BoundParams(q=cfg.q, j=1, kappa=cfg.kappa)
        self.census_cfg = CensusConfig(workers=cfg.workers, budget=cfg.budget)
        self.mu_cfg = MuConfig(workers=cfg.workers, budget=cfg.budget)

    @cached_property
    def table(self) -> CountTable:
        logger.info("census table q=%d n<=%d", self.cfg.q, self.cfg.max_n)
        return census_table(self.cfg.q, self.cfg.max_n, cfg=self.census_cfg)

    def mu(self, n: int, m: int) -> int:
        return mu(self.cfg.q, n, m, cfg=self.mu_cfg).value

    def report(self, suite: str) -> VerifyReport:
        return VerifyReport(suite=suite, config=asdict(self.cfg))


def _words(q: int, n: int):
    return itertools.product(range(q), repeat=n)


def definitions(ctx: SuiteContext) -> VerifyReport:
    """Exhaustive cross-checks of the border machinery against the definitions."""
    q, max_n = ctx.cfg.q, ctx.cfg.max_n
    rep = ctx.report("definitions")
    top = min(max_n, ORACLE_MAX_LENGTH)
    if top < max_n:
        rep.add("oracle_length_cap", max_n, ORACLE_MAX_LENGTH, None)
    for n in range(1, top + 1):
        if q**n > ctx.cfg.budget:
            rep.add("definitions_guard", q**n, ctx.cfg.budget, None, n=n, q=q)
            break
        mismatch_oracle = not_closed = mismatch_closed = lemma = mismatch_borders = 0
        for s in _words(q, n):
            closed, priv, b = classify(s)
            borders = border_lengths_naive(s)
            if priv != privileged_naive(s):
                mismatch_oracle += 1
            if n >= 2 and priv and not closed:
                not_closed += 1
            if closed != is_closed_any_border(s):
                mismatch_closed += 1
            if n >= 2 and priv and not classify(s[:b])[1]:
                lemma += 1
            if n <= 12 and list(border_chain(Word(s, q)).chain) != borders:
                mismatch_borders += 1
        rep.add("oracle_equivalence", mismatch_oracle, 0, mismatch_oracle == 0, n=n, q=q)
        if n >= 2:
            rep.add("privileged_implies_closed", not_closed, 0, not_closed == 0, n=n, q=q)
            rep.add("maximal_border_privileged", lemma, 0, lemma == 0, n=n, q=q)
        rep.add("closed_equivalence", mismatch_closed, 0, mismatch_closed == 0, n=n, q=q)
        if n <= 12:
            rep.add("border_array_chain", mismatch_borders, 0, mismatch_borders == 0, n=n, q=q)
    return rep


def recursive_bound(ctx: SuiteContext) -> VerifyReport:
    q, max_n = ctx.cfg.q, ctx.cfg.max_n
    rep = ctx.report("recursive-bound")
    for n in range(2, max_n + 1):
        for c in verify_recursive_bound(q, n, table=ctx.table, mu_cfg=ctx.mu_cfg):
            rep.add(f"recursive_bound_{c.branch}", c.lhs, c.rhs, c.ok, n=n, m=c.m, q=q)

    for n in range(2, min(max_n, 12) + 1):
        groups = privileged_by_border(q, n, budget=ctx.cfg.budget)
        for m in range(1, n // 2 + 1):
            t = construct_T(q, n, m, budget=ctx.cfg.budget)
            missing = len(groups.get(m, set()) - t)
            rep.add("priv_subset_T", missing, 0, missing == 0, n=n, m=m, q=q)
            rhs = ctx.table.B(m) * ctx.mu(n - 2 * m, m)
            rep.add("T_size_bound", len(t), rhs, len(t) <= rhs, n=n, m=m, q=q)
    return rep


def avoidance(ctx: SuiteContext) -> VerifyReport:
    q, max_n = ctx.cfg.q, ctx.cfg.max_n
    rep = ctx.report("avoidance")

    patterns = [p for m in range(1, 5) for p in _words(q, m)]
    top = min(max_n, 12)
    while q**top > DP_CROSSCHECK_WORDS:
        top -= 1
    for n in range(0, top + 1):
        avoiders = dict.fromkeys(patterns, 0)
        for s in _words(q, n):
            factors = {s[i : i + k] for k in range(1, 5) for i in range(n - k + 1)}
            for p in patterns:
                if p not in factors:
                    avoiders[p] += 1
        bad = sum(1 for p in patterns if count_avoiding(Word(p, q), n) != avoiders[p])
        rep.add("dp_vs_exhaustive", bad, 0, bad == 0, n=n, q=q)

    for m in range(1, min(6, max_n) + 1):
        for n in range(1, max_n + 1):
            value = ctx.mu(n, m)
            bound = lemma21_exact(q, n, m)
            rep.add("lemma21", value, bound, value <= bound, n=n, m=m, q=q)

    for m in range(1, min(8, max_n)):
        for n in range(1, max_n + 1):
            lo, hi = ctx.mu(n, m), ctx.mu(n, m + 1)
            rep.add("mu_monotone_in_m", lo, hi, lo <= hi, n=n, m=m, q=q)

    for p in patterns:
        w = Word(p, q)
        counts = [count_avoiding(w, n) for n in range(max_n + 1)]
        ok = all(a <= b <= q * a for a, b in zip(counts, counts[1:]))
        rep.add("avoiders_monotone_in_n", counts[-1], q * counts[-2], ok, w=str(w), q=q)

    grouped = MuConfig(group_by_autocorrelation=True, budget=ctx.cfg.budget)
    for m in range(1, min(5, max_n) + 1):
        for n in range(0, min(max_n, 14) + 1):
            a = ctx.mu(n, m)
            b = mu(q, n, m, cfg=grouped).value
            rep.add("mu_grouping", b, a, a == b, n=n, m=m, q=q)
    return rep


def partition(ctx: SuiteContext) -> VerifyReport:
    q, max_n = ctx.cfg.q, ctx.cfg.max_n
    rep = ctx.report("partition")
    table = ctx.table
    for n in table.lengths():
        row = table.row(n)
        total = q**n
        rep.add("count_le_total", row.privileged, total, row.privileged <= total, n=n, q=q)
        if n >= 2:
            s = sum(row.by_border.values())
            rep.add("partition_identity", s, row.privileged, s == row.privileged, n=n, q=q)
            rep.add("B_le_C", row.privileged, row.closed, row.privileged <= row.closed, n=n, q=q)
    for n in range(1, min(max_n, 10) + 1):
        fast = table.row(n)
        full = census(q, n, cfg=ctx.census_cfg, symmetry=False)
        same = (fast.privileged, fast.closed, fast.by_border) == (
            full.privileged,
            full.closed,
            full.by_border,
        )
        rep.add("symmetry_reduction", fast.privileged, full.privileged, same, n=n, q=q)
    return rep


def _guarded_iter_ln_sign(j: int, n: int) -> bool:
    try:
        return iter_ln(j, n) > 0.0
    except DomainError:
        return False


def bounds(ctx: SuiteContext) -> VerifyReport:
    q, max_n = ctx.cfg.q, ctx.cfg.max_n
    params = ctx.params
    rep = ctx.report("bounds")
    table = ctx.table

    for j in range(1, 5):
        N = threshold(j)
        ok = _guarded_iter_ln_sign(j, N) and not _guarded_iter_ln_sign(j, N - 1)
        rep.add("threshold", N, N - 1, ok, j=j)

    examples = {
        1: lambda n: math.log(n) / math.sqrt(n),
        2: lambda n: math.sqrt(math.log(n)) * math.log(math.log(n)) / math.sqrt(n),
        3: lambda n: math.sqrt(math.log(n)) * iter_ln(3, n) * math.sqrt(iter_ln(2, n))
        / math.sqrt(n),
        4: lambda n: math.sqrt(math.log(n)) * iter_ln(4, n) * math.sqrt(iter_ln(3, n))
        * math.sqrt(iter_ln(2, n)) / math.sqrt(n),
    }
    for j, closed_form in examples.items():
        for n in geometric_grid(max(threshold(j) + 1, 20), 1e15, 10):
            expected = closed_form(n)
            err = abs(rho(j, n) - expected) / abs(expected)
            rep.add("rho_example", err, EXAMPLE_TOLERANCE, err <= EXAMPLE_TOLERANCE, j=j, n=n)

    for j in (1, 2):
        if max_n < threshold(j):
            rep.add("alpha_guard", max_n, threshold(j), None, j=j)
            continue
        alpha = empirical_alpha(j, table, params)
        rep.add("alpha_hat", alpha, None, None, j=j, n_min=threshold(j), n_max=max_n)
        for n, ratio in theorem_slack(j, table, alpha, params):
            rep.add("theorem_slack", ratio, 1.0, ratio <= 1.0 + BOUND_MARGIN, j=j, n=n)

        up = up_membership_check(
            rho_function(j), alpha, range(threshold(j), max(max_n, 60) + 1), params, table
        )
        for prop, start in up.crossover.items():
            rep.add("up_crossover", start, None, None, j=j, property=prop)
            if start is None:
                rep.add("up_eventually_holds", None, None, False, j=j, property=prop)
        for p in up.points:
            for prop in ("bounds_count", "non_increasing", "growth"):
                value = getattr(p, prop)
                if value is None:
                    continue
                start = up.crossover[prop]
                verdict = value if start is not None and p.n >= start else None
                rep.add(f"up_{prop}", value, None, verdict, j=j, n=p.n)

    c_hat = empirical_closed_constant(table, params)
    rep.add("closed_constant_hat", c_hat, None, None, n_min=2, n_max=max_n)
    for n, ratio in closed_slack(table, c_hat, params):
        rep.add("closed_slack", ratio, 1.0, ratio <= 1.0 + BOUND_MARGIN, n=n)

    points, in_pi = hbar_in_pi(range(2, max(1000, max_n) + 1), params)
    failures = sum(1 for p in points if not (p.in_bounds and p.non_decreasing))
    rep.add("hbar_in_pi", failures, 0, in_pi, n_min=2, n_max=points[-1].n)

    bad = sum(1 for n in geometric_grid(16, 1e6, 200) if hbar(n, params) > h(n, params))
    rep.add("hbar_le_h", bad, 0, bad == 0, n_min=16, n_max=10**6)

    _lemma_checks(ctx, rep)

    sup = max(technical_shape_ratio(n, params) for n in geometric_grid(2, 1e12, 400))
    rep.add("technical_shape_sup", sup, None, None, n_min=2, n_max=10**12)

    ratios = []
    for n in range(2, max_n + 1):
        hb = hbar(n, params)
        if n >= 2 * hb:
            ratios.append(corollary_shape_ratio(n, params, ctx.mu(n - 2 * hb, hb)))
    if ratios:
        rep.add("corollary_shape_sup", max(ratios), None, None, n_min=2, n_max=max_n)
    return rep


def _lemma_checks(ctx: SuiteContext, rep: VerifyReport) -> None:
    q, max_n, kappa = ctx.cfg.q, ctx.cfg.max_n, ctx.cfg.kappa
    params = ctx.params
    table = ctx.table
    alpha1 = empirical_alpha(1, table, params)
    cd_ratios = []
    for n in range(2, max_n + 1):
        row = table.row(n)
        hb = hbar(n, params)
        half_up = (n + 1) // 2

        short = [m for m in range(1, hb) if 2 * m <= n]
        if short:
            lhs = sum(row.by_border[m] for m in short)
            rhs = sum(table.B(m) * ctx.mu(n - 2 * m, m) for m in short)
            rep.add("short_border_sum", lhs, rhs, lhs <= rhs, n=n, hbar=hb)
            if hb >= 2:
                shape = (math.log(n) / kappa) * float(q) ** n * n ** (1 / kappa - 1) * (
                    alpha1 * rho(1, hb)
                )
                cd_ratios.append(lhs / shape)
        else:
            rep.add("short_border_guard", hb, None, None, n=n)

        middle = range(hb, n // 2 + 1)
        lhs = sum(row.by_border[m] for m in middle)
        mid = sum(table.B(m) * q ** (n - 2 * m) for m in middle)
        rep.add("long_border_sum", lhs, mid, lhs <= mid, n=n, hbar=hb)
        rep.add("long_border_geometric", mid * (q - 1), q ** (n - hb + 1),
                mid * (q - 1) <= q ** (n - hb + 1), n=n, hbar=hb)
        if math.floor(omega(n, params) / kappa) >= 1:
            lhs_f = float(q) ** (-hb)
            rhs_f = q * (math.log(n) / n) ** (1 / kappa)
            rep.add(
                "long_border_shape", lhs_f, rhs_f, lhs_f <= rhs_f * (1 + BOUND_MARGIN), n=n, hbar=hb
            )

        tail = sum(row.by_border[m] for m in range(half_up + 1, n))
        rep.add("tail_sum", 2 * tail, n * q**half_up, 2 * tail <= n * q**half_up, n=n)

        parts = (
            sum(row.by_border[m] for m in range(1, hb))
            + sum(row.by_border[m] for m in range(hb, half_up + 1) if m < n)
            + tail
        )
        rep.add("split_identity", parts, row.privileged, parts == row.privileged, n=n)

    if cd_ratios:
        rep.add("short_constant_hat", max(cd_ratios), None, None, n_max=max_n)
    else:
        rep.add("short_constant_guard", None, None, None, n_max=max_n)


def limits(ctx: SuiteContext) -> VerifyReport:
    params = ctx.params
    rep = ctx.report("limits")
    for j in (1, 2, 3):
        evaluated = []
        for n in LIMIT_GRID:
            try:
                (point,) = ratio_diagnostics(j, [n], params)
            except DomainError as exc:
                rep.add("limit_guard", None, None, None, j=j, n=n, reason=str(exc))
                continue
            evaluated.append(point)
            rep.add("limit_y", point.y, 1.0, None, j=j, n=n, hbar=point.hbar,
                    in_range=point.in_range)
        if not any(p.in_range for p in evaluated):
            rep.add("limit_guard", None, None, None, j=j, reason="no grid point in range")
            continue
        gaps = [abs(p.y - 1.0) for p in evaluated]
        if len(gaps) >= 2:
            rep.add("limit_gap_decreasing", gaps[-1], gaps[0], strictly_decreasing(gaps), j=j)

    target = technical_limit(params)
    n = LIMIT_GRID[-1]
    (point,) = ratio_diagnostics(1, [n], params)
    rel = abs(point.technical - target) / target
    rep.add("technical_ratio", point.technical, target, rel <= TECHNICAL_TOLERANCE, n=n)

    for j in (1, 2, 3):
        trend = dominance_trend(j, geometric_grid(max(threshold(j + 1), 10), 1e15, 12))
        inside = [ratio for _, ratio, ok in trend if ok]
        if len(inside) >= 2:
            increasing = strictly_decreasing([-r for r in inside])
            rep.add("dominance_increasing", inside[-1], inside[0], increasing, j=j,
                    points=len(inside))
        else:
            rep.add("dominance_guard", len(inside), None, None, j=j)
    return rep
