import math

import pytest

from privword.bounds import BoundParams, empirical_alpha, ratio_diagnostics
from privword.bounds.fitting import (
    closed_slack,
    corollary_shape_ratio,
    dominance_trend,
    empirical_closed_constant,
    geometric_grid,
    holds_with_margin,
    rho_function,
    strictly_decreasing,
    technical_limit,
    technical_shape_ratio,
    theorem_slack,
    up_membership_check,
)
from privword.engines.census import census_table
from privword.exceptions import InvalidInputError


def _params() -> BoundParams:
    return BoundParams(q=2, j=1, kappa=2.0)


def _table():
    return census_table(2, 12)


def test_holds_with_margin():
    assert holds_with_margin(10, 10.0)
    assert holds_with_margin(10, 9.999999999999)
    assert not holds_with_margin(11, 10.0)


@pytest.mark.parametrize("j", [1, 2])
def test_alpha_is_tight_on_range(j):
    table = _table()
    alpha = empirical_alpha(j, table, _params())
    ratios = [r for _, r in theorem_slack(j, table, alpha, _params())]
    assert max(ratios) == pytest.approx(1.0)
    assert all(r <= 1.0 + 1e-12 for r in ratios)


def test_alpha_needs_covered_range():
    table = census_table(2, 2)
    with pytest.raises(InvalidInputError):
        empirical_alpha(3, table, _params())
    with pytest.raises(InvalidInputError):
        empirical_alpha(1, table, BoundParams(q=3))


def test_closed_constant_is_tight():
    table = _table()
    c = empirical_closed_constant(table, _params())
    ratios = [r for _, r in closed_slack(table, c, _params())]
    assert max(ratios) == pytest.approx(1.0)


def test_up_membership_crossovers():
    table = _table()
    alpha = empirical_alpha(1, table, _params())
    report = up_membership_check(rho_function(1), alpha, range(2, 40), _params(), table)
    assert report.crossover["non_increasing"] == 7
    assert report.crossover["growth"] == 2
    assert report.crossover["bounds_count"] == 2
    assert not report.verdict
    late = up_membership_check(rho_function(1), alpha, range(7, 40), _params(), table)
    assert late.verdict


def test_ratio_diagnostics_limit_grid():
    points = ratio_diagnostics(1, [10**6, 10**9, 10**12, 10**15], _params())
    assert [p.hbar for p in points] == [8, 12, 17, 22]
    gaps = [abs(p.y - 1.0) for p in points]
    assert gaps[0] == pytest.approx(0.208, abs=1e-3)
    assert strictly_decreasing(gaps)
    assert all(p.in_range for p in points)
    assert points[-1].technical == pytest.approx(1.253, abs=1e-3)
    target = technical_limit(_params())
    assert abs(points[-1].technical - target) < 0.25 * target


def test_ratio_diagnostics_flags_points_outside_validity():
    (point,) = ratio_diagnostics(3, [10**6], _params())
    assert not point.in_range


def test_dominance_trend_increases_beyond_e_squared():
    trend = dominance_trend(1, [2000, 10**5, 10**9, 10**15])
    assert all(ok for _, _, ok in trend)
    ratios = [r for _, r, _ in trend]
    assert strictly_decreasing([-r for r in ratios])
    (_, ratio, ok) = dominance_trend(1, [100])[0]
    assert not ok
    assert ratio == pytest.approx(math.sqrt(math.log(100)) / math.log(math.log(100)))


def test_shape_ratios():
    assert technical_shape_ratio(16, _params()) == pytest.approx(0.5)
    assert corollary_shape_ratio(14, _params(), 1) == pytest.approx(2.0**-11)


def test_geometric_grid_and_monotonicity_helpers():
    assert geometric_grid(1, 1000, 4) == [1, 10, 100, 1000]
    assert strictly_decreasing([3.0, 2.0, 1.0])
    assert not strictly_decreasing([1.0, 1.0])


def test_alpha_grows_with_range():
    small = empirical_alpha(1, census_table(2, 12), _params())
    large = empirical_alpha(1, census_table(2, 16), _params())
    assert large >= small
