import math

import pytest
from hypothesis import given, strategies as st
from pytest import approx

from feasible import PAPER, feasible_params
from modalsplit.model import (
    DomainError,
    InfeasibleError,
    ModelParams,
    car_cost,
    check_conditions,
    demand_share,
    indifference_vot,
    transit_cost,
    travel_time,
)


@pytest.mark.parametrize("x, expected", [(0, 70), (1, 72), (0.5, 70.125)])
def test_travel_time_examples(x, expected):
    assert travel_time(x, PAPER) == approx(expected, abs=1e-12)


@pytest.mark.parametrize("x", [-0.01, 1.01, math.nan])
def test_travel_time_domain(x):
    with pytest.raises(DomainError):
        travel_time(x, PAPER)


def test_car_cost_examples():
    assert car_cost(1, 0, PAPER) == 130
    assert car_cost(2, 0, PAPER) == 200
    flat = PAPER.with_(gamma=0)
    assert {car_cost(3.3, x, flat) for x in (0, 0.2, 0.7, 1)} == {60 + 3.3 * 70}


def test_transit_cost_examples():
    assert transit_cost(1, PAPER) == 125
    assert transit_cost(2, PAPER) == 200
    assert transit_cost(10, PAPER) == 800
    with pytest.raises(DomainError):
        transit_cost(0.99, PAPER)


def test_indifference_vot_examples():
    assert indifference_vot(0, PAPER) == approx(2.0)
    assert indifference_vot(1, PAPER) == approx(10 / 3)
    flat = PAPER.with_(gamma=0)
    assert {indifference_vot(x, flat) for x in (0, 0.5, 1)} == {2.0}


def test_indifference_vot_infeasible_when_transit_not_slower():
    slow_car = PAPER.with_(gamma=6)   # T(1) = 76 > b2
    with pytest.raises(InfeasibleError):
        indifference_vot(1.0, slow_car)


def test_demand_share_examples():
    assert demand_share(1, PAPER.with_(eta=1.7)) == 1
    assert demand_share(2, PAPER) == 0.5
    assert demand_share(10, PAPER) == approx(0.1)
    assert demand_share(50, PAPER) == approx(0.02)   # defined beyond p_max
    with pytest.raises(DomainError):
        demand_share(0.5, PAPER)


def test_conditions_paper_instance():
    report = check_conditions(PAPER)
    assert report.all_satisfied
    assert report.margins == approx((10, 3, 20, 5, 2))


def test_condition_1_boundary_is_strict():
    report = check_conditions(PAPER.with_(a=50.0))
    assert report.margins[0] == 0
    assert report.satisfied[0] is False
    assert not report.all_satisfied


def test_condition_5_boundary_is_strict():
    report = check_conditions(PAPER.with_(gamma=2.5))
    assert report.margins[4] == 0
    assert report.satisfied == (True, True, True, True, False)


@pytest.mark.parametrize("bad", [
    dict(a=0), dict(b1=-1), dict(b2=0), dict(T0=0), dict(gamma=-0.1),
    dict(p_max=1.0), dict(eta=0.9), dict(eta=2.1), dict(a=math.inf),
])
def test_params_invariants(bad):
    with pytest.raises(DomainError):
        PAPER.with_(**bad)


@given(st.floats(-50, 50), st.floats(-50, 50), st.floats(-5, 5), st.floats(0, 20))
def test_margin_sign_matches_flag(da, db2, dg, pm):
    try:
        p = PAPER.with_(a=60 + da, b2=75 + db2, gamma=2 + dg, p_max=1.5 + pm)
    except DomainError:
        return
    r = check_conditions(p)
    assert all((m > 0) == s for m, s in zip(r.margins, r.satisfied))
    assert r.all_satisfied == all(r.satisfied)


@given(feasible_params(min_gamma_frac=0.05), st.lists(st.integers(0, 1000), min_size=2, max_size=8))
def test_threshold_increasing_and_inside_range(params, grid):
    xs = [k / 1000 for k in sorted(set(grid))]
    ps = [indifference_vot(x, params) for x in xs]
    assert all(1 < p < params.p_max for p in ps)
    assert all(p1 < p2 for p1, p2 in zip(ps, ps[1:]))
    assert all(0 < demand_share(p, params) < 1 for p in ps)


@given(feasible_params(), st.floats(1, 25), st.floats(0, 1))
def test_car_cheaper_iff_above_threshold(params, p, x):
    threshold = indifference_vot(x, params)
    if abs(p - threshold) < 1e-9 * threshold:
        return
    assert (car_cost(p, x, params) < transit_cost(p, params)) == (p > threshold)


def test_costs_equal_at_threshold():
    for x in (0, 0.3, 0.8, 1):
        p = indifference_vot(x, PAPER)
        assert car_cost(p, x, PAPER) == approx(transit_cost(p, PAPER), rel=1e-14)


@given(st.floats(0, 1), st.floats(0, 1), st.floats(0, 10))
def test_travel_time_monotone(x1, x2, g):
    p = PAPER.with_(gamma=g)
    lo, hi = sorted((x1, x2))
    assert travel_time(lo, p) <= travel_time(hi, p)


def test_params_reject_non_numbers():
    with pytest.raises(DomainError):
        ModelParams(a="60")
    with pytest.raises(DomainError):
        ModelParams(eta=True)
