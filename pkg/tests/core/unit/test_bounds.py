import math

import pytest
from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st

from wittengap import BoundInput
from wittengap import InvalidInputException
from wittengap import ShrinkerBoundInput
from wittengap import SolitonInput
from wittengap import andrews_ni_bound
from wittengap import branch_values
from wittengap import einstein_forced
from wittengap import futaki_sano_bound
from wittengap import myers_admissible
from wittengap import shi_zhang_bound
from wittengap import shrinker_diameter_bound
from wittengap import shrinker_sweep_diameter_bound
from wittengap import soliton_diameter_bounds
from wittengap import soliton_lambda_lower_bound
from wittengap import soliton_optimal_s
from wittengap import sup_bound_closed
from wittengap import sup_bound_grid
from wittengap import sup_bound_maximizer
from wittengap import zhong_yang_bound
from wittengap._bounds import oracle_tolerance
from wittengap._bounds import sup_objective

PI = math.pi


@pytest.mark.parametrize("K, d", [(0.0, 0.0), (0.0, -1.0), (math.nan, 1.0), (1.0, math.inf)])
def test_bound_input_rejects_invalid(K, d) -> None:
    with pytest.raises(InvalidInputException):
        BoundInput(K=K, d=d)


def test_invalid_input_is_a_value_error() -> None:
    with pytest.raises(ValueError):
        BoundInput(K=0.0, d=0.0)


@pytest.mark.parametrize("K, expected", [(0.0, 1.0), (-5.0, 0.0), (1.0, 1.5625)])
def test_sup_bound_closed_at_pi(K, expected) -> None:
    assert sup_bound_closed(BoundInput(K=K, d=PI)) == pytest.approx(expected, abs=1e-15)


def test_sup_bound_closed_upper_branch() -> None:
    assert sup_bound_closed(BoundInput(K=10.0, d=PI)) == 10.0


def test_sup_bound_grid_flat_case() -> None:
    assert sup_bound_grid(BoundInput(K=0.0, d=PI), 1001) == pytest.approx(1.0, abs=1e-5)


def test_sup_bound_grid_lower_branch_tends_to_zero() -> None:
    bound = BoundInput(K=-5.0, d=PI)
    coarse, fine = sup_bound_grid(bound, 1001), sup_bound_grid(bound, 100_001)
    assert -1e-2 < coarse < fine < 0.0
    assert fine > -1e-4


def test_sup_bound_grid_matches_closed_form() -> None:
    bound = BoundInput(K=1.0, d=PI)
    assert sup_bound_grid(bound, 10_001) == pytest.approx(sup_bound_closed(bound), abs=1e-7)


def test_sup_bound_grid_rejects_tiny_grid() -> None:
    with pytest.raises(InvalidInputException):
        sup_bound_grid(BoundInput(K=0.0, d=1.0), 2)


@pytest.mark.parametrize("K, expected", [(0.0, 1.0), (1.0, 1.31), (-1.0, 0.69)])
def test_futaki_sano_bound(K, expected) -> None:
    assert futaki_sano_bound(BoundInput(K=K, d=PI)) == pytest.approx(expected, abs=1e-14)


@pytest.mark.parametrize("K, expected", [(0.0, 1.0), (1.0, 1.5)])
def test_andrews_ni_bound(K, expected) -> None:
    assert andrews_ni_bound(BoundInput(K=K, d=PI)) == pytest.approx(expected, abs=1e-14)


def test_andrews_ni_is_the_half_evaluation() -> None:
    bound = BoundInput(K=1.0, d=PI)
    assert andrews_ni_bound(bound) == pytest.approx(float(sup_objective(0.5, bound)), abs=1e-15)


def test_futaki_sano_beats_sup_bound_for_negative_curvature() -> None:
    bound = BoundInput(K=-1.0, d=PI)
    assert futaki_sano_bound(bound) > sup_bound_closed(bound)


def test_zhong_yang_and_shi_zhang_agree_at_zero_curvature() -> None:
    bound = BoundInput(K=0.0, d=2.0)
    assert zhong_yang_bound(bound) == pytest.approx(sup_bound_closed(bound), rel=1e-15)
    assert shi_zhang_bound(bound) == sup_bound_closed(bound)


@pytest.mark.parametrize(
    "K, d, branch, attained",
    [(-5.0, PI, 1, False), (0.0, PI, 2, True), (10.0, PI, 3, False)],
)
def test_sup_bound_maximizer(K, d, branch, attained) -> None:
    maximizer = sup_bound_maximizer(BoundInput(K=K, d=d))
    assert (maximizer.branch, maximizer.attained) == (branch, attained)


def test_maximizer_in_middle_branch() -> None:
    assert sup_bound_maximizer(BoundInput(K=1.0, d=PI)).s == pytest.approx(0.625)


@pytest.mark.parametrize("d", [0.5, 1.0, PI, 7.0])
def test_branches_continuous_at_boundaries(d) -> None:
    upper = branch_values(BoundInput(K=4 * PI**2 / d**2, d=d))
    lower = branch_values(BoundInput(K=-4 * PI**2 / d**2, d=d))
    assert upper[0] == pytest.approx(upper[1], rel=1e-12)
    assert abs(lower[0] - lower[2]) <= 1e-12


def test_myers_admissible() -> None:
    assert myers_admissible(BoundInput(K=1.0, d=PI), 2)
    assert not myers_admissible(BoundInput(K=1.0, d=4.0), 2)
    assert not myers_admissible(BoundInput(K=1.0, d=0.5), 1)


def test_soliton_diameter_bounds() -> None:
    bounds = soliton_diameter_bounds(SolitonInput(lam=1.0))
    assert bounds.sharp == pytest.approx(2 * (math.sqrt(2) - 1) * math.pi, abs=1e-12)
    assert bounds.futaki_sano == pytest.approx(2.416610, abs=1e-6)
    assert bounds.andrews_ni == pytest.approx(PI * math.sqrt(2.0 / 3.0))
    assert bounds.ordered


def test_soliton_diameter_bounds_scale() -> None:
    one, four = soliton_diameter_bounds(SolitonInput(lam=1.0)), soliton_diameter_bounds(SolitonInput(lam=4.0))
    assert four.sharp == pytest.approx(one.sharp / 2)
    assert four.futaki_sano == pytest.approx(one.futaki_sano / 2)
    assert four.andrews_ni == pytest.approx(one.andrews_ni / 2)


def test_soliton_rejects_non_positive_lambda() -> None:
    with pytest.raises(InvalidInputException):
        SolitonInput(lam=0.0)


def test_soliton_optimal_s() -> None:
    optimum = soliton_optimal_s()
    assert optimum.s_star == pytest.approx(2 - math.sqrt(2), abs=1e-15)
    assert optimum.g_max == pytest.approx(12 - 8 * math.sqrt(2), abs=1e-15)
    assert abs(optimum.g_at_s_star - optimum.g_max) <= 1e-12
    assert optimum.grid_max <= optimum.g_max + 1e-12


def test_soliton_lambda_lower_bound_is_the_diameter_bound_inverted() -> None:
    d = soliton_diameter_bounds(SolitonInput(lam=2.0)).sharp
    assert soliton_lambda_lower_bound(d) == pytest.approx(2.0, rel=1e-12)


def test_einstein_forced() -> None:
    assert einstein_forced(SolitonInput(lam=1.0), 2.5)
    assert not einstein_forced(SolitonInput(lam=1.0), 2.7)


@pytest.mark.parametrize(
    "lam, K0, expected",
    [(1.0, 0.0, 2.565100), (1.0, 1.0, 2.221441), (2.0, 0.0, PI / math.sqrt(3))],
)
def test_shrinker_diameter_bound(lam, K0, expected) -> None:
    assert shrinker_diameter_bound(ShrinkerBoundInput(lam=lam, K0=K0)) == pytest.approx(expected, abs=1e-6)


def test_shrinker_sweep_is_sharper() -> None:
    shrinker = ShrinkerBoundInput(lam=1.0, K0=0.0)
    sweep = shrinker_sweep_diameter_bound(shrinker)
    assert sweep.d_bound >= shrinker_diameter_bound(shrinker)
    assert sweep.d_bound == pytest.approx(PI * math.sqrt(12 - 8 * math.sqrt(2)), rel=1e-8)


@given(
    K=st.floats(min_value=-10, max_value=10, allow_nan=False),
    d=st.floats(min_value=0.1, max_value=20, allow_nan=False),
)
@settings(max_examples=60, deadline=None)
def test_sup_bound_dominates_its_evaluations(K, d) -> None:
    bound = BoundInput(K=K, d=d)
    closed = sup_bound_closed(bound)
    assert closed >= max(0.0, K) - 1e-12 * max(1.0, abs(K))
    assert closed >= andrews_ni_bound(bound) - 1e-12 * max(1.0, abs(closed))


@given(
    K=st.floats(min_value=-10, max_value=10, allow_nan=False),
    d=st.floats(min_value=0.1, max_value=20, allow_nan=False),
)
@settings(max_examples=25, deadline=None)
def test_closed_form_agrees_with_oracle(K, d) -> None:
    bound = BoundInput(K=K, d=d)
    assert abs(sup_bound_closed(bound) - sup_bound_grid(bound)) <= oracle_tolerance(bound)


@given(
    K=st.floats(min_value=-10, max_value=10, allow_nan=False),
    step=st.floats(min_value=0.0, max_value=5, allow_nan=False),
    d=st.floats(min_value=0.1, max_value=20, allow_nan=False),
)
@settings(max_examples=60, deadline=None)
def test_sup_bound_is_nondecreasing_in_curvature(K, step, d) -> None:
    lower = sup_bound_closed(BoundInput(K=K, d=d))
    upper = sup_bound_closed(BoundInput(K=K + step, d=d))
    assert lower >= 0.0
    assert upper >= lower - 1e-12 * max(1.0, abs(upper))


@given(
    K=st.floats(min_value=0, max_value=10, allow_nan=False),
    d=st.floats(min_value=0.1, max_value=20, allow_nan=False),
    stretch=st.floats(min_value=1.0, max_value=3.0, allow_nan=False),
)
@settings(max_examples=60, deadline=None)
def test_sup_bound_is_nonincreasing_in_diameter_for_nonnegative_curvature(K, d, stretch) -> None:
    near = sup_bound_closed(BoundInput(K=K, d=d))
    far = sup_bound_closed(BoundInput(K=K, d=d * stretch))
    assert far <= near + 1e-12 * max(1.0, near)


@given(
    K=st.floats(min_value=0, max_value=10, allow_nan=False),
    d=st.floats(min_value=0.1, max_value=20, allow_nan=False),
)
@settings(max_examples=60, deadline=None)
def test_sup_bound_dominates_futaki_sano_for_nonnegative_curvature(K, d) -> None:
    bound = BoundInput(K=K, d=d)
    closed = sup_bound_closed(bound)
    assert closed >= futaki_sano_bound(bound) - 1e-12 * max(1.0, closed)


def test_shrinker_sweep_at_half_optimum() -> None:
    shrinker = ShrinkerBoundInput(lam=1.0, K0=1.0)
    sweep = shrinker_sweep_diameter_bound(shrinker)
    assert sweep.d_bound >= shrinker_diameter_bound(shrinker)
    assert sweep.s == 0.5


@given(
    lam=st.floats(min_value=0.1, max_value=10, allow_nan=False),
    K0=st.floats(min_value=0, max_value=10, allow_nan=False),
)
@settings(max_examples=40, deadline=None)
def test_shrinker_sweep_never_below_half_bound(lam, K0) -> None:
    shrinker = ShrinkerBoundInput(lam=lam, K0=K0)
    assert shrinker_sweep_diameter_bound(shrinker).d_bound >= shrinker_diameter_bound(shrinker)
