import math

import numpy as np
import pytest

from steklov_models.steklov import (
    ComparisonViolation,
    InvalidBall,
    ModelBall,
    ball_volume_and_area,
    boundary_lambda1c,
    comparison_report,
    sphere_measure,
    steklov_mode_logderivative,
    steklov_rayleigh_quotient,
    steklov_record,
    steklov_v1,
)
from steklov_models.warping import (
    CurvatureProfile,
    ZeroBeforeR,
    solve_warping,
    space_form_warping,
)


@pytest.mark.parametrize("n, m, r, expected", (
    (2, 1, 1.5, 1 / 1.5),
    (3, 1, 2.0, 0.5),
    (4, 2, 1.0, 2.0),
))
def test_flat_mode_logderivative(ball, n, m, r, expected):
    # psi = t^m in flat space, for every dimension.
    result = steklov_mode_logderivative(ball(0.0, n, r), m)
    assert result.value == pytest.approx(expected, rel=1e-9)
    assert result.psiprime_at_r / result.psi_at_r == pytest.approx(result.value, rel=1e-12)


def test_spherical_mode_matches_half_angle_tangent(ball):
    # psi = tan(t/2) is the regular mode-1 solution on the round sphere.
    result = steklov_mode_logderivative(ball(1.0, 2, 1.0), 1)
    assert result.value == pytest.approx(1 / math.sin(1.0), rel=1e-8)
    assert result.psi_at_r == pytest.approx(2 * math.tan(0.5), rel=1e-6)


def test_higher_dimension_matches_finite_differences(ball, steklov_oracle):
    result = steklov_mode_logderivative(ball(1.0, 4, 1.0), 1)
    expected = steklov_oracle(np.sin, np.cos, 4, 1, 1.0)
    assert result.value == pytest.approx(expected, rel=1e-6)


def test_hyperbolic_matches_finite_differences(ball, steklov_oracle):
    result = steklov_mode_logderivative(ball(-1.0, 3, 1.2), 2)
    expected = steklov_oracle(np.sinh, np.cosh, 3, 2, 1.2)
    assert result.value == pytest.approx(expected, rel=1e-6)


def test_mode_must_be_positive(ball):
    with pytest.raises(ValueError):
        steklov_mode_logderivative(ball(0.0, 2, 1.0), 0)


@pytest.mark.parametrize("k0, n, r, expected", (
    (0.0, 2, 0.5, 2.0),
    (1.0, 2, 1.0, 1 / math.sin(1.0)),
    (0.0, 5, 1.0, 1.0),
))
def test_steklov_v1(ball, k0, n, r, expected):
    result = steklov_v1(ball(k0, n, r))
    assert result.v1 == pytest.approx(expected, rel=1e-8)
    assert result.mode == 1
    assert result.v1 > 0
    assert result.psiprime_at_r / result.psi_at_r == pytest.approx(result.v1, rel=1e-8)


def test_two_dimensional_closed_form_diagnostics(torus_case2):
    ball = ModelBall.from_profile(torus_case2, 2, 1.2)
    result = steklov_v1(ball)
    assert result.v1 == 1 / ball.f_at_r
    assert result.diagnostics["method"] == "closed-form"
    # The mode-1 log-derivative equals 1/f(r) in two dimensions.
    assert result.diagnostics["residual"] <= 1e-8
    mode = steklov_mode_logderivative(ball, 1)
    assert result.psi_at_r == mode.psi_at_r
    assert result.psiprime_at_r == mode.psiprime_at_r


@pytest.mark.parametrize("n, expected", ((2, 2 * math.pi), (3, 4 * math.pi), (4, 2 * math.pi**2)))
def test_sphere_measure_is_a_plain_float(n, expected):
    value = sphere_measure(n)
    assert type(value) is float
    assert value == pytest.approx(expected, rel=1e-14)


@pytest.mark.parametrize("n", (3, 4))
@pytest.mark.parametrize("k0", (0.0, 1.0, -1.0))
def test_mode_one_is_minimal(ball, n, k0):
    result = steklov_v1(ball(k0, n, 1.0))
    assert result.mode == 1
    assert result.diagnostics["method"] == "DOP853"


def test_regular_solution_positive(ball):
    b = ball(1.0, 3, 1.3)
    result = steklov_mode_logderivative(b, 1)
    assert result.psi_at_r > 0
    assert result.psiprime_at_r > 0


@pytest.mark.parametrize("n, m", ((2, 1), (3, 1), (4, 2)))
def test_rayleigh_quotient_matches_logderivative(ball, n, m):
    b = ball(1.0, n, 1.0)
    quotient = steklov_rayleigh_quotient(b, m)
    assert quotient == pytest.approx(steklov_mode_logderivative(b, m).value, rel=1e-6)


@pytest.mark.parametrize("k0, n, r, expected", (
    (0.0, 3, 2.0, 0.5),
    (1.0, 3, math.pi / 2, 2.0),
    (0.0, 2, 1.0, 1.0),
))
def test_boundary_lambda1c(ball, k0, n, r, expected):
    assert boundary_lambda1c(ball(k0, n, r)) == pytest.approx(expected, rel=1e-12)


@pytest.mark.parametrize("k0, n, r, volume, area", (
    (0.0, 2, 1.0, math.pi, 2 * math.pi),
    (0.0, 3, 1.0, 4 * math.pi / 3, 4 * math.pi),
    (1.0, 2, math.pi / 2, 2 * math.pi, 2 * math.pi),
))
def test_volume_and_area(ball, k0, n, r, volume, area):
    measure = ball_volume_and_area(ball(k0, n, r))
    assert measure.volume == pytest.approx(volume, rel=1e-9)
    assert measure.boundary_area == pytest.approx(area, rel=1e-9)


@pytest.mark.parametrize("n", (2, 3, 5))
def test_boundary_identity(ball, n):
    b = ball(-1.0, n, 0.8)
    area = ball_volume_and_area(b).boundary_area
    expected = (n - 1) * (area / sphere_measure(n)) ** (-2 / (n - 1))
    assert boundary_lambda1c(b) == pytest.approx(expected, rel=1e-10)


def test_ball_rejects_radius_past_first_zero():
    w = space_form_warping(1.0)
    with pytest.raises(InvalidBall):
        ModelBall(2, math.pi, w)
    with pytest.raises(ValueError):
        ModelBall(1, 1.0, w)
    with pytest.raises(ValueError):
        ModelBall(2, -1.0, w)


def test_from_profile_zero_before_r():
    with pytest.raises(ZeroBeforeR):
        ModelBall.from_profile(CurvatureProfile.constant(4.0, 2.0), 2, 2.0)


def test_curvature_monotonicity_two_dimensions():
    rng = np.random.default_rng(7)
    for _ in range(20):
        base = rng.uniform(-2.0, 1.0, size=4)
        bump = rng.uniform(0.0, 1.0, size=4)
        edges = np.linspace(0.0, 1.0, 5)
        k1 = CurvatureProfile.steps(edges, base)
        k2 = CurvatureProfile.steps(edges, base + bump)
        v1 = steklov_v1(ModelBall.from_profile(k1, 2, 1.0)).v1
        v2 = steklov_v1(ModelBall.from_profile(k2, 2, 1.0)).v1
        assert v1 <= v2 + 1e-9


def test_identical_profiles_give_identical_bounds(torus_case2):
    a = steklov_v1(ModelBall.from_profile(torus_case2, 3, 0.9)).v1
    b = steklov_v1(ModelBall(3, 0.9, solve_warping(torus_case2, 0.9))).v1
    assert abs(a - b) <= 1e-10


@pytest.mark.parametrize("k_upper, reference, n, r", (
    (CurvatureProfile.constant(4 / 3, 1.5), 4 / 3, 2, 0.8),
    (CurvatureProfile.constant(1.0, 1.0), 1.0, 3, 0.5),
))
def test_comparison_report_equal_models(k_upper, reference, n, r):
    report = comparison_report(k_upper, n, r, reference)
    assert report.margin == 0.0
    assert not report.sharper


def test_comparison_report_torus_case2(torus_case2):
    reference = 4 * math.cos(2.0) / (-2 + math.cos(2.0))
    report = comparison_report(torus_case2, 2, 1.0, reference)
    assert report.sharper
    assert report.margin > 0
    assert report.v1_model_variable == pytest.approx(1 / report.f_variable)
    assert report.assumption is None


def test_comparison_report_restates_boundary_assumption(torus_case2):
    report = comparison_report(torus_case2, 3, 0.7, 0.5)
    assert report.assumption is not None
    assert report.dominated


def test_comparison_violation(monkeypatch, torus_case2):
    from steklov_models import steklov as module

    def swapped(ball, max_mode=8, tol=1e-10):
        # Report the reciprocal so the dominated model looks larger.
        return module.SteklovResult(ball.f_at_r, 1, 1.0, ball.f_at_r)

    monkeypatch.setattr(module, "steklov_v1", swapped)
    with pytest.raises(ComparisonViolation):
        comparison_report(torus_case2, 2, 1.0, 4 / 3)


def test_steklov_record_fields(ball):
    b = ball(0.0, 2, 0.5)
    record = steklov_record(steklov_v1(b), b, margin=0.0)
    assert list(record) == ["n", "r", "v1", "mode", "f_at_r", "lambda1c_boundary", "margin"]
    assert record["v1"] == pytest.approx(2.0)
    assert record["lambda1c_boundary"] == pytest.approx(4.0)
