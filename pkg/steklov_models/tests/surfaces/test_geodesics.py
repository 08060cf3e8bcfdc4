import math

import numpy as np
import pytest

from steklov_models.surfaces import (
    BasePoint,
    GeodesicEscape,
    SurfaceOfRevolution,
    circle_curvature_fan,
    geodesic_circle_max_curvature,
    integrate_geodesic,
)


@pytest.fixture
def torus():
    return SurfaceOfRevolution.torus(0.5)


@pytest.fixture
def sphere():
    return SurfaceOfRevolution.sphere(1.0)


def test_meridian_on_sphere(sphere):
    p = BasePoint(sphere, 0.0, 0.0)
    path = integrate_geodesic(sphere, p, 0.0, 1.0)
    assert path.v == pytest.approx(1.0, abs=1e-9)
    assert path.u == pytest.approx(0.0, abs=1e-12)


def test_equator_on_sphere(sphere):
    p = BasePoint(sphere, 0.0, 0.0)
    path = integrate_geodesic(sphere, p, math.pi / 2, 2.0)
    assert path.u == pytest.approx(2.0, abs=1e-9)
    assert path.v == pytest.approx(0.0, abs=1e-9)


def test_torus_meridian_covers_twice_the_arc_length(torus):
    # G = 1/4 along the meridian, so v advances by 2t.
    path = integrate_geodesic(torus, BasePoint.inner_equator(torus), 0.0, 0.4)
    assert path.v == pytest.approx(math.pi + 0.8, abs=1e-9)


@pytest.mark.parametrize("theta", (0.3, 1.1, 2.0, 4.0))
def test_clairaut_is_conserved(torus, theta):
    path = integrate_geodesic(torus, BasePoint.generic(torus, 1.0), theta, 1.2)
    assert path.clairaut_drift <= 1e-8
    assert path.steps > 0


def test_geodesic_escapes_through_the_pole(sphere):
    with pytest.raises(GeodesicEscape):
        integrate_geodesic(sphere, BasePoint(sphere, 0.0, 0.0), 0.0, 2.0)


def test_arc_length_must_be_positive(torus):
    with pytest.raises(ValueError):
        integrate_geodesic(torus, BasePoint.outer_equator(torus), 0.0, 0.0)


def test_base_point_outside_chart(sphere):
    with pytest.raises(ValueError):
        BasePoint.inner_equator(sphere)


def test_base_point_curvature(torus):
    assert BasePoint.outer_equator(torus).curvature == pytest.approx(4 / 3)
    assert BasePoint.inner_equator(torus).curvature == pytest.approx(-4.0)
    assert BasePoint.generic(torus, 1.0).label == "generic"


def test_fan_on_sphere_is_constant(sphere):
    fan = circle_curvature_fan(sphere, BasePoint(sphere, 0.0, 0.0), 0.8, directions=16)
    assert fan.thetas.size == 16
    assert fan.thetas[0] == 0.0
    assert np.allclose(fan.curvatures, 1.0, atol=1e-12)
    assert np.max(fan.drifts) <= 1e-8


def test_fan_needs_enough_directions(torus):
    with pytest.raises(ValueError):
        circle_curvature_fan(torus, BasePoint.outer_equator(torus), 0.5, directions=8)


def test_outer_equator_maximum(torus):
    # The equator is a geodesic, so every circle about it reaches 4/3.
    value = geodesic_circle_max_curvature(torus, BasePoint.outer_equator(torus), 0.6)
    assert value == pytest.approx(4 / 3, abs=1e-8)


def test_inner_equator_maximum_along_meridian(torus):
    t = 0.5
    value = geodesic_circle_max_curvature(torus, BasePoint.inner_equator(torus), t)
    phase = math.cos(math.pi - 2 * t)
    assert value == pytest.approx(4 * phase / (2 + phase), abs=1e-3)
