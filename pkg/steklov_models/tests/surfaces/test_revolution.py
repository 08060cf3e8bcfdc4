import math

import numpy as np
import pytest

from steklov_models.surfaces import SurfaceOfRevolution, embed, gauss_curvature


@pytest.mark.parametrize("v", (0.0, 0.7, math.pi / 2, 2.5, math.pi))
def test_torus_curvature(v):
    torus = SurfaceOfRevolution.torus(0.5)
    expected = math.cos(v) / (0.5 * (1 + 0.5 * math.cos(v)))
    assert gauss_curvature(torus, v) == pytest.approx(expected, abs=1e-12)


def test_torus_curvature_extremes():
    torus = SurfaceOfRevolution.torus(0.5)
    vs = np.linspace(-math.pi, math.pi, 1001)
    values = gauss_curvature(torus, vs)
    assert values.max() == pytest.approx(4 / 3, abs=1e-12)
    assert values.min() == pytest.approx(-4.0, abs=1e-12)


@pytest.mark.parametrize("radius", (0.5, 1.0, 2.0))
def test_sphere_curvature(radius):
    sphere = SurfaceOfRevolution.sphere(radius)
    vs = np.linspace(-1.2, 1.2, 7)
    assert np.allclose(gauss_curvature(sphere, vs), 1 / radius**2, atol=1e-12)


def test_paraboloid_curvature():
    a = 0.75
    paraboloid = SurfaceOfRevolution.paraboloid(a)
    for v in (0.1, 0.5, 2.0):
        expected = 4 * a**2 / (1 + 4 * a**2 * v**2) ** 2
        assert gauss_curvature(paraboloid, v) == pytest.approx(expected, rel=1e-12)


def test_metric():
    torus = SurfaceOfRevolution.torus(0.5)
    E, G = torus.metric(0.0)
    assert (E, G) == pytest.approx((2.25, 0.25))
    assert torus.metric_g_v(1.0) == pytest.approx(0.0, abs=1e-15)


def test_embed():
    x, y, z = embed(SurfaceOfRevolution.torus(0.5), math.pi / 2, math.pi / 2)
    assert (x, y, z) == pytest.approx((0.0, 1.0, 0.5), abs=1e-15)


def test_chart():
    sphere = SurfaceOfRevolution.sphere()
    assert sphere.in_chart(0.3)
    assert not sphere.in_chart(math.pi / 2)
    assert SurfaceOfRevolution.torus().in_chart(10.0)


@pytest.mark.parametrize("factory, arg", (
    (SurfaceOfRevolution.torus, 0.0),
    (SurfaceOfRevolution.torus, 1.0),
    (SurfaceOfRevolution.sphere, -1.0),
))
def test_invalid_surfaces(factory, arg):
    with pytest.raises(ValueError):
        factory(arg)
