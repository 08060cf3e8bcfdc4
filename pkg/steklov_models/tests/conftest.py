import math

import numpy as np
import pytest
from scipy.linalg import solve_banded

from steklov_models.steklov import ModelBall
from steklov_models.warping import CurvatureProfile


def case2_k(t):
    phase = math.cos(math.pi - 2 * t)
    return 4 * phase / (2 + phase)


def rk4_value(k, t, steps):
    """Plain fixed-step RK4 for f'' = -k f, f(0) = 0, f'(0) = 1."""
    h = t / steps
    f, fp, s = 0.0, 1.0, 0.0
    for _ in range(steps):
        a1, b1 = fp, -k(s) * f
        a2, b2 = fp + h / 2 * b1, -k(s + h / 2) * (f + h / 2 * a1)
        a3, b3 = fp + h / 2 * b2, -k(s + h / 2) * (f + h / 2 * a2)
        a4, b4 = fp + h * b3, -k(s + h) * (f + h * a3)
        f += h / 6 * (a1 + 2 * a2 + 2 * a3 + a4)
        fp += h / 6 * (b1 + 2 * b2 + 2 * b3 + b4)
        s += h
    return f


def richardson_value(k, t, steps):
    return (16 * rk4_value(k, t, 2 * steps) - rk4_value(k, t, steps)) / 15


def fd_logderivative(f, fp, n, m, r, cells):
    """
    Second-order finite differences for the regular radial solution with
    psi(0) = 0 and psi(r) = 1; returns psi'(r) from a one-sided stencil.
    """
    h = r / cells
    t = h * np.arange(1, cells)
    p = (n - 1) * fp(t) / f(t)
    q = m * (m + n - 2) / f(t) ** 2
    ab = np.zeros((3, cells - 1))
    ab[0, 1:] = (1 / h**2 + p / (2 * h))[:-1]
    ab[1] = -2 / h**2 - q
    ab[2, :-1] = (1 / h**2 - p / (2 * h))[1:]
    rhs = np.zeros(cells - 1)
    rhs[-1] = -(1 / h**2 + p[-1] / (2 * h))
    psi = solve_banded((1, 1), ab, rhs)
    return (3 * 1.0 - 4 * psi[-1] + psi[-2]) / (2 * h)


@pytest.fixture
def warping_oracle():
    """
    f(t) by RK4 with Richardson extrapolation, checked against a second,
    independent step sequence.
    """
    def oracle(k, t, steps=(500, 1200)):
        coarse = richardson_value(k, t, steps[0])
        fine = richardson_value(k, t, steps[1])
        assert abs(coarse - fine) <= 1e-10 * max(1.0, abs(fine))
        return fine
    return oracle


@pytest.fixture
def steklov_oracle():
    """Mode log-derivative by finite differences with Richardson extrapolation."""
    def oracle(f, fp, n, m, r, cells=4000):
        coarse = fd_logderivative(f, fp, n, m, r, cells)
        fine = fd_logderivative(f, fp, n, m, r, 2 * cells)
        return (4 * fine - coarse) / 3
    return oracle


@pytest.fixture
def flat():
    return CurvatureProfile.constant(0.0, 3.0)


@pytest.fixture
def round_():
    return CurvatureProfile.constant(1.0, 3.0)


@pytest.fixture
def hyperbolic():
    return CurvatureProfile.constant(-1.0, 3.0)


@pytest.fixture
def torus_case2():
    return CurvatureProfile.cosine_rational(4.0, math.pi, -2.0, 2.0, 1.0, math.pi / 2)


@pytest.fixture
def ball():
    def make_ball(k0, n, r):
        return ModelBall.from_profile(CurvatureProfile.constant(k0, r), n, r)
    return make_ball
