"""
Geodesics of surfaces of revolution and the largest Gaussian curvature on a
geodesic circle.

With metric ``E(v) du² + G(v) dv²`` and ``E = ρ²`` the geodesic equations
are ::

    ü = -2 (ρ'/ρ) u̇ v̇
    v̈ = (ρ ρ'/G) u̇² - (G'/2G) v̇²

and Clairaut's relation keeps ``ρ² u̇ = ρ sin θ`` constant, ``θ`` being the
angle with the meridian.
"""

import logging
import math
from dataclasses import dataclass
from typing import Literal

import numpy as np
from scipy.integrate import solve_ivp
from scipy.optimize import minimize_scalar

from ..warping import SolverError
from .revolution import SurfaceOfRevolution, gauss_curvature

logger = logging.getLogger("steklov_models.surfaces")

DEFAULT_DIRECTIONS = 64
MIN_DIRECTIONS = 16
# ρ below this ends the chart (axis of rotation).
AXIS_MARGIN = 1e-9


class GeodesicEscape(SolverError):
    """
    Raised when a geodesic leaves the chart of the surface, e.g. by hitting
    the axis of rotation.
    """
    pass


@dataclass(frozen=True)
class BasePoint:
    """
    The centre ``p`` of the geodesic circles.

    Args:
        surface (SurfaceOfRevolution): Surface carrying the point.
        u0, v0 (float): Coordinates.
        label (str): ``outer-equator``, ``inner-equator`` or ``generic``.
        alpha (float, optional): The angle ``v0`` of a generic point.
    """

    surface: SurfaceOfRevolution
    u0: float
    v0: float
    label: Literal["outer-equator", "inner-equator", "generic"] = "generic"
    alpha: float | None = None

    def __post_init__(self):
        if not self.surface.in_chart(self.v0):
            raise ValueError(f"v0={self.v0} is outside the chart of {self.surface.name}.")

    @classmethod
    def outer_equator(cls, surface: SurfaceOfRevolution) -> "BasePoint":
        return cls(surface, 0.0, 0.0, "outer-equator")

    @classmethod
    def inner_equator(cls, surface: SurfaceOfRevolution) -> "BasePoint":
        return cls(surface, 0.0, math.pi, "inner-equator")

    @classmethod
    def generic(cls, surface: SurfaceOfRevolution, alpha: float) -> "BasePoint":
        return cls(surface, 0.0, alpha, "generic", alpha)

    @property
    def curvature(self) -> float:
        return gauss_curvature(self.surface, self.v0)


@dataclass(frozen=True)
class GeodesicPath:
    """
    Endpoint of a unit-speed geodesic and its accuracy monitor.

    Args:
        u, v (float): Endpoint coordinates.
        theta (float): Initial angle with the meridian.
        clairaut_drift (float): Largest change of ``ρ² u̇`` relative to
            ``ρ`` at the base point.
        steps (int): Accepted integration steps.
    """

    u: float
    v: float
    theta: float
    clairaut_drift: float
    steps: int


def integrate_geodesic(
    s: SurfaceOfRevolution, p: BasePoint, theta: float, t: float, tol: float = 1e-10
) -> GeodesicPath:
    """
    Follows the unit-speed geodesic leaving ``p`` at angle ``theta`` from the
    meridian direction ``∂_v`` for arc-length ``t``.

    Raises:
        GeodesicEscape: If the geodesic reaches the edge of the chart.
    """
    if not t > 0:
        raise ValueError(f"Arc-length must be positive, got {t}.")
    _, G0 = s.metric(p.v0)
    rho0 = float(s.rho(p.v0))
    y0 = [p.u0, p.v0, math.sin(theta) / rho0, math.cos(theta) / math.sqrt(G0)]
    clairaut = rho0 * math.sin(theta)

    def rhs(_, y):
        _, v, du, dv = y
        rho, rho_v = s.rho(v), s.rho_v(v)
        G = s.rho_v(v) ** 2 + s.y_v(v) ** 2
        ddu = -2 * rho_v / rho * du * dv
        ddv = rho * rho_v / G * du**2 - s.metric_g_v(v) / (2 * G) * dv**2
        return [du, dv, ddu, ddv]

    def chart_edge(_, y):
        lo, hi = s.v_range
        return min(float(s.rho(y[1])) - AXIS_MARGIN, y[1] - lo, hi - y[1])

    chart_edge.terminal = True

    sol = solve_ivp(
        rhs,
        (0.0, t),
        y0,
        method="DOP853",
        rtol=tol,
        atol=1e-12,
        events=chart_edge,
    )
    if sol.status == 1:
        raise GeodesicEscape(
            f"Geodesic at theta={theta:.6g} left the chart after {sol.t[-1]:.6g}."
        )
    if sol.status == -1:
        raise GeodesicEscape(sol.message)
    u, v, du, _ = sol.y
    drift = float(np.max(np.abs(s.rho(v) ** 2 * du - clairaut))) / rho0
    return GeodesicPath(
        float(u[-1]), float(v[-1]), theta, drift, sol.t.size - 1
    )


@dataclass(frozen=True)
class CircleFan:
    """Curvature at the endpoints of a fan of geodesics of equal length."""

    thetas: np.ndarray
    curvatures: np.ndarray
    drifts: np.ndarray


def circle_curvature_fan(
    s: SurfaceOfRevolution,
    p: BasePoint,
    t: float,
    directions: int = DEFAULT_DIRECTIONS,
    tol: float = 1e-10,
) -> CircleFan:
    """
    Gaussian curvature on the geodesic circle of radius ``t`` about ``p``,
    sampled at ``directions`` equally spaced initial angles starting with
    the meridian direction.
    """
    if directions < MIN_DIRECTIONS:
        raise ValueError(f"Need at least {MIN_DIRECTIONS} directions, got {directions}.")
    thetas = 2 * math.pi * np.arange(directions) / directions
    paths = [integrate_geodesic(s, p, float(theta), t, tol) for theta in thetas]
    return CircleFan(
        thetas,
        np.array([gauss_curvature(s, path.v) for path in paths]),
        np.array([path.clairaut_drift for path in paths]),
    )


def geodesic_circle_max_curvature(
    s: SurfaceOfRevolution,
    p: BasePoint,
    t: float,
    directions: int = DEFAULT_DIRECTIONS,
    tol: float = 1e-8,
) -> float:
    """
    Largest Gaussian curvature on the geodesic circle ``C(p, t)``.

    The coarse maximum of a fan of ``directions`` geodesics is refined by a
    golden-section search between the neighbouring directions until the
    angle changes by less than ``tol``.

    Examples:

        >>> torus = SurfaceOfRevolution.torus(0.5)
        >>> value = geodesic_circle_max_curvature(torus, BasePoint.outer_equator(torus), 0.5)
        >>> value <= 4 / 3 + 1e-6
        True
    """
    fan = circle_curvature_fan(s, p, t, directions)
    i = int(np.argmax(fan.curvatures))
    coarse = float(fan.curvatures[i])
    step = 2 * math.pi / directions
    theta = float(fan.thetas[i])

    # Golden section stops on a relative width, so search in x = angle + 2π
    # to keep the stopping rule meaningful near angle 0.
    shift = 2 * math.pi

    def negative_curvature(x):
        return -gauss_curvature(s, integrate_geodesic(s, p, x - shift, t).v)

    try:
        result = minimize_scalar(
            negative_curvature,
            bracket=(theta - step + shift, theta + shift, theta + step + shift),
            method="golden",
            tol=tol,
        )
    except ValueError as e:
        logger.debug(f"Golden search not bracketed near theta={theta:.6g}: {e}")
        return coarse
    refined = -float(result.fun)
    logger.debug(f"Circle t={t}: coarse {coarse:.12g}, refined {refined:.12g}.")
    return max(coarse, refined)
