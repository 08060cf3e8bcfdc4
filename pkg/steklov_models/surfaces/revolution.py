"""
Surfaces of revolution generated by a profile curve ``(ρ(v), y(v))``::

    x(u, v) = (ρ(v) cos u, ρ(v) sin u, y(v))

with metric ``ρ² du² + (ρ'² + y'²) dv²``.
"""

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np


@dataclass(frozen=True)
class SurfaceOfRevolution:
    """
    A surface of revolution given by its profile curve and the first two
    derivatives of each component.

    Args:
        name (str): Label, e.g. ``"torus"``.
        rho, rho_v, rho_vv (callable): ``ρ`` and its derivatives.
        y, y_v, y_vv (callable): ``y`` and its derivatives.
        v_range (tuple): Open interval of the chart in ``v``.
        periodic (bool): Whether ``v`` is an angle (closed profile curve).
        eps (float, optional): Tube radius, set for tori only.
    """

    name: str
    rho: Callable
    rho_v: Callable
    rho_vv: Callable
    y: Callable
    y_v: Callable
    y_vv: Callable
    v_range: tuple[float, float]
    periodic: bool = False
    eps: float | None = None

    @classmethod
    def torus(cls, eps: float = 0.5) -> "SurfaceOfRevolution":
        """
        The ring torus ``ρ = 1 + ε cos v``, ``y = ε sin v`` with ``0 < ε < 1``.
        ``v = 0`` is the outer equator and ``v = π`` the inner one.
        """
        if not 0 < eps < 1:
            raise ValueError(f"A ring torus needs 0 < eps < 1, got {eps}.")
        return cls(
            "torus",
            rho=lambda v: 1 + eps * np.cos(v),
            rho_v=lambda v: -eps * np.sin(v),
            rho_vv=lambda v: -eps * np.cos(v),
            y=lambda v: eps * np.sin(v),
            y_v=lambda v: eps * np.cos(v),
            y_vv=lambda v: -eps * np.sin(v),
            v_range=(-math.inf, math.inf),
            periodic=True,
            eps=eps,
        )

    @classmethod
    def sphere(cls, radius: float = 1.0) -> "SurfaceOfRevolution":
        """Round sphere of curvature ``1/radius²``, ``v`` the latitude."""
        if not radius > 0:
            raise ValueError(f"Radius must be positive, got {radius}.")
        R = radius
        return cls(
            "sphere",
            rho=lambda v: R * np.cos(v),
            rho_v=lambda v: -R * np.sin(v),
            rho_vv=lambda v: -R * np.cos(v),
            y=lambda v: R * np.sin(v),
            y_v=lambda v: R * np.cos(v),
            y_vv=lambda v: -R * np.sin(v),
            v_range=(-math.pi / 2, math.pi / 2),
        )

    @classmethod
    def paraboloid(cls, a: float = 1.0) -> "SurfaceOfRevolution":
        """Paraboloid ``y = a ρ²`` with ``ρ = v > 0``."""
        return cls(
            "paraboloid",
            rho=lambda v: v * np.ones_like(v),
            rho_v=lambda v: np.ones_like(v),
            rho_vv=lambda v: np.zeros_like(v),
            y=lambda v: a * v**2,
            y_v=lambda v: 2 * a * v,
            y_vv=lambda v: 2 * a * np.ones_like(v),
            v_range=(0.0, math.inf),
        )

    def metric(self, v):
        """Returns ``(E, G)`` with ``E = ρ²`` and ``G = ρ'² + y'²``."""
        return self.rho(v) ** 2, self.rho_v(v) ** 2 + self.y_v(v) ** 2

    def metric_g_v(self, v):
        """``dG/dv``."""
        return 2 * (self.rho_v(v) * self.rho_vv(v) + self.y_v(v) * self.y_vv(v))

    def in_chart(self, v) -> bool:
        lo, hi = self.v_range
        return bool(lo < v < hi and self.rho(v) > 0)


def gauss_curvature(s: SurfaceOfRevolution, v):
    """
    Gaussian curvature from the profile curve ::

        K = y' (ρ' y'' - ρ'' y') / (ρ (ρ'² + y'²)²)

    For the torus this is ``cos v / (ε (1 + ε cos v))``.

    >>> round(gauss_curvature(SurfaceOfRevolution.torus(0.5), 0.0), 12)
    1.333333333333
    """
    _, G = s.metric(v)
    value = s.y_v(v) * (s.rho_v(v) * s.y_vv(v) - s.rho_vv(v) * s.y_v(v)) / (s.rho(v) * G**2)
    return float(value) if np.ndim(v) == 0 else value


def embed(s: SurfaceOfRevolution, u, v):
    """Cartesian point ``(ρ cos u, ρ sin u, y)``."""
    rho = s.rho(v)
    return rho * np.cos(u), rho * np.sin(u), s.y(v)
