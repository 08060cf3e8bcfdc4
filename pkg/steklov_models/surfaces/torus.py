"""
The ring torus with ``ε = 1/2`` and its radial curvature upper bounds.

Three kinds of base point are distinguished:

    1. ``p`` on the outer equator: the best bound is the global maximum
       ``4/3`` of the Gaussian curvature.
    2. ``p`` on the inner equator: ``k(t) = 4cos(π-2t) / (2+cos(π-2t))``.
    3. ``p`` at ``v = α`` with ``0 < α < π``: the Case-2 formula with ``α``
       in place of ``π`` up to ``t = α/2``, then ``4/3``.

Balls are considered for ``0 < r < π/2`` only, which keeps them inside the
injectivity radius.
"""

import logging
import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from ..steklov import comparison_report
from ..warping import DEFAULT_TOL, CurvatureProfile, ProfilePiece
from .geodesics import BasePoint
from .revolution import SurfaceOfRevolution

logger = logging.getLogger("steklov_models.surfaces")

EPS = 0.5
T_MAX = math.pi / 2
MAX_CURVATURE = 4 / 3
SIGN_TOL = 1e-12


def _check_case(case: int, alpha: float | None):
    if case not in (1, 2, 3):
        raise ValueError(f"Unknown torus case {case}.")
    if case == 3 and not (alpha is not None and 0 < alpha < math.pi):
        raise ValueError(f"Case 3 needs 0 < alpha < pi, got {alpha}.")


def case_profile(case: int, alpha: float | None = None, eps: float = EPS) -> CurvatureProfile:
    """
    Radial curvature upper bound on ``[0, π/2]`` for a torus case.

    >>> round(case_profile(2)(0.0), 12)
    -4.0
    >>> case_profile(3, alpha=math.pi / 2)(0.9) == 4 / 3
    True

    Raises:
        ValueError: For ``eps != 1/2``, whose closed forms are not carried.
    """
    if eps != EPS:
        raise ValueError(f"Case profiles exist for eps = 1/2 only, got {eps}.")
    _check_case(case, alpha)
    match case:
        case 1:
            return CurvatureProfile.constant(MAX_CURVATURE, T_MAX)
        case 2:
            return CurvatureProfile.cosine_rational(4.0, math.pi, -2.0, 2.0, 1.0, T_MAX)
        case _:
            knee = alpha / 2
            params = {"a": 4.0, "b": alpha, "c": -2.0, "d": 2.0, "e": 1.0}
            return CurvatureProfile(
                (
                    ProfilePiece(0.0, knee, "cosine_rational", params),
                    ProfilePiece(knee, T_MAX, "constant", {"value": MAX_CURVATURE}),
                )
            )


def base_point(case: int, alpha: float | None = None) -> BasePoint:
    """The base point of a torus case on the ``ε = 1/2`` torus."""
    _check_case(case, alpha)
    surface = SurfaceOfRevolution.torus(EPS)
    match case:
        case 1:
            return BasePoint.outer_equator(surface)
        case 2:
            return BasePoint.inner_equator(surface)
        case _:
            return BasePoint.generic(surface, alpha)


@dataclass(frozen=True)
class EscobarReference:
    """
    The best constant curvature bound on ``B(p, r)``.

    Args:
        value (float): The constant ``k0``.
        classification (str): ``spherical``, ``flat`` or ``hyperbolic``
            by the sign of ``k0``.
    """

    value: float
    classification: Literal["spherical", "flat", "hyperbolic"]


def escobar_reference_constant(
    case: int, r: float, alpha: float | None = None
) -> EscobarReference:
    """
    Supremum of the case profile over ``[0, r)``. The profiles increase in
    ``t``, so for Case 2 this is ``4cos(2r) / (-2+cos(2r))``.

    >>> escobar_reference_constant(2, math.pi / 4).classification
    'flat'
    """
    if not 0 < r < T_MAX:
        raise ValueError(f"r must lie in (0, pi/2), got {r}.")
    profile = case_profile(case, alpha)
    value = float(np.max(profile(np.linspace(0.0, r, 513))))
    if abs(value) <= SIGN_TOL:
        value, kind = 0.0, "flat"
    else:
        kind = "spherical" if value > 0 else "hyperbolic"
    return EscobarReference(value, kind)


def torus_comparison(
    case: int,
    r: float,
    alpha: float | None = None,
    tol: float = DEFAULT_TOL,
) -> dict:
    """
    Two-dimensional comparison of the variable-curvature eigenvalue bound
    with the constant-curvature one on the torus ball ``B(p, r)``.

    Returns:
        dict: ``r, v1_variable_bound, v1_escobar_bound, margin`` plus the
        reference constant and its classification.
    """
    reference = escobar_reference_constant(case, r, alpha)
    report = comparison_report(case_profile(case, alpha), 2, r, reference.value, tol)
    logger.info(f"Torus case {case}, r={r}: margin {report.margin:.6e}.")
    return {
        "r": r,
        "v1_variable_bound": report.v1_model_variable,
        "v1_escobar_bound": report.v1_model_constant,
        "margin": report.margin,
        "k0": reference.value,
        "classification": reference.classification,
    }
