"""
First non-zero Steklov eigenvalue of geodesic balls in model manifolds.

On the ball of radius ``r`` about the pole of ``dt² + f(t)²|dξ|²`` the
Steklov problem separates. For the spherical harmonics of degree ``m`` the
radial factor solves ::

    ψ'' + (n-1) (f'/f) ψ' - m(m+n-2) ψ / f² = 0

and the boundary condition ``ψ'(r) = v ψ(r)`` makes the eigenvalue the
log-derivative of the solution that is regular at the pole. No shooting over
candidate eigenvalues is needed.
"""

import logging
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import quad, solve_ivp

from .warping import (
    DEFAULT_ATOL,
    DEFAULT_TOL,
    CurvatureProfile,
    GeometryError,
    SolverError,
    ToleranceUnachievable,
    WarpingFunction,
    ZeroBeforeR,
    model_warping,
    radial_curvature,
)

logger = logging.getLogger("steklov_models.steklov")

DEFAULT_MAX_MODE = 8
MARGIN_TOL = 1e-10


class OriginSingularity(SolverError):
    """
    Raised when the start offset of the radial integration underflows or
    does not precede the radius.
    """
    pass


class PsiVanished(SolverError):
    """
    Raised when the regular radial solution is not positive at the
    boundary, which only happens if the integration failed.
    """
    pass


class InvalidBall(GeometryError):
    """
    Raised for a ball whose radius is not strictly before the first zero of
    the warping function.
    """
    pass


class ComparisonViolation(SolverError):
    """
    Raised when a pointwise smaller curvature bound produces a larger
    two-dimensional eigenvalue, which contradicts Sturm-Picone and signals a
    numerical failure.
    """
    pass


def sphere_measure(n: int) -> float:
    """
    Total measure of the unit ``(n-1)``-sphere, ``2π^(n/2) / Γ(n/2)``.

    >>> round(sphere_measure(3), 12) == round(4 * math.pi, 12)
    True
    """
    return 2 * math.pi ** (n / 2) / math.gamma(n / 2)


@dataclass(frozen=True, eq=False)
class ModelBall:
    """
    The geodesic ball of radius ``r`` about the pole of the ``n``-dimensional
    model manifold with warping function ``warping``.

    Args:
        n (int): Dimension, at least 2.
        r (float): Radius, strictly before the first zero of ``f``.
        warping (WarpingFunction): Valid on ``[0, r]``.
    """

    n: int
    r: float
    warping: WarpingFunction

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 2:
            raise ValueError(f"Dimension must be an integer >= 2, got {self.n}.")
        if not self.r > 0:
            raise ValueError(f"Radius must be positive, got {self.r}.")
        w = self.warping
        if w.first_zero is not None and self.r >= w.first_zero:
            raise InvalidBall(
                f"r={self.r} is not before the first zero {w.first_zero:.12g}."
            )
        if self.r > w.t_max * (1 + 1e-12):
            raise InvalidBall(f"Warping is only known on [0, {w.t_max}].")
        if not w(self.r) > 0:
            raise InvalidBall(f"f(r) = {w(self.r)} is not positive.")

    @classmethod
    def from_profile(
        cls, k: CurvatureProfile, n: int, r: float, tol: float = DEFAULT_TOL
    ) -> "ModelBall":
        """
        Builds the ball of the model with curvature profile ``k``.

        Raises:
            ZeroBeforeR: If the warping function vanishes in ``(0, r]``.
        """
        w = model_warping(k, r, tol)
        if w.first_zero is not None or not w(r) > 0:
            where = w.first_zero if w.first_zero is not None else r
            raise ZeroBeforeR(f"f vanishes at t={where:.12g}, not after r={r}.")
        return cls(n, r, w)

    @property
    def f_at_r(self) -> float:
        return self.warping(self.r)


@dataclass(frozen=True)
class ModeSolution:
    """The mode-``m`` log-derivative and the boundary data it came from."""

    value: float
    psi_at_r: float
    psiprime_at_r: float
    steps: int
    residual: float


@dataclass(frozen=True)
class SteklovResult:
    """
    Args:
        v1 (float): First non-zero Steklov eigenvalue.
        mode (int): Angular index achieving it.
        psi_at_r (float): Regular radial solution at ``r``.
        psiprime_at_r (float): Its derivative at ``r``.
        diagnostics (dict): ``steps``, ``residual`` and ``method``.
    """

    v1: float
    mode: int
    psi_at_r: float
    psiprime_at_r: float
    diagnostics: dict = field(default_factory=dict)


@dataclass(frozen=True)
class _Radial:
    sol: object
    t0: float
    scale: float
    lam: int
    steps: int
    residual: float


def _series_coefficient(ball: ModelBall, m: int) -> float:
    # ψ = t^m (1 + c t² + ...) with k(0) read off the warping near the pole.
    kappa = radial_curvature(ball.warping, float(ball.warping.grid[1]))
    n = ball.n
    return kappa * m * (m + 2 * n - 3) / (6 * (2 * m + n))


def _radial_solution(ball: ModelBall, m: int, tol: float) -> _Radial:
    n, r, w = ball.n, ball.r, ball.warping
    lam = m * (m + n - 2)
    t0 = max(1e-6, 1e-4 * r)
    if t0 >= r:
        raise OriginSingularity(f"Start offset {t0} does not precede r={r}.")
    scale = t0**m
    if scale == 0.0:
        raise OriginSingularity(f"t0^m underflows for t0={t0}, m={m}.")

    def rhs(t, y):
        f = w(t)
        return [y[1], -(n - 1) * w.derivative(t) / f * y[1] + lam * y[0] / f**2]

    # ψ is normalised by t0^m so it starts at 1.
    sol = solve_ivp(
        rhs,
        (t0, r),
        [1.0, m / t0],
        method="DOP853",
        rtol=tol,
        atol=DEFAULT_ATOL,
        dense_output=True,
    )
    if sol.status == -1:
        raise ToleranceUnachievable(sol.message)
    residual = abs(_series_coefficient(ball, m)) * t0**2
    return _Radial(sol, t0, scale, lam, sol.t.size - 1, residual)


def steklov_mode_logderivative(
    ball: ModelBall, m: int, tol: float = DEFAULT_TOL
) -> ModeSolution:
    """
    Log-derivative ``ψ'(r)/ψ(r)`` of the regular radial solution of angular
    degree ``m``.

    The integration starts at ``t0 = max(1e-6, 1e-4 r)`` from the leading
    behaviour ``ψ ~ t^m``; the first neglected series term gives the
    ``residual`` estimate.

    Examples:

        >>> ball = ModelBall.from_profile(CurvatureProfile.constant(0.0, 2.0), 3, 2.0)
        >>> round(steklov_mode_logderivative(ball, 1).value, 8)
        0.5

    Raises:
        OriginSingularity: If the start offset underflows.
        PsiVanished: If ``ψ(r) <= 0``.
    """
    if m < 1:
        raise ValueError(f"Mode must be at least 1, got {m}.")
    radial = _radial_solution(ball, m, tol)
    psi, dpsi = radial.sol.y[:, -1]
    if not psi > 0:
        raise PsiVanished(f"psi(r) = {psi} for mode {m}.")
    value = float(dpsi / psi)
    logger.debug(f"Mode {m}: log-derivative {value:.12g} in {radial.steps} steps.")
    return ModeSolution(
        value,
        float(psi * radial.scale),
        float(dpsi * radial.scale),
        radial.steps,
        radial.residual,
    )


def steklov_v1(
    ball: ModelBall, max_mode: int = DEFAULT_MAX_MODE, tol: float = DEFAULT_TOL
) -> SteklovResult:
    """
    First non-zero Steklov eigenvalue of ``ball``.

    In two dimensions this is ``1/f(r)``; the mode-1 radial solution still
    supplies the boundary data and its distance to the closed form is kept
    as the residual. In higher dimensions it is the smallest mode
    log-derivative over ``m = 1..max_mode``.

    Examples:

        >>> ball = ModelBall.from_profile(CurvatureProfile.constant(0.0, 1.0), 2, 0.5)
        >>> steklov_v1(ball).v1
        2.0
    """
    if max_mode < 1:
        raise ValueError(f"max_mode must be at least 1, got {max_mode}.")
    if ball.n == 2:
        mode = steklov_mode_logderivative(ball, 1, tol)
        v1 = 1.0 / ball.f_at_r
        return SteklovResult(
            v1,
            1,
            mode.psi_at_r,
            mode.psiprime_at_r,
            {"steps": mode.steps, "residual": abs(mode.value - v1), "method": "closed-form"},
        )
    modes = [steklov_mode_logderivative(ball, m, tol) for m in range(1, max_mode + 1)]
    best = min(range(max_mode), key=lambda i: modes[i].value)
    if best != 0:
        logger.warning(f"Smallest log-derivative at mode {best + 1}, not mode 1.")
    chosen = modes[best]
    return SteklovResult(
        chosen.value,
        best + 1,
        chosen.psi_at_r,
        chosen.psiprime_at_r,
        {
            "steps": sum(m.steps for m in modes),
            "residual": chosen.residual,
            "method": "DOP853",
        },
    )


def steklov_rayleigh_quotient(
    ball: ModelBall, m: int = 1, tol: float = DEFAULT_TOL
) -> float:
    """
    Rayleigh quotient of the regular mode-``m`` solution ::

        ∫ (ψ'² + m(m+n-2) ψ²/f²) f^(n-1) dt / (ψ(r)² f(r)^(n-1))

    which equals the mode log-derivative by integration by parts.
    """
    n, r, w = ball.n, ball.r, ball.warping
    radial = _radial_solution(ball, m, tol)
    lam = radial.lam

    def density(t):
        psi, dpsi = radial.sol.sol(t)
        f = w(t)
        return (dpsi**2 + lam * psi**2 / f**2) * f ** (n - 1)

    energy, _ = quad(density, radial.t0, r, epsabs=0.0, epsrel=1e-10, limit=200)
    # Leading-order contribution of [0, t0], with ψ = (t/t0)^m and f = t.
    energy += (m**2 + lam) * radial.t0 ** (n - 2) / (2 * m + n - 2)
    psi_r = radial.sol.y[0, -1]
    return float(energy / (psi_r**2 * ball.f_at_r ** (n - 1)))


def boundary_lambda1c(ball: ModelBall) -> float:
    """
    First non-zero closed eigenvalue of the boundary sphere, a round sphere
    of radius ``f(r)``: ``(n-1)/f(r)²``.
    """
    return (ball.n - 1) / ball.f_at_r**2


@dataclass(frozen=True)
class BallMeasure:
    volume: float
    boundary_area: float


def ball_volume_and_area(ball: ModelBall) -> BallMeasure:
    """
    Volume ``ω ∫₀ʳ f^(n-1)`` and boundary area ``ω f(r)^(n-1)`` with ``ω``
    the measure of the unit ``(n-1)``-sphere.
    """
    n, w = ball.n, ball.warping
    omega = sphere_measure(n)
    integral, _ = quad(
        lambda t: w(t) ** (n - 1), 0.0, ball.r, epsabs=0.0, epsrel=1e-10, limit=200
    )
    return BallMeasure(omega * integral, omega * ball.f_at_r ** (n - 1))


@dataclass(frozen=True)
class ComparisonReport:
    """
    Model-side comparison of a variable curvature bound with a constant one.

    Args:
        v1_model_variable (float): Eigenvalue bound from the variable profile.
        v1_model_constant (float): Eigenvalue bound from the constant profile.
        sharper (bool): Whether the variable bound is strictly smaller.
        margin (float): ``v1_model_constant - v1_model_variable``.
        dominated (bool): Whether the variable profile stayed below the constant.
        f_variable (float): Variable-profile ``f(r)``.
        f_constant (float): Constant-profile ``f(r)``.
        assumption (str|None): Boundary hypothesis that is restated, not checked.
    """

    v1_model_variable: float
    v1_model_constant: float
    sharper: bool
    margin: float
    dominated: bool
    f_variable: float
    f_constant: float
    assumption: str | None = None


def comparison_report(
    k_upper: CurvatureProfile,
    n: int,
    r: float,
    reference_k0: float,
    tol: float = DEFAULT_TOL,
    max_mode: int = DEFAULT_MAX_MODE,
) -> ComparisonReport:
    """
    Compares the eigenvalue bound of the model built on ``k_upper`` with
    the one of the space form of curvature ``reference_k0``.

    For ``n >= 3`` the comparison also needs the closed eigenvalue of the
    boundary to be at least the model's; with model data only, the report
    restates that hypothesis in ``assumption``.

    Raises:
        ZeroBeforeR: If either warping function vanishes in ``(0, r]``.
        ComparisonViolation: In two dimensions, if a dominated profile
            yields a larger eigenvalue.
    """
    ball_variable = ModelBall.from_profile(k_upper, n, r, tol)
    ball_constant = ModelBall.from_profile(
        CurvatureProfile.constant(reference_k0, r), n, r, tol
    )
    v_variable = steklov_v1(ball_variable, max_mode, tol).v1
    v_constant = steklov_v1(ball_constant, max_mode, tol).v1
    margin = v_constant - v_variable
    dominated = k_upper.dominated_by(CurvatureProfile.constant(reference_k0, r), r)
    if dominated and margin < -1e-9:
        message = f"k_upper <= {reference_k0} on [0, {r}] but margin is {margin:.3e}."
        if n == 2:
            raise ComparisonViolation(message)
        logger.warning(message)
    assumption = None
    if n >= 3:
        assumption = (
            "The first non-zero closed eigenvalue of the boundary is assumed to be "
            f"at least {boundary_lambda1c(ball_variable):.12g}; it is not checked."
        )
    return ComparisonReport(
        v_variable,
        v_constant,
        margin > MARGIN_TOL,
        margin,
        dominated,
        ball_variable.f_at_r,
        ball_constant.f_at_r,
        assumption,
    )


def steklov_record(result: SteklovResult, ball: ModelBall, margin=None) -> dict:
    """
    The emitted record, with field names
    ``n, r, v1, mode, f_at_r, lambda1c_boundary, margin``.
    """
    return {
        "n": ball.n,
        "r": ball.r,
        "v1": result.v1,
        "mode": result.mode,
        "f_at_r": ball.f_at_r,
        "lambda1c_boundary": boundary_lambda1c(ball),
        "margin": margin,
    }
