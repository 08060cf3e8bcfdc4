"""
Property check of the Sobolev trace inequality on model balls ::

    ∫_∂B |u - ū|² ≤ (1/v1) ∫_B |∇u|²

where ``ū`` is the boundary mean. Test functions are separable,
``u(t, ξ) = Σ ρ_h(t) Y_h(ξ)``, with ``ρ_h`` a polynomial of degree at most 4
and ``Y_h`` an orthonormal spherical harmonic of degree at most 2. The angular
integrals then reduce by orthonormality and only the radial moments
``∫ t^p f^(n-1)`` and ``∫ t^p f^(n-3)`` need quadrature.
"""

import logging
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .steklov import DEFAULT_MAX_MODE, ModelBall, steklov_v1
from .warping import DEFAULT_TOL

logger = logging.getLogger("steklov_models.trace")

MAX_POWER = 4
MAX_DEGREE = 2
MIN_ENERGY = 1e-14
RATIO_SLACK = 1e-6
# Harmonic degree of each slot in a random trial function.
TRIAL_DEGREES = (0, 1, 1, 2, 2)


class DegenerateTestFunction(Exception):
    """
    Raised when a test function has (numerically) zero Dirichlet energy.
    The trace check discards such trials.
    """
    pass


@dataclass(frozen=True)
class TrialFunction:
    """
    ``u = Σ_h (Σ_j coefficients[h, j] t^j) Y_h`` where ``Y_h`` has degree
    ``degrees[h]``. Coefficients below the degree must vanish so ``u`` is
    smooth at the pole.
    """

    degrees: tuple[int, ...]
    coefficients: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.coefficients, dtype=float).reshape(len(self.degrees), MAX_POWER + 1)
        for ell, row in zip(self.degrees, a):
            if not 0 <= ell <= MAX_DEGREE:
                raise ValueError(f"Harmonic degree {ell} is outside [0, {MAX_DEGREE}].")
            if np.any(row[:ell] != 0):
                raise ValueError(f"Degree {ell} harmonic needs a zero t^j part for j < {ell}.")
        object.__setattr__(self, "coefficients", a)

    @classmethod
    def linear_coordinate(cls) -> "TrialFunction":
        """A coordinate function ``t·Y`` with ``Y`` of degree 1."""
        return cls((1,), np.array([[0.0, 1.0, 0.0, 0.0, 0.0]]))

    @classmethod
    def constant(cls, value: float = 1.0) -> "TrialFunction":
        return cls((0,), np.array([[value, 0.0, 0.0, 0.0, 0.0]]))

    @classmethod
    def random(cls, rng: np.random.Generator) -> "TrialFunction":
        """Coefficients uniform on ``[-1, 1]``."""
        a = rng.uniform(-1.0, 1.0, size=(len(TRIAL_DEGREES), MAX_POWER + 1))
        for h, ell in enumerate(TRIAL_DEGREES):
            a[h, :ell] = 0.0
        return cls(TRIAL_DEGREES, a)


@dataclass(frozen=True, eq=False)
class TraceMoments:
    """
    Energy Gram matrices of the monomials ``t^j`` on a ball.

    ``gradient[j, i] = j i ∫ t^(j+i-2) f^(n-1)`` and
    ``angular[j, i] = ∫ t^(j+i) f^(n-3)`` (zero where ``j + i < 2``).
    """

    n: int
    r: float
    f_at_r: float
    gradient: np.ndarray
    angular: np.ndarray

    @classmethod
    def of(cls, ball: ModelBall) -> "TraceMoments":
        n, r, w = ball.n, ball.r, ball.warping

        def moment(p, power):
            value, _ = quad(
                lambda t: t**p * w(t) ** power, 0.0, r, epsabs=0.0, epsrel=1e-11, limit=200
            )
            return value

        m1 = {p: moment(p, n - 1) for p in range(2 * MAX_POWER - 1)}
        m2 = {p: moment(p, n - 3) for p in range(2, 2 * MAX_POWER + 1)}
        size = MAX_POWER + 1
        gradient = np.zeros((size, size))
        angular = np.zeros((size, size))
        for j in range(size):
            for i in range(size):
                if j and i:
                    gradient[j, i] = j * i * m1[j + i - 2]
                if j + i >= 2:
                    angular[j, i] = m2[j + i]
        return cls(n, r, ball.f_at_r, gradient, angular)

    def energy(self, trial: TrialFunction) -> float:
        total = 0.0
        for ell, a in zip(trial.degrees, trial.coefficients):
            total += a @ self.gradient @ a
            if ell:
                total += ell * (ell + self.n - 2) * (a @ self.angular @ a)
        return float(total)

    def boundary_variance(self, trial: TrialFunction) -> float:
        powers = self.r ** np.arange(MAX_POWER + 1)
        total = sum(
            float(a @ powers) ** 2 for ell, a in zip(trial.degrees, trial.coefficients) if ell
        )
        return self.f_at_r ** (self.n - 1) * total


def trace_ratio(
    ball: ModelBall,
    trial: TrialFunction,
    v1: float | None = None,
    moments: TraceMoments | None = None,
) -> float:
    """
    ``v1 · ∫_∂B |u - ū|² / ∫_B |∇u|²`` for one test function. The trace
    inequality says this never exceeds 1.

    Raises:
        DegenerateTestFunction: If the Dirichlet energy is below 1e-14.
    """
    moments = moments or TraceMoments.of(ball)
    if v1 is None:
        v1 = steklov_v1(ball).v1
    energy = moments.energy(trial)
    if energy < MIN_ENERGY:
        raise DegenerateTestFunction(f"Dirichlet energy {energy:.3e} is too small.")
    return v1 * moments.boundary_variance(trial) / energy


@dataclass(frozen=True)
class TraceReport:
    max_ratio: float
    passed: bool
    trials: int
    discarded: int


def trace_inequality_check(
    ball: ModelBall,
    num_trials: int,
    seed: int = 0,
    *,
    v1: float | None = None,
    max_mode: int = DEFAULT_MAX_MODE,
    tol: float = DEFAULT_TOL,
) -> TraceReport:
    """
    Samples ``num_trials`` random test functions and reports the largest
    trace ratio. The check passes iff that ratio is at most ``1 + 1e-6``.

    Examples:

        >>> from steklov_models.warping import CurvatureProfile
        >>> ball = ModelBall.from_profile(CurvatureProfile.constant(1.0, 1.0), 2, 1.0)
        >>> trace_inequality_check(ball, 200, seed=42).passed
        True
    """
    if num_trials < 1:
        raise ValueError("num_trials must be at least 1.")
    if v1 is None:
        v1 = steklov_v1(ball, max_mode, tol).v1
    moments = TraceMoments.of(ball)
    rng = np.random.default_rng(seed)
    ratios, discarded = [], 0
    for _ in range(num_trials):
        trial = TrialFunction.random(rng)
        try:
            ratios.append(trace_ratio(ball, trial, v1, moments))
        except DegenerateTestFunction as e:
            discarded += 1
            logger.warning(f"Discarded trial: {e}")
    max_ratio = max(ratios, default=0.0)
    logger.info(f"Trace check: max ratio {max_ratio:.12g} over {len(ratios)} trials.")
    return TraceReport(max_ratio, max_ratio <= 1 + RATIO_SLACK, num_trials, discarded)
