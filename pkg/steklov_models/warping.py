"""
Curvature-bound profiles and the warping functions they generate.

A radial sectional curvature upper bound ``k(t)`` determines a spherically
symmetric model manifold through the initial value problem ::

    f''(t) + k(t) f(t) = 0,    f(0) = 0,    f'(0) = 1.

This module holds the :py:class:`CurvatureProfile` and
:py:class:`WarpingFunction` types, the adaptive solver
:py:func:`solve_warping`, the closed forms of the constant curvature space
forms and the Sturm-Picone comparison of two profiles.

Every consumer sees a :py:class:`WarpingFunction` through the same
sampled-plus-interpolant interface, whether it came from the solver or from a
closed form.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Literal

import numpy as np
from scipy.integrate import solve_ivp
from scipy.interpolate import CubicHermiteSpline
from scipy.optimize import brentq

logger = logging.getLogger("steklov_models.warping")

DEFAULT_TOL = 1e-10
DEFAULT_ATOL = 1e-12
ROOT_TOL = 1e-12
# Sampling density of the stored grid (nodes per unit length, and at least
# MIN_NODES over the integrated span).
NODES_PER_UNIT = 500
MIN_NODES = 400
# Upper limit on stored nodes; long spans are sampled more coarsely.
MAX_NODES = 200_000
# Sampling span used by closed forms that have no natural end.
DEFAULT_SPAN = 10.0


class SolverError(Exception):
    """
    Base class for numerical failures. The command line reports these with
    exit code 3.
    """
    pass


class GeometryError(Exception):
    """
    Base class for ill-posed geometry, e.g. a radius at or beyond the first
    zero of the warping function. The command line reports these with exit
    code 4.
    """
    pass


class NonFiniteCurvature(SolverError):
    """
    Raised when a curvature profile evaluates to ``inf`` or ``nan``.
    """
    pass


class NonFiniteWarping(SolverError):
    """
    Raised when warping samples overflow to ``inf`` or become ``nan``.
    """
    pass


class ToleranceUnachievable(SolverError):
    """
    Raised when the adaptive step size underflows before the requested
    tolerance is met.
    """
    pass


class ZeroBeforeR(GeometryError):
    """
    Raised when a warping function vanishes in ``(0, r]``, which makes a
    comparison at ``r`` meaningless.
    """
    pass


PieceKind = Literal["constant", "cosine_rational", "table", "callable"]


@dataclass(frozen=True)
class ProfilePiece:
    """
    One piece of a :py:class:`CurvatureProfile`, valid on ``[t_from, t_to]``.

    The ``kind`` decides how ``params`` are read:

        - ``constant``: ``{"value": k0}``
        - ``cosine_rational``: ``{"a", "b", "c", "d", "e"}`` giving
          ``a*cos(b + c*t) / (d + e*cos(b + c*t))``
        - ``table``: ``{"t": [...], "k": [...]}``, linear between nodes
        - ``callable``: an arbitrary vectorised ``func`` (cannot be written
          to a profile file)

    Args:
        t_from (float): Left end of the interval.
        t_to (float): Right end of the interval.
        kind (str): One of the kinds above.
        params (dict): Parameters for the kind.
        func (callable, optional): Only for ``kind="callable"``.
    """

    t_from: float
    t_to: float
    kind: PieceKind
    params: dict = field(default_factory=dict)
    func: Callable | None = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        if not self.t_to > self.t_from:
            raise ValueError(f"Empty piece [{self.t_from}, {self.t_to}].")
        if self.kind == "callable" and self.func is None:
            raise ValueError("A callable piece needs a func.")
        if self.kind == "table":
            ts = np.asarray(self.params["t"], dtype=float)
            if ts.size < 2 or np.any(np.diff(ts) <= 0):
                raise ValueError("Table nodes must be strictly increasing.")
            if ts[0] > self.t_from or ts[-1] < self.t_to:
                raise ValueError("Table nodes must cover the piece interval.")

    def __call__(self, t):
        t = np.asarray(t, dtype=float)
        match self.kind:
            case "constant":
                return np.full_like(t, float(self.params["value"]))
            case "cosine_rational":
                a, b, c, d, e = (float(self.params[name]) for name in "abcde")
                phase = np.cos(b + c * t)
                return a * phase / (d + e * phase)
            case "table":
                return np.interp(t, self.params["t"], self.params["k"])
            case "callable":
                return np.asarray(self.func(t), dtype=float) * np.ones_like(t)
        raise ValueError(f"Unknown piece kind: {self.kind!r}.")

    @property
    def knots(self) -> list[float]:
        """Interior points of the piece where the profile is not smooth."""
        if self.kind != "table":
            return []
        return [
            float(t) for t in self.params["t"] if self.t_from < t < self.t_to
        ]


@dataclass(frozen=True)
class CurvatureProfile:
    """
    A radial curvature upper bound ``k(t)`` on ``[0, t_max]``, made of
    contiguous pieces.

    Values of neighbouring pieces must agree at the shared breakpoint unless
    the profile is built with ``continuous=False`` (piecewise-constant step
    profiles). Evaluation is right-continuous at breakpoints.

    Examples:

        >>> k = CurvatureProfile.constant(1.0, t_max=4.0)
        >>> k(0.5)
        1.0
        >>> torus = CurvatureProfile.cosine_rational(4, math.pi, -2, 2, 1, t_max=1.5)
        >>> round(torus(0.0), 12)
        -4.0

    Args:
        pieces (tuple[ProfilePiece]): Pieces ordered along the t-axis.
        continuous (bool, optional): Enforce agreement at breakpoints.
            Defaults to True.
    """

    pieces: tuple[ProfilePiece, ...]
    continuous: bool = True

    def __post_init__(self):
        pieces = tuple(self.pieces)
        object.__setattr__(self, "pieces", pieces)
        if not pieces:
            raise ValueError("A curvature profile needs at least one piece.")
        if pieces[0].t_from != 0.0:
            raise ValueError("The first piece must start at t = 0.")
        for left, right in zip(pieces, pieces[1:]):
            if not math.isclose(left.t_to, right.t_from, rel_tol=0, abs_tol=1e-12):
                raise ValueError(
                    f"Pieces leave a gap or overlap at t = {left.t_to}."
                )
            if self.continuous:
                a, b = float(left(left.t_to)), float(right(right.t_from))
                if not math.isclose(a, b, rel_tol=1e-8, abs_tol=1e-10):
                    raise ValueError(
                        f"Profile jumps from {a} to {b} at t = {right.t_from}."
                    )

    @classmethod
    def constant(cls, value: float, t_max: float) -> CurvatureProfile:
        """A constant profile ``k ≡ value`` on ``[0, t_max]``."""
        return cls((ProfilePiece(0.0, t_max, "constant", {"value": float(value)}),))

    @classmethod
    def cosine_rational(
        cls, a: float, b: float, c: float, d: float, e: float, t_max: float
    ) -> CurvatureProfile:
        """
        The profile ``a*cos(b + c*t) / (d + e*cos(b + c*t))``, which covers
        the ring-torus curvature bounds exactly.
        """
        params = {"a": a, "b": b, "c": c, "d": d, "e": e}
        return cls((ProfilePiece(0.0, t_max, "cosine_rational", params),))

    @classmethod
    def table(cls, ts, ks) -> CurvatureProfile:
        """A piecewise-linear profile through the points ``(ts[i], ks[i])``."""
        ts = [float(t) for t in ts]
        params = {"t": ts, "k": [float(k) for k in ks]}
        return cls((ProfilePiece(ts[0], ts[-1], "table", params),))

    @classmethod
    def from_callable(cls, func: Callable, t_max: float) -> CurvatureProfile:
        """Wraps a smooth vectorised function of ``t``."""
        return cls((ProfilePiece(0.0, t_max, "callable", func=func),))

    @classmethod
    def steps(cls, edges, values) -> CurvatureProfile:
        """
        A piecewise-constant profile, ``values[i]`` on ``[edges[i], edges[i+1]]``.

        Step profiles jump at their breakpoints, so they are built with
        ``continuous=False``.
        """
        edges = [float(e) for e in edges]
        if len(edges) != len(values) + 1:
            raise ValueError("Need exactly one more edge than values.")
        pieces = tuple(
            ProfilePiece(a, b, "constant", {"value": float(v)})
            for a, b, v in zip(edges, edges[1:], values)
        )
        return cls(pieces, continuous=False)

    @property
    def t_max(self) -> float:
        return self.pieces[-1].t_to

    @property
    def breakpoints(self) -> list[float]:
        """Sorted interior knots where smoothness may fail."""
        knots = [p.t_from for p in self.pieces[1:]]
        for piece in self.pieces:
            knots.extend(piece.knots)
        return sorted(set(knots))

    @property
    def is_constant(self) -> bool:
        return len(self.pieces) == 1 and self.pieces[0].kind == "constant"

    @cached_property
    def _starts(self) -> np.ndarray:
        return np.array([p.t_from for p in self.pieces])

    def piece_at(self, t: float) -> ProfilePiece:
        """The piece that evaluates ``t`` (right-continuous at breakpoints)."""
        i = int(np.searchsorted(self._starts, t, side="right")) - 1
        return self.pieces[min(max(i, 0), len(self.pieces) - 1)]

    def __call__(self, t):
        t_arr = np.atleast_1d(np.asarray(t, dtype=float))
        idx = np.searchsorted(self._starts, t_arr, side="right") - 1
        idx = np.clip(idx, 0, len(self.pieces) - 1)
        out = np.empty_like(t_arr)
        for i, piece in enumerate(self.pieces):
            mask = idx == i
            if np.any(mask):
                out[mask] = piece(t_arr[mask])
        if np.ndim(t) == 0:
            return float(out[0])
        return out.reshape(np.shape(t))

    def dominated_by(self, other: CurvatureProfile, r: float, samples: int = 2001) -> bool:
        """
        Checks ``self(t) <= other(t)`` on a sample grid of ``[0, r]`` that
        includes every breakpoint of both profiles.
        """
        ts = np.linspace(0.0, r, samples)
        extra = [b for b in self.breakpoints + other.breakpoints if b < r]
        ts = np.union1d(ts, extra)
        return bool(np.all(self(ts) <= other(ts) + 1e-12))


@dataclass(frozen=True, eq=False)
class WarpingFunction:
    """
    A solved warping function: samples of ``f``, ``f'`` and ``f''`` on a
    grid starting at 0, with piecewise cubic Hermite interpolation in between.

    The interpolant of ``f`` uses ``(f, f')`` at the nodes and the one of
    ``f'`` uses ``(f', f'')``, so both reproduce the grid values exactly at
    the nodes, and :py:meth:`second_derivative` returns ``f'' = -k f``
    exactly at the nodes.

    Args:
        grid (array): Strictly increasing nodes, ``grid[0] == 0``.
        f_values (array): ``f`` at the nodes.
        fprime_values (array): ``f'`` at the nodes.
        fsecond_values (array): ``f''`` at the nodes.
        first_zero (float, optional): First zero ``l`` if it lies on the grid.
        interpolation_order (int, optional): Order of the interpolant. Defaults to 3.
        steps (int, optional): Number of accepted solver steps (0 for closed forms).
        method (str, optional): How the samples were produced.
    """

    grid: np.ndarray
    f_values: np.ndarray
    fprime_values: np.ndarray
    fsecond_values: np.ndarray
    first_zero: float | None = None
    interpolation_order: int = 3
    steps: int = 0
    method: str = "closed-form"

    def __post_init__(self):
        for name in ("grid", "f_values", "fprime_values", "fsecond_values"):
            values = np.array(getattr(self, name), dtype=float)
            values.setflags(write=False)
            object.__setattr__(self, name, values)
        grid, f = self.grid, self.f_values
        if grid.size < 2 or grid[0] != 0.0 or np.any(np.diff(grid) <= 0):
            raise ValueError("The grid must start at 0 and increase strictly.")
        if not (f.shape == self.fprime_values.shape == self.fsecond_values.shape == grid.shape):
            raise ValueError("Samples must match the grid.")
        for name in ("f_values", "fprime_values", "fsecond_values"):
            if not np.all(np.isfinite(getattr(self, name))):
                raise NonFiniteWarping(f"{name} has non-finite samples.")
        if f[0] != 0.0 or self.fprime_values[0] != 1.0:
            raise ValueError("A warping function needs f(0) = 0 and f'(0) = 1.")
        if self.interpolation_order < 3:
            raise ValueError("Interpolation order must be at least 3.")
        interior = f[1:-1] if self.first_zero is not None else f[1:]
        if np.any(interior <= 0):
            raise ValueError("f must be positive before its first zero.")

    @cached_property
    def _f(self) -> CubicHermiteSpline:
        return CubicHermiteSpline(self.grid, self.f_values, self.fprime_values)

    @cached_property
    def _fprime(self) -> CubicHermiteSpline:
        return CubicHermiteSpline(self.grid, self.fprime_values, self.fsecond_values)

    @cached_property
    def _fsecond(self):
        return self._fprime.derivative()

    @property
    def t_max(self) -> float:
        return float(self.grid[-1])

    def __call__(self, t):
        return _scalar(self._f(t), t)

    def derivative(self, t):
        return _scalar(self._fprime(t), t)

    def second_derivative(self, t):
        return _scalar(self._fsecond(t), t)

    def log_derivative(self, t):
        """``f'(t) / f(t)``, singular at ``t = 0``."""
        return _scalar(self._fprime(t) / self._f(t), t)

    def rows(self):
        """Yields ``(t, f, f')`` for each grid node."""
        yield from zip(self.grid.tolist(), self.f_values.tolist(), self.fprime_values.tolist())


def _scalar(values, t):
    return float(values) if np.ndim(t) == 0 else np.asarray(values)


def _check_tol(tol: float):
    if not 1e-14 < tol < 1e-2:
        raise ValueError(f"Tolerance {tol} is outside (1e-14, 1e-2).")


def _node_density(span: float) -> float:
    return min(max(NODES_PER_UNIT, MIN_NODES / span), MAX_NODES / span)


def _node_count(span: float) -> int:
    return min(max(MIN_NODES, math.ceil(span * NODES_PER_UNIT)), MAX_NODES) + 1


def solve_warping(
    k: CurvatureProfile,
    t_max: float,
    tol: float = DEFAULT_TOL,
    *,
    atol: float = DEFAULT_ATOL,
) -> WarpingFunction:
    """
    Solves ``f'' + k f = 0, f(0) = 0, f'(0) = 1`` on ``[0, t_max]`` with the
    adaptive DOP853 Runge-Kutta pair.

    Each breakpoint of ``k`` ends an integration segment so the order of the
    method is not lost at kinks or jumps. Integration stops at the first zero
    of ``f`` when it comes before ``t_max``; the zero is recorded as
    ``first_zero`` and the grid is truncated there.

    Examples:

        >>> w = solve_warping(CurvatureProfile.constant(1.0, 4.0), 4.0)
        >>> round(w.first_zero, 8)
        3.14159265

    Args:
        k (CurvatureProfile): Curvature profile defined on ``[0, t_max]``.
        t_max (float): End of the integration interval.
        tol (float, optional): Relative tolerance. Defaults to 1e-10.
        atol (float, optional): Absolute tolerance. Defaults to 1e-12.

    Returns:
        WarpingFunction: The sampled solution.

    Raises:
        NonFiniteCurvature: If ``k`` evaluates to a non-finite value.
        ToleranceUnachievable: If the step size underflows.
    """
    if not t_max > 0:
        raise ValueError(f"t_max must be positive, got {t_max}.")
    _check_tol(tol)
    if t_max > k.t_max * (1 + 1e-12):
        raise ValueError(f"Profile is only defined on [0, {k.t_max}].")

    def crossing(t, y):
        return y[0]

    crossing.terminal = True
    crossing.direction = -1

    ends = [b for b in k.breakpoints if b < t_max] + [t_max]
    segments = []
    t0, y0 = 0.0, np.array([0.0, 1.0])
    zero, steps = None, 0
    for end in ends:
        piece = k.piece_at(0.5 * (t0 + end))

        def rhs(t, y, piece=piece):
            kt = float(piece(t))
            if not math.isfinite(kt):
                raise NonFiniteCurvature(f"k({t}) = {kt}")
            return [y[1], -kt * y[0]]

        sol = solve_ivp(
            rhs,
            (t0, end),
            y0,
            method="DOP853",
            rtol=tol,
            atol=atol,
            dense_output=True,
            events=crossing,
        )
        if sol.status == -1:
            raise ToleranceUnachievable(sol.message)
        steps += sol.t.size - 1
        if sol.status == 1 and sol.t_events[0].size:
            zero = float(sol.t_events[0][0])
            segments.append((t0, zero, sol.sol, piece))
            break
        segments.append((t0, end, sol.sol, piece))
        t0, y0 = end, sol.y[:, -1]

    span = segments[-1][1]
    density = _node_density(span)
    grids, fs, fps, fpps = [], [], [], []
    for i, (a, b, dense, piece) in enumerate(segments):
        nodes = np.linspace(a, b, max(2, math.ceil((b - a) * density) + 1))
        values = dense(nodes)
        if i:
            nodes, values = nodes[1:], values[:, 1:]
        grids.append(nodes)
        fs.append(values[0])
        fps.append(values[1])
        fpps.append(-piece(nodes) * values[0])
    grid = np.concatenate(grids)
    f = np.concatenate(fs)
    fp = np.concatenate(fps)
    fpp = np.concatenate(fpps)
    # Imposed, not solved.
    f[0], fp[0] = 0.0, 1.0
    if zero is not None:
        f[-1] = fpp[-1] = 0.0
        logger.info(f"Warping function vanishes at t={zero:.12g} before t_max={t_max}.")
    logger.debug(f"Solved warping on [0, {span:.6g}] in {steps} steps.")
    return WarpingFunction(
        grid, f, fp, fpp, first_zero=zero, steps=steps, method="DOP853"
    )


def space_form_warping(k0: float, t_max: float | None = None) -> WarpingFunction:
    """
    Closed-form warping function of the space form with constant curvature
    ``k0``::

        sin(√k0 t)/√k0      k0 > 0, first zero π/√k0
        t                   k0 = 0
        sinh(√-k0 t)/√-k0   k0 < 0

    Nodes are evaluated from the formula and exposed through the same
    interface as solved warping functions.

    Examples:

        >>> w = space_form_warping(4.0)
        >>> round(w.first_zero, 12) == round(math.pi / 2, 12)
        True
        >>> round(space_form_warping(-1.0)(1.0), 10)
        1.1752011936

    Args:
        k0 (float): The constant curvature.
        t_max (float, optional): Sampling span. Defaults to the first zero
            for ``k0 > 0`` when it comes before 10, and to 10 otherwise. A
            span past the first zero is truncated there. At most
            ``MAX_NODES`` nodes are sampled.

    Returns:
        WarpingFunction: The sampled closed form.
    """
    if not math.isfinite(k0):
        raise ValueError(f"k0 must be finite, got {k0}.")
    zero = math.pi / math.sqrt(k0) if k0 > 0 else None
    if t_max is None:
        t_max = DEFAULT_SPAN if zero is None else min(zero, DEFAULT_SPAN)
    if not t_max > 0:
        raise ValueError(f"t_max must be positive, got {t_max}.")
    if zero is not None and t_max < zero:
        zero = None
    span = t_max if zero is None else zero
    t = np.linspace(0.0, span, _node_count(span))
    if k0 > 0:
        s = math.sqrt(k0)
        f, fp = np.sin(s * t) / s, np.cos(s * t)
    elif k0 < 0:
        s = math.sqrt(-k0)
        f, fp = np.sinh(s * t) / s, np.cosh(s * t)
    else:
        f, fp = t.copy(), np.ones_like(t)
    if zero is not None:
        f[-1] = 0.0
    return WarpingFunction(t, f, fp, -k0 * f, first_zero=zero)


def model_warping(
    k: CurvatureProfile, t_max: float, tol: float = DEFAULT_TOL
) -> WarpingFunction:
    """
    The warping function of the model built on ``k``: the closed form when
    ``k`` is a single constant piece, the numerical solution otherwise.
    """
    if k.is_constant:
        return space_form_warping(float(k.pieces[0].params["value"]), t_max)
    return solve_warping(k, t_max, tol)


def first_zero(w: WarpingFunction) -> float | None:
    """
    Locates the first zero of ``f`` in ``(0, t_max]``.

    A sign change is searched on the grid and refined by Brent's method on
    the interpolant to an absolute tolerance of 1e-12.

    Returns:
        float|None: The first zero, or None if ``f`` stays positive.
    """
    f = w.f_values
    hits = np.flatnonzero(f[1:] <= 0)
    if not hits.size:
        return None
    j = int(hits[0]) + 1
    if f[j] == 0.0:
        return float(w.grid[j])
    return float(brentq(w, w.grid[j - 1], w.grid[j], xtol=ROOT_TOL))


def radial_curvature(w: WarpingFunction, t):
    """
    Radial sectional curvature ``-f''(t)/f(t)`` of the model built on ``w``.

    The radial Ricci component is ``(n-1)`` times this value. For a solved
    warping function it recovers the profile ``k`` at the nodes.
    """
    f = np.asarray(w(t))
    if np.any(f <= 0):
        raise ValueError("Radial curvature needs f(t) > 0.")
    return _scalar(-np.asarray(w.second_derivative(t)) / f, t)


def reference_warping_value(k: CurvatureProfile, t: float, steps: int) -> float:
    """
    ``f(t)`` from classical fourth-order Runge-Kutta with ``steps`` equal
    steps. This is the non-adaptive reference mode used to check the order
    of convergence and to build oracles; it ignores breakpoints, so use it on
    smooth profiles.
    """
    h = t / steps
    y = np.array([0.0, 1.0])

    def rhs(s, y):
        return np.array([y[1], -k(s) * y[0]])

    s = 0.0
    for _ in range(steps):
        k1 = rhs(s, y)
        k2 = rhs(s + h / 2, y + h / 2 * k1)
        k3 = rhs(s + h / 2, y + h / 2 * k2)
        k4 = rhs(s + h, y + h * k3)
        y = y + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
        s += h
    return float(y[0])


def richardson_warping_value(k: CurvatureProfile, t: float, steps: int) -> float:
    """Richardson extrapolation of two RK4 runs with ``steps`` and ``2*steps``."""
    coarse = reference_warping_value(k, t, steps)
    fine = reference_warping_value(k, t, 2 * steps)
    return (16 * fine - coarse) / 15


@dataclass(frozen=True)
class ComparisonVerdict:
    """
    Outcome of :py:func:`sturm_picone_compare`.

    Args:
        f1_at_r (float): ``f1(r)``.
        f2_at_r (float): ``f2(r)``.
        ordering (str): ``"greater"``, ``"equal"`` or ``"less"`` for ``f1`` vs ``f2``.
        margin (float): ``f1(r) - f2(r)``.
        dominated (bool): Whether ``k1 <= k2`` held on the sampled ``[0, r]``.
    """

    f1_at_r: float
    f2_at_r: float
    ordering: Literal["greater", "equal", "less"]
    margin: float
    dominated: bool


def _warping_before(k: CurvatureProfile, r: float, tol: float, label: str) -> WarpingFunction:
    w = model_warping(k, r, tol)
    if w.first_zero is not None or w(r) <= 0:
        where = w.first_zero if w.first_zero is not None else r
        raise ZeroBeforeR(f"{label} vanishes at t={where:.12g}, not after r={r}.")
    return w


def sturm_picone_compare(
    k1: CurvatureProfile,
    k2: CurvatureProfile,
    r: float,
    tol: float = DEFAULT_TOL,
    *,
    equal_tol: float = 1e-10,
) -> ComparisonVerdict:
    """
    Compares the warping functions of two profiles at ``r``.

    When ``k1 <= k2`` on ``(0, r)`` the Sturm-Picone theorem forces
    ``f1(r) >= f2(r)``; a verdict that breaks this is logged as a warning.

    Examples:

        >>> flat = CurvatureProfile.constant(0.0, 1.0)
        >>> round_ = CurvatureProfile.constant(1.0, 1.0)
        >>> sturm_picone_compare(flat, round_, 1.0).ordering
        'greater'

    Raises:
        ZeroBeforeR: If either warping function vanishes in ``(0, r]``.
    """
    w1 = _warping_before(k1, r, tol, "f1")
    w2 = _warping_before(k2, r, tol, "f2")
    f1, f2 = w1(r), w2(r)
    margin = f1 - f2
    if abs(margin) <= equal_tol:
        ordering = "equal"
    else:
        ordering = "greater" if margin > 0 else "less"
    dominated = k1.dominated_by(k2, r)
    if dominated and margin < -equal_tol:
        logger.warning(f"k1 <= k2 on [0, {r}] but f1(r) - f2(r) = {margin:.3e}.")
    return ComparisonVerdict(f1, f2, ordering, margin, dominated)
