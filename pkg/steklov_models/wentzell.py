"""
Bounds for the first non-zero Wentzell eigenvalue ``τ1`` of the weighted
Laplacian on a compact weighted manifold of dimension ``n + 1`` with
boundary condition ``-β Δ̄u + ∂u/∂η = τ u``.

Under non-negative Bakry-Émery Ricci curvature with dimension parameter
``K`` and second fundamental form bounded below by ``c > 0``::

    τ1 ≤ β λ1c + √λ1c (√λ1c + √(λ1c - (K-1)c²)) / ((K-1)c)
    τ1 > c/2 · [1 + (K-1)cβ + √((K-1)c²β² + 2(K-1)cβ)]

with ``λ1c`` the first non-zero closed eigenvalue of the boundary. Equality
in the upper bound holds for the Euclidean ball of radius ``1/c``.
"""

import csv
import logging
import math
from dataclasses import dataclass

logger = logging.getLogger("steklov_models.wentzell")

# Radicands down to -CLAMP * λ1c are rounding noise and are clamped to 0.
CLAMP = 1e-12

SETTING_FIELDS = ("n", "lambda1c", "c", "K", "beta")
BOUND_FIELDS = ("lower", "upper", "gap", "valid")


class InvalidRadicand(ValueError):
    """
    Raised when ``λ1c < (K-1)c²``, so the upper bound has a negative
    radicand.
    """
    pass


@dataclass(frozen=True)
class WentzellSetting:
    """
    Args:
        n (int): Boundary dimension; the manifold has dimension ``n + 1``.
        lambda1c (float): First non-zero closed eigenvalue of the boundary.
        c (float): Lower bound of the second fundamental form.
        K (float): Bakry-Émery dimension parameter, at least ``n + 1``.
        beta (float): Boundary diffusion coefficient, 0 for Steklov.
    """

    n: int
    lambda1c: float
    c: float
    K: float
    beta: float

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 1:
            raise ValueError(f"n must be a positive integer, got {self.n}.")
        for name in ("lambda1c", "c", "K", "beta"):
            if not math.isfinite(getattr(self, name)):
                raise ValueError(f"{name} must be finite.")
        if not self.c > 0:
            raise ValueError(f"c must be positive, got {self.c}.")
        if self.beta < 0:
            raise ValueError(f"beta cannot be negative, got {self.beta}.")
        if self.K < self.n + 1:
            raise ValueError(f"K must be at least n + 1 = {self.n + 1}, got {self.K}.")
        if not self.lambda1c > 0:
            raise ValueError(f"lambda1c must be positive, got {self.lambda1c}.")


@dataclass(frozen=True)
class Bound:
    """A bound value and whether the inequality it comes from is strict."""

    value: float
    strict: bool = False
    note: str = ""


def lambda1c_floor(c: float, K: float) -> Bound:
    """
    The lower bound ``(K-1)c²`` for the closed eigenvalue of the boundary.

    >>> lambda1c_floor(0.5, 4).value
    0.75
    """
    if not c > 0:
        raise ValueError(f"c must be positive, got {c}.")
    if not K > 1:
        raise ValueError(f"K must exceed 1, got {K}.")
    return Bound(
        (K - 1) * c**2,
        note="equality iff Euclidean ball of radius 1/c, constant weight, K = n+1",
    )


def upper_bound(s: WentzellSetting) -> Bound:
    """
    Upper bound for ``τ1``.

    Examples:

        >>> round(upper_bound(WentzellSetting(2, 3.0, 1.0, 3.0, 0.0)).value, 7)
        2.3660254

    Raises:
        InvalidRadicand: If ``λ1c < (K-1)c²`` beyond rounding.
    """
    floor = (s.K - 1) * s.c**2
    radicand = s.lambda1c - floor
    if radicand < 0:
        if radicand < -CLAMP * s.lambda1c:
            raise InvalidRadicand(
                f"lambda1c={s.lambda1c} is below (K-1)c^2={floor}."
            )
        radicand = 0.0
    root = math.sqrt(s.lambda1c)
    value = s.beta * s.lambda1c + root * (root + math.sqrt(radicand)) / ((s.K - 1) * s.c)
    return Bound(value)


def lower_bound(s: WentzellSetting) -> Bound:
    """
    Strict lower bound for ``τ1``; reduces to ``c/2`` for ``β = 0``.
    ``λ1c`` is not used.
    """
    a = (s.K - 1) * s.c * s.beta
    value = 0.5 * s.c * (1 + a + math.sqrt(a * s.c * s.beta + 2 * a))
    return Bound(value, strict=True)


@dataclass(frozen=True)
class BoundsReport:
    lower: float
    upper: float
    gap: float
    valid: bool
    degenerate: bool = False


def consistency_report(s: WentzellSetting) -> BoundsReport:
    """
    Both bounds and their gap. ``degenerate`` flags the equality setting
    ``λ1c = (K-1)c², β = 0`` where the sandwich is ``c/2 < τ1 ≤ c``.

    Raises:
        InvalidRadicand: Propagated from :py:func:`upper_bound`.
    """
    upper = upper_bound(s).value
    lower = lower_bound(s).value
    gap = upper - lower
    floor = (s.K - 1) * s.c**2
    degenerate = s.beta == 0 and math.isclose(s.lambda1c, floor, rel_tol=CLAMP)
    return BoundsReport(lower, upper, gap, gap > 0, degenerate)


def euclidean_ball_setting(n: int, c: float, beta: float) -> WentzellSetting:
    """
    The Euclidean ball of radius ``1/c`` in dimension ``n + 1``: its
    boundary sphere has ``λ1c = n c²`` and the weight is constant, ``K = n + 1``.
    """
    return WentzellSetting(n, n * c**2, c, n + 1, beta)


def euclidean_ball_wentzell(n: int, c: float, beta: float) -> float:
    """
    The Wentzell eigenvalue ``β n c² + c`` of the Euclidean ball of radius
    ``1/c``, carried by the coordinate functions.
    """
    return beta * n * c**2 + c


def bounds_row(row: dict) -> dict:
    """
    Evaluates one batch row with fields ``n, lambda1c, c, K, beta`` and
    returns it extended with ``lower, upper, gap, valid``. Invalid settings
    are flagged with ``valid = False`` and empty bounds.
    """
    out = {name: row.get(name) for name in SETTING_FIELDS}
    try:
        setting = WentzellSetting(
            int(row["n"]),
            float(row["lambda1c"]),
            float(row["c"]),
            float(row["K"]),
            float(row["beta"]),
        )
        report = consistency_report(setting)
    except (KeyError, TypeError, ValueError) as e:
        logger.warning(f"Invalid setting {out}: {e}")
        out.update(lower="", upper="", gap="", valid=False)
        return out
    out.update(lower=report.lower, upper=report.upper, gap=report.gap, valid=report.valid)
    return out


def read_settings_csv(path) -> list[dict]:
    """
    Reads a batch CSV whose header contains ``n, lambda1c, c, K, beta``.

    Raises:
        ValueError: If a header field is missing.
    """
    with open(path, newline="", encoding="utf-8") as fh:
        reader = csv.DictReader(fh)
        missing = [name for name in SETTING_FIELDS if name not in (reader.fieldnames or [])]
        if missing:
            raise ValueError(f"Batch file {path} lacks columns {missing}.")
        return list(reader)
