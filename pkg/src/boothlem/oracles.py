"""Brute-force numerical checks of the closed forms.

Nothing here calls :func:`boothlem.classes.bs_radius`; the oracles are built
only from the distance profile ``H``, the membership test, the class discs
and the extremal log-derivatives, so agreement with the closed forms is a
genuine cross-check.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional, Tuple

import numpy as np

from . import kernels
from .classes import (
    Convex,
    FunctionClass,
    Starlike,
    StarlikeOrder,
    bs_radius,
    class_disc,
    log_derivative,
)
from .discs import (
    admissible_interval,
    check_center,
    circumscribed_radius,
    critical_points,
    h_profile,
    inscribed_branch,
    inscribed_radius,
)
from .errors import DomainError
from .region import AlphaLike, as_param, boundary_point, contains

GRID_POINTS = 100_001
SCAN_POINTS = 2048
CIRCLE_POINTS = 4096
SWEEP_POINTS = 8192

GEOMETRY_TOL = 1e-10
LEMMA_TOL = 1e-8
RADIUS_TOL = 1e-6
WITNESS_MARGIN_TOL = 1e-7
WITNESS_X_TOL = 1e-4

R_LEFT = 1e-9
R_RIGHT = 1.0 - 1e-9

_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


class SingleCrossingError(RuntimeError):
    """The containment margin did not change sign exactly once on (0, 1)."""


@dataclass(frozen=True)
class ContainmentReport:
    closed_form: float
    oracle: float
    abs_gap: float
    tolerance: float
    touch_parameter: Optional[float] = None

    @property
    def verdict(self) -> str:
        return "pass" if self.abs_gap <= self.tolerance else "fail"


@dataclass(frozen=True)
class SharpnessWitness:
    """Where the extremal image touches the boundary at radius ``r``.

    ``x0`` and ``t_star`` come from the closed-form touch point; ``margin`` is
    the membership margin there. ``sweep_x`` and ``sweep_margin`` locate the
    largest margin found by a dense angular sweep plus refinement.
    """

    r: float
    x0: float
    t_star: float
    margin: float
    sweep_x: float
    sweep_margin: float
    witnessed: bool


@dataclass(frozen=True)
class SubordinationResult:
    contained: bool
    worst_margin: float
    worst_angle: float

    def __bool__(self):
        return self.contained


def golden_section(f: Callable[[float], float], lo: float, hi: float, tol: float = 1e-12,
                   max_iter: int = 200) -> Tuple[float, float]:
    """Minimise a unimodal ``f`` on ``[lo, hi]``; returns ``(x, f(x))``."""
    x1 = hi - _INV_PHI * (hi - lo)
    x2 = lo + _INV_PHI * (hi - lo)
    f1, f2 = f(x1), f(x2)
    for _ in range(max_iter):
        if hi - lo <= tol:
            break
        if f1 <= f2:
            hi, x2, f2 = x2, x1, f1
            x1 = hi - _INV_PHI * (hi - lo)
            f1 = f(x1)
        else:
            lo, x1, f1 = x1, x2, f2
            x2 = lo + _INV_PHI * (hi - lo)
            f2 = f(x2)
    best = min(((x1, f1), (x2, f2), (lo, f(lo)), (hi, f(hi))), key=lambda p: p[1])
    return best


def _h_extremum(alpha: float, a: float, n: int, maximise: bool) -> Tuple[float, float]:
    if n < 3:
        raise DomainError("samples", f"grid needs at least 3 points (got {n!r})")
    i_min, h_min, i_max, h_max = kernels.h_extremes(alpha, a, n)
    i, h0 = (i_max, h_max) if maximise else (i_min, h_min)
    step = 2.0 / (n - 1)
    lo = max(-1.0, -1.0 + (i - 1) * step)
    hi = min(1.0, -1.0 + (i + 1) * step)
    sign = -1.0 if maximise else 1.0
    x, fx = golden_section(lambda x: sign * h_profile(alpha, a, x), lo, hi)
    h = sign * fx
    if (maximise and h0 > h) or (not maximise and h0 < h):
        x, h = -1.0 + i * step, h0
    return math.sqrt(h), x


def oracle_inscribed(param: AlphaLike, a: float, n: int = GRID_POINTS) -> float:
    """Minimum of ``sqrt(H)`` over ``[-1, 1]`` by grid scan and golden section."""
    alpha = as_param(param).alpha
    return _h_extremum(alpha, check_center(alpha, a), n, maximise=False)[0]


def oracle_circumscribed(param: AlphaLike, a: float, n: int = GRID_POINTS) -> float:
    alpha = as_param(param).alpha
    return _h_extremum(alpha, check_center(alpha, a), n, maximise=True)[0]


def containment_margin(param: AlphaLike, cls: FunctionClass, r: float) -> float:
    """``r_a - c`` for the class disc ``D(a; c)`` at radius ``r``.

    Outside the admissible center interval the on-axis distance bound
    ``1/(1 - alpha) - |a - 1|`` replaces ``r_a``; it is the continuous
    extension of the outer branches and is never positive there because the
    class disc always contains ``w = 1``.
    """
    alpha = as_param(param).alpha
    disc = class_disc(cls, r)
    lo, hi = admissible_interval(alpha)
    if lo < disc.center < hi:
        return inscribed_radius(alpha, disc.center) - disc.radius
    return 1.0 / (1.0 - alpha) - abs(disc.center - 1.0) - disc.radius


def oracle_bs_radius(cls: FunctionClass, param: AlphaLike, scan: int = SCAN_POINTS,
                     tol: float = 1e-14) -> float:
    """Largest ``r`` whose class disc fits inside ``G(D)``, by scan and bisection.

    Raises :class:`SingleCrossingError` unless the margin changes sign exactly
    once on the scan grid (or never, in which case the radius is 1).
    """
    alpha = as_param(param).alpha
    A, B = cls.mobius
    rs = np.linspace(R_LEFT, R_RIGHT, scan)
    positive = kernels.lemma_margins(alpha, A, B, rs) > 0.0
    if not positive[0]:
        raise SingleCrossingError(f"margin is not positive near r = 0 for {cls!r}, alpha={alpha}")
    flips = np.flatnonzero(positive[1:] != positive[:-1])
    if flips.size == 0:
        return 1.0
    if flips.size > 1:
        raise SingleCrossingError(
            f"margin changes sign {flips.size} times on (0, 1) for {cls!r}, alpha={alpha}"
        )
    lo, hi = float(rs[flips[0]]), float(rs[flips[0] + 1])
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if containment_margin(alpha, cls, mid) > 0.0:
            lo = mid
        else:
            hi = mid
    root = 0.5 * (lo + hi)
    a_lo, a_hi = admissible_interval(alpha)
    if not a_lo < class_disc(cls, root).center < a_hi:
        raise SingleCrossingError(
            f"disc center left the admissible interval before the crossing for {cls!r}"
        )
    return root


def _is_starlike_type(cls: FunctionClass) -> Optional[float]:
    if isinstance(cls, StarlikeOrder):
        return cls.beta
    if isinstance(cls, Starlike):
        return 0.0
    if isinstance(cls, Convex):
        return 0.5
    return None


def touch_cosine(alpha: float, beta: float) -> float:
    """Double root ``x0`` of the tangency quadratic for starlike order ``beta``."""
    return (1.0 + alpha) / (2.0 * math.sqrt(alpha * (1.0 + 16.0 * alpha * (1.0 - beta) ** 2)))


def _touch_angle(cls: FunctionClass, alpha: float, r: float) -> float:
    """Angle of ``z`` on ``|z| = r`` mapped to the nearest boundary point.

    The nearest boundary point to the disc center is pulled back through the
    extremal Moebius map; only valid when the disc is tangent, i.e. at the
    radius itself, but always well defined.
    """
    A, B = cls.mobius
    a = class_disc(cls, r).center
    branch = inscribed_branch(alpha, a)
    if branch == "left":
        return math.pi
    if branch == "right":
        return 0.0
    roots = critical_points(alpha, a)
    xb = 0.0 if roots is None else roots[1]
    w = boundary_point(alpha, math.acos(max(-1.0, min(1.0, xb))))
    z = (w - 1.0) / (A - B * w)
    return abs(math.atan2(z.imag, z.real))


def sharpness_witness(cls: FunctionClass, param: AlphaLike, r: Optional[float] = None,
                      sweep: int = SWEEP_POINTS, margin_tol: float = WITNESS_MARGIN_TOL,
                      x_tol: float = WITNESS_X_TOL) -> SharpnessWitness:
    """Locate the boundary touch of the extremal image of ``|z| = r``.

    ``r`` defaults to the closed-form radius. The witness holds when the
    sweep's largest margin is within ``margin_tol`` of zero and its location
    agrees with the closed-form touch point within ``x_tol`` in ``cos t``.
    """
    alpha = as_param(param).alpha
    result = bs_radius(cls, alpha)
    if r is None:
        if result.clamped:
            raise DomainError("class", "radius is clamped at 1; there is no boundary touch to witness")
        r = result.value
    if not 0.0 < r < 1.0:
        raise DomainError("r", f"witness radius must lie in (0, 1) (got {r!r})")
    if sweep < 64:
        raise DomainError("samples", f"sweep needs at least 64 points (got {sweep!r})")
    beta = _is_starlike_type(cls)
    if beta is not None and alpha > 0.0 and result.branch == "rho0":
        x0 = touch_cosine(alpha, beta)
        t_star = math.acos(min(1.0, x0))
    else:
        t_star = _touch_angle(cls, alpha, r)
        x0 = math.cos(t_star)
    margin = contains(alpha, log_derivative(cls, r * complex(math.cos(t_star), math.sin(t_star))))

    A, B = cls.mobius
    margins = kernels.circle_margins(alpha, A, B, r, sweep)
    k = int(np.argmax(margins))
    dt = 2.0 * math.pi / sweep
    t_k = k * dt

    def neg_margin(t):
        z = r * complex(math.cos(t), math.sin(t))
        return -contains(alpha, log_derivative(cls, z)).radial_margin

    t_best, f_best = golden_section(neg_margin, t_k - dt, t_k + dt, tol=1e-13)
    sweep_margin = -f_best
    sweep_x = math.cos(t_best)
    witnessed = abs(sweep_margin) <= margin_tol and abs(sweep_x - x0) <= x_tol
    return SharpnessWitness(r, x0, t_star, margin.radial_margin, sweep_x, sweep_margin, witnessed)


def subordination_check(cls: FunctionClass, param: AlphaLike, r: float,
                        n: int = CIRCLE_POINTS) -> SubordinationResult:
    """Sample ``n`` points of ``|z| = r`` and test their images for membership."""
    alpha = as_param(param).alpha
    if not 0.0 < r < 1.0:
        raise DomainError("r", f"r must lie in (0, 1) (got {r!r})")
    if int(n) != n or n < 64:
        raise DomainError("samples", f"need at least 64 circle samples (got {n!r})")
    A, B = cls.mobius
    margins = kernels.circle_margins(alpha, A, B, float(r), int(n))
    k = int(np.argmax(margins))
    worst = float(margins[k])
    return SubordinationResult(worst < 0.0, worst, 2.0 * math.pi * k / n)


def _report(closed: float, oracle: float, tol: float, touch: Optional[float]) -> ContainmentReport:
    return ContainmentReport(closed, oracle, abs(closed - oracle), tol, touch)


def certify_inscribed(param: AlphaLike, a: float, tol: float = LEMMA_TOL,
                      n: int = GRID_POINTS) -> ContainmentReport:
    alpha = as_param(param).alpha
    a = check_center(alpha, a)
    value, x = _h_extremum(alpha, a, n, maximise=False)
    return _report(inscribed_radius(alpha, a), value, tol, x)


def certify_circumscribed(param: AlphaLike, a: float, tol: float = LEMMA_TOL,
                          n: int = GRID_POINTS) -> ContainmentReport:
    alpha = as_param(param).alpha
    a = check_center(alpha, a)
    value, x = _h_extremum(alpha, a, n, maximise=True)
    return _report(circumscribed_radius(alpha, a), value, tol, x)


def certify_bs_radius(cls: FunctionClass, param: AlphaLike,
                      tol: float = RADIUS_TOL) -> ContainmentReport:
    """Closed-form radius against the bisection oracle; touch is the witness angle."""
    alpha = as_param(param).alpha
    closed = bs_radius(cls, alpha).value
    oracle = oracle_bs_radius(cls, alpha)
    touch = sharpness_witness(cls, alpha).t_star if closed < 1.0 else None
    return _report(closed, oracle, tol, touch)
