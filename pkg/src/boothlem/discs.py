"""Largest inscribed and smallest circumscribed discs of ``G(D)`` about a real center.

The squared distance from ``(a, 0)`` to the boundary point with ``cos t = x``
is the rational profile

    H(x) = (1 - a)^2 + (1 + 2 (1 - a)(1 - alpha) x) / ((1 + alpha)^2 - 4 alpha x^2)

on ``[-1, 1]``. Its minimum and maximum give ``r_a`` and ``R_a``; both have
closed forms with three branches for ``r_a`` separated by the thresholds
``1 -/+ 4 alpha / ((1 - alpha)(1 + 6 alpha + alpha^2))``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

from .errors import DomainError
from .region import AlphaLike, as_param

RADICAND_FLOOR = -1e-14


@dataclass(frozen=True)
class Disc:
    center: float
    radius: float

    def __post_init__(self):
        if not math.isfinite(self.center):
            raise DomainError("center", f"disc center must be finite (got {self.center!r})")
        if not self.radius >= 0.0:
            raise DomainError("radius", f"disc radius must be >= 0 (got {self.radius!r})")


@dataclass(frozen=True)
class CaseThresholds:
    alpha0: float
    alpha1: float
    alpha0_tilde: float
    alpha1_tilde: float


def thresholds(param: AlphaLike) -> CaseThresholds:
    alpha = as_param(param).alpha
    wide = math.sqrt(alpha) / (1.0 - alpha * alpha)
    narrow = _seam_offset(alpha)
    return CaseThresholds(1.0 - wide, 1.0 - narrow, 1.0 + wide, 1.0 + narrow)


def _seam_offset(alpha: float) -> float:
    return 4.0 * alpha / ((1.0 - alpha) * (1.0 + 6.0 * alpha + alpha * alpha))


def admissible_interval(param: AlphaLike) -> Tuple[float, float]:
    """Open interval of centers ``a`` for which the disc radii are stated."""
    alpha = as_param(param).alpha
    return (1.0 - 2.0 * alpha) / (2.0 - 2.0 * alpha), (3.0 - 2.0 * alpha) / (2.0 - 2.0 * alpha)


def check_center(param: AlphaLike, a: float) -> float:
    lo, hi = admissible_interval(param)
    if not (math.isfinite(a) and lo < a < hi):
        raise DomainError(
            "center",
            f"center must satisfy {lo:.12g} < a < {hi:.12g} for alpha={as_param(param).alpha:.12g} "
            f"(got a={a!r})",
        )
    return float(a)


def h_profile(param: AlphaLike, a: float, x: float) -> float:
    alpha = as_param(param).alpha
    a = check_center(alpha, a)
    if not -1.0 <= x <= 1.0:
        raise DomainError("x", f"x = cos t must lie in [-1, 1] (got {x!r})")
    # (1 + alpha)^2 - 4 alpha x^2 rewritten to stay accurate near x = +-1
    return (1.0 - a) ** 2 + (1.0 + 2.0 * (1.0 - a) * (1.0 - alpha) * x) / (
        (1.0 - alpha) ** 2 + 4.0 * alpha * (1.0 - x) * (1.0 + x)
    )


def _radicand(alpha: float, a: float) -> float:
    return alpha - (1.0 - a) ** 2 * (1.0 - alpha * alpha) ** 2


def critical_points(param: AlphaLike, a: float) -> Optional[Tuple[float, float]]:
    """Roots ``(x1, x2)`` of ``H'`` where ``x2`` is the interior minimiser.

    Returns ``None`` when ``alpha = 0``, ``a = 1`` (the quadratic degenerates)
    or the roots are complex. ``x1 * x2 == (1 + alpha)^2 / (4 alpha)``.
    """
    alpha = as_param(param).alpha
    a = check_center(alpha, a)
    if alpha == 0.0 or a == 1.0:
        return None
    rad = _radicand(alpha, a)
    if rad < 0.0:
        return None
    den = 2.0 * alpha * (1.0 - a) * (1.0 - alpha)
    x1 = -(alpha + math.sqrt(alpha * rad)) / den
    # x2 from the root product; the direct formula cancels near a = 1
    x2 = (1.0 + alpha) ** 2 / (4.0 * alpha) / x1
    return x1, x2


def s_value(param: AlphaLike, a: float) -> float:
    """``s(alpha, a)``, the squared inscribed radius on the middle branch."""
    alpha = as_param(param).alpha
    a = check_center(alpha, a)
    if alpha == 0.0:
        raise DomainError("alpha", "s(alpha, a) is defined only for alpha > 0")
    rad = _radicand(alpha, a)
    if rad < 0.0:
        if rad < RADICAND_FLOOR:
            raise DomainError(
                "center",
                f"s(alpha, a) needs alpha >= (1-a)^2 (1-alpha^2)^2 (radicand {rad:.3g})",
            )
        rad = 0.0
    d2 = (1.0 - a) ** 2
    return (math.sqrt(alpha * rad) + alpha * (1.0 + 2.0 * (1.0 + alpha) ** 2 * d2)) / (
        2.0 * alpha * (1.0 + alpha) ** 2
    )


def inscribed_branch(param: AlphaLike, a: float) -> str:
    """Which closed form gives ``r_a``: ``"left"``, ``"middle"`` or ``"right"``."""
    alpha = as_param(param).alpha
    a = check_center(alpha, a)
    k = _seam_offset(alpha)
    if a <= 1.0 - k:
        return "left"
    if a >= 1.0 + k:
        return "right"
    return "middle"


def inscribed_radius(param: AlphaLike, a: float) -> float:
    """Radius of the largest disc about ``a`` contained in ``G(D)``."""
    alpha = as_param(param).alpha
    branch = inscribed_branch(alpha, a)
    if branch == "left":
        return a - 1.0 + 1.0 / (1.0 - alpha)
    if branch == "right":
        return 1.0 - a + 1.0 / (1.0 - alpha)
    return math.sqrt(s_value(alpha, a))


def circumscribed_radius(param: AlphaLike, a: float) -> float:
    """Radius of the smallest disc about ``a`` containing ``G(D)``."""
    alpha = as_param(param).alpha
    a = check_center(alpha, a)
    return abs(a - 1.0) + 1.0 / (1.0 - alpha)
