"""The Booth lemniscate region ``G(D)`` where ``G(z) = 1 + z / (1 - alpha z^2)``.

Points of the image plane are plain Python ``complex`` values. The region is
starlike with respect to ``w = 1``, so membership reduces to comparing
``|w - 1|`` with the distance from 1 to the boundary along the same ray:

    rho(theta)^2 = cos(theta)^2 / (1 - alpha)^2 + sin(theta)^2 / (1 + alpha)^2
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import DomainError

BOUNDARY_TOL = 1e-12
TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class RegionParam:
    """Shape parameter ``alpha`` in ``[0, 1)``."""

    alpha: float

    def __post_init__(self):
        a = self.alpha
        if not (isinstance(a, (int, float)) and math.isfinite(a) and 0.0 <= a < 1.0):
            raise DomainError("alpha", f"alpha must satisfy 0 <= alpha < 1 (got {a!r})")
        object.__setattr__(self, "alpha", float(a))


AlphaLike = Union[RegionParam, float]


def as_param(param: AlphaLike) -> RegionParam:
    return param if isinstance(param, RegionParam) else RegionParam(param)


@dataclass(frozen=True)
class MembershipVerdict:
    """Result of :func:`contains`.

    ``radial_margin`` is ``|w - 1| - rho(arg(w - 1))``: negative strictly
    inside, zero on the boundary, positive outside.
    """

    inside: bool
    radial_margin: float

    @property
    def on_boundary(self) -> bool:
        return abs(self.radial_margin) <= BOUNDARY_TOL

    @property
    def status(self) -> str:
        if self.on_boundary:
            return "boundary"
        return "inside" if self.inside else "outside"


def _reduce_angle(t: float) -> float:
    if not math.isfinite(t):
        raise DomainError("t", f"angle must be finite (got {t!r})")
    return math.fmod(t, TWO_PI)


def eval_map(param: AlphaLike, z: complex) -> complex:
    """Evaluate ``G(z) = 1 + z / (1 - alpha z^2)`` for ``|z| < 1``."""
    alpha = as_param(param).alpha
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)) or abs(z) >= 1.0:
        raise DomainError("z", f"|z| must be < 1 (got |z| = {abs(z)!r})")
    return 1.0 + z / (1.0 - alpha * z * z)


def boundary_point(param: AlphaLike, t: float) -> complex:
    """Return ``G(exp(i t))`` in the real parametric form."""
    alpha = as_param(param).alpha
    t = _reduce_angle(t)
    # 1 + alpha^2 - 2 alpha cos 2t, without the cancellation near t = 0, pi
    den = (1.0 - alpha) ** 2 + 4.0 * alpha * math.sin(t) ** 2
    u = 1.0 + (1.0 - alpha) * math.cos(t) / den
    v = (1.0 + alpha) * math.sin(t) / den
    return complex(u, v)


def polar_boundary_radius(param: AlphaLike, theta: float) -> float:
    """Distance from 1 to the boundary along direction ``theta``."""
    alpha = as_param(param).alpha
    theta = _reduce_angle(theta)
    c = math.cos(theta)
    s = math.sin(theta)
    return math.sqrt(c * c / (1.0 - alpha) ** 2 + s * s / (1.0 + alpha) ** 2)


def contains(param: AlphaLike, w: complex) -> MembershipVerdict:
    alpha = as_param(param).alpha
    w = complex(w)
    d = w - 1.0
    dist = abs(d)
    if dist == 0.0:
        margin = -1.0 / (1.0 + alpha)
    else:
        c = d.real / dist
        s = d.imag / dist
        margin = dist - math.sqrt(c * c / (1.0 - alpha) ** 2 + s * s / (1.0 + alpha) ** 2)
    return MembershipVerdict(inside=margin < 0.0, radial_margin=margin)


def quartic_residual(param: AlphaLike, w: complex) -> float:
    """Residual of the implicit boundary quartic.

    ``((u-1)^2 + v^2)^2 - ((u-1)/(1-alpha))^2 - (v/(1+alpha))^2``; zero on the
    boundary, but also at ``w = 1``, so it is not used for membership.
    """
    alpha = as_param(param).alpha
    du = w.real - 1.0
    v = w.imag
    return (du * du + v * v) ** 2 - (du / (1.0 - alpha)) ** 2 - (v / (1.0 + alpha)) ** 2


def boundary_polyline(param: AlphaLike, n: int) -> np.ndarray:
    """``n`` boundary points at ``t = 2 pi k / n`` as a complex array.

    The curve is open; append the first point to close it.
    """
    alpha = as_param(param).alpha
    if int(n) != n or n < 8:
        raise DomainError("samples", f"need at least 8 boundary samples (got {n!r})")
    n = int(n)
    t = TWO_PI * np.arange(n) / n
    den = (1.0 - alpha) ** 2 + 4.0 * alpha * np.sin(t) ** 2
    u = 1.0 + (1.0 - alpha) * np.cos(t) / den
    v = (1.0 + alpha) * np.sin(t) / den
    return u + 1j * v
