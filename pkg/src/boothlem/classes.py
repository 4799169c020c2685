"""Function classes, their ``zf'/f`` disc bounds, and closed-form BS(alpha)-radii.

Every class handled here is described by a Moebius pair ``(A, B)``: its
extremal function has ``zf'/f = (1 + A z)/(1 + B z)``, and on ``|z| <= r``
every member's ``zf'/f`` lies in the disc with center
``(1 - A B r^2)/(1 - B^2 r^2)`` and radius ``|A - B| r / (1 - B^2 r^2)``.
Starlike of order beta uses ``(1 - 2 beta, -1)``; so does ``M(beta)`` with
``beta > 1``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Tuple

from .discs import Disc
from .errors import DomainError
from .region import AlphaLike, as_param

# values this close to 1 are treated as hitting the clamp min{1, .}
_CLAMP_SNAP = 8 * 2.220446049250313e-16


class FunctionClass:
    """Base for the analytic function classes; subclasses are frozen dataclasses."""

    name = "class"

    @property
    def mobius(self) -> Tuple[float, float]:
        raise NotImplementedError

    def params(self) -> dict:
        return {}


def _check(name: str, value: float, ok: bool, rule: str) -> float:
    if not (isinstance(value, (int, float)) and math.isfinite(value) and ok):
        raise DomainError(name, f"{name} must satisfy {rule} (got {name}={value!r})")
    return float(value)


@dataclass(frozen=True)
class StarlikeOrder(FunctionClass):
    beta: float
    name = "starlike-order"

    def __post_init__(self):
        _check("beta", self.beta, 0.0 <= self.beta < 1.0, "0 <= beta < 1")

    @property
    def mobius(self):
        return 1.0 - 2.0 * self.beta, -1.0

    def params(self):
        return {"beta": float(self.beta)}


@dataclass(frozen=True)
class Starlike(FunctionClass):
    name = "starlike"

    @property
    def mobius(self):
        return 1.0, -1.0


@dataclass(frozen=True)
class Convex(FunctionClass):
    """Convex functions; their radius is that of starlike order 1/2."""

    name = "convex"

    @property
    def mobius(self):
        return 0.0, -1.0


@dataclass(frozen=True)
class MClass(FunctionClass):
    """``Re(zf'/f) < beta`` with ``1 < beta < 4/3``."""

    beta: float
    name = "m-class"

    def __post_init__(self):
        _check("beta", self.beta, 1.0 < self.beta < 4.0 / 3.0, "1 < beta < 4/3")

    @property
    def mobius(self):
        return 1.0 - 2.0 * self.beta, -1.0

    def params(self):
        return {"beta": float(self.beta)}


@dataclass(frozen=True)
class Janowski(FunctionClass):
    A: float
    B: float
    name = "janowski"

    def __post_init__(self):
        A, B = self.A, self.B
        _check("A", A, -1.0 <= A <= 1.0, "-1 < B < A <= 1")
        _check("B", B, -1.0 <= B <= 1.0, "-1 < B < A <= 1")
        if B == -1.0:
            raise DomainError(
                "B",
                f"B = -1 is starlike of order beta; use StarlikeOrder({(1.0 - A) / 2.0:.12g})",
            )
        if not B < A:
            raise DomainError("A", f"A must exceed B (got A={A!r}, B={B!r})")

    @property
    def mobius(self):
        return float(self.A), float(self.B)

    def params(self):
        return {"A": float(self.A), "B": float(self.B)}


@dataclass(frozen=True)
class Parvatham(FunctionClass):
    """``S*[beta, -beta]``, ``0 < beta <= 1``."""

    beta: float
    name = "parvatham"

    def __post_init__(self):
        _check("beta", self.beta, 0.0 < self.beta <= 1.0, "0 < beta <= 1")

    @property
    def mobius(self):
        return float(self.beta), -float(self.beta)

    def params(self):
        return {"beta": float(self.beta)}


@dataclass(frozen=True)
class Fournier(FunctionClass):
    """``S*[1 - beta, 0]``, ``0 <= beta < 1``."""

    beta: float
    name = "fournier"

    def __post_init__(self):
        _check("beta", self.beta, 0.0 <= self.beta < 1.0, "0 <= beta < 1")

    @property
    def mobius(self):
        return 1.0 - self.beta, 0.0

    def params(self):
        return {"beta": float(self.beta)}


class Branch(str, Enum):
    RHO0 = "rho0"
    RHO0_TILDE = "rho0_tilde"
    ALPHA_ZERO = "alpha_zero"
    CLAMPED_ONE = "clamped_one"


@dataclass(frozen=True)
class RadiusResult:
    value: float
    branch: Branch
    clamped: bool = False


@dataclass(frozen=True)
class InclusionVerdict:
    """Outcome of the sufficient inclusion test.

    ``holds = False`` means the test does not establish the inclusion; it does
    not mean the inclusion fails.
    """

    holds: bool
    via_condition: Optional[str] = None


def _check_radius(r: float) -> float:
    return _check("r", r, 0.0 <= r < 1.0, "0 <= r < 1")


def class_disc(cls: FunctionClass, r: float) -> Disc:
    """Disc containing ``zf'(z)/f(z)`` on ``|z| <= r`` for every member of ``cls``."""
    r = _check_radius(r)
    A, B = cls.mobius
    den = 1.0 - B * B * r * r
    return Disc((1.0 - A * B * r * r) / den, abs(A - B) * r / den)


def root_formula(alpha: float, A: float, B: float) -> float:
    """Radius where the disc is tangent to the boundary off the real axis."""
    return 2.0 * math.sqrt(alpha) / ((1.0 + alpha) * math.sqrt(4.0 * alpha * (A - B) ** 2 + B * B))


def starlike_root_radius(alpha: float, beta: float) -> float:
    """Square-root formula shared by starlike order ``beta`` and ``M(beta)``."""
    return 2.0 * math.sqrt(alpha) / ((1.0 + alpha) * math.sqrt(1.0 + 16.0 * alpha * (1.0 - beta) ** 2))


def starlike_axis_radius(alpha: float, beta: float) -> float:
    return 1.0 / (1.0 + 2.0 * (1.0 - alpha) * (1.0 - beta))


def _starlike_order(alpha: float, beta: float) -> RadiusResult:
    if alpha == 0.0:
        return RadiusResult(1.0 / (3.0 - 2.0 * beta), Branch.ALPHA_ZERO)
    if beta < max(0.0, (9.0 * alpha - 1.0) / (8.0 * alpha)):
        return RadiusResult(starlike_root_radius(alpha, beta), Branch.RHO0)
    return RadiusResult(starlike_axis_radius(alpha, beta), Branch.RHO0_TILDE)


def _m_class(alpha: float, beta: float) -> RadiusResult:
    if alpha == 0.0:
        return RadiusResult(1.0 / (1.0 + 2.0 * (beta - 1.0)), Branch.ALPHA_ZERO)
    if beta <= 1.0 + (1.0 - alpha) / (8.0 * alpha):
        return RadiusResult(1.0 / (1.0 + 2.0 * (1.0 - alpha) * (beta - 1.0)), Branch.RHO0_TILDE)
    return RadiusResult(starlike_root_radius(alpha, beta), Branch.RHO0)


def _clamp(value: float, branch: Branch) -> RadiusResult:
    if value >= 1.0 - _CLAMP_SNAP:
        return RadiusResult(1.0, Branch.CLAMPED_ONE, clamped=True)
    return RadiusResult(value, branch)


def _janowski(alpha: float, A: float, B: float) -> RadiusResult:
    if alpha == 0.0:
        # region is D(1; 1); the disc stays inside while |a - 1| + c <= 1
        return _clamp(1.0 / (A - B + abs(B)), Branch.ALPHA_ZERO)
    if B <= 0.0:
        if 4.0 * A * alpha > (5.0 * alpha - 1.0) * B:
            return _clamp(root_formula(alpha, A, B), Branch.RHO0)
        return _clamp(1.0 / ((1.0 - alpha) * (A - B) - B), Branch.RHO0_TILDE)
    if 4.0 * A * alpha > (3.0 * alpha + 1.0) * B:
        return _clamp(root_formula(alpha, A, B), Branch.RHO0)
    return _clamp(1.0 / ((1.0 - alpha) * (A - B) + B), Branch.RHO0_TILDE)


def bs_radius(cls: FunctionClass, param: AlphaLike) -> RadiusResult:
    """Closed-form BS(alpha)-radius of ``cls``.

    The square-root formula is labelled ``rho0`` and the real-axis formula
    ``rho0_tilde`` for every class, whichever side of the region it touches.
    """
    alpha = as_param(param).alpha
    if isinstance(cls, StarlikeOrder):
        return _starlike_order(alpha, cls.beta)
    if isinstance(cls, Starlike):
        return _starlike_order(alpha, 0.0)
    if isinstance(cls, Convex):
        return _starlike_order(alpha, 0.5)
    if isinstance(cls, MClass):
        return _m_class(alpha, cls.beta)
    if isinstance(cls, (Janowski, Parvatham, Fournier)):
        return _janowski(alpha, *cls.mobius)
    raise DomainError("class", f"unsupported function class {cls!r}")


def inclusion_holds(param: AlphaLike, A: float, B: float) -> InclusionVerdict:
    """Sufficient test for ``S*[A, B]`` to lie inside BS(alpha)."""
    alpha = as_param(param).alpha
    Janowski(A, B)
    lhs = (1.0 - alpha) * (1.0 + 6.0 * alpha + alpha * alpha) * abs(B) * (A - B)
    rhs = 4.0 * alpha * (1.0 - B * B)
    if lhs <= rhs and (1.0 + alpha) ** 2 * (4.0 * alpha * (A - B) ** 2 + B * B) <= 4.0 * alpha:
        return InclusionVerdict(True, "i")
    if lhs >= rhs and (1.0 - alpha) * (A - B) + abs(B) <= 1.0:
        return InclusionVerdict(True, "ii")
    return InclusionVerdict(False)


def log_derivative(cls: FunctionClass, z: complex) -> complex:
    """``zf'(z)/f(z)`` of the extremal function of ``cls``, in closed form."""
    z = complex(z)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)) or abs(z) >= 1.0:
        raise DomainError("z", f"|z| must be < 1 (got |z| = {abs(z)!r})")
    A, B = cls.mobius
    if B == 0.0:
        return 1.0 + A * z
    return (1.0 + A * z) / (1.0 + B * z)
