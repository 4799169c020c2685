"""Hot loops behind the oracles.

Each kernel exists twice: a numba ``@njit`` loop and a vectorised numpy
expression. The numba path is used when numba imports cleanly, unless
``BOOTHLEM_PURE_NUMPY`` is set to a non-empty value other than ``0``.
Both paths return identical values up to floating-point reassociation.

Kernels
-------
h_extremes(alpha, a, n)
    Scan the squared boundary distance ``H`` on ``n`` equispaced points of
    ``[-1, 1]``; returns ``(i_min, h_min, i_max, h_max)``.
radial_margins(alpha, re, im)
    Signed radial membership margin of each point ``re + i*im``.
circle_margins(alpha, A, B, r, n)
    Margins of ``(1 + A z)/(1 + B z)`` at ``z = r exp(2 pi i k / n)``.
lemma_margins(alpha, A, B, rs)
    ``r_a(center(r)) - radius(r)`` for the disc ``|w - center| <= radius``
    bounding ``(1 + A z)/(1 + B z)`` on ``|z| <= r``.
"""

import os

from . import _numpy

numpy_impl = _numpy

try:
    from . import _numba

    numba_impl = _numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba_impl = None

_flag = os.environ.get("BOOTHLEM_PURE_NUMPY", "")
USE_NUMBA = numba_impl is not None and _flag in ("", "0")

backend = numba_impl if USE_NUMBA else numpy_impl
BACKEND_NAME = "numba" if USE_NUMBA else "numpy"

h_extremes = backend.h_extremes
radial_margins = backend.radial_margins
circle_margins = backend.circle_margins
lemma_margins = backend.lemma_margins

__all__ = [
    "BACKEND_NAME",
    "USE_NUMBA",
    "circle_margins",
    "h_extremes",
    "lemma_margins",
    "numba_impl",
    "numpy_impl",
    "radial_margins",
]
