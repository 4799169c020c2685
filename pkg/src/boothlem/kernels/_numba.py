"""numba-compiled loop kernels; same signatures as the numpy module."""

import math

import numpy as np
from numba import njit


@njit(cache=True)
def h_extremes(alpha, a, n):
    p = 2.0 * (1.0 - a) * (1.0 - alpha)
    q = (1.0 - alpha) ** 2
    d2 = (1.0 - a) ** 2
    i_min = 0
    i_max = 0
    h_min = math.inf
    h_max = -math.inf
    step = 2.0 / (n - 1)
    for k in range(n):
        x = -1.0 + k * step if k < n - 1 else 1.0
        h = d2 + (1.0 + p * x) / (q + 4.0 * alpha * (1.0 - x) * (1.0 + x))
        if h < h_min:
            h_min = h
            i_min = k
        if h > h_max:
            h_max = h
            i_max = k
    return i_min, h_min, i_max, h_max


@njit(cache=True)
def _margin(alpha, du, dv):
    dist = math.hypot(du, dv)
    if dist == 0.0:
        return -1.0 / (1.0 + alpha)
    c = du / dist
    s = dv / dist
    rho = math.sqrt(c * c / (1.0 - alpha) ** 2 + s * s / (1.0 + alpha) ** 2)
    return dist - rho


@njit(cache=True)
def radial_margins(alpha, re, im):
    out = np.empty(re.shape[0])
    for k in range(re.shape[0]):
        out[k] = _margin(alpha, re[k] - 1.0, im[k])
    return out


@njit(cache=True)
def circle_margins(alpha, A, B, r, n):
    out = np.empty(n)
    for k in range(n):
        t = 2.0 * math.pi * k / n
        z = r * complex(math.cos(t), math.sin(t))
        w = (1.0 + A * z) / (1.0 + B * z)
        out[k] = _margin(alpha, w.real - 1.0, w.imag)
    return out


@njit(cache=True)
def lemma_margins(alpha, A, B, rs):
    out = np.empty(rs.shape[0])
    if alpha > 0.0:
        k = 4.0 * alpha / ((1.0 - alpha) * (1.0 + 6.0 * alpha + alpha * alpha))
    else:
        k = 0.0
    for j in range(rs.shape[0]):
        r = rs[j]
        den = 1.0 - B * B * r * r
        a = (1.0 - A * B * r * r) / den
        c = abs(A - B) * r / den
        if alpha > 0.0 and 1.0 - k < a < 1.0 + k:
            d2 = (1.0 - a) ** 2
            rad = max(alpha - d2 * (1.0 - alpha * alpha) ** 2, 0.0)
            s = (math.sqrt(alpha * rad) + alpha * (1.0 + 2.0 * (1.0 + alpha) ** 2 * d2)) / (
                2.0 * alpha * (1.0 + alpha) ** 2
            )
            out[j] = math.sqrt(s) - c
        else:
            out[j] = 1.0 / (1.0 - alpha) - abs(a - 1.0) - c
    return out
