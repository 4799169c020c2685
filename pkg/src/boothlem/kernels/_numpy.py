"""Vectorised numpy implementations of the hot loops."""

import numpy as np


def h_extremes(alpha, a, n):
    x = np.linspace(-1.0, 1.0, n)
    h = (1.0 - a) ** 2 + (1.0 + 2.0 * (1.0 - a) * (1.0 - alpha) * x) / (
        (1.0 - alpha) ** 2 + 4.0 * alpha * (1.0 - x) * (1.0 + x)
    )
    i_min = int(np.argmin(h))
    i_max = int(np.argmax(h))
    return i_min, float(h[i_min]), i_max, float(h[i_max])


def radial_margins(alpha, re, im):
    du = np.asarray(re, dtype=float) - 1.0
    dv = np.asarray(im, dtype=float)
    dist = np.hypot(du, dv)
    with np.errstate(invalid="ignore", divide="ignore"):
        c2 = np.where(dist > 0.0, (du / dist) ** 2, 1.0)
        s2 = np.where(dist > 0.0, (dv / dist) ** 2, 0.0)
    rho = np.sqrt(c2 / (1.0 - alpha) ** 2 + s2 / (1.0 + alpha) ** 2)
    return np.where(dist > 0.0, dist - rho, -1.0 / (1.0 + alpha))


def circle_margins(alpha, A, B, r, n):
    t = 2.0 * np.pi * np.arange(n) / n
    z = r * np.exp(1j * t)
    w = (1.0 + A * z) / (1.0 + B * z)
    return radial_margins(alpha, w.real, w.imag)


def lemma_margins(alpha, A, B, rs):
    rs = np.asarray(rs, dtype=float)
    den = 1.0 - B * B * rs * rs
    a = (1.0 - A * B * rs * rs) / den
    c = abs(A - B) * rs / den
    axis = 1.0 / (1.0 - alpha) - np.abs(a - 1.0)
    if alpha == 0.0:
        return axis - c
    k = 4.0 * alpha / ((1.0 - alpha) * (1.0 + 6.0 * alpha + alpha * alpha))
    d2 = (1.0 - a) ** 2
    rad = np.maximum(alpha - d2 * (1.0 - alpha * alpha) ** 2, 0.0)
    s = (np.sqrt(alpha * rad) + alpha * (1.0 + 2.0 * (1.0 + alpha) ** 2 * d2)) / (
        2.0 * alpha * (1.0 + alpha) ** 2
    )
    middle = (a > 1.0 - k) & (a < 1.0 + k)
    return np.where(middle, np.sqrt(s), axis) - c
