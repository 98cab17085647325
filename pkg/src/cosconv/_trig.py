"""Trigonometry in units of full turns, with exact argument reduction.

``cos2pi_ratio(p, n)`` evaluates cos(2*pi*p/n) for integers by reducing ``p``
modulo ``n`` in integer arithmetic and folding the angle into the first
octant before calling libm.  Quarter turns therefore give exact zeros and
symmetric angles give bitwise-symmetric values, which keeps small DCT sums
exact.
"""

from __future__ import annotations

import numpy as np


def cos2pi_ratio(p, n):
    """cos(2*pi*p/n) for integer ``p`` (scalar or array) and integer ``n >= 1``."""
    p = np.asarray(p, dtype=np.int64)
    n = int(n)
    if n < 1:
        raise ValueError("denominator must be positive")
    r = np.mod(p, n)
    # cos is even: fold onto [0, n/2]
    r = np.minimum(r, n - r)
    # measure the angle in units of 1/(2n) turns, a in [0, n]
    a = 2 * r
    sign = np.where(2 * a > n, -1.0, 1.0)
    a = np.where(2 * a > n, n - a, a)  # now a in [0, n/2], angle <= 1/4 turn
    near = 4 * a <= n  # angle <= 1/8 turn
    with np.errstate(invalid="ignore"):
        c = np.where(
            near,
            np.cos(np.pi * a / n),
            np.sin(np.pi * (n - 2 * a) / (2 * n)),
        )
    out = sign * c
    return float(out) if out.ndim == 0 else out


def sin2pi_ratio(p, n):
    """sin(2*pi*p/n), via sin(t) = cos(t - quarter turn)."""
    p = np.asarray(p, dtype=np.int64)
    return cos2pi_ratio(4 * np.mod(p, n) - n, 4 * int(n))


def _cos_sin_turns(t):
    """cos and sin of 2*pi*t from one shared reduction of ``t``.

    ``t mod 1`` is split into a quadrant and a remainder below a quarter
    turn; both subtractions are exact, so cos and sin see the same angle.
    """
    t = np.asarray(t, dtype=np.float64)
    r = np.mod(t, 1.0)
    r = np.where(r >= 1.0, 0.0, r)
    q = np.floor(4.0 * r)
    f = r - q / 4  # [0, 1/4), exact
    far = f > 0.125
    g = np.where(far, 0.25 - f, f)  # exact
    a, b = np.cos(2.0 * np.pi * g), np.sin(2.0 * np.pi * g)
    c0, s0 = np.where(far, b, a), np.where(far, a, b)
    # rotate by q quarter turns; adding 0.0 clears negative zeros
    c = np.select([q == 0, q == 1, q == 2], [c0, -s0, -c0], s0) + 0.0
    s = np.select([q == 0, q == 1, q == 2], [s0, c0, -s0], -c0) + 0.0
    return c, s


def _scalar(out):
    return float(out) if out.ndim == 0 else out


def cos2pi(t):
    """cos(2*pi*t) for real ``t`` measured in turns."""
    return _scalar(_cos_sin_turns(t)[0])


def sin2pi(t):
    """sin(2*pi*t) for real ``t`` measured in turns."""
    return _scalar(_cos_sin_turns(t)[1])


def expi2pi_ratio(p, n, sign=1):
    """exp(sign * 2*pi*i*p/n) assembled from the reduced cos and sin."""
    return cos2pi_ratio(p, n) + 1j * sign * sin2pi_ratio(p, n)
