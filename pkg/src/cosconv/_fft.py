"""Discrete Fourier transform: radix-2 decimation in time, Bluestein otherwise.

Sign convention: ``fft(x)[l] = sum_k x[k] exp(-2 pi i l k / n)`` and
``ifft`` carries the 1/n factor.  Twiddles and chirps are built from
exactly reduced integer angles (see :mod:`cosconv._trig`).
"""

from __future__ import annotations

import numpy as np

from ._trig import cos2pi_ratio, sin2pi_ratio


def is_power_of_two(n: int) -> bool:
    return n >= 1 and n & (n - 1) == 0


def _twiddles(m: int) -> np.ndarray:
    """exp(-2 pi i j / m) for j = 0 .. m/2 - 1."""
    j = np.arange(m // 2)
    return cos2pi_ratio(j, m) - 1j * sin2pi_ratio(j, m)


def _radix2(x: np.ndarray) -> np.ndarray:
    n = x.shape[0]
    # rows hold interleaved subsequences; each pass merges pairs of half-size DFTs
    X = x.reshape(1, n).astype(np.complex128)
    while X.shape[0] < n:
        rows = X.shape[0]
        half = X.shape[1] // 2
        Xe, Xo = X[:, :half], X[:, half:]
        w = _twiddles(2 * rows)[:, None]
        X = np.vstack([Xe + w * Xo, Xe - w * Xo])
    return X.ravel()


def _bluestein(x: np.ndarray) -> np.ndarray:
    n = x.shape[0]
    k = np.arange(n, dtype=np.int64)
    k2 = (k * k) % (2 * n)
    # chirp exp(-pi i k^2 / n) = exp(-2 pi i k^2 / (2n))
    chirp = cos2pi_ratio(k2, 2 * n) - 1j * sin2pi_ratio(k2, 2 * n)
    m = 1
    while m < 2 * n - 1:
        m *= 2
    a = np.zeros(m, dtype=np.complex128)
    a[:n] = x * chirp
    b = np.zeros(m, dtype=np.complex128)
    b[:n] = np.conj(chirp)
    b[m - n + 1:] = np.conj(chirp[1:])[::-1]
    conv = _radix2_inverse(_radix2(a) * _radix2(b))
    return chirp * conv[:n]


def _radix2_inverse(X: np.ndarray) -> np.ndarray:
    return np.conj(_radix2(np.conj(X))) / X.shape[0]


def fft(x) -> np.ndarray:
    x = np.asarray(x)
    if x.ndim != 1 or x.shape[0] < 1:
        raise ValueError("fft needs a non-empty 1-d array")
    if is_power_of_two(x.shape[0]):
        return _radix2(x)
    return _bluestein(x.astype(np.complex128))


def ifft(X) -> np.ndarray:
    X = np.asarray(X, dtype=np.complex128)
    return np.conj(fft(np.conj(X))) / X.shape[0]
