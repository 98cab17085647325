"""The Gelfand transform of (L^1(G), cosine convolution) on the four groups.

Every multiplicative functional has the form ``m_phi(f) = int f(x) phi(x) dx``
for a cosine element ``phi``.  Evaluated over a set of coordinates this is

* the cosine transform ``int f(x) cos(2 pi y x) dx`` on R,
* the discrete-time cosine transform ``sum_k f(k) cos(2 pi alpha k)`` on Z,
* the cosine Fourier coefficients ``int_0^1 f(x) cos(2 pi k x) dx`` on S^1,
* the DCT ``sum_k f(k) cos(2 pi l k / n)`` on Z_n, l = 0 .. n//2.

The Z_n transform is the real part of the DFT (not the DCT-II of JPEG).
Quadrature on R and S^1 is the plain weighted Riemann sum over the grid.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import _fft
from ._trig import cos2pi_ratio
from .algebra import Signal, _same_group
from .cosine_class import (
    CosineElement,
    _cos_at,
    coord_token,
    from_coord,
    half_range_size,
)
from .groups import Group, Kind, haar_weight


@dataclass(frozen=True, eq=False)
class Spectrum:
    group: Group
    coords: tuple
    values: np.ndarray
    kind: str = "gelfand"

    def __post_init__(self):
        v = np.array(self.values, copy=True)
        if v.dtype.kind not in "fc":
            v = v.astype(np.float64)
        if v.shape != (len(self.coords),):
            raise ValueError(f"{len(self.coords)} coordinates but values of shape {v.shape}")
        v.setflags(write=False)
        object.__setattr__(self, "coords", tuple(self.coords))
        object.__setattr__(self, "values", v)

    def __len__(self):
        return len(self.coords)

    def __getitem__(self, i):
        return self.values[i]

    def tokens(self) -> list[str]:
        return [coord_token(self.group, c) for c in self.coords]

    def as_dict(self) -> dict:
        return dict(zip(self.coords, self.values.tolist()))


def transform_at(f: Signal, elements) -> np.ndarray:
    """m_phi(f) for several phi at once; each per-phi sum runs left to right."""
    g = f.group
    elements = list(elements)
    for phi in elements:
        if phi.group != g:
            raise ValueError(f"group mismatch: {phi.group} vs {g}")
    acc = np.zeros(len(elements), dtype=np.result_type(f.values, np.float64))
    if not elements:
        return acc
    table = np.array([np.asarray(_cos_at(phi, np.arange(g.size)), dtype=np.float64)
                      for phi in elements])
    fv = f.values
    for j in range(g.size):
        acc += fv[j] * table[:, j]
    return haar_weight(g) * acc


def functional_apply(phi: CosineElement, f: Signal) -> float:
    """m_phi(f) = weight * sum_x f(x) phi(x)."""
    if phi.group != f.group:
        raise ValueError(f"group mismatch: {phi.group} vs {f.group}")
    out = transform_at(f, [phi])[0]
    return out.item()


def _require(f: Signal, kind: Kind, name: str):
    if f.group.kind is not kind:
        raise ValueError(f"{name} needs a signal on the {kind.value} group, got {f.group}")


def cosine_transform_real(f: Signal, ys) -> Spectrum:
    _require(f, Kind.REAL, "cosine_transform_real")
    elements = [from_coord(f.group, y) for y in ys]
    return Spectrum(f.group, [phi.coord for phi in elements], transform_at(f, elements), "cosine")


def cosine_transform_integers(f: Signal, alphas, strict: bool = False) -> Spectrum:
    _require(f, Kind.INTEGERS, "cosine_transform_integers")
    elements = [from_coord(f.group, a, strict) for a in alphas]
    return Spectrum(f.group, [phi.coord for phi in elements], transform_at(f, elements),
                    "discrete-time-cosine")


def fourier_cosine_coeffs(f: Signal, k_max: int) -> Spectrum:
    _require(f, Kind.CIRCLE, "fourier_cosine_coeffs")
    s = f.group.samples
    if k_max < 0 or 2 * k_max >= s:
        raise ValueError(f"k_max must satisfy 0 <= k_max < s/2 = {s / 2}, got {k_max}")
    elements = [from_coord(f.group, k) for k in range(k_max + 1)]
    return Spectrum(f.group, list(range(k_max + 1)), transform_at(f, elements), "fourier-cosine")


def dct_naive(f: Signal, full: bool = False) -> Spectrum:
    """``sum_{k=0}^{n-1} f(k) cos(2 pi l k / n)`` by direct summation.

    Half range ``l = 0 .. n//2`` by default; ``full=True`` returns all ``n``
    values, which satisfy S(n - l) = S(l).
    """
    _require(f, Kind.CYCLIC, "dct_naive")
    n = f.group.order
    ls = np.arange(n if full else half_range_size(n))
    acc = np.zeros(ls.shape[0], dtype=np.result_type(f.values, np.float64))
    fv = f.values
    # cos(2 pi l k / n) only takes the n values cos(2 pi j / n)
    table = cos2pi_ratio(np.arange(n), n)
    for k in range(n):
        acc += fv[k] * table[(ls * k) % n]
    return Spectrum(f.group, ls.tolist(), acc, "dct")


def _dct_from_dft(F: np.ndarray, values: np.ndarray) -> np.ndarray:
    if values.dtype.kind == "c":
        # sum f(k) cos = (F(l) + F(-l)) / 2 for complex f
        return (F + F[(-np.arange(F.shape[0])) % F.shape[0]]) / 2
    return F.real


def dct_fast(f: Signal, full: bool = False) -> Spectrum:
    """Same values as :func:`dct_naive`, from one DFT (radix-2 or Bluestein)."""
    _require(f, Kind.CYCLIC, "dct_fast")
    n = f.group.order
    S = _dct_from_dft(_fft.fft(f.values), f.values)
    m = n if full else half_range_size(n)
    return Spectrum(f.group, list(range(m)), S[:m], "dct")


def dct(f: Signal, full: bool = False, naive: bool = False) -> Spectrum:
    return dct_naive(f, full) if naive else dct_fast(f, full)


def full_range(S: Spectrum) -> np.ndarray:
    """Extend a half-range Z_n spectrum by S(n - l) = S(l)."""
    if S.group.kind is not Kind.CYCLIC:
        raise ValueError("full_range needs a spectrum on a cyclic group")
    n = S.group.order
    m = half_range_size(n)
    if len(S) == n:
        return S.values
    if len(S) != m or list(S.coords) != list(range(m)):
        raise ValueError(f"expected a half-range spectrum with coordinates 0..{m - 1}")
    l = np.arange(n)
    return S.values[np.minimum(l, n - l)]


def reconstruct_even(S: Spectrum, n: int | None = None) -> Signal:
    """The even part (f + f o iota)/2 of any f whose DCT is ``S``.

    The spectrum is extended symmetrically and inverted with the 1/n DFT.
    """
    if S.group.kind is not Kind.CYCLIC:
        raise ValueError("reconstruct_even needs a spectrum on a cyclic group")
    if n is not None and n != S.group.order:
        raise ValueError(f"n={n} does not match spectrum group {S.group}")
    full = full_range(S)
    out = _fft.ifft(full)
    if full.dtype.kind != "c":
        out = out.real
    return Signal(S.group, out)


def cosine_convolve_fast(f: Signal, g: Signal) -> Signal:
    """Cosine convolution on Z_n (or S^1) through the DFT.

    The DFT of the anticonvolution is F(-l) G(l), so the cosine product has
    transform (F(l) + F(-l))/2 * G(l), i.e. Re(F) * G for real ``f``.
    """
    grp = _same_group(f, g)
    if not grp.periodic:
        raise ValueError("the fast cosine convolution needs a periodic group")
    F = _fft.fft(f.values)
    G = _fft.fft(g.values)
    out = _fft.ifft(_dct_from_dft(F, f.values) * G)
    if f.values.dtype.kind != "c" and g.values.dtype.kind != "c":
        out = out.real
    return Signal(grp, haar_weight(grp) * out)
