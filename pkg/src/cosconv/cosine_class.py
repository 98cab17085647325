"""Bounded solutions of the d'Alembert equation on the canonical groups.

An element of the cosine class is stored only by its coordinate in the
structure space:

========  ======================  ==========================
group     coordinate              function
========  ======================  ==========================
R         y >= 0                  x -> cos(2 pi y x)
Z         alpha in [0, 1/2]       k -> cos(2 pi alpha k)
S^1       k in {0, 1, 2, ...}     x -> cos(2 pi k x)
Z_n       l in {0 .. n//2}        k -> cos(2 pi l k / n)
========  ======================  ==========================

On Z the coordinate stands for z = exp(2 pi i alpha).  By default the
closed interval is used, which includes z = -1 (``k -> (-1)**k``); pass
``strict=True`` to restrict to alpha in [0, 1/2).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _trig
from .groups import OUT_OF_WINDOW, Group, Kind, add_points, negate_point


def half_range_size(n: int) -> int:
    """ceil((n + 1) / 2): number of distinct cosine elements on Z_n."""
    return n // 2 + 1


@dataclass(frozen=True)
class CosineElement:
    group: Group
    coord: float | int
    strict: bool = False

    def __post_init__(self):
        object.__setattr__(self, "coord", _validate(self.group, self.coord, self.strict))

    def __call__(self, x):
        return evaluate(self, x)

    @property
    def token(self) -> str:
        return coord_token(self.group, self.coord)


def _validate(g: Group, c, strict: bool):
    if g.kind is Kind.REAL:
        c = float(c)
        if not math.isfinite(c) or c < 0:
            raise ValueError(f"real-line coordinate y must be finite and >= 0, got {c}")
        return c
    if g.kind is Kind.INTEGERS:
        c = float(c)
        upper_ok = c < 0.5 if strict else c <= 0.5
        if not (0 <= c and upper_ok):
            dom = "[0, 1/2)" if strict else "[0, 1/2]"
            raise ValueError(f"integer-group coordinate alpha must lie in {dom}, got {c}")
        return c
    if isinstance(c, float) and not c.is_integer():
        raise ValueError(f"coordinate must be an integer, got {c}")
    c = int(c)
    if g.kind is Kind.CIRCLE:
        if c < 0:
            raise ValueError(f"circle coordinate k must be >= 0, got {c}")
        return c
    m = half_range_size(g.order)
    if not 0 <= c < m:
        raise ValueError(f"cyclic coordinate l must lie in {{0, ..., {m - 1}}} for n={g.order}, got {c}")
    return c


def from_coord(g: Group, c, strict: bool = False) -> CosineElement:
    return CosineElement(g, c, strict)


def coord_of(phi: CosineElement):
    return phi.coord


def _turns(phi: CosineElement, index):
    """Argument of the cosine at a sample index, as (numerator, denominator)
    for the periodic groups or as a float number of turns otherwise."""
    g = phi.group
    if g.kind is Kind.CYCLIC:
        return (phi.coord * np.mod(index, g.order)) % g.order, g.order
    if g.kind is Kind.CIRCLE:
        return (phi.coord * np.mod(index, g.samples)) % g.samples, g.samples
    if g.kind is Kind.INTEGERS:
        return phi.coord * (np.asarray(index) - g.radius), None
    return phi.coord * ((np.asarray(index) - g.origin) * g.step), None


def _cos_at(phi, index):
    p, n = _turns(phi, index)
    return _trig.cos2pi(p) if n is None else _trig.cos2pi_ratio(p, n)


def _sin_at(phi, index):
    p, n = _turns(phi, index)
    return _trig.sin2pi(p) if n is None else _trig.sin2pi_ratio(p, n)


def evaluate(phi: CosineElement, x) -> float:
    """phi(x) at a sample point of ``phi.group``."""
    return float(_cos_at(phi, phi.group.index_of(x)))


def values(phi: CosineElement) -> np.ndarray:
    """phi at every sample point, in index order."""
    return np.asarray(_cos_at(phi, np.arange(phi.group.size)), dtype=np.float64)


def character_pair(phi: CosineElement):
    """The character chi with phi = (chi + conj(chi)) / 2.

    Real and imaginary parts come from the same reduced angle, so
    ``chi(x).real == phi(x)`` exactly.
    """
    g = phi.group

    def chi(x) -> complex:
        i = g.index_of(x)
        return complex(float(_cos_at(phi, i)), float(_sin_at(phi, i)))

    return chi


def character_values(phi: CosineElement) -> np.ndarray:
    idx = np.arange(phi.group.size)
    return _cos_at(phi, idx) + 1j * _sin_at(phi, idx)


def dalembert_residual(phi, x, y, group: Group) -> float:
    """phi(x) phi(y) - (phi(x + y) + phi(x - y)) / 2 for any callable ``phi``.

    Raises ``ValueError`` when x + y or x - y leaves a truncation window.
    """
    s = add_points(group, x, y)
    d = add_points(group, x, negate_point(group, y))
    if s is OUT_OF_WINDOW or d is OUT_OF_WINDOW:
        raise ValueError(f"x +/- y leaves the window of {group} for x={x}, y={y}")
    return phi(x) * phi(y) - (phi(s) + phi(d)) / 2


def dalembert_table(vals: np.ndarray, group: Group) -> np.ndarray:
    """Residuals for every pair of sample indices of a periodic group.

    ``vals`` holds the function at each sample index; entry ``[i, j]`` is the
    residual at ``x = point(i), y = point(j)``.
    """
    if not group.periodic:
        raise ValueError("exhaustive residual tables need a periodic group")
    n = group.size
    i = np.arange(n)
    total = vals[(i[:, None] + i[None, :]) % n]
    diff = vals[(i[:, None] - i[None, :]) % n]
    return vals[:, None] * vals[None, :] - (total + diff) / 2


def enumerate_class(g: Group, cutoff: int | None = None) -> list[CosineElement]:
    """All cosine elements on Z_n, or those with k <= cutoff on S^1."""
    if g.kind is Kind.CYCLIC:
        return [CosineElement(g, l) for l in range(half_range_size(g.order))]
    if g.kind is Kind.CIRCLE:
        if cutoff is None:
            raise ValueError("the circle's cosine class is infinite; pass a cutoff")
        if cutoff < 0:
            raise ValueError("cutoff must be >= 0")
        return [CosineElement(g, k) for k in range(cutoff + 1)]
    raise ValueError(f"the cosine class of {g.kind.value} is a continuum and cannot be enumerated")


def coord_token(g: Group, c) -> str:
    """``cyclic4:l=1``, ``circle8:k=2``, ``integers:alpha=0.25``, ``real:y=1.5``."""
    name = {Kind.REAL: "y", Kind.INTEGERS: "alpha", Kind.CIRCLE: "k", Kind.CYCLIC: "l"}[g.kind]
    value = repr(float(c)) if g.kind in (Kind.REAL, Kind.INTEGERS) else str(int(c))
    return f"{g.token_prefix}:{name}={value}"


def parse_coord(g: Group, text: str):
    """Parse a bare number or a coordinate token for group ``g``."""
    text = text.strip()
    if ":" in text:
        prefix, _, rest = text.partition(":")
        if prefix != g.token_prefix:
            raise ValueError(f"token {text!r} does not belong to {g}")
        _, _, text = rest.partition("=")
    if g.kind in (Kind.REAL, Kind.INTEGERS):
        return float(text)
    try:
        return int(text)
    except ValueError:
        raise ValueError(f"expected an integer coordinate, got {text!r}") from None
