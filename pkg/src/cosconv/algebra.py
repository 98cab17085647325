"""Signals on a discretized group and the three convolution products.

The reference products are deliberately naive: for every output sample the
sum over ``y`` runs left to right over the sample indices.  The inner loop
is vectorized across output samples only, which keeps each per-sample sum
sequential.  Fast paths in :mod:`cosconv.transform` are checked against
these.

On the truncated groups (R and Z) every signal is taken to vanish outside
its window.  Identities that rely on translation invariance only hold there
when all shifted supports stay inside the window.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .groups import Group, haar_weight


@dataclass(frozen=True, eq=False)
class Signal:
    """Samples of a function on ``group``, one value per sample index."""

    group: Group
    values: np.ndarray

    def __post_init__(self):
        v = np.array(self.values, copy=True)
        if v.dtype.kind not in "fc":
            v = v.astype(np.float64)
        elif v.dtype.kind == "f":
            v = v.astype(np.float64)
        else:
            v = v.astype(np.complex128)
        if v.shape != (self.group.size,):
            raise ValueError(
                f"signal needs {self.group.size} samples for {self.group}, got shape {v.shape}"
            )
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @classmethod
    def zeros(cls, group: Group) -> Signal:
        return cls(group, np.zeros(group.size))

    @classmethod
    def delta(cls, group: Group, point=0) -> Signal:
        v = np.zeros(group.size)
        v[group.index_of(point)] = 1.0
        return cls(group, v)

    @classmethod
    def from_function(cls, group: Group, fn) -> Signal:
        """Sample a vectorized callable at the group's points."""
        return cls(group, np.broadcast_to(fn(group.points()), (group.size,)))

    def __len__(self):
        return self.group.size

    def _check(self, other: Signal):
        if other.group != self.group:
            raise ValueError(f"group mismatch: {self.group} vs {other.group}")

    def __add__(self, other):
        self._check(other)
        return Signal(self.group, self.values + other.values)

    def __sub__(self, other):
        self._check(other)
        return Signal(self.group, self.values - other.values)

    def __neg__(self):
        return Signal(self.group, -self.values)

    def __mul__(self, c):
        return Signal(self.group, self.values * c)

    __rmul__ = __mul__

    def __truediv__(self, c):
        return Signal(self.group, self.values / c)

    def __repr__(self):
        return f"Signal({self.group}, {self.values!r})"


def _same_group(f: Signal, g: Signal) -> Group:
    if f.group != g.group:
        raise ValueError(f"group mismatch: {f.group} vs {g.group}")
    return f.group


def _extended(values: np.ndarray, group: Group) -> np.ndarray:
    """``values`` padded on both sides by one full period (or by zeros).

    Index ``size + i`` of the result is sample ``i`` shifted by any offset in
    ``(-size, size)``, wrapped for periodic groups and zero off-window.
    """
    pad = values if group.periodic else np.zeros_like(values)
    return np.concatenate([pad, values, pad])


def _shifted(ext: np.ndarray, size: int, shift: int) -> np.ndarray:
    """View ``u -> values[u + shift]`` over all output indices ``u``."""
    return ext[size + shift: 2 * size + shift]


def l1_norm(f: Signal) -> float:
    return haar_weight(f.group) * float(np.sum(np.abs(f.values)))


def translate(f: Signal, z) -> Signal:
    """``u -> f(u - z)``; zero-extended off-window on R and Z."""
    g = f.group
    shift = g.origin - g.index_of(z)
    # f(u - z) lives at index u_idx - z_idx + origin
    return Signal(g, _shifted(_extended(f.values, g), g.size, shift))


def reflect(f: Signal) -> Signal:
    """``x -> f(-x)``."""
    g = f.group
    idx = np.array([g.negate_index(i) for i in range(g.size)])
    return Signal(g, f.values[idx])


def symmetrize(f: Signal) -> Signal:
    """``f + f o iota``, an even signal with the same cosine functionals (doubled)."""
    return f + reflect(f)


def is_even(f: Signal, tol: float = 0.0) -> bool:
    if tol < 0:
        raise ValueError("tol must be >= 0")
    return float(np.max(np.abs(f.values - reflect(f).values))) <= tol


def _product_sum(f: Signal, g: Signal, sign: int) -> np.ndarray:
    """Unweighted ``sum_y f(y) g(x + sign*y)`` for every sample ``x``."""
    grp = _same_group(f, g)
    size, c = grp.size, grp.origin
    ext = _extended(g.values, grp)
    dtype = np.result_type(f.values, g.values)
    acc = np.zeros(size, dtype=dtype)
    fv = f.values
    for j in range(size):
        # y = point(j); g(x + sign*y) sits at index x_idx + sign*(j - c)
        acc += fv[j] * _shifted(ext, size, sign * (j - c))
    return acc


def convolve(f: Signal, g: Signal) -> Signal:
    """``x -> int f(y) g(x - y) dy``."""
    w = haar_weight(_same_group(f, g))
    return Signal(f.group, w * _product_sum(f, g, -1))


def anticonvolve(f: Signal, g: Signal) -> Signal:
    """``x -> int f(y) g(x + y) dy``; not commutative."""
    w = haar_weight(_same_group(f, g))
    return Signal(f.group, w * _product_sum(f, g, +1))


def cosine_convolve(f: Signal, g: Signal) -> Signal:
    """``x -> int f(y) (g(x + y) + g(x - y)) / 2 dy``.

    Computed literally as the mean of :func:`convolve` and
    :func:`anticonvolve`, halved once per output sample, so the mean
    identity holds bit for bit.
    """
    return Signal(f.group, (convolve(f, g).values + anticonvolve(f, g).values) / 2)
