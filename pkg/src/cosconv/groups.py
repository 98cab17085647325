"""The four canonical groups R, Z, S^1 and Z_n, discretized.

Every group carries a finite sample set indexed ``0 .. size-1``.  The real
line and the integers are truncated to a symmetric window around 0; the
circle and the cyclic group are periodic.  All group arithmetic happens on
integer indices, so sums and negations of sample points are exact.

Points are exchanged with callers in their natural form: ``int`` for the
integers and Z_n, ``float`` for R and S^1 (S^1 points are ``j/s`` in [0, 1)).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np


class Kind(enum.Enum):
    REAL = "real"
    INTEGERS = "integers"
    CIRCLE = "circle"
    CYCLIC = "cyclic"


class _OutOfWindow:
    """Marker returned when a sum of points leaves a truncation window."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "OUT_OF_WINDOW"

    def __bool__(self):
        return False


OUT_OF_WINDOW = _OutOfWindow()

_GRID_TOL = 1e-9


@dataclass(frozen=True)
class Group:
    """Immutable descriptor of a discretized group.

    Use :func:`make_group` (or the ``real``/``integers``/``circle``/``cyclic``
    classmethods) rather than the constructor; they validate parameters.
    """

    kind: Kind
    half_width: float | None = None  # REAL
    step: float | None = None  # REAL
    radius: int | None = None  # INTEGERS
    samples: int | None = None  # CIRCLE
    order: int | None = None  # CYCLIC

    @classmethod
    def real(cls, half_width, step):
        return make_group(Kind.REAL, L=half_width, h=step)

    @classmethod
    def integers(cls, radius):
        return make_group(Kind.INTEGERS, K=radius)

    @classmethod
    def circle(cls, samples):
        return make_group(Kind.CIRCLE, s=samples)

    @classmethod
    def cyclic(cls, order):
        return make_group(Kind.CYCLIC, n=order)

    # -- layout of the sample set -------------------------------------------

    @property
    def periodic(self) -> bool:
        return self.kind in (Kind.CIRCLE, Kind.CYCLIC)

    @property
    def origin(self) -> int:
        """Index of the identity element 0."""
        if self.kind is Kind.REAL:
            return round(self.half_width / self.step)
        if self.kind is Kind.INTEGERS:
            return self.radius
        return 0

    @property
    def size(self) -> int:
        if self.kind is Kind.REAL:
            return 2 * self.origin + 1
        if self.kind is Kind.INTEGERS:
            return 2 * self.radius + 1
        if self.kind is Kind.CIRCLE:
            return self.samples
        return self.order

    @property
    def weight(self) -> float:
        return haar_weight(self)

    def points(self) -> np.ndarray:
        j = np.arange(self.size)
        if self.kind is Kind.REAL:
            return (j - self.origin) * self.step
        if self.kind is Kind.INTEGERS:
            return j - self.radius
        if self.kind is Kind.CIRCLE:
            return j / self.samples
        return j

    def point_at(self, index: int):
        if not 0 <= index < self.size:
            raise IndexError(f"index {index} outside sample set of size {self.size}")
        if self.kind is Kind.REAL:
            return (index - self.origin) * self.step
        if self.kind is Kind.INTEGERS:
            return index - self.radius
        if self.kind is Kind.CIRCLE:
            return index / self.samples
        return index

    def index_of(self, point) -> int:
        """Index of a sample point; raises ``ValueError`` for off-grid points.

        Circle points are accepted modulo 1 and cyclic points modulo n.
        """
        if self.kind is Kind.CYCLIC:
            return _as_int(point) % self.order
        if self.kind is Kind.INTEGERS:
            k = _as_int(point)
            if abs(k) > self.radius:
                raise ValueError(f"point {k} outside window [-{self.radius}, {self.radius}]")
            return k + self.radius
        if self.kind is Kind.CIRCLE:
            return _grid_index(point * self.samples, "circle") % self.samples
        i = _grid_index(point / self.step, "real-line") + self.origin
        if not 0 <= i < self.size:
            raise ValueError(f"point {point} outside window [-{self.half_width}, {self.half_width}]")
        return i

    def coerce_point(self, point):
        """Canonical form of a sample point (e.g. circle points folded into [0, 1))."""
        return self.point_at(self.index_of(point))

    # -- index arithmetic -----------------------------------------------------

    def add_indices(self, i: int, j: int):
        """Index of point(i) + point(j), or ``OUT_OF_WINDOW``."""
        if self.periodic:
            return (i + j) % self.size
        k = i + j - self.origin
        return k if 0 <= k < self.size else OUT_OF_WINDOW

    def negate_index(self, i: int) -> int:
        if self.periodic:
            return (-i) % self.size
        return 2 * self.origin - i

    # -- serialization --------------------------------------------------------

    def describe(self) -> str:
        """Flat ``kind:key=value,...`` text form, inverse of :func:`parse_group`."""
        if self.kind is Kind.REAL:
            return f"real:L={self.half_width!r},h={self.step!r}"
        if self.kind is Kind.INTEGERS:
            return f"integers:K={self.radius}"
        if self.kind is Kind.CIRCLE:
            return f"circle:s={self.samples}"
        return f"cyclic:n={self.order}"

    @property
    def token_prefix(self) -> str:
        """Short label used in coordinate tokens such as ``cyclic4:l=1``."""
        if self.kind is Kind.CIRCLE:
            return f"circle{self.samples}"
        if self.kind is Kind.CYCLIC:
            return f"cyclic{self.order}"
        return self.kind.value

    def __str__(self):
        return self.describe()


def _as_int(point) -> int:
    if isinstance(point, (int, np.integer)):
        return int(point)
    if isinstance(point, Fraction) and point.denominator == 1:
        return int(point)
    if isinstance(point, (float, np.floating)) and float(point).is_integer():
        return int(point)
    raise ValueError(f"{point!r} is not an integer point")


def _grid_index(scaled, what: str) -> int:
    if isinstance(scaled, Fraction):
        if scaled.denominator != 1:
            raise ValueError(f"{scaled} is not a {what} grid point")
        return int(scaled)
    scaled = float(scaled)
    k = round(scaled)
    if abs(scaled - k) > _GRID_TOL * max(1.0, abs(scaled)):
        raise ValueError(f"point is not on the {what} grid")
    return int(k)


def make_group(kind, **params) -> Group:
    """Build a validated :class:`Group`.

    Parameters by kind: ``real`` takes ``L`` (half width) and ``h`` (step)
    with L/h integral; ``integers`` takes ``K`` (support radius); ``circle``
    takes ``s`` (sample count, >= 2); ``cyclic`` takes ``n`` (order, >= 1).
    """
    kind = Kind(kind) if not isinstance(kind, Kind) else kind
    expected = {
        Kind.REAL: {"L", "h"},
        Kind.INTEGERS: {"K"},
        Kind.CIRCLE: {"s"},
        Kind.CYCLIC: {"n"},
    }[kind]
    if set(params) != expected:
        raise ValueError(f"{kind.value} group needs parameters {sorted(expected)}, got {sorted(params)}")

    if kind is Kind.REAL:
        L, h = float(params["L"]), float(params["h"])
        if not (math.isfinite(L) and math.isfinite(h)) or L <= 0 or h <= 0:
            raise ValueError("real line needs L > 0 and h > 0")
        ratio = L / h
        N = round(ratio)
        if N < 1 or abs(ratio - N) > _GRID_TOL * max(1.0, ratio):
            raise ValueError(f"L/h = {ratio} is not a positive integer; grid would not be symmetric")
        return Group(kind, half_width=L, step=h)
    if kind is Kind.INTEGERS:
        K = _count(params["K"], "K")
        if K < 0:
            raise ValueError("support radius K must be >= 0")
        return Group(kind, radius=K)
    if kind is Kind.CIRCLE:
        s = _count(params["s"], "s")
        if s < 2:
            raise ValueError("circle needs s >= 2 samples")
        return Group(kind, samples=s)
    n = _count(params["n"], "n")
    if n < 1:
        raise ValueError("cyclic group order n must be >= 1")
    return Group(kind, order=n)


def _count(value, name) -> int:
    try:
        return _as_int(value)
    except ValueError:
        raise ValueError(f"{name} must be an integer, got {value!r}") from None


_ALIASES = {
    "real": Kind.REAL, "r": Kind.REAL,
    "integers": Kind.INTEGERS, "int": Kind.INTEGERS, "z": Kind.INTEGERS,
    "circle": Kind.CIRCLE, "s1": Kind.CIRCLE,
    "cyclic": Kind.CYCLIC, "zn": Kind.CYCLIC,
}
_POSITIONAL = {Kind.INTEGERS: "K", Kind.CIRCLE: "s", Kind.CYCLIC: "n"}


def parse_group(text: str) -> Group:
    """Parse ``cyclic:4``, ``cyclic:n=4``, ``real:L=8,h=0.125`` and the like."""
    name, _, rest = text.strip().partition(":")
    try:
        kind = _ALIASES[name.strip().lower()]
    except KeyError:
        raise ValueError(f"unknown group kind {name!r}") from None
    params = {}
    for item in filter(None, (p.strip() for p in rest.split(","))):
        key, eq, value = item.partition("=")
        if not eq:
            if kind not in _POSITIONAL or params:
                raise ValueError(f"cannot interpret {item!r} in group descriptor {text!r}")
            key, value = _POSITIONAL[kind], item
        key = key.strip()
        value = value.strip()
        params[key] = float(value) if kind is Kind.REAL else _parse_int(value)
    return make_group(kind, **params)


def _parse_int(value: str) -> int:
    try:
        return int(value)
    except ValueError:
        raise ValueError(f"expected an integer, got {value!r}") from None


def add_points(g: Group, a, b):
    s = g.add_indices(g.index_of(a), g.index_of(b))
    return s if s is OUT_OF_WINDOW else g.point_at(s)


def negate_point(g: Group, a):
    return g.point_at(g.negate_index(g.index_of(a)))


def haar_weight(g: Group) -> float:
    """Quadrature weight of one sample: h on R, 1/s on S^1, 1 on Z and Z_n."""
    if g.kind is Kind.REAL:
        return g.step
    if g.kind is Kind.CIRCLE:
        return 1.0 / g.samples
    return 1.0
