"""Randomized and exhaustive certification of the algebra's identities.

Each ``check_*`` function returns a list of :class:`PropertyRecord`.
Residuals are max-abs values divided by the property's scale (for example
``1 + |f|_1 |g|_1`` for products), so every tolerance is relative.
Failures are verdicts, never exceptions.

All randomness comes from :class:`cosconv.rng.SplitMix64`; each check forks
its own stream from the suite seed, so checks are independent of each other
and of the order they run in.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Mapping

import numpy as np

from .algebra import (
    Signal,
    anticonvolve,
    convolve,
    cosine_convolve,
    l1_norm,
    reflect,
    symmetrize,
    translate,
)
from .cosine_class import (
    CosineElement,
    character_values,
    dalembert_residual,
    dalembert_table,
    enumerate_class,
    evaluate,
    from_coord,
    half_range_size,
    values,
)
from .groups import Group, Kind, add_points, negate_point
from .rng import SplitMix64
from .transform import cosine_convolve_fast, dct_fast, dct_naive, functional_apply, transform_at

Product = Callable[[Signal, Signal], Signal]

DEFAULT_TOLERANCES = {
    "submultiplicativity": 1e-10,
    "norm-equality-nonnegative": 1e-12,
    "dalembert-convolution": 1e-10,
    "gelfand-multiplicativity": 1e-10,
    "reflection-identity": 1e-12,
    "cosine-class-dalembert": 1e-12,
    "cosine-class-sup-bound": 1e-15,
    "cosine-class-unit-at-zero": 0.0,
    "character-real-part": 1e-15,
    "character-modulus": 1e-15,
    "negative-control-sine": 1e-12,
    "separation-integers": 1e-12,
    "separation-circle": 1e-12,
    "structure-space-cardinality": 0.0,
    "dct-fast-vs-naive": 1e-9,
    "cosine-convolve-fast-vs-naive": 1e-9,
}
# these default to twice the grid step of the real line used
_QUADRATURE = ("separation-sinc-real", "separation-quarter-box-real")


@dataclass(frozen=True)
class SuiteConfig:
    seed: int = 42
    trials: int = 20
    cyclic_sizes: tuple = (1, 2, 4, 8, 16, 17, 64)
    circle_sizes: tuple = (8, 16)
    real_windows: tuple = ((1.0, 0.0625),)
    integer_radii: tuple = (12,)
    exhaustive_limit: int = 16
    separation_step: float = 1 / 256
    tolerances: Mapping[str, float] = field(default_factory=dict)

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError("trials must be >= 1")
        unknown = set(self.tolerances) - set(DEFAULT_TOLERANCES) - set(_QUADRATURE) - {"*"}
        if unknown:
            raise ValueError(f"unknown tolerance names: {sorted(unknown)}")

    def tol(self, name: str) -> float:
        if name in self.tolerances:
            return float(self.tolerances[name])
        if "*" in self.tolerances:
            return float(self.tolerances["*"])
        if name in _QUADRATURE:
            return 2 * self.separation_step
        return DEFAULT_TOLERANCES[name]

    def groups(self) -> list[Group]:
        gs = [Group.cyclic(n) for n in self.cyclic_sizes]
        gs += [Group.circle(s) for s in self.circle_sizes]
        gs += [Group.real(L, h) for L, h in self.real_windows]
        gs += [Group.integers(K) for K in self.integer_radii]
        return gs

    def periodic_groups(self) -> list[Group]:
        return [g for g in self.groups() if g.periodic]

    def describe(self) -> str:
        parts = [
            f"seed={self.seed}",
            f"trials={self.trials}",
            "cyclic=" + ",".join(map(str, self.cyclic_sizes)),
            "circle=" + ",".join(map(str, self.circle_sizes)),
            "real=" + ";".join(f"L={L!r},h={h!r}" for L, h in self.real_windows),
            "integers=" + ",".join(map(str, self.integer_radii)),
        ]
        if self.tolerances:
            parts.append("tol=" + ",".join(f"{k}:{v!r}" for k, v in sorted(self.tolerances.items())))
        return " ".join(parts)


@dataclass
class PropertyRecord:
    name: str
    tag: str
    trials: int
    max_residual: float
    tol: float
    passed: bool
    skipped: int = 0
    note: str = ""

    @property
    def verdict(self) -> str:
        return "PASS" if self.passed else "FAIL"


class _Tracker:
    """Accumulates the true maximum residual of one property."""

    def __init__(self, name: str, tag: str, cfg: SuiteConfig):
        self.name, self.tag = name, tag
        self.tol = cfg.tol(name)
        self.trials = 0
        self.skipped = 0
        self.worst = 0.0
        self.notes: list[str] = []
        self.forced_fail = False

    def add(self, residual: float):
        self.trials += 1
        residual = float(residual)
        if math.isnan(residual):
            residual = math.inf
        self.worst = max(self.worst, residual)

    def record(self) -> PropertyRecord:
        passed = self.trials > 0 and self.worst <= self.tol and not self.forced_fail
        return PropertyRecord(self.name, self.tag, self.trials, self.worst, self.tol, passed,
                              self.skipped, "; ".join(self.notes))


@dataclass
class VerificationReport:
    config: SuiteConfig
    records: list[PropertyRecord]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def by_name(self, name: str) -> PropertyRecord:
        for r in self.records:
            if r.name == name:
                return r
        raise KeyError(name)

    def to_text(self) -> str:
        width = max(len(r.name) for r in self.records)
        lines = ["cosconv verification report", f"config: {self.config.describe()}"]
        for r in self.records:
            lines.append(
                f"{r.verdict}  {r.name:<{width}}  [{r.tag}]  trials={r.trials} skipped={r.skipped}"
                f"  max_residual={r.max_residual!r}  tol={r.tol!r}"
            )
            if r.note:
                lines.append(f"      note: {r.note}")
        npass = sum(r.passed for r in self.records)
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'} ({npass}/{len(self.records)} properties)")
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        rows = ["property,residual,tol,verdict"]
        rows += [f"{r.name},{r.max_residual!r},{r.tol!r},{r.verdict}" for r in self.records]
        return "\n".join(rows) + "\n"


# -- random inputs ----------------------------------------------------------


def random_signal(rng: SplitMix64, g: Group, radius: int | None = None,
                  nonnegative: bool = False) -> Signal:
    """Uniform samples in [-1, 1) (or [0, 1)), optionally zero beyond ``radius``
    index steps from the origin."""
    v = rng.random(g.size) if nonnegative else rng.uniform(g.size)
    if radius is not None:
        offset = np.abs(np.arange(g.size) - g.origin)
        v = np.where(offset <= radius, v, 0.0)
    return Signal(g, v)


def random_even(rng: SplitMix64, g: Group, radius: int | None = None) -> Signal:
    return symmetrize(random_signal(rng, g, radius))


def _half_window(g: Group) -> int:
    return g.origin // 2


def _sup(a) -> float:
    return float(np.max(np.abs(a))) if np.size(a) else 0.0


def _sampled_elements(rng: SplitMix64, g: Group, count: int) -> list[CosineElement]:
    """Cosine elements covering the coordinate domain of ``g``."""
    if g.kind is Kind.CYCLIC:
        return enumerate_class(g)
    if g.kind is Kind.CIRCLE:
        return enumerate_class(g, g.samples)
    if g.kind is Kind.REAL:
        ys = [0.0, 0.5, 3.7] + rng.uniform(count, 0.0, 4.0).tolist()
        return [from_coord(g, y) for y in ys]
    alphas = [0.0, 0.25, 0.5] + rng.uniform(count, 0.0, 0.5).tolist()
    return [from_coord(g, a) for a in alphas]


def _in_window_pairs(rng: SplitMix64, g: Group, count: int, reserve: int = 0):
    """Random (x, y) with |x| + |y| + reserve inside the window, in index units.

    Returns the accepted point pairs and the number of rejected draws.
    """
    N = g.origin
    draws = rng.integers(2 * count, 2 * N + 1) - N
    pairs, skipped = [], 0
    for a, b in draws.reshape(count, 2):
        if abs(a) + abs(b) + reserve > N:
            skipped += 1
            continue
        pairs.append((g.point_at(int(a) + N), g.point_at(int(b) + N)))
    return pairs, skipped


# -- checks -----------------------------------------------------------------


def check_submultiplicativity(cfg: SuiteConfig, cosine_conv: Product = cosine_convolve):
    rng = SplitMix64(cfg.seed).fork("submultiplicativity")
    ineq = _Tracker("submultiplicativity", "banach-algebra-norm", cfg)
    eq = _Tracker("norm-equality-nonnegative", "banach-algebra-norm", cfg)
    for g in cfg.groups():
        for _ in range(cfg.trials):
            f, h = random_signal(rng, g), random_signal(rng, g)
            rhs = l1_norm(f) * l1_norm(h)
            ineq.add(max(0.0, l1_norm(cosine_conv(f, h)) - rhs) / (1 + rhs))
            if g.periodic:
                f, h = random_signal(rng, g, nonnegative=True), random_signal(rng, g, nonnegative=True)
                rhs = l1_norm(f) * l1_norm(h)
                eq.add(abs(l1_norm(cosine_conv(f, h)) - rhs) / (1 + rhs))
    return [ineq.record(), eq.record()]


def dalembert_convolution_residual(g_sig: Signal, x, y, cosine_conv: Product = cosine_convolve) -> float:
    """Scaled max-abs gap between the two sides of the d'Alembert property."""
    grp = g_sig.group
    lhs = cosine_conv(translate(g_sig, y), translate(g_sig, x))
    shifted = (translate(g_sig, add_points(grp, x, y))
               + translate(g_sig, add_points(grp, x, negate_point(grp, y)))) / 2
    rhs = cosine_conv(g_sig, shifted)
    return _sup(lhs.values - rhs.values) / (1 + l1_norm(g_sig) ** 2)


def check_dalembert_convolution(cfg: SuiteConfig, cosine_conv: Product = cosine_convolve,
                                evens: int | None = None):
    """d'Alembert property for even g; exhaustive over (x, y) on small periodic groups.

    ``evens`` sets how many random even signals are drawn per group
    (default: ``cfg.trials``).
    """
    rng = SplitMix64(cfg.seed).fork("dalembert-convolution")
    t = _Tracker("dalembert-convolution", "dalembert-property", cfg)
    evens = cfg.trials if evens is None else evens
    for g in cfg.groups():
        if g.periodic:
            pts = [g.point_at(i) for i in range(g.size)]
            exhaustive = g.size <= cfg.exhaustive_limit
            for _ in range(evens):
                gs = random_even(rng, g)
                if exhaustive:
                    pairs = [(x, y) for x in pts for y in pts]
                else:
                    idx = rng.integers(2 * cfg.trials, g.size).reshape(-1, 2)
                    pairs = [(pts[a], pts[b]) for a, b in idx]
                for x, y in pairs:
                    t.add(dalembert_convolution_residual(gs, x, y, cosine_conv))
        else:
            radius = g.origin // 3
            for _ in range(evens):
                gs = random_even(rng, g, radius)
                pairs, skipped = _in_window_pairs(rng, g, cfg.trials, radius)
                t.skipped += skipped
                for x, y in pairs:
                    t.add(dalembert_convolution_residual(gs, x, y, cosine_conv))
    # odd control: the evenness hypothesis matters; no verdict impact
    periodic = [g for g in cfg.periodic_groups() if g.size >= 4]
    if periodic:
        g = periodic[0]
        raw = random_signal(rng, g)
        odd = raw - reflect(raw)
        r = dalembert_convolution_residual(odd, g.point_at(1), g.point_at(1), cosine_conv)
        t.notes.append(f"odd control on {g}: residual={r!r}")
    return [t.record()]


def check_multiplicativity(cfg: SuiteConfig, cosine_conv: Product = cosine_convolve):
    """m_phi(f *c g) = m_phi(f) m_phi(g); windowed groups use half-window supports."""
    rng = SplitMix64(cfg.seed).fork("gelfand-multiplicativity")
    t = _Tracker("gelfand-multiplicativity", "cosine-functional-multiplicative", cfg)
    for g in cfg.groups():
        elements = _sampled_elements(rng, g, 4)
        radius = None if g.periodic else _half_window(g)
        for _ in range(cfg.trials):
            f, h = random_signal(rng, g, radius), random_signal(rng, g, radius)
            lhs = transform_at(cosine_conv(f, h), elements)
            rhs = transform_at(f, elements) * transform_at(h, elements)
            t.add(_sup(lhs - rhs) / (1 + l1_norm(f) * l1_norm(h)))
    return [t.record()]


def check_reflection_identity(cfg: SuiteConfig, cosine_conv: Product = cosine_convolve):
    rng = SplitMix64(cfg.seed).fork("reflection-identity")
    t = _Tracker("reflection-identity", "reflection-lemma", cfg)
    for g in cfg.groups():
        elements = _sampled_elements(rng, g, 4)
        for _ in range(cfg.trials):
            f = random_signal(rng, g)
            n1 = l1_norm(f)
            conv_gap = _sup(cosine_conv(reflect(f), f).values - cosine_conv(f, f).values)
            t.add(conv_gap / (1 + n1 * n1))
            m_sym = transform_at(symmetrize(f), elements)
            t.add(_sup(m_sym - 2 * transform_at(f, elements)) / (1 + n1))
    return [t.record()]


def check_cosine_class(cfg: SuiteConfig):
    rng = SplitMix64(cfg.seed).fork("cosine-class")
    tag = "character-decomposition"
    dal = _Tracker("cosine-class-dalembert", tag, cfg)
    sup = _Tracker("cosine-class-sup-bound", tag, cfg)
    one = _Tracker("cosine-class-unit-at-zero", tag, cfg)
    real_part = _Tracker("character-real-part", tag, cfg)
    modulus = _Tracker("character-modulus", tag, cfg)
    control = _Tracker("negative-control-sine", tag, cfg)

    for g in cfg.groups():
        elements = _sampled_elements(rng, g, 4)
        for phi in elements:
            v = values(phi)
            chi = character_values(phi)
            sup.add(max(0.0, _sup(v) - 1.0))
            one.add(abs(evaluate(phi, 0) - 1.0))
            real_part.add(_sup(chi.real - v))
            modulus.add(_sup(np.abs(chi) - 1.0))
            if g.periodic:
                dal.add(_sup(dalembert_table(v, g)))
            else:
                pairs, skipped = _in_window_pairs(rng, g, cfg.trials)
                dal.skipped += skipped
                for x, y in pairs:
                    dal.add(abs(dalembert_residual(phi, x, y, g)))

    # sin(2 pi x) is bounded and nonzero but not a cosine: must be caught
    circle = Group.circle(8)
    r = dalembert_residual(lambda x: math.sin(2 * math.pi * x), 0.25, 0.25, circle)
    control.add(abs(r - 1.0))
    caught = abs(r) > dal.tol
    control.notes.append(f"sin(2 pi x) at x=y=1/4: residual={r!r} caught={caught}")
    control.forced_fail = not caught
    return [dal.record(), sup.record(), one.record(), real_part.record(), modulus.record(),
            control.record()]


def _sinc(u: float) -> float:
    return 1.0 if u == 0 else math.sin(u) / u


def box(g: Group, a: float, b: float) -> Signal:
    """Indicator of [a, b] sampled on the grid (endpoints included)."""
    x = g.points()
    eps = 1e-9 * (g.step if g.kind is Kind.REAL else 1.0)
    return Signal(g, ((x >= a - eps) & (x <= b + eps)).astype(np.float64))


def check_separation_functionals(cfg: SuiteConfig):
    rng = SplitMix64(cfg.seed).fork("separation")
    tag = "separation-functionals"
    h = cfg.separation_step
    real = Group.real(2.0, h)

    sinc_t = _Tracker("separation-sinc-real", tag, cfg)
    ys = [0.0, 0.25, 0.5, 1.0, 1.5, 2.3, 3.7, 4.0] + rng.uniform(cfg.trials, 0.0, 4.0).tolist()
    m = transform_at(box(real, 0.0, 1.0), [from_coord(real, y) for y in ys])
    for y, val in zip(ys, m):
        sinc_t.add(abs(val - _sinc(2 * math.pi * y)))

    quarter = _Tracker("separation-quarter-box-real", tag, cfg)
    for steps in (8, 16, 64, 128, 256):
        y = 1.0 / (4 * steps * h)
        val = functional_apply(from_coord(real, y), box(real, 0.0, steps * h))
        quarter.add(abs(val - 1.0 / (2 * math.pi * y)))

    ints = _Tracker("separation-integers", tag, cfg)
    zg = Group.integers(2)
    alphas = sorted(set([0.0, 0.5] + rng.uniform(cfg.trials, 0.0, 0.5).tolist()))
    m = np.array([functional_apply(from_coord(zg, a), Signal.delta(zg, 1)) for a in alphas])
    for a, val in zip(alphas, m):
        ints.add(abs(val - math.cos(2 * math.pi * a)))
    if not np.all(np.diff(m) < 0):
        ints.forced_fail = True
        ints.notes.append("m(delta_1) is not strictly decreasing in alpha")

    circ = _Tracker("separation-circle", tag, cfg)
    for s in cfg.circle_sizes:
        cg = Group.circle(s)
        ones = Signal(cg, np.ones(s))
        for k in range(s):
            val = functional_apply(from_coord(cg, k), ones)
            circ.add(abs(val - (1.0 if k == 0 else 0.0)))
    return [sinc_t.record(), quarter.record(), ints.record(), circ.record()]


def structure_space_violations(n: int) -> int:
    """Count failures of the half-range picture of the structure space of Z_n."""
    g = Group.cyclic(n)
    elements = enumerate_class(g)
    bad = int(len(elements) != half_range_size(n))
    table = np.array([values(phi) for phi in elements])
    for i in range(len(elements)):
        for j in range(i + 1, len(elements)):
            if not np.max(np.abs(table[i] - table[j])) > 0:
                bad += 1
    # l and n - l give the same function, which is why the range is halved
    k = np.arange(n)
    for l in range(1, n):
        a = np.cos(2 * np.pi * ((l * k) % n) / n)
        b = np.cos(2 * np.pi * (((n - l) * k) % n) / n)
        if np.max(np.abs(a - b)) > 1e-12:
            bad += 1
    return bad


def check_structure_space(cfg: SuiteConfig):
    t = _Tracker("structure-space-cardinality", "half-range-structure-space", cfg)
    for n in cfg.cyclic_sizes:
        t.add(structure_space_violations(n))
    return [t.record()]


def check_fast_paths(cfg: SuiteConfig):
    rng = SplitMix64(cfg.seed).fork("fast-paths")
    tag = "fast-path-oracle"
    d = _Tracker("dct-fast-vs-naive", tag, cfg)
    c = _Tracker("cosine-convolve-fast-vs-naive", tag, cfg)
    for n in cfg.cyclic_sizes:
        g = Group.cyclic(n)
        for _ in range(cfg.trials):
            f, h = random_signal(rng, g), random_signal(rng, g)
            d.add(_sup(dct_fast(f).values - dct_naive(f).values) / (1 + l1_norm(f)))
            gap = _sup(cosine_convolve_fast(f, h).values - cosine_convolve(f, h).values)
            c.add(gap / (1 + l1_norm(f) * l1_norm(h)))
    return [d.record(), c.record()]


CHECKS = (
    check_submultiplicativity,
    check_dalembert_convolution,
    check_multiplicativity,
    check_reflection_identity,
    check_cosine_class,
    check_separation_functionals,
    check_structure_space,
    check_fast_paths,
)


def run_suite(cfg: SuiteConfig | None = None) -> VerificationReport:
    cfg = SuiteConfig() if cfg is None else cfg
    records = []
    for check in CHECKS:
        records.extend(check(cfg))
    return VerificationReport(cfg, records)


def broken_cosine_convolve(f: Signal, g: Signal) -> Signal:
    """Cosine convolution with the anticonvolution sign flipped (harness self-test)."""
    return Signal(f.group, (convolve(f, g).values - anticonvolve(f, g).values) / 2)
