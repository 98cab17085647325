"""Command-line front end: ``cosconv {gen,transform,convolve,verify,bench}``.

Exit codes: 0 success, 1 verification failure (or a fast/naive mismatch in
``bench``), 2 usage error.  ``COSCONV_SEED`` sets the default seed.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from contextlib import contextmanager

import numpy as np

from . import bench as bench_mod
from . import csvio
from .algebra import Signal, anticonvolve, convolve, cosine_convolve
from .cosine_class import from_coord, half_range_size, parse_coord
from .groups import Group, Kind, parse_group
from .rng import SplitMix64
from .transform import (
    Spectrum,
    cosine_convolve_fast,
    cosine_transform_integers,
    cosine_transform_real,
    dct,
    fourier_cosine_coeffs,
)
from .verify import SuiteConfig, box, run_suite

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2
SEED_ENV = "COSCONV_SEED"


class UsageError(Exception):
    pass


def default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 42
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{SEED_ENV}={raw!r} is not an integer") from None


@contextmanager
def _output(path):
    if path in (None, "-"):
        yield sys.stdout
    else:
        with open(path, "w", newline="\n") as fh:
            yield fh


def _read_signal(path, group):
    if path == "-":
        return csvio.read_signal(sys.stdin, group)
    with open(path) as fh:
        return csvio.read_signal(fh, group)


def _group_arg(text):
    return parse_group(text) if text else None


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"expected a comma-separated list of integers, got {text!r}") from None


# -- gen --------------------------------------------------------------------


def generate(group: Group, kind: str) -> Signal:
    """Signals by name: ``delta:<point>``, ``box[:a:b]``, ``gaussian``, ``random:<seed>``."""
    name, _, arg = kind.partition(":")
    if name == "delta":
        point = arg or "0"
        p = int(point) if group.kind in (Kind.CYCLIC, Kind.INTEGERS) else float(point)
        return Signal.delta(group, p)
    if name == "box":
        lo, _, hi = arg.partition(":") if arg else ("0", "", "1")
        return box(group, float(lo), float(hi))
    if name == "gaussian":
        return Signal.from_function(group, lambda x: np.exp(-np.pi * np.asarray(x, float) ** 2))
    if name == "random":
        if not arg:
            raise UsageError("random generator needs a seed, e.g. random:42")
        return Signal(group, SplitMix64(int(arg)).uniform(group.size))
    raise UsageError(f"unknown generator {kind!r}; use delta:<p>, box[:a:b], gaussian, random:<seed>")


def cmd_gen(args) -> int:
    group = parse_group(args.group)
    f = generate(group, args.kind)
    with _output(args.output) as out:
        csvio.write_signal(f, out)
    return EXIT_OK


# -- transform --------------------------------------------------------------


def compute_transform(f: Signal, coords=None, count=None, naive=False, full=False) -> Spectrum:
    g = f.group
    if g.kind is Kind.CYCLIC:
        m = g.order if full else half_range_size(g.order)
        S = dct(f, full=full, naive=naive)
        if coords is None and count is None:
            return S
        wanted = list(range(count)) if coords is None else [int(c) for c in coords]
        for l in wanted:
            if not full:
                from_coord(g, l)  # domain check
            elif not 0 <= l < m:
                raise ValueError(f"l={l} outside full range 0..{m - 1}")
        return Spectrum(g, wanted, S.values[wanted], S.kind)
    if g.kind is Kind.CIRCLE:
        if coords is None:
            k_max = (g.samples - 1) // 2 if count is None else count - 1
            return fourier_cosine_coeffs(f, k_max)
        ks = [int(c) for c in coords]
        S = fourier_cosine_coeffs(f, max(ks))
        return Spectrum(g, ks, S.values[ks], S.kind)
    if coords is None:
        raise UsageError(f"--coords is required for the {g.kind.value} group")
    if g.kind is Kind.REAL:
        return cosine_transform_real(f, coords)
    return cosine_transform_integers(f, coords)


def cmd_transform(args) -> int:
    f = _read_signal(args.input, _group_arg(args.group))
    coords = None
    if args.coords:
        coords = [parse_coord(f.group, c) for c in args.coords.split(",") if c.strip()]
    S = compute_transform(f, coords, args.count, args.naive, args.full)
    with _output(args.output) as out:
        if args.tokens:
            out.write(f"# group={S.group.describe()} transform={S.kind}\ncoord,value\n")
            for tok, v in zip(S.tokens(), S.values):
                out.write(f"{tok},{csvio.fmt(v)}\n")
        else:
            csvio.write_spectrum(S, out)
    return EXIT_OK


# -- convolve ---------------------------------------------------------------

_MODES = {"classic": convolve, "anti": anticonvolve, "cosine": cosine_convolve}


def cmd_convolve(args) -> int:
    group = _group_arg(args.group)
    f = _read_signal(args.f, group)
    g = _read_signal(args.g, group if group is not None else f.group)
    if f.group != g.group:
        raise ValueError(f"group mismatch: {f.group} vs {g.group}")
    if args.fast:
        if args.mode != "cosine" or not f.group.periodic:
            raise UsageError("--fast applies to cosine mode on a periodic group")
        out_sig = cosine_convolve_fast(f, g)
    else:
        out_sig = _MODES[args.mode](f, g)
    with _output(args.output) as out:
        csvio.write_signal(out_sig, out)
    return EXIT_OK


# -- verify -----------------------------------------------------------------


def cmd_verify(args) -> int:
    seed = default_seed() if args.seed is None else args.seed
    kwargs = {"seed": seed}
    if args.trials is not None:
        kwargs["trials"] = args.trials
    if args.cyclic_sizes:
        kwargs["cyclic_sizes"] = tuple(_int_list(args.cyclic_sizes))
    if args.circle_sizes:
        kwargs["circle_sizes"] = tuple(_int_list(args.circle_sizes))
    if args.tol is not None:
        if not (args.tol >= 0 and math.isfinite(args.tol)):
            raise UsageError("--tol must be a finite number >= 0")
        kwargs["tolerances"] = {"*": args.tol}
    report = run_suite(SuiteConfig(**kwargs))
    with _output(args.report) as out:
        out.write(report.to_text())
    if args.csv:
        with _output(args.csv) as out:
            out.write(report.to_csv())
    return EXIT_OK if report.passed else EXIT_FAIL


# -- bench ------------------------------------------------------------------


def cmd_bench(args) -> int:
    sizes = _int_list(args.sizes)
    if not sizes or min(sizes) < 1:
        raise UsageError("--sizes needs integers >= 1")
    if args.repeats < 1:
        raise UsageError("--repeats must be >= 1")
    seed = default_seed() if args.seed is None else args.seed
    try:
        rows = bench_mod.run_bench(sizes, args.repeats, seed)
    except bench_mod.OracleMismatch as exc:
        print(f"cosconv bench: {exc}", file=sys.stderr)
        return EXIT_FAIL
    with _output(args.output) as out:
        out.write(bench_mod.to_csv(rows))
    return EXIT_OK


# -- entry point ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cosconv", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="write a named signal as point,value CSV")
    g.add_argument("--group", required=True, help="e.g. cyclic:4, circle:8, integers:5, real:L=8,h=0.125")
    g.add_argument("--kind", required=True, help="delta:<point>, box[:a:b], gaussian, random:<seed>")
    g.add_argument("-o", "--output", default="-")
    g.set_defaults(func=cmd_gen)

    t = sub.add_parser("transform", help="cosine transform of a signal CSV")
    t.add_argument("--group", help="defaults to the input file's group line")
    t.add_argument("--input", "-i", required=True)
    t.add_argument("--coords", help="comma-separated coordinates (y, alpha, k or l)")
    t.add_argument("--count", type=int, help="first COUNT coordinates (circle and cyclic)")
    t.add_argument("--naive", action="store_true", help="direct O(n^2) sum instead of the FFT path")
    t.add_argument("--full", action="store_true", help="all n DCT values instead of the half range")
    t.add_argument("--tokens", action="store_true", help="write coordinates as group-kind:coord tokens")
    t.add_argument("-o", "--output", default="-")
    t.set_defaults(func=cmd_transform)

    c = sub.add_parser("convolve", help="classic, anti or cosine convolution of two signal CSVs")
    c.add_argument("--group")
    c.add_argument("--f", required=True)
    c.add_argument("--g", required=True)
    c.add_argument("--mode", choices=sorted(_MODES), default="cosine")
    c.add_argument("--fast", action="store_true", help="transform-domain path (periodic groups)")
    c.add_argument("-o", "--output", default="-")
    c.set_defaults(func=cmd_convolve)

    v = sub.add_parser("verify", help="run the property verification suite")
    v.add_argument("--seed", type=int, help=f"default: ${SEED_ENV} or 42")
    v.add_argument("--trials", type=int)
    v.add_argument("--tol", type=float, help="override every tolerance")
    v.add_argument("--cyclic-sizes")
    v.add_argument("--circle-sizes")
    v.add_argument("--report", default="-", help="text report path (default stdout)")
    v.add_argument("--csv", help="also write property,residual,tol,verdict CSV")
    v.set_defaults(func=cmd_verify)

    b = sub.add_parser("bench", help="time naive against fast paths on Z_n")
    b.add_argument("--sizes", default="1,16,256,1024,4096")
    b.add_argument("--repeats", type=int, default=5)
    b.add_argument("--seed", type=int)
    b.add_argument("-o", "--output", default="-")
    b.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"cosconv {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
