"""CSV files for signals and spectra.

Both formats are LF-terminated, start with one ``#`` metadata line and one
column header, and write floats with 17 significant digits (``%.17g``),
which round-trips every double exactly::

    # group=cyclic:n=4
    point,value
    0,1
    1,0

    # group=cyclic:n=4 transform=dct
    coord,value
    0,10
    1,-2

Complex values are written as ``(re+imj)`` and read back with ``complex``.
"""

from __future__ import annotations

import io

import numpy as np

from .algebra import Signal
from .cosine_class import parse_coord
from .groups import Group, Kind, parse_group
from .transform import Spectrum


def fmt(v) -> str:
    if isinstance(v, (complex, np.complexfloating)):
        v = complex(v)
        return f"({v.real:.17g}{v.imag:+.17g}j)"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return f"{float(v):.17g}"


def _parse_value(text: str):
    text = text.strip()
    if text.startswith("(") or text.endswith("j"):
        return complex(text)
    return float(text)


def _fmt_point(g: Group, p) -> str:
    return str(int(p)) if g.kind in (Kind.CYCLIC, Kind.INTEGERS) else fmt(float(p))


def _meta(line: str) -> dict:
    out = {}
    for item in line.lstrip("#").split():
        key, _, value = item.partition("=")
        out[key] = value
    return out


def write_signal(f: Signal, stream) -> None:
    g = f.group
    stream.write(f"# group={g.describe()}\n")
    stream.write("point,value\n")
    for p, v in zip(g.points(), f.values):
        stream.write(f"{_fmt_point(g, p)},{fmt(v)}\n")


def signal_to_csv(f: Signal) -> str:
    buf = io.StringIO()
    write_signal(f, buf)
    return buf.getvalue()


def _rows(stream, header: str, meta: dict):
    seen_header = False
    for lineno, raw in enumerate(stream, start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            meta.update(_meta(line))
            continue
        if not seen_header:
            if line.replace(" ", "") != header:
                raise ValueError(f"line {lineno}: expected header {header!r}, got {line!r}")
            seen_header = True
            continue
        cells = line.split(",")
        if len(cells) != 2:
            raise ValueError(f"line {lineno}: expected two columns, got {line!r}")
        yield lineno, cells
    if not seen_header:
        raise ValueError(f"missing header {header!r}")


def read_signal(stream, group: Group | None = None) -> Signal:
    """Read a signal; ``group`` defaults to the file's ``# group=`` line.

    When both are present they must agree.  Every sample point must appear
    exactly once; row order is free.
    """
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    entries = []
    meta = {}
    for lineno, (p, v) in _rows(stream, "point,value", meta):
        entries.append((lineno, p, v))
    group = _resolve_group(meta, group)
    vals = [None] * group.size
    for lineno, p, v in entries:
        try:
            point = int(p) if group.kind in (Kind.CYCLIC, Kind.INTEGERS) else float(p)
            i = group.index_of(point)
            value = _parse_value(v)
        except ValueError as exc:
            raise ValueError(f"line {lineno}: {exc}") from None
        if vals[i] is not None:
            raise ValueError(f"line {lineno}: point {p} appears twice")
        vals[i] = value
    missing = [group.point_at(i) for i, v in enumerate(vals) if v is None]
    if missing:
        raise ValueError(f"{len(missing)} sample points of {group} missing, first {missing[0]}")
    return Signal(group, np.array(vals))


def _resolve_group(meta: dict, group: Group | None) -> Group:
    declared = parse_group(meta["group"]) if "group" in meta else None
    if group is None and declared is None:
        raise ValueError("no group given and the file has no '# group=' line")
    if group is not None and declared is not None and group != declared:
        raise ValueError(f"file declares {declared}, expected {group}")
    return group if group is not None else declared


def write_spectrum(S: Spectrum, stream) -> None:
    g = S.group
    stream.write(f"# group={g.describe()} transform={S.kind}\n")
    stream.write("coord,value\n")
    for c, v in zip(S.coords, S.values):
        coord = str(int(c)) if g.kind in (Kind.CYCLIC, Kind.CIRCLE) else fmt(float(c))
        stream.write(f"{coord},{fmt(v)}\n")


def spectrum_to_csv(S: Spectrum) -> str:
    buf = io.StringIO()
    write_spectrum(S, buf)
    return buf.getvalue()


def read_spectrum(stream, group: Group | None = None) -> Spectrum:
    if isinstance(stream, str):
        stream = io.StringIO(stream)
    coords, vals = [], []
    meta = {}
    for lineno, (c, v) in _rows(stream, "coord,value", meta):
        coords.append(c)
        vals.append(_parse_value(v))
    group = _resolve_group(meta, group)
    return Spectrum(group, [parse_coord(group, c) for c in coords], np.array(vals),
                    meta.get("transform", "gelfand"))
