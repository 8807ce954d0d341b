"""Plain-text point-set files.

Layout: an ``d n`` header line, then ``n`` rows of ``d`` integers.  Lines
whose first non-blank character is ``#`` and blank lines are ignored.
Duplicate rows are allowed; they are merged on load and flagged.
"""
from __future__ import annotations

import os
from typing import Iterable, Optional, Sequence, TextIO, Union

from .geometry import COORD_LIMIT, InputError, PointSet, validate_input

PathOrFile = Union[str, os.PathLike, TextIO]


def _content_lines(lines: Iterable[str]):
    for lineno, raw in enumerate(lines, 1):
        text = raw.strip()
        if text and not text.startswith("#"):
            yield lineno, text.split()


def _ints(fields, lineno: int):
    try:
        return [int(f) for f in fields]
    except ValueError:
        raise InputError(f"line {lineno}: expected integers, got {' '.join(fields)!r}") from None


def parse_point_set(lines: Iterable[str], dim_override: Optional[int] = None) -> PointSet:
    """Parse file lines.  ``dim_override`` replaces the header's dimension."""
    rows = _content_lines(lines)
    try:
        lineno, fields = next(rows)
    except StopIteration:
        raise InputError("line 1: missing 'd n' header") from None
    header = _ints(fields, lineno)
    if len(header) != 2:
        raise InputError(f"line {lineno}: header must be 'd n', got {len(header)} fields")
    d, n = header
    if dim_override is not None:
        d = dim_override
    if d < 1 or n < 0:
        raise InputError(f"line {lineno}: bad header d={d} n={n}")
    pts = []
    last = lineno
    for lineno, fields in rows:
        last = lineno
        if len(pts) == n:
            raise InputError(f"line {lineno}: more than the {n} rows announced by the header")
        if len(fields) != d:
            raise InputError(f"line {lineno}: expected {d} coordinates, got {len(fields)}")
        row = _ints(fields, lineno)
        if any(abs(c) > COORD_LIMIT for c in row):
            raise InputError(f"line {lineno}: coordinate magnitude exceeds 2^30")
        pts.append(row)
    if len(pts) != n:
        raise InputError(f"line {last}: header announces {n} rows, file has {len(pts)}")
    return validate_input(pts, d)


def read_point_set(src: PathOrFile, dim_override: Optional[int] = None) -> PointSet:
    if hasattr(src, "read"):
        return parse_point_set(src, dim_override)
    try:
        with open(src, encoding="utf-8") as fh:
            return parse_point_set(fh, dim_override)
    except OSError as exc:
        raise InputError(f"cannot read {src}: {exc.strerror}") from None


def format_point_set(points: Sequence[Sequence[int]], d: int) -> str:
    out = [f"{d} {len(points)}"]
    out.extend(" ".join(str(int(c)) for c in p) for p in points)
    return "\n".join(out) + "\n"


def write_point_set(S: PointSet, dst: PathOrFile) -> None:
    text = format_point_set(S.points, S.dim)
    if hasattr(dst, "write"):
        dst.write(text)
        return
    with open(dst, "w", encoding="utf-8") as fh:
        fh.write(text)
