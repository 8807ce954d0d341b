"""Exact integer predicates and the basic value types.

Coordinates are bounded by ``COORD_LIMIT`` (2**30).  Coordinate differences
are then below 2**31 and every 2D cross product stays strictly inside the
int64 range, which is what lets the compiled kernels work on plain int64
arrays.  The Python-level predicates here use Python ints and are exact for
any input.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from numbers import Integral
from typing import Iterable, Optional, Sequence, Tuple

import numpy as np

LatticePoint = Tuple[int, ...]

COORD_LIMIT = 2**30


class InputError(ValueError):
    """Malformed or out-of-range input."""


class ResourceError(RuntimeError):
    """A configured resource cap would be exceeded."""


class InvariantError(AssertionError):
    """An internal invariant failed; indicates a malformed intermediate value."""


@dataclass(frozen=True, eq=False)
class PointSet:
    """Deduplicated lattice points of a fixed dimension.

    ``coords`` is a read-only ``(n, dim)`` int64 array in lexicographic order.
    """

    dim: int
    coords: np.ndarray
    duplicates: bool = False
    _members: Optional[frozenset] = field(default=None, repr=False, compare=False)

    def __len__(self) -> int:
        return self.coords.shape[0]

    def __iter__(self):
        return iter(self.points)

    def __contains__(self, p) -> bool:
        return tuple(int(c) for c in p) in self.members

    @property
    def n(self) -> int:
        return self.coords.shape[0]

    @property
    def points(self) -> list:
        return [tuple(int(c) for c in row) for row in self.coords.tolist()]

    @property
    def members(self) -> frozenset:
        if self._members is None:
            object.__setattr__(self, "_members", frozenset(map(tuple, self.coords.tolist())))
        return self._members

    @property
    def bbox(self) -> Optional[Tuple[LatticePoint, LatticePoint]]:
        if self.n == 0:
            return None
        lo = tuple(int(v) for v in self.coords.min(axis=0))
        hi = tuple(int(v) for v in self.coords.max(axis=0))
        return lo, hi

    def __eq__(self, other) -> bool:
        if not isinstance(other, PointSet):
            return NotImplemented
        return self.dim == other.dim and np.array_equal(self.coords, other.coords)

    def __hash__(self) -> int:
        return hash((self.dim, self.coords.tobytes()))


HULL_KINDS = ("full", "segment", "point", "empty")


@dataclass(frozen=True)
class Hull2D:
    """Strictly convex CCW vertex cycle, starting at the lexicographically
    smallest vertex.  Degenerate hulls carry one or two vertices."""

    vertices: Tuple[LatticePoint, ...]
    kind: str

    def __post_init__(self):
        if self.kind not in HULL_KINDS:
            raise ValueError(f"unknown hull kind {self.kind!r}")

    @classmethod
    def from_cycle(cls, vertices: Sequence[Sequence[int]]) -> "Hull2D":
        verts = [tuple(int(c) for c in v) for v in vertices]
        if not verts:
            return cls((), "empty")
        if len(verts) == 1:
            return cls((verts[0],), "point")
        if len(verts) == 2:
            return cls(tuple(sorted(verts)), "segment")
        k = verts.index(min(verts))
        return cls(tuple(verts[k:] + verts[:k]), "full")

    @property
    def h(self) -> int:
        """Edge count; a segment has one edge and a point none."""
        return {"full": len(self.vertices), "segment": 1}.get(self.kind, 0)

    def edges(self):
        v = self.vertices
        if self.kind == "full":
            return [(v[i], v[(i + 1) % len(v)]) for i in range(len(v))]
        if self.kind == "segment":
            return [(v[0], v[1])]
        return []

    def is_strictly_convex(self) -> bool:
        if self.kind != "full":
            return True
        v = self.vertices
        m = len(v)
        return all(orientation(v[i], v[(i + 1) % m], v[(i + 2) % m]) > 0 for i in range(m))


def _check_dims(*points: Sequence[int], dim: Optional[int] = None) -> int:
    d = len(points[0]) if dim is None else dim
    for p in points:
        if len(p) != d:
            raise InputError(f"dimension mismatch: expected {d} coordinates, got {len(p)}")
    return d


def cross(a: Sequence[int], b: Sequence[int], c: Sequence[int]) -> int:
    """Twice the signed area of triangle abc."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


def orientation(a: Sequence[int], b: Sequence[int], c: Sequence[int]) -> int:
    """Sign of (b - a) x (c - a): +1 for a left turn, -1 right, 0 collinear."""
    _check_dims(a, b, c, dim=2)
    v = cross(a, b, c)
    return (v > 0) - (v < 0)


def segment_lattice_count(a: Sequence[int], b: Sequence[int]) -> int:
    """Number of lattice points on the closed segment [a, b]."""
    _check_dims(a, b)
    return math.gcd(*(abs(int(x) - int(y)) for x, y in zip(a, b))) + 1


def _is_int(v) -> bool:
    return isinstance(v, Integral) and not isinstance(v, bool)


def validate_input(raw: Iterable[Sequence[int]], d: int) -> PointSet:
    """Check, deduplicate and freeze raw integer tuples into a PointSet."""
    if not _is_int(d) or d < 1:
        raise InputError(f"dimension must be a positive integer, got {d!r}")
    if isinstance(raw, np.ndarray) and raw.size:
        if raw.ndim != 2 or raw.shape[1] != d:
            raise InputError(f"expected an (n, {d}) array, got shape {raw.shape}")
        if not np.issubdtype(raw.dtype, np.integer):
            raise InputError(f"coordinates must be integers, got dtype {raw.dtype}")
        if raw.dtype == np.uint64 and int(raw.max()) > COORD_LIMIT:
            raise InputError("coordinate exceeds the bound 2**30")
        full = raw.astype(np.int64)
        if np.abs(full).max() > COORD_LIMIT:
            raise InputError("coordinate exceeds the bound 2**30")
        arr = np.unique(full, axis=0)
        dup = arr.shape[0] != full.shape[0]
    else:
        rows = [] if isinstance(raw, np.ndarray) else list(raw)
        for i, row in enumerate(rows):
            row = tuple(row)
            if len(row) != d:
                raise InputError(f"point {i}: expected {d} coordinates, got {len(row)}")
            for c in row:
                if not _is_int(c):
                    raise InputError(f"point {i}: non-integer coordinate {c!r}")
                if abs(c) > COORD_LIMIT:
                    raise InputError(f"point {i}: coordinate {c} exceeds the bound 2**30")
        if not rows:
            arr = np.zeros((0, d), dtype=np.int64)
            dup = False
        else:
            full = np.asarray(rows, dtype=np.int64).reshape(len(rows), d)
            arr = np.unique(full, axis=0)
            dup = arr.shape[0] != full.shape[0]
    arr = np.ascontiguousarray(arr)
    arr.setflags(write=False)
    return PointSet(d, arr, dup)


def diameter_linf(S: PointSet) -> int:
    """Largest per-axis extent of the bounding box."""
    if S.n == 0:
        raise InputError("diameter of an empty set is undefined")
    lo, hi = S.bbox
    return max(h - l for l, h in zip(lo, hi))
