"""Quickhull on lattice input with per-step tracing.

The partial hull is a CCW cycle of edges.  An edge is *active* while it owns
a non-empty bucket of candidates lying strictly outside it; the bucket
always sits inside the triangle cut off by the edge and the two supporting
lines through its endpoints.  A step refines every active edge at once
(see :mod:`digiconvex._kernels`).

On digital convex input each step keeps at most half of the candidates it
starts with, so the refinement work sums to at most twice the initial
candidate count.  ``early_stop`` aborts as soon as a step keeps more.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Tuple

import numpy as np

from . import _kernels
from .geometry import Hull2D, InputError, PointSet

Vec = Tuple[int, int]

HORIZONTAL: Vec = (1, 0)


@dataclass
class Edge:
    a: int
    b: int
    # directions of the supporting lines through a and b
    sup_a: Vec
    sup_b: Vec


@dataclass(frozen=True)
class Promotion:
    """One refined edge ``a -> b`` and the vertices it gained.

    ``d1 == d2`` for a unique farthest point; otherwise ``d1 .. d2`` is the
    farthest segment, parallel to the edge.
    """

    a: Vec
    b: Vec
    sup_a: Vec
    sup_b: Vec
    d1: Vec
    d2: Vec

    def _corner(self, base: Vec, sup: Vec) -> Tuple[Fraction, Fraction]:
        # intersection of the line base + s*sup with the line d1 + t*(b - a)
        ex, ey = self.b[0] - self.a[0], self.b[1] - self.a[1]
        den = sup[0] * ey - sup[1] * ex
        num = (self.d1[0] - base[0]) * ey - (self.d1[1] - base[1]) * ex
        s = Fraction(num, den)
        return base[0] + s * sup[0], base[1] + s * sup[1]

    @property
    def e(self):
        return self._corner(self.a, self.sup_a)

    @property
    def f(self):
        return self._corner(self.b, self.sup_b)

    @property
    def twice_area_discarded(self) -> int:
        """Twice the area of triangle a b d (quadrilateral a d1 d2 b)."""
        a, b, d1, d2 = self.a, self.b, self.d1, self.d2
        if d1 == d2:
            return abs(_tw(a, b, d1))
        return abs(_tw(a, d2, d1)) + abs(_tw(a, b, d2))

    @property
    def twice_area_preserved(self) -> Tuple[Fraction, Fraction]:
        """Twice the areas of triangles a d1 e and b d2 f."""
        return abs(_tw(self.a, self.d1, self.e)), abs(_tw(self.b, self.d2, self.f))

    def discard_covers_preserved(self) -> bool:
        left, right = self.twice_area_preserved
        return self.twice_area_discarded >= left + right


def _tw(a, b, c):
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


@dataclass
class StepRecord:
    remaining_before: int
    discarded: int
    promoted: int
    remaining_after: int
    promotions: List[Promotion] = field(default_factory=list, repr=False)

    def as_line(self) -> str:
        return f"{self.remaining_before} {self.discarded} {self.promoted} {self.remaining_after}"


@dataclass
class QuickhullTrace:
    n: int
    init_discarded: int = 0
    init_remaining: int = 0
    steps: List[StepRecord] = field(default_factory=list)

    @property
    def total_candidate_scans(self) -> int:
        """Candidates examined by refinement steps (the initial pass excluded)."""
        return sum(s.remaining_before for s in self.steps)

    def promotions(self):
        for s in self.steps:
            yield from s.promotions

    def to_lines(self) -> List[str]:
        """Line-oriented export: ``remaining_before discarded promoted remaining_after``."""
        return ["# remaining_before discarded promoted remaining_after"] + [
            s.as_line() for s in self.steps
        ]


@dataclass
class QuickhullResult:
    """Hull and trace; ``hull`` is None when the half rule stopped the run."""

    hull: Optional[Hull2D]
    trace: QuickhullTrace
    stopped_early: bool = False


class PartialHull:
    """Mutable quickhull state: the edge cycle plus flat candidate buckets.

    ``active`` lists positions in ``edges`` that own a bucket;
    ``cand[offsets[i]:offsets[i + 1]]`` belongs to ``edges[active[i]]``.
    """

    def __init__(self, coords: np.ndarray, edges: List[Edge], active: List[int],
                 cand: np.ndarray, offsets: np.ndarray):
        self.coords = coords
        self.px = np.ascontiguousarray(coords[:, 0])
        self.py = np.ascontiguousarray(coords[:, 1])
        self.edges = edges
        self.active = active
        self.cand = cand
        self.offsets = offsets

    @property
    def remaining(self) -> int:
        return int(self.cand.shape[0])

    def point(self, i: int) -> Vec:
        return int(self.px[i]), int(self.py[i])

    @property
    def vertices(self) -> List[Vec]:
        return [self.point(e.a) for e in self.edges]

    def hull(self) -> Hull2D:
        return Hull2D.from_cycle(self.vertices)

    def buckets(self):
        """Map of edge position -> candidate indices (for inspection and tests)."""
        return {pos: self.cand[self.offsets[i]:self.offsets[i + 1]]
                for i, pos in enumerate(self.active)}


def _lexmin(idx: np.ndarray, coords: np.ndarray) -> int:
    # coords of a PointSet are lexicographically sorted, so the smallest index wins
    return int(idx.min())


def initialize_partial_hull(S: PointSet):
    """Build the initial partial hull.

    Returns ``(partial_hull, discarded)``.  For a collinear set (or a single
    point) the partial hull has no edges and ``partial_hull.hull()`` is the
    degenerate hull.
    """
    if S.dim != 2:
        raise InputError(f"quickhull needs 2D points, got dimension {S.dim}")
    if S.n == 0:
        raise InputError("cannot build a hull of an empty set")
    coords = S.coords
    x = coords[:, 0]
    y = coords[:, 1]
    n = S.n
    empty = np.zeros(0, dtype=np.int64)
    if n == 1:
        return _Degenerate(coords, [0]), 0
    ymax = y.max()
    ymin = y.min()
    top_row = np.flatnonzero(y == ymax)
    bot_row = np.flatnonzero(y == ymin)
    # top: leftmost of the top row; bottom: rightmost of the bottom row
    top = int(top_row[np.argmin(x[top_row])])
    bot = int(bot_row[np.argmax(x[bot_row])])
    if ymax == ymin:
        return _Degenerate(coords, [int(np.argmin(x)), int(np.argmax(x))]), n - 2
    vx = int(x[top] - x[bot])
    vy = int(y[top] - y[bot])
    side = vx * (y - y[bot]) - vy * (x - x[bot])
    smax = side.max()
    smin = side.min()
    if smax == 0 and smin == 0:
        return _Degenerate(coords, [bot, top]), n - 2
    v: Vec = (vx, vy)
    cycle = [(bot, HORIZONTAL)]
    if smin < 0:
        cycle.append((_lexmin(np.flatnonzero(side == smin), coords), v))
    cycle.append((top, HORIZONTAL))
    if smax > 0:
        cycle.append((_lexmin(np.flatnonzero(side == smax), coords), v))
    edges = [Edge(cycle[i][0], cycle[(i + 1) % len(cycle)][0], cycle[i][1],
                  cycle[(i + 1) % len(cycle)][1]) for i in range(len(cycle))]

    free = np.ones(n, dtype=bool)
    free[[c[0] for c in cycle]] = False
    active, parts = [], []
    for pos, e in enumerate(edges):
        ax, ay = int(x[e.a]), int(y[e.a])
        ex, ey = int(x[e.b]) - ax, int(y[e.b]) - ay
        outside = free & (ex * (y - ay) - ey * (x - ax) < 0)
        idx = np.flatnonzero(outside)
        if idx.size:
            active.append(pos)
            parts.append(idx)
            free &= ~outside
    cand = np.concatenate(parts).astype(np.int64) if parts else empty
    offsets = np.zeros(len(parts) + 1, dtype=np.int64)
    np.cumsum([p.size for p in parts], out=offsets[1:])
    discarded = n - len(cycle) - cand.shape[0]
    return PartialHull(coords, edges, active, cand, offsets), discarded


class _Degenerate(PartialHull):
    def __init__(self, coords: np.ndarray, idx: List[int]):
        super().__init__(coords, [], [], np.zeros(0, dtype=np.int64),
                         np.zeros(1, dtype=np.int64))
        self._idx = idx

    @property
    def vertices(self):
        return [self.point(i) for i in self._idx]


def run_step(ph: PartialHull, kernel=None) -> StepRecord:
    """Refine every active edge of ``ph`` once, in place."""
    if not ph.active:
        raise ValueError("partial hull has no active edge")
    kernel = kernel or _kernels.refine_step
    edges = ph.edges
    act = [edges[p] for p in ph.active]
    ia = np.fromiter((e.a for e in act), dtype=np.int64, count=len(act))
    ib = np.fromiter((e.b for e in act), dtype=np.int64, count=len(act))
    before = ph.remaining
    p1, p2, new_cand, new_offsets, discarded = kernel(
        ph.px, ph.py, ph.cand, ph.offsets, ph.px[ia], ph.py[ia], ph.px[ib], ph.py[ib])
    p1 = p1.tolist()
    p2 = p2.tolist()
    sizes = np.diff(new_offsets).tolist()

    new_edges: List[Edge] = []
    new_active: List[int] = []
    keep_slices = []
    promotions = []
    promoted = 0
    k = 0
    active_set = dict(zip(ph.active, range(len(act))))
    for pos, e in enumerate(edges):
        i = active_set.get(pos)
        if i is None:
            new_edges.append(e)
            continue
        d1, d2 = p1[i], p2[i]
        a, b = ph.point(e.a), ph.point(e.b)
        direction = (b[0] - a[0], b[1] - a[1])
        promotions.append(Promotion(a, b, e.sup_a, e.sup_b, ph.point(d1), ph.point(d2)))
        promoted += 1 if d1 == d2 else 2
        if sizes[2 * i]:
            new_active.append(len(new_edges))
            keep_slices.append(2 * i)
        new_edges.append(Edge(e.a, d1, e.sup_a, direction))
        if d1 != d2:
            new_edges.append(Edge(d1, d2, direction, direction))
        if sizes[2 * i + 1]:
            new_active.append(len(new_edges))
            keep_slices.append(2 * i + 1)
        new_edges.append(Edge(d2, e.b, direction, e.sup_b))
        k += 1

    # empty child buckets are dropped, so the offsets are rebuilt from the kept ones
    kept_sizes = [sizes[j] for j in keep_slices]
    offsets = np.zeros(len(kept_sizes) + 1, dtype=np.int64)
    np.cumsum(kept_sizes, out=offsets[1:])
    ph.edges = new_edges
    ph.active = new_active
    ph.cand = new_cand
    ph.offsets = offsets
    after = ph.remaining
    rec = StepRecord(before, int(discarded.sum()), promoted, after, promotions)
    if rec.remaining_after != rec.remaining_before - rec.discarded - rec.promoted:
        raise AssertionError("step accounting mismatch")
    return rec


def quickhull_traced(S: PointSet, early_stop: bool = False, kernel=None) -> QuickhullResult:
    """Convex hull of a 2D point set with a full step trace.

    With ``early_stop`` the run is abandoned after the first step that keeps
    more than half of its candidates (``2 * remaining_after >
    remaining_before``); the initial pass is exempt.
    """
    ph, init_discarded = initialize_partial_hull(S)
    trace = QuickhullTrace(S.n, init_discarded, ph.remaining)
    while ph.active:
        rec = run_step(ph, kernel)
        trace.steps.append(rec)
        if early_stop and 2 * rec.remaining_after > rec.remaining_before:
            return QuickhullResult(None, trace, True)
    return QuickhullResult(ph.hull(), trace)
