"""Digital convexity in any fixed dimension by walking the dilated lattice set.

``S'`` is the set of lattice points whose centred unit cube meets conv(S).
It contains conv(S) ∩ Z^d and is connected under axis-neighbour moves, so a
stack-driven walk seeded with S visits all of it.  Hull membership of each
visited point is decided by an exact LP.

Two variants: ``count`` tallies the visited points inside conv(S) and
compares with n; ``early_exit`` stops at the first visited point outside S
that lies in conv(S).
"""
from __future__ import annotations

import math
import os
from fractions import Fraction
from typing import List, Optional, Sequence

import numpy as np

from ._backend import BACKEND
from .geometry import InputError, LatticePoint, PointSet, ResourceError
from .lp import DEFAULT_SEED, INT_GUARD, membership_kernel, membership_python
from .report import ConvexityReport

VOLUME_CAP_ENV = "DIGICONVEX_ND_VOLUME_CAP"
DEFAULT_VOLUME_CAP = 10**8

VARIANTS = ("count", "early_exit")


def volume_cap() -> int:
    raw = os.environ.get(VOLUME_CAP_ENV)
    if raw is None:
        return DEFAULT_VOLUME_CAP
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{VOLUME_CAP_ENV} must be an integer, got {raw!r}") from None


def as_rational_point(x: Sequence) -> tuple:
    """Coordinates as reduced Fractions (denominators positive)."""
    out = []
    for c in x:
        if isinstance(c, float):
            raise InputError(f"float coordinate {c!r}; pass ints or Fractions")
        out.append(Fraction(c))
    return tuple(out)


HULL_ROWS = 0
CUBE_ROWS = 1


def _outside(S: PointSet, x: Sequence[int], den: int, mode: int) -> bool:
    """Solve max t s.t. a.(p - x) + t <= 0 over the implicit points p, within
    the box [-1, 1]; t > 0 iff a separating hyperplane exists.

    ``mode`` HULL_ROWS: p = s (x given as integers over ``den``).
    ``mode`` CUBE_ROWS: p = 2s + v for v in {-1, 1}^d against 2x; row ``i`` is
    point ``i >> d`` with sign bits ``i & (2^d - 1)``, so the 2^d n points are
    never stored.
    """
    if BACKEND == "numba" and den < INT_GUARD and all(abs(c) < INT_GUARD for c in x):
        status, num, _ = membership_kernel(S.coords, np.asarray(x, dtype=np.int64), den, mode,
                                           DEFAULT_SEED)
        if status == 1:
            return bool(num[-1] > 0)
    num, _ = membership_python(S.points, list(x), den, mode)
    return num[-1] > 0


def _check(x, S: PointSet):
    if S.n == 0:
        raise InputError("membership test against an empty set")
    if len(x) != S.dim:
        raise InputError(f"dimension mismatch: point has {len(x)} coordinates, set has {S.dim}")


def in_convex_hull(x: Sequence, S: PointSet) -> bool:
    """Exact closed-hull membership of a rational point."""
    _check(x, S)
    q = as_rational_point(x)
    den = math.lcm(*(c.denominator for c in q))
    return not _outside(S, [int(c * den) for c in q], den, HULL_ROWS)


def cube_intersects_hull(x: Sequence[int], S: PointSet) -> bool:
    """True iff the cube ``x + [-1/2, 1/2]^d`` meets conv(S)."""
    _check(x, S)
    return not _outside(S, [int(c) for c in x], 1, CUBE_ROWS)


class DilatedTraversal:
    """Stack walk over S' starting from S.

    ``visited`` holds popped points, ``seen`` everything ever pushed; a point
    is pushed at most once so the frontier never meets ``visited``.
    """

    def __init__(self, S: PointSet, cap: Optional[int] = None):
        if S.n == 0:
            raise InputError("traversal of an empty set")
        cap = volume_cap() if cap is None else cap
        lo, hi = S.bbox
        vol = math.prod(h - l + 3 for l, h in zip(lo, hi))
        if vol > cap:
            raise ResourceError(f"bounding box volume {vol} exceeds the cap {cap}")
        self.S = S
        self.lo, self.hi = lo, hi
        self.points = S.points
        self.members = S.members
        self.frontier: List[LatticePoint] = list(self.points)
        self.seen = set(self.members)
        self.visited: set = set()
        self.rejected: set = set()
        self.inside_count = 0
        self.gaps: List[LatticePoint] = []
        self.lp_calls = 0
        self.peak_frontier = len(self.frontier)

    def _in_s_prime(self, y) -> bool:
        # a cube meeting conv(S) has its centre within 1/2 of the bounding box,
        # which for integer centres means inside the box
        if any(c < l or c > h for c, l, h in zip(y, self.lo, self.hi)):
            return False
        self.lp_calls += 1
        return not _outside(self.S, y, 1, CUBE_ROWS)

    def _in_hull(self, x) -> bool:
        if x in self.members:
            return True
        self.lp_calls += 1
        return not _outside(self.S, x, 1, HULL_ROWS)

    def run(self, variant: str = "count") -> "DilatedTraversal":
        if variant not in VARIANTS:
            raise InputError(f"unknown variant {variant!r}")
        d = self.S.dim
        stack = self.frontier
        while stack:
            x = stack.pop()
            self.visited.add(x)
            if self._in_hull(x):
                self.inside_count += 1
                if x not in self.members:
                    self.gaps.append(x)
                    if variant == "early_exit":
                        return self
            for j in range(d):
                for step in (1, -1):
                    y = x[:j] + (x[j] + step,) + x[j + 1:]
                    if y in self.seen or y in self.rejected:
                        continue
                    if self._in_s_prime(y):
                        self.seen.add(y)
                        stack.append(y)
                    else:
                        self.rejected.add(y)
            if len(stack) > self.peak_frontier:
                self.peak_frontier = len(stack)
        return self


def is_digital_convex_nd(S: PointSet, variant: str = "early_exit",
                         cap: Optional[int] = None) -> ConvexityReport:
    if variant not in VARIANTS:
        raise InputError(f"unknown variant {variant!r}")
    method = "nd-count" if variant == "count" else "nd-early"
    n = S.n
    if n == 0:
        return ConvexityReport("convex", "confirmed", 0, dim=S.dim, method=method,
                               lattice_count=0, s_prime_size=0, lp_calls=0, peak_frontier=0)
    tr = DilatedTraversal(S, cap).run(variant)
    common = dict(dim=S.dim, method=method, duplicates=S.duplicates,
                  s_prime_size=len(tr.visited), lp_calls=tr.lp_calls,
                  peak_frontier=tr.peak_frontier, work=len(tr.visited))
    if variant == "early_exit":
        if tr.gaps:
            return ConvexityReport("not_convex", "gap_point", n, gap_point=tr.gaps[0], **common)
        return ConvexityReport("convex", "confirmed", n, lattice_count=n, **common)
    if tr.inside_count == n:
        return ConvexityReport("convex", "confirmed", n, lattice_count=n, **common)
    return ConvexityReport("not_convex", "count_mismatch", n, lattice_count=tr.inside_count,
                           missing=tuple(sorted(tr.gaps)), **common)


def enumerate_missing(S: PointSet, cap: Optional[int] = None) -> List[LatticePoint]:
    """Sorted lattice points of conv(S) that are not in S."""
    if S.n == 0:
        return []
    return sorted(DilatedTraversal(S, cap).run("count").gaps)
