"""Brute-force ground truth.

Nothing here touches quickhull, Pick counting or the LP.  Hulls come from
exhaustive orientation tests; hull membership from a half-space description
built by enumerating every candidate facet (all affinely independent
k-subsets, k the affine dimension of the set).

``hull_halfspaces`` runs that enumeration on a small vertex candidate set
(lexicographic extremes of the maximisers of many directions) and then
certifies the result: conv(candidates) is inside conv(S), so if every
input point satisfies the inequalities the two hulls are equal.  Failed
certificates add the extremes along each violated normal and retry.
"""
from __future__ import annotations

import itertools
import math
from fractions import Fraction
from typing import List, Sequence, Tuple

import numpy as np

from .geometry import Hull2D, InputError, LatticePoint, PointSet, ResourceError

DEFAULT_ORACLE_CAP = 10**7


def brute_hull_2d(S: PointSet) -> Hull2D:
    """Hull from the directed pairs (p, q) that have every point on their
    left or on the closed segment [p, q].  O(n^3)."""
    if S.dim != 2:
        raise InputError("brute_hull_2d needs 2D points")
    n = S.n
    if n == 0:
        return Hull2D((), "empty")
    if n == 1:
        return Hull2D.from_cycle(S.points)
    P = S.coords.astype(object) if np.abs(S.coords).max() >= 2**30 else S.coords
    x = P[:, 0]
    y = P[:, 1]
    nxt = {}
    for i in range(n):
        ex = x - x[i]
        ey = y - y[i]
        # orient[q, r] = cross(q - p, r - p)
        orient = np.outer(ex, ey) - np.outer(ey, ex)
        # r on the closed segment [p, q]: collinear, dot(r - p, q - p) in [0, |q - p|^2]
        dot = np.outer(ex, ex) + np.outer(ey, ey)
        sq = (ex * ex + ey * ey)[:, None]
        on_seg = (orient == 0) & (dot >= 0) & (dot <= sq)
        good = ((orient > 0) | on_seg).all(axis=1)
        good[i] = False
        for j in np.flatnonzero(good):
            nxt.setdefault(i, []).append(int(j))
    pts = S.points
    if not nxt:
        raise AssertionError("no hull edge found")
    if all(len(v) == 1 for v in nxt.values()) and len(nxt) == 2:
        a, b = nxt
        if nxt[a] == [b] and nxt[b] == [a]:
            return Hull2D.from_cycle([pts[a], pts[b]])
    start = min(nxt)
    cycle = [start]
    cur = nxt[start][0]
    while cur != start:
        cycle.append(cur)
        cur = nxt[cur][0]
        if len(cycle) > n:
            raise AssertionError("hull edges do not form a cycle")
    return Hull2D.from_cycle([pts[i] for i in cycle])


def _bdet(M: np.ndarray) -> np.ndarray:
    """Determinants of a stack of square integer matrices, shape (c, m, m)."""
    m = M.shape[1]
    if m == 0:
        return np.ones(M.shape[0], dtype=M.dtype)
    if m == 1:
        return M[:, 0, 0]
    if m == 2:
        return M[:, 0, 0] * M[:, 1, 1] - M[:, 0, 1] * M[:, 1, 0]
    total = np.zeros(M.shape[0], dtype=M.dtype)
    for j in range(m):
        minor = np.delete(M[:, 1:, :], j, axis=2)
        total = total + (-1) ** j * M[:, 0, j] * _bdet(minor)
    return total


def _bnormal(M: np.ndarray) -> np.ndarray:
    """Generalised cross product of each stack entry's d - 1 rows, shape (c, d)."""
    d = M.shape[2]
    return np.stack([(-1) ** j * _bdet(np.delete(M, j, axis=2)) for j in range(d)], axis=1)


def _dtype_for(bound: int):
    return np.int64 if bound < 2**62 else object


def _affine_basis(pts: List[Tuple[int, ...]]):
    """Indices of an affinely independent subset spanning aff(pts), and the
    integer normals of aff(pts) (a basis of the orthogonal complement)."""
    d = len(pts[0])
    base = pts[0]
    chosen = [0]
    echelon: List[List[Fraction]] = []
    pivots: List[int] = []
    for i, p in enumerate(pts[1:], 1):
        v = [Fraction(a - b) for a, b in zip(p, base)]
        for row, pc in zip(echelon, pivots):
            if v[pc]:
                f = v[pc] / row[pc]
                v = [a - f * b for a, b in zip(v, row)]
        nz = next((j for j in range(d) if v[j]), None)
        if nz is not None:
            echelon.append(v)
            pivots.append(nz)
            chosen.append(i)
    # orthogonal complement of the direction space: nullspace of the directions
    dirs = [[Fraction(a - b) for a, b in zip(pts[i], base)] for i in chosen[1:]]
    normals = _nullspace(dirs, d)
    return chosen, normals


def _nullspace(rows: List[List[Fraction]], d: int) -> List[List[int]]:
    m = [r[:] for r in rows]
    piv_cols = []
    r = 0
    for c in range(d):
        pr = next((i for i in range(r, len(m)) if m[i][c]), None)
        if pr is None:
            continue
        m[r], m[pr] = m[pr], m[r]
        pv = m[r][c]
        m[r] = [v / pv for v in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        piv_cols.append(c)
        r += 1
    free = [c for c in range(d) if c not in piv_cols]
    basis = []
    for fc in free:
        v = [Fraction(0)] * d
        v[fc] = Fraction(1)
        for i, pc in enumerate(piv_cols):
            v[pc] = -m[i][fc]
        den = math.lcm(*(x.denominator for x in v))
        iv = [int(x * den) for x in v]
        g = math.gcd(*iv)
        basis.append([x // g for x in iv])
    return basis


class HalfSpaces:
    """conv(points) as ``E x == e`` and ``W x <= w`` with integer data."""

    def __init__(self, points: Sequence[Sequence[int]]):
        pts = [tuple(int(c) for c in p) for p in points]
        if not pts:
            raise InputError("half-space description of an empty set")
        self.dim = d = len(pts[0])
        chosen, normals = _affine_basis(pts)
        self.affine_dim = k = len(chosen) - 1
        p0 = pts[0]
        self.eq = [(nv, sum(a * b for a, b in zip(nv, p0))) for nv in normals]
        ineq = {}
        if k > 0:
            P = np.array(pts, dtype=object)
            mag = max(1, max(abs(c) for p in pts for c in p))
            nmag = max([1] + [abs(c) for nv in normals for c in nv])
            # |normal| <= (d-1)! (2 mag + nmag)^(d-1); |normal . p| <= d |normal| mag
            wb = math.factorial(d - 1) * (2 * mag + nmag) ** (d - 1)
            dt = _dtype_for(2 * d * wb * mag + 1)
            P = P.astype(dt)
            subs = np.array(list(itertools.combinations(range(len(pts)), k)), dtype=np.int64)
            base = P[subs[:, 0]]
            blocks = [P[subs[:, i]] - base for i in range(1, k)]
            if normals:
                N = np.array(normals, dtype=object).astype(dt)
                blocks += [np.broadcast_to(N[r], base.shape) for r in range(len(normals))]
            M = np.stack(blocks, axis=1) if blocks else np.zeros((len(subs), 0, d), dtype=dt)
            W = _bnormal(M)
            nonzero = (W != 0).any(axis=1)
            W, base = W[nonzero], base[nonzero]
            off = (W * base).sum(axis=1)
            vals = W.dot(P.T)
            le = (vals <= off[:, None]).all(axis=1)
            ge = (vals >= off[:, None]).all(axis=1)
            for w, o, a, b in zip(W.tolist(), off.tolist(), le.tolist(), ge.tolist()):
                if not (a or b):
                    continue
                if not a:
                    w, o = [-c for c in w], -o
                g = math.gcd(*w)
                ineq[tuple(c // g for c in w)] = o // g
        self.ineq = sorted(ineq.items())
        bound = max([1] + [abs(c) for w, o in self.ineq for c in (*w, o)]
                    + [abs(c) for w, o in self.eq for c in (*w, o)])
        self._bound = bound

    def contains(self, X: np.ndarray) -> np.ndarray:
        """Membership of each row of an integer array ``X`` (shape (m, d))."""
        X = np.asarray(X)
        xmag = int(np.abs(X).max()) if X.size else 0
        dt = _dtype_for(self.dim * self._bound * (xmag + 1) + 1)
        Xd = X.astype(dt)
        ok = np.ones(X.shape[0], dtype=bool)
        for nv, off in self.eq:
            ok &= Xd.dot(np.array(nv, dtype=object).astype(dt)) == off
        if self.ineq:
            W = np.array([w for w, _ in self.ineq], dtype=object).astype(dt)
            off = np.array([o for _, o in self.ineq], dtype=object).astype(dt)
            ok &= (Xd.dot(W.T) <= off).all(axis=1)
        return ok


def _extremes(P: np.ndarray, w: np.ndarray) -> List[int]:
    """Lexicographically smallest and largest maximisers of ``P @ w``.

    Both are vertices of conv(P): the face maximising ``w`` is conv of the
    tied points, and a lexicographic extreme of a finite set is a vertex.
    """
    vals = P.dot(w)
    tied = np.flatnonzero(vals == vals.max())
    # rows of P are lexicographically sorted (PointSet order)
    return [int(tied[0]), int(tied[-1])]


def _violations(hs: "HalfSpaces", P: np.ndarray):
    """Directions whose maximisers must be added to repair ``hs``."""
    out = []
    for nv, off in hs.eq:
        vals = P.dot(np.array(nv, dtype=object))
        if (vals != off).any():
            out.append(nv)
            out.append([-c for c in nv])
    for w, off in hs.ineq:
        if (P.dot(np.array(w, dtype=object)) > off).any():
            out.append(list(w))
    return out


def hull_halfspaces(points: Sequence[Sequence[int]], extra_directions: int = 64,
                    seed: int = 0x0AC1E) -> HalfSpaces:
    """Certified half-space description of conv(points)."""
    rows = sorted({tuple(int(c) for c in p) for p in points})
    if not rows:
        raise InputError("half-space description of an empty set")
    P = np.empty((len(rows), len(rows[0])), dtype=object)
    P[:] = rows
    d = P.shape[1]
    if len(P) <= d + 2:
        return HalfSpaces(P.tolist())
    dirs = [v for v in itertools.product((-1, 0, 1), repeat=d) if any(v)]
    rng = np.random.default_rng(seed)
    dirs += rng.integers(-9, 10, size=(extra_directions, d)).tolist()
    cand = set()
    for w in dirs:
        cand.update(_extremes(P, np.array(w, dtype=object)))
    while True:
        hs = HalfSpaces(P[sorted(cand)].tolist())
        bad = _violations(hs, P)
        if not bad:
            return hs
        before = len(cand)
        for w in bad:
            cand.update(_extremes(P, np.array(w, dtype=object)))
        if len(cand) == before:
            raise AssertionError("hull certificate failed to make progress")


def _box_points(lo, hi, cap: int) -> np.ndarray:
    vol = math.prod(h - l + 1 for l, h in zip(lo, hi))
    if vol > cap:
        raise ResourceError(f"bounding box volume {vol} exceeds the oracle cap {cap}")
    axes = [np.arange(l, h + 1, dtype=np.int64) for l, h in zip(lo, hi)]
    grid = np.meshgrid(*axes, indexing="ij")
    return np.stack([g.ravel() for g in grid], axis=1)


def brute_lattice_points(S: PointSet, cap: int = DEFAULT_ORACLE_CAP) -> List[LatticePoint]:
    """Every bounding-box lattice point in conv(S), sorted."""
    if S.n == 0:
        return []
    lo, hi = S.bbox
    X = _box_points(lo, hi, cap)
    inside = hull_halfspaces(S.points).contains(X)
    return [tuple(int(c) for c in row) for row in X[inside].tolist()]


def brute_is_convex(S: PointSet, cap: int = DEFAULT_ORACLE_CAP) -> bool:
    return len(brute_lattice_points(S, cap)) == S.n


def brute_s_prime(S: PointSet, cap: int = DEFAULT_ORACLE_CAP) -> List[LatticePoint]:
    """Lattice points whose centred unit cube meets conv(S), from the half-space
    description of conv(2S + {-1, 1}^d) tested at 2x over the box grown by 1."""
    if S.n == 0:
        return []
    d = S.dim
    corners = np.array(list(itertools.product((-1, 1), repeat=d)), dtype=np.int64)
    pts = (2 * S.coords[:, None, :] + corners[None, :, :]).reshape(-1, d)
    hs = hull_halfspaces(pts.tolist())
    lo, hi = S.bbox
    X = _box_points([l - 1 for l in lo], [h + 1 for h in hi], cap)
    return [tuple(int(c) for c in row) for row in X[hs.contains(2 * X)].tolist()]


class SubsetTables:
    """Oracle answers for every subset of a small universe of lattice points.

    By Caratheodory, a point of conv(S) lies in the hull of at most d + 1
    points of S, and a cube meeting conv(S) meets such a sub-hull.  So the
    lattice points of conv(S), and S', are unions over the at most
    (d + 1)-point subsets T of S of ``brute_lattice_points(T)`` and
    ``brute_s_prime(T)``.  Both are tabulated once per T as bitmasks over
    ``cells`` (the universe's bounding box grown by 1), then OR-ed for any
    subset given as a bitmask over ``universe``.
    """

    def __init__(self, universe: Sequence[LatticePoint]):
        self.universe = [tuple(int(c) for c in p) for p in universe]
        d = len(self.universe[0])
        if len(self.universe) > 62:
            raise ResourceError("subset tables need at most 62 universe points")
        lo = [min(p[j] for p in self.universe) - 1 for j in range(d)]
        hi = [max(p[j] for p in self.universe) + 1 for j in range(d)]
        self.cells = [tuple(int(c) for c in row) for row in _box_points(lo, hi, 63).tolist()]
        bit = {c: 1 << i for i, c in enumerate(self.cells)}
        masks, closure, dilated = [], [], []
        for k in range(1, d + 2):
            for T in itertools.combinations(range(len(self.universe)), k):
                S = PointSet(d, np.array([self.universe[i] for i in T], dtype=np.int64))
                masks.append(sum(1 << i for i in T))
                closure.append(sum(bit[p] for p in brute_lattice_points(S)))
                dilated.append(sum(bit[p] for p in brute_s_prime(S)))
        self._sub = np.array(masks, dtype=np.int64)
        self._closure = np.array(closure, dtype=np.int64)
        self._dilated = np.array(dilated, dtype=np.int64)
        self._cell_of = np.array([bit[p] for p in self.universe], dtype=np.int64)

    def cell_mask(self, points) -> int:
        index = {c: i for i, c in enumerate(self.cells)}
        return sum(1 << index[tuple(p)] for p in points)

    def evaluate(self, subsets: np.ndarray):
        """For subset bitmasks, return (members, lattice_points, s_prime) as cell bitmasks."""
        subsets = np.asarray(subsets, dtype=np.int64)
        lat = np.zeros_like(subsets)
        sp = np.zeros_like(subsets)
        members = np.zeros_like(subsets)
        for i, cm in enumerate(self._cell_of):
            members |= np.where((subsets >> i) & 1 == 1, cm, 0)
        for t, c, s in zip(self._sub, self._closure, self._dilated):
            hit = (subsets & t) == t
            lat |= np.where(hit, c, 0)
            sp |= np.where(hit, s, 0)
        return members, lat, sp
