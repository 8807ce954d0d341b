"""Quickhull refinement kernels.

One call processes every active edge of a partial hull.  Candidates of all
edges live in one flat index array ``cand``; edge ``e`` owns
``cand[offsets[e]:offsets[e + 1]]`` and every owned point lies strictly
outside (right of) the directed edge ``a -> b``.

For each edge the kernel finds the farthest candidates (exact int64 cross
products), takes the first and last of them along the edge direction, and
splits the other candidates into the buckets of the two child edges
``a -> p1`` and ``p2 -> b``.  Anything not strictly outside a child edge is
discarded.  Child buckets are written to ``new_cand`` with
``new_offsets[2e] .. new_offsets[2e + 2]``.

Both implementations must return identical arrays, including bucket order.
"""
import numpy as np

from ._backend import BACKEND, njit

_INT64_MAX = np.iinfo(np.int64).max
_INT64_MIN = np.iinfo(np.int64).min


@njit
def _step_numba(px, py, cand, offsets, ax, ay, bx, by):
    n_edges = ax.shape[0]
    m = cand.shape[0]
    p1 = np.empty(n_edges, dtype=np.int64)
    p2 = np.empty(n_edges, dtype=np.int64)
    new_cand = np.empty(m, dtype=np.int64)
    new_offsets = np.empty(2 * n_edges + 1, dtype=np.int64)
    discarded = np.empty(n_edges, dtype=np.int64)
    right = np.empty(m, dtype=np.int64)
    pos = 0
    new_offsets[0] = 0
    for e in range(n_edges):
        ex = bx[e] - ax[e]
        ey = by[e] - ay[e]
        best = np.int64(-1)
        tmin = np.int64(_INT64_MAX)
        tmax = np.int64(_INT64_MIN)
        i1 = np.int64(-1)
        i2 = np.int64(-1)
        for k in range(offsets[e], offsets[e + 1]):
            q = cand[k]
            dist = ey * (px[q] - ax[e]) - ex * (py[q] - ay[e])
            if dist >= best:
                t = ex * px[q] + ey * py[q]
                if dist > best:
                    best = dist
                    tmin = t
                    tmax = t
                    i1 = q
                    i2 = q
                else:
                    if t < tmin:
                        tmin = t
                        i1 = q
                    if t > tmax:
                        tmax = t
                        i2 = q
        p1[e] = i1
        p2[e] = i2
        # child edge a -> p1
        ux = px[i1] - ax[e]
        uy = py[i1] - ay[e]
        # child edge p2 -> b
        wx = bx[e] - px[i2]
        wy = by[e] - py[i2]
        n_right = 0
        start = pos
        for k in range(offsets[e], offsets[e + 1]):
            q = cand[k]
            if q == i1 or q == i2:
                continue
            if ux * (py[q] - ay[e]) - uy * (px[q] - ax[e]) < 0:
                new_cand[pos] = q
                pos += 1
            elif wx * (py[q] - py[i2]) - wy * (px[q] - px[i2]) < 0:
                right[n_right] = q
                n_right += 1
        new_offsets[2 * e + 1] = pos
        for k in range(n_right):
            new_cand[pos] = right[k]
            pos += 1
        new_offsets[2 * e + 2] = pos
        promoted = 1 if i1 == i2 else 2
        discarded[e] = offsets[e + 1] - offsets[e] - (pos - start) - promoted
    return p1, p2, new_cand[:pos].copy(), new_offsets, discarded


def _step_numpy(px, py, cand, offsets, ax, ay, bx, by):
    n_edges = ax.shape[0]
    counts = np.diff(offsets)
    eid = np.repeat(np.arange(n_edges), counts)
    ex = (bx - ax)[eid]
    ey = (by - ay)[eid]
    qx = px[cand]
    qy = py[cand]
    eax = ax[eid]
    eay = ay[eid]
    dist = ey * (qx - eax) - ex * (qy - eay)
    starts = offsets[:-1]
    best = np.maximum.reduceat(dist, starts)
    far = dist == best[eid]
    t = ex * qx + ey * qy
    tmin = np.minimum.reduceat(np.where(far, t, _INT64_MAX), starts)
    tmax = np.maximum.reduceat(np.where(far, t, _INT64_MIN), starts)
    p1 = cand[np.flatnonzero(far & (t == tmin[eid]))]
    p2 = cand[np.flatnonzero(far & (t == tmax[eid]))]
    e1 = p1[eid]
    e2 = p2[eid]
    free = (cand != e1) & (cand != e2)
    ux = px[e1] - eax
    uy = py[e1] - eay
    left = free & (ux * (qy - eay) - uy * (qx - eax) < 0)
    wx = bx[eid] - px[e2]
    wy = by[eid] - py[e2]
    rgt = free & ~left & (wx * (qy - py[e2]) - wy * (qx - px[e2]) < 0)
    keep = left | rgt
    group = 2 * eid + rgt
    kept = np.flatnonzero(keep)
    order = kept[np.argsort(group[kept], kind="stable")]
    new_cand = cand[order]
    new_offsets = np.zeros(2 * n_edges + 1, dtype=np.int64)
    np.cumsum(np.bincount(group[kept], minlength=2 * n_edges), out=new_offsets[1:])
    kept_per_edge = new_offsets[2::2] - new_offsets[:-1:2]
    promoted = np.where(p1 == p2, 1, 2)
    discarded = counts - kept_per_edge - promoted
    return p1, p2, new_cand, new_offsets, discarded


step_numba = _step_numba
step_numpy = _step_numpy
refine_step = _step_numba if BACKEND == "numba" else _step_numpy
