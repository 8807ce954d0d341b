"""Linear-time digital convexity test for planar lattice sets.

Quickhull runs with the half rule armed; a set that survives it has its hull
lattice points counted with Pick's formula and is convex iff that count is n.
"""
from .geometry import InputError, PointSet
from .pick import lattice_count
from .quickhull import quickhull_traced
from .report import ConvexityReport


def is_digital_convex_2d(S: PointSet, kernel=None) -> ConvexityReport:
    if S.dim != 2:
        raise InputError(f"expected a 2D point set, got dimension {S.dim}")
    n = S.n
    if n == 0:
        return ConvexityReport("convex", "confirmed", 0, lattice_count=0, h=0,
                               duplicates=S.duplicates)
    res = quickhull_traced(S, early_stop=True, kernel=kernel)
    trace = res.trace
    common = dict(work=trace.total_candidate_scans, steps=len(trace.steps),
                  duplicates=S.duplicates)
    if res.stopped_early:
        return ConvexityReport("not_convex", "early_stop", n, **common)
    hull = res.hull
    count = lattice_count(hull)
    if count == n:
        return ConvexityReport("convex", "confirmed", n, hull=hull, lattice_count=count,
                               h=hull.h, **common)
    return ConvexityReport("not_convex", "count_mismatch", n, hull=hull,
                           lattice_count=count, h=hull.h, **common)
