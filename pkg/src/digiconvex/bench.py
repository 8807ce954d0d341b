"""Benchmark suites emitting one CSV row per instance.

Suites:

* ``convex-2d-scaling``: lattice disks with about ``n`` points, 2D tester.
* ``negative-2d``: the same disks with one seeded interior point removed.
* ``nd-scaling``: 3D lattice balls with about ``n`` points, traversal tester.
* ``skewed-pair``: ``{(0,0), (1,2k)}`` for each size ``k``, traversal tester.

Timings are the median of ``repeats`` runs after one warm-up run.
"""
from __future__ import annotations

import csv
import math
import statistics
import time
from typing import Callable, Dict, Iterable, List, Optional, Sequence, TextIO

from .convexity2d import is_digital_convex_2d
from .convexity_nd import is_digital_convex_nd
from .generators import gen_ball, gen_punctured, gen_skewed_pair
from .geometry import InputError, PointSet, ResourceError, diameter_linf

COLUMNS = ("suite", "n", "h", "r", "steps", "total_candidate_scans", "lp_calls",
           "s_prime_size", "wall_ns", "status")
SUITES = ("convex-2d-scaling", "negative-2d", "nd-scaling", "skewed-pair")
DEFAULT_SIZES = {
    "convex-2d-scaling": (10**3, 10**4, 10**5, 10**6),
    "negative-2d": (10**3, 10**4, 10**5),
    "nd-scaling": (100, 1000, 5000),
    "skewed-pair": (1, 2, 4, 8, 16),
}


def disk_for(n: int) -> PointSet:
    return gen_ball(2, max(0, round(n / math.pi)))


def ball3_for(n: int) -> PointSet:
    return gen_ball(3, max(0, round((3 * n / (4 * math.pi)) ** (2 / 3))))


def _timed(fn: Callable, repeats: int):
    result = fn()
    times = []
    for _ in range(repeats):
        t0 = time.perf_counter_ns()
        result = fn()
        times.append(time.perf_counter_ns() - t0)
    return result, int(statistics.median(times)) if times else 0


def _row(suite: str, S: PointSet, report, wall_ns: int, status: str = "ok") -> Dict:
    planar = report is not None and report.method == "2d"
    nd = report is not None and not planar
    return {
        "suite": suite,
        "n": S.n,
        "h": report.h if planar and report.h is not None else "",
        "r": diameter_linf(S) if S.n else 0,
        "steps": report.steps if planar else "",
        "total_candidate_scans": report.work if planar else "",
        "lp_calls": report.lp_calls if nd else "",
        "s_prime_size": report.s_prime_size if nd else "",
        "wall_ns": wall_ns,
        "status": status,
    }


def _capped(suite: str, S: PointSet) -> Dict:
    return _row(suite, S, None, 0, status="capped")


def _suite_instances(suite: str, sizes: Sequence[int], seeds: Sequence[int]):
    for size in sizes:
        if suite == "convex-2d-scaling":
            yield disk_for(size), "2d"
        elif suite == "negative-2d":
            base = disk_for(size)
            for seed in seeds:
                yield gen_punctured(base, seed), "2d"
        elif suite == "nd-scaling":
            yield ball3_for(size), "nd"
        elif suite == "skewed-pair":
            yield gen_skewed_pair(size), "nd"
        else:
            raise InputError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")


def run_suite(suite: str, sizes: Optional[Iterable[int]] = None,
              seeds: Sequence[int] = (0,), repeats: int = 5,
              cap: Optional[int] = None) -> List[Dict]:
    if suite not in SUITES:
        raise InputError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    sizes = tuple(sizes) if sizes is not None else DEFAULT_SIZES[suite]
    rows = []
    for S, kind in _suite_instances(suite, sizes, seeds):
        if kind == "2d":
            report, wall = _timed(lambda: is_digital_convex_2d(S), repeats)
        else:
            try:
                report, wall = _timed(lambda: is_digital_convex_nd(S, "count", cap), repeats)
            except ResourceError:
                rows.append(_capped(suite, S))
                continue
        rows.append(_row(suite, S, report, wall))
    return rows


def write_csv(rows: Iterable[Dict], out: TextIO, header: bool = True) -> None:
    w = csv.DictWriter(out, fieldnames=COLUMNS, lineterminator="\n")
    if header:
        w.writeheader()
    for row in rows:
        w.writerow(row)


def linear_fit_r2(xs: Sequence[float], ys: Sequence[float]) -> float:
    """Coefficient of determination of the least-squares line through (xs, ys)."""
    fit = statistics.linear_regression(xs, ys)
    mean = statistics.fmean(ys)
    ss_tot = sum((y - mean) ** 2 for y in ys)
    ss_res = sum((y - (fit.slope * x + fit.intercept)) ** 2 for x, y in zip(xs, ys))
    return 1.0 - ss_res / ss_tot if ss_tot else 1.0

