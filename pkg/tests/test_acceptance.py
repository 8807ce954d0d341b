"""Acceptance criteria, each at its stated size and tolerance.

Every test prints one ``PASS``/``FAIL`` line (visible without ``-s``) and then
asserts.  Random instances come from the documented xorshift64* generator so
the whole suite is reproducible.
"""
import itertools
import time

import numpy as np
import pytest

from digiconvex import (DilatedTraversal, gen_ball, gen_punctured, gen_random_polytope_points,
                        gen_skewed_pair, is_digital_convex_2d, is_digital_convex_nd,
                        lattice_count, quickhull_traced, twice_area, boundary_count,
                        validate_input)
from digiconvex.bench import linear_fit_r2, run_suite, write_csv
from digiconvex.generators import GenerationError
from digiconvex.oracle import (SubsetTables, brute_hull_2d, brute_is_convex,
                               brute_lattice_points, brute_s_prime)
from digiconvex.rng import XorShift64Star

pytestmark = pytest.mark.acceptance

GRID = list(itertools.product(range(4), repeat=2))


@pytest.fixture
def verdict(capsys):
    def emit(number, title, ok, detail):
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {number} ({title}): {detail}")
        assert ok, detail
    return emit


@pytest.fixture(scope="module")
def grid_tables():
    tables = SubsetTables(GRID)
    masks = np.arange(1 << len(GRID), dtype=np.int64)
    members, lattice, s_prime = tables.evaluate(masks)
    return tables, members, lattice, s_prime


def grid_subset(mask):
    return validate_input([GRID[i] for i in range(len(GRID)) if mask >> i & 1], 2)


def random_box_set(rng, d, lo, hi, max_n):
    """``1..max_n`` uniform points in a random sub-box of ``[lo, hi]^d``."""
    side = rng.randint(1, hi - lo + 1)
    corner = [rng.randint(lo, hi - side + 1) for _ in range(d)]
    n = rng.randint(1, max_n)
    return validate_input([tuple(c + rng.below(side) for c in corner) for _ in range(n)], d)


def test_c1_exhaustive_grid_2d(verdict, grid_tables):
    tables, members, lattice, _ = grid_tables
    t0 = time.perf_counter()
    bad = []
    for mask in range(1 << len(GRID)):
        want = members[mask] == lattice[mask]
        if is_digital_convex_2d(grid_subset(mask)).is_convex != want:
            bad.append(mask)
    elapsed = time.perf_counter() - t0
    # the tabulated oracle is a union of brute_lattice_points over sub-simplices;
    # tie it to brute_is_convex directly on a seeded sample
    rng = XorShift64Star(101)
    sample = [rng.below(1 << len(GRID)) for _ in range(1000)]
    table_bad = [m for m in sample
                 if (members[m] == lattice[m]) != brute_is_convex(grid_subset(m))]
    ok = not bad and not table_bad and elapsed < 60
    verdict(1, "exhaustive 4x4 grid, 2D tester vs oracle", ok,
            f"65536 subsets, {len(bad)} disagreements, {len(table_bad)} table/oracle "
            f"mismatches on 1000 samples, tester time {elapsed:.1f}s (< 60s)")


def test_c2_random_2d(verdict):
    rng = XorShift64Star(202)
    bad_verdict = bad_hull = convex = 0
    for _ in range(10_000):
        S = random_box_set(rng, 2, -20, 20, 50)
        r = is_digital_convex_2d(S)
        if r.is_convex != brute_is_convex(S):
            bad_verdict += 1
        convex += r.is_convex
        if quickhull_traced(S).hull.vertices != brute_hull_2d(S).vertices:
            bad_hull += 1
    verdict(2, "random 2D sets vs oracle", bad_verdict == 0 and bad_hull == 0,
            f"10000 sets (n <= 50, coords in [-20,20], {convex} convex), "
            f"{bad_verdict} verdict and {bad_hull} hull disagreements")


def convex_family():
    """1000 digital convex sets: 500 lattice disks and 500 random lattice polytopes."""
    rng = XorShift64Star(303)
    for i in range(500):
        r2 = rng.randint(0, 300) if i % 2 else rng.randint(300, 31_800)
        center = (rng.randint(-1000, 1000), rng.randint(-1000, 1000))
        yield gen_ball(2, r2, center)
    for i in range(500):
        width = rng.randint(1, 30) if i % 2 else rng.randint(30, 180)
        yield gen_random_polytope_points(2, rng.randint(3, 20), width, 10_000 + i)


@pytest.fixture(scope="module")
def convex_traces():
    out = []
    for S in convex_family():
        early = quickhull_traced(S, early_stop=True)
        full = quickhull_traced(S)
        out.append((S, early, full))
    return out


def test_c3_half_discard(verdict, convex_traces):
    steps = violations = early = 0
    for S, early_res, full in convex_traces:
        early += early_res.stopped_early
        for st in full.trace.steps:
            steps += 1
            violations += 2 * st.remaining_after > st.remaining_before
    n_max = max(S.n for S, _, _ in convex_traces)
    verdict(3, "each step keeps at most half", violations == 0 and early == 0,
            f"{len(convex_traces)} convex sets (n up to {n_max}), {steps} steps, "
            f"{violations} violations, {early} early stops")


def test_c4_discarded_area_dominates(verdict, convex_traces):
    checked = violations = 0
    for _, _, full in convex_traces:
        for p in full.trace.promotions():
            checked += 1
            violations += not p.discard_covers_preserved()
    verdict(4, "discarded area >= preserved area", violations == 0 and checked > 0,
            f"{checked} promotions checked with exact rationals, {violations} violations")


def test_c5_linear_work(verdict, tmp_path):
    sizes = [10**3, 10**4, 10**5, 10**6]
    rows = run_suite("convex-2d-scaling", sizes, repeats=7)
    with open(tmp_path / "convex-2d-scaling.csv", "w") as fh:
        write_csv(rows, fh)
    over = [r for r in rows if r["total_candidate_scans"] > 2 * r["n"] + 16 * r["h"]]
    r2 = linear_fit_r2([r["n"] for r in rows], [r["wall_ns"] for r in rows])
    detail = "; ".join(f"n={r['n']} scans={r['total_candidate_scans']} h={r['h']} "
                       f"t={r['wall_ns'] / 1e6:.2f}ms" for r in rows)
    verdict(5, "linear work on disks", not over and r2 >= 0.98,
            f"{len(over)} rows over 2n+16h, wall-time linear fit R^2={r2:.4f} (>= 0.98); {detail}")


def test_c6_pick(verdict):
    rng = XorShift64Star(606)
    bad = parity = full = 0
    for _ in range(1000):
        n = rng.randint(1, 12)
        S = validate_input([(rng.randint(-30, 30), rng.randint(-30, 30)) for _ in range(n)], 2)
        hull = quickhull_traced(S).hull
        if hull.kind == "full":
            full += 1
            parity += (twice_area(hull) + boundary_count(hull)) % 2
        if lattice_count(hull) != len(brute_lattice_points(S)):
            bad += 1
    verdict(6, "Pick count vs brute force", bad == 0 and parity == 0,
            f"1000 hulls ({full} full-dimensional), {bad} count mismatches, "
            f"{parity} parity violations")


def random_3d(rng, seed):
    """Mixture on [-6,6]^3: sparse sets in random sub-boxes, denser sets in small
    boxes, and translated random lattice polytopes (digital convex)."""
    kind = rng.below(3)
    if kind == 0:
        return random_box_set(rng, 3, -6, 6, 12)
    if kind == 1:
        side = rng.randint(1, 5)
        corner = [rng.randint(-6, 6 - side + 1) for _ in range(3)]
        n = rng.randint(1, 40)
        return validate_input([tuple(c + rng.below(side) for c in corner) for _ in range(n)], 3)
    width = rng.randint(1, 5)
    P = gen_random_polytope_points(3, rng.randint(4, 8), width, seed)
    shift = np.array([rng.randint(-(6 - width), 6 - width) for _ in range(3)])
    return validate_input(P.coords + shift, 3)


def test_c7_nd(verdict, grid_tables):
    tables, members, lattice, s_prime = grid_tables
    bad2 = disagree2 = walk2 = 0
    for mask in range(1, 1 << len(GRID)):
        S = grid_subset(mask)
        tr = DilatedTraversal(S).run("count")
        count_convex = tr.inside_count == S.n
        early = is_digital_convex_nd(S, "early_exit").is_convex
        disagree2 += count_convex != early
        bad2 += count_convex != (members[mask] == lattice[mask])
        walk2 += tables.cell_mask(tr.visited) != s_prime[mask]
    rng = XorShift64Star(707)
    bad3 = disagree3 = walk3 = convex3 = 0
    for i in range(2000):
        S = random_3d(rng, 70_000 + i)
        tr = DilatedTraversal(S).run("count")
        count_convex = tr.inside_count == S.n
        early = is_digital_convex_nd(S, "early_exit").is_convex
        truth = brute_is_convex(S)
        convex3 += truth
        disagree3 += count_convex != early
        bad3 += count_convex != truth
        walk3 += sorted(tr.visited) != brute_s_prime(S)
    ok = not (bad2 or disagree2 or walk2 or bad3 or disagree3 or walk3)
    verdict(7, "nD tester vs oracle, visited set = S'", ok,
            f"d=2: 65535 grid subsets, {bad2} wrong, {disagree2} variant disagreements, "
            f"{walk2} visited != S'; d=3: 2000 sets ({convex3} convex), {bad3} wrong, "
            f"{disagree3} variant disagreements, {walk3} visited != S'")


def test_c8_skewed_pairs(verdict):
    parts, ok = [], True
    for k in (1, 2, 4, 8, 16):
        S = gen_skewed_pair(k)
        r = is_digital_convex_nd(S, "count")
        exact = len(brute_s_prime(S))
        ok &= r.s_prime_size >= 2 * k and r.s_prime_size == exact
        parts.append(f"k={k}: |S'|={r.s_prime_size} (brute {exact}, ratio {r.s_prime_size / 2:g})")
    verdict(8, "skewed pairs have |S'|/|S| >= k", ok, "; ".join(parts))


MAPS = [
    lambda x, y: (x + 17, y - 9),
    lambda x, y: (x, y), lambda x, y: (-y, x), lambda x, y: (-x, -y), lambda x, y: (y, -x),
    lambda x, y: (-x, y), lambda x, y: (x, -y), lambda x, y: (y, x), lambda x, y: (-y, -x),
    lambda x, y: (x + y, y),
]


def random_2d_mixture(rng, i):
    kind = i % 3
    if kind == 2:
        return random_box_set(rng, 2, -8, 8, 30)
    S = gen_random_polytope_points(2, rng.randint(3, 9), rng.randint(2, 12), 90_000 + i)
    if kind == 1:
        try:
            return gen_punctured(S, i)
        except GenerationError:
            return S
    return S


def test_c9_invariance(verdict):
    rng = XorShift64Star(909)
    bad = convex = 0
    for i in range(500):
        S = random_2d_mixture(rng, i)
        base = is_digital_convex_2d(S).is_convex
        convex += base
        for f in MAPS:
            img = validate_input([f(x, y) for x, y in S.points], 2)
            bad += is_digital_convex_2d(img).is_convex != base
    verdict(9, "verdict invariant under translation, symmetries, shear", bad == 0,
            f"500 instances ({convex} convex) x {len(MAPS)} maps, {bad} changed verdicts")
