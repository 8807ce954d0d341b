"""Seeded instance generators.

Every random choice goes through ``XorShift64Star`` so an instance is fixed
by its parameters and seed in any language that reproduces the recurrence.
"""
from __future__ import annotations

import itertools
import math
from typing import Optional, Sequence

import numpy as np

from .convexity_nd import in_convex_hull
from .geometry import InputError, PointSet, validate_input
from .oracle import HalfSpaces
from .rng import XorShift64Star

# random polytope generators are multiples of 1/POLYTOPE_DENOMINATOR
POLYTOPE_DENOMINATOR = 4
MAX_REGENERATIONS = 64


class GenerationError(InputError):
    """The requested instance does not exist (e.g. nothing can be removed)."""


def gen_ball(d: int, radius_squared: int, center: Optional[Sequence[int]] = None) -> PointSet:
    """Lattice points within Euclidean distance sqrt(radius_squared) of ``center``."""
    if d < 1:
        raise InputError(f"dimension must be positive, got {d}")
    if radius_squared < 0:
        raise InputError(f"radius_squared must be nonnegative, got {radius_squared}")
    center = tuple(center) if center is not None else (0,) * d
    if len(center) != d:
        raise InputError(f"center has {len(center)} coordinates, expected {d}")
    r = math.isqrt(radius_squared)
    ax = np.arange(-r, r + 1, dtype=np.int64)
    grid = np.stack([g.ravel() for g in np.meshgrid(*([ax] * d), indexing="ij")], axis=1)
    keep = (grid * grid).sum(axis=1) <= radius_squared
    return validate_input(grid[keep] + np.asarray(center, dtype=np.int64), d)


def _sample_generators(rng: XorShift64Star, d: int, count: int, half_width: int) -> np.ndarray:
    q = POLYTOPE_DENOMINATOR
    lim = q * half_width
    return np.array([[rng.randint(-lim, lim) for _ in range(d)] for _ in range(count)],
                    dtype=np.int64)


def gen_random_polytope_points(d: int, num_generators: int, half_width: int,
                               seed: int = 0) -> PointSet:
    """Lattice points of the hull of ``num_generators`` random rational points.

    Generators have coordinates in ``[-half_width, half_width]`` with
    denominator ``POLYTOPE_DENOMINATOR``.  A sample whose hull is not
    full-dimensional, or holds no lattice point, is redrawn with seed + 1.
    """
    if num_generators < d + 1:
        raise InputError(f"need at least d + 1 = {d + 1} generators, got {num_generators}")
    if half_width < 1:
        raise InputError(f"half_width must be at least 1, got {half_width}")
    q = POLYTOPE_DENOMINATOR
    for attempt in range(MAX_REGENERATIONS):
        rng = XorShift64Star(seed + attempt)
        gens = _sample_generators(rng, d, num_generators, half_width)
        hs = HalfSpaces(np.unique(gens, axis=0).tolist())
        if hs.affine_dim < d:
            continue
        lo = -(-gens.min(axis=0) // q)
        hi = gens.max(axis=0) // q
        if (lo > hi).any():
            continue
        axes = [np.arange(l, h + 1, dtype=np.int64) for l, h in zip(lo, hi)]
        X = np.stack([g.ravel() for g in np.meshgrid(*axes, indexing="ij")], axis=1)
        # x in conv(gens / q)  <=>  q x in conv(gens)
        pts = X[hs.contains(q * X)]
        if len(pts):
            return validate_input(pts, d)
    raise GenerationError(f"no usable sample within {MAX_REGENERATIONS} seeds from {seed}")


def gen_punctured(base: PointSet, seed: int = 0) -> PointSet:
    """``base`` minus one point that lies in the hull of the others.

    Candidates are tried in a seeded order and the first removable one is
    dropped, so the result is never digital convex.
    """
    if base.n < 2:
        raise GenerationError("a set of fewer than two points has nothing removable")
    order = list(range(base.n))
    XorShift64Star(seed).shuffle(order)
    pts = base.points
    for i in order:
        rest = validate_input(pts[:i] + pts[i + 1:], base.dim)
        if in_convex_hull(pts[i], rest):
            return rest
    raise GenerationError("every point is a vertex of the hull; no removable point")


def gen_skewed_pair(k: int) -> PointSet:
    """{(0,0), (1,2k)}: two points whose dilated lattice set has at least 2k points."""
    if k < 1:
        raise InputError(f"k must be at least 1, got {k}")
    return validate_input([(0, 0), (1, 2 * k)], 2)


def grid(d: int, side: int) -> PointSet:
    """The full ``{0..side-1}^d`` grid."""
    return validate_input(list(itertools.product(range(side), repeat=d)), d)
