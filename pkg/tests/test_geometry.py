import itertools
import math

import numpy as np
import pytest

from digiconvex import (Hull2D, InputError, diameter_linf, orientation,
                        segment_lattice_count, validate_input)
from digiconvex.geometry import COORD_LIMIT, cross

from conftest import V


@pytest.mark.parametrize("a,b,c,want", [
    ((0, 0), (1, 0), (0, 1), 1),
    ((0, 0), (1, 1), (2, 2), 0),
    ((0, 0), (0, 1), (1, 0), -1),
])
def test_orientation_examples(a, b, c, want):
    assert orientation(a, b, c) == want


def test_orientation_rejects_wrong_dimension():
    with pytest.raises(InputError):
        orientation((0, 0, 0), (1, 0, 0), (0, 1, 0))
    with pytest.raises(InputError):
        orientation((0, 0), (1, 0), (0, 1, 2))


def test_orientation_extreme_coordinates_exact():
    L = COORD_LIMIT
    a, b, c = (-L, -L), (L, L - 1), (L, -L)
    want = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    assert cross(a, b, c) == want
    assert orientation(a, b, c) == (want > 0) - (want < 0)


@pytest.mark.parametrize("a,b,want", [
    ((0, 0), (1, 4), 2),
    ((0, 0), (2, 2), 3),
    ((3, 7), (3, 7), 1),
    ((0, 0, 0), (2, 4, 6), 3),
])
def test_segment_lattice_count_examples(a, b, want):
    assert segment_lattice_count(a, b) == want


def test_segment_lattice_count_exhaustive_small():
    # every segment from the origin with |coords| <= 20 against direct enumeration
    for x, y in itertools.product(range(-20, 21), repeat=2):
        steps = max(abs(x), abs(y))
        direct = 1 if steps == 0 else sum(
            1 for t in range(steps + 1) if (t * x) % steps == 0 and (t * y) % steps == 0)
        assert segment_lattice_count((0, 0), (x, y)) == direct
        assert segment_lattice_count((x, y), (0, 0)) == direct


def test_validate_dedupes_and_flags():
    S = validate_input([(0, 0), (0, 0), (1, 1)], 2)
    assert S.n == 2 and S.duplicates
    assert S.points == [(0, 0), (1, 1)]
    assert not validate_input([(0, 0), (1, 1)], 2).duplicates


def test_validate_empty():
    S = validate_input([], 2)
    assert S.n == 0 and S.bbox is None and not S.duplicates


@pytest.mark.parametrize("raw,d", [
    ([(0, 0, 0)], 2),
    ([(0, 0), (1,)], 2),
    ([(0.5, 1)], 2),
    ([(True, 1)], 2),
    ([("1", 2)], 2),
    ([(COORD_LIMIT + 1, 0)], 2),
    ([(0, 0)], 0),
])
def test_validate_rejects(raw, d):
    with pytest.raises(InputError):
        validate_input(raw, d)


def test_validate_accepts_numpy():
    S = validate_input(np.array([[2, 1], [0, 0], [2, 1]]), 2)
    assert S.points == [(0, 0), (2, 1)] and S.duplicates
    with pytest.raises(InputError):
        validate_input(np.array([[0.0, 1.0]]), 2)
    with pytest.raises(InputError):
        validate_input(np.array([[COORD_LIMIT + 1, 0]]), 2)
    with pytest.raises(InputError):
        validate_input(np.array([[0, 1, 2]]), 2)


def test_pointset_is_frozen():
    S = V([(0, 0), (1, 2)])
    with pytest.raises(ValueError):
        S.coords[0, 0] = 5
    assert (1, 2) in S and (2, 1) not in S
    assert S == V([(1, 2), (0, 0)])
    assert S.bbox == ((0, 0), (1, 2))


@pytest.mark.parametrize("pts,want", [
    ([(0, 0), (1, 4)], 4),
    ([(5, 5)], 0),
    ([(-2, 0), (3, 1)], 5),
])
def test_diameter_linf(pts, want):
    assert diameter_linf(V(pts)) == want


def test_diameter_empty_raises():
    with pytest.raises(InputError):
        diameter_linf(V([]))


def test_hull_from_cycle_canonical():
    h = Hull2D.from_cycle([(1, 1), (0, 1), (0, 0), (1, 0)])
    assert h.vertices == ((0, 0), (1, 0), (1, 1), (0, 1))
    assert h.kind == "full" and h.h == 4 and h.is_strictly_convex()
    assert Hull2D.from_cycle([(3, 3), (0, 0)]).vertices == ((0, 0), (3, 3))
    assert Hull2D.from_cycle([(3, 3)]).kind == "point"
