import pytest

from digiconvex import Hull2D, InputError, InvariantError, boundary_count, lattice_count, twice_area
from digiconvex.oracle import brute_lattice_points

from conftest import V

UNIT = Hull2D.from_cycle([(0, 0), (1, 0), (1, 1), (0, 1)])
TRI = Hull2D.from_cycle([(0, 0), (4, 0), (0, 4)])
SQ2 = Hull2D.from_cycle([(0, 0), (2, 0), (2, 2), (0, 2)])


@pytest.mark.parametrize("hull,want", [
    (UNIT, 2), (TRI, 16), (Hull2D.from_cycle([(0, 0), (5, 2)]), 0),
    (Hull2D.from_cycle([(7, 7)]), 0),
])
def test_twice_area(hull, want):
    assert twice_area(hull) == want


@pytest.mark.parametrize("hull,want", [
    (UNIT, 4), (TRI, 12), (Hull2D.from_cycle([(0, 0), (2, 2)]), 3),
    (Hull2D.from_cycle([(7, 7)]), 1),
])
def test_boundary_count(hull, want):
    assert boundary_count(hull) == want


@pytest.mark.parametrize("hull,want", [(UNIT, 4), (SQ2, 9), (TRI, 15)])
def test_lattice_count(hull, want):
    assert lattice_count(hull) == want
    assert len(brute_lattice_points(V(hull.vertices))) == want


def test_triangle_boundary_matches_enumeration():
    on_boundary = [p for p in brute_lattice_points(V(TRI.vertices))
                   if p[0] == 0 or p[1] == 0 or p[0] + p[1] == 4]
    assert len(on_boundary) == 12


def test_degenerate_counts():
    assert lattice_count(Hull2D.from_cycle([(0, 0), (6, 4)])) == 3
    assert lattice_count(Hull2D.from_cycle([(1, 1)])) == 1


def test_empty_hull_rejected():
    with pytest.raises(InputError):
        boundary_count(Hull2D((), "empty"))
    with pytest.raises(InputError):
        lattice_count(Hull2D((), "empty"))


def test_parity_violation_raises(monkeypatch):
    import digiconvex.pick as pick
    monkeypatch.setattr(pick, "boundary_count", lambda hull: 5)
    with pytest.raises(InvariantError):
        pick.lattice_count(UNIT)
