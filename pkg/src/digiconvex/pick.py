"""Lattice point counts of 2D lattice polygons (Pick's formula)."""
import math

from .geometry import Hull2D, InputError, InvariantError, segment_lattice_count


def twice_area(hull: Hull2D) -> int:
    if hull.kind != "full":
        return 0
    v = hull.vertices
    m = len(v)
    s = sum(v[i][0] * v[(i + 1) % m][1] - v[(i + 1) % m][0] * v[i][1] for i in range(m))
    return abs(s)


def boundary_count(hull: Hull2D) -> int:
    if hull.kind == "empty":
        raise InputError("empty hull has no boundary")
    if hull.kind == "point":
        return 1
    if hull.kind == "segment":
        return segment_lattice_count(*hull.vertices)
    return sum(math.gcd(abs(q[0] - p[0]), abs(q[1] - p[1])) for p, q in hull.edges())


def lattice_count(hull: Hull2D) -> int:
    """Lattice points in the closed hull: I + B = (2A + B) / 2 + 1."""
    b = boundary_count(hull)
    if hull.kind != "full":
        return b
    a2 = twice_area(hull)
    if (a2 + b) % 2:
        raise InvariantError(f"Pick parity violated (2A={a2}, B={b}); malformed hull")
    return (a2 + b) // 2 + 1
