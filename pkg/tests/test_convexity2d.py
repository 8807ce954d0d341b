import pytest

from digiconvex import ConvexityReport, InputError, gen_ball, is_digital_convex_2d
from digiconvex.report import FORMAT_VERSION

from conftest import V


@pytest.mark.parametrize("pts,convex", [
    ([(0, 0), (1, 0), (2, 0), (1, 1)], True),
    ([(0, 0), (2, 0), (1, 1)], False),
    ([(0, 0), (2, 2)], False),
    ([(0, 0), (1, 4)], True),
    ([(5, -3)], True),
    ([], True),
])
def test_examples(pts, convex):
    r = is_digital_convex_2d(V(pts))
    assert r.is_convex is convex
    if convex:
        assert r.reason == "confirmed" and r.lattice_count == len(pts)


def test_missing_point_count():
    r = is_digital_convex_2d(V([(0, 0), (2, 0), (1, 1)]))
    assert r.reason == "count_mismatch" and r.lattice_count == 4 and r.h == 3


def test_early_stop_reason():
    r = is_digital_convex_2d(V([(i, i * i) for i in range(12)]))
    assert r.verdict == "not_convex" and r.reason == "early_stop" and r.hull is None


def test_duplicates_flag_propagates():
    r = is_digital_convex_2d(V([(0, 0), (0, 0), (1, 0)]))
    assert r.is_convex and r.duplicates


def test_rejects_other_dimensions():
    with pytest.raises(InputError):
        is_digital_convex_2d(V([(0, 0, 0)], 3))


def test_large_disk_linear_work():
    S = gen_ball(2, 10**4)
    r = is_digital_convex_2d(S)
    assert r.is_convex and r.work <= 2 * S.n + 16 * r.h


def test_report_serialisation():
    r = is_digital_convex_2d(V([(0, 0), (2, 2)]))
    d = r.to_dict()
    for key in ("verdict", "reason", "n", "h", "lattice_count", "work", "steps"):
        assert key in d
    assert d["format"] == FORMAT_VERSION
    text = r.to_text()
    assert "verdict: not_convex" in text and "lattice_count: 3" in text
    import json
    assert json.loads(r.to_json())["hull"] == [[0, 0], [2, 2]]


def test_report_invariants_enforced():
    with pytest.raises(AssertionError):
        ConvexityReport("convex", "count_mismatch", 3)
    with pytest.raises(AssertionError):
        ConvexityReport("convex", "confirmed", 3, lattice_count=4)
    with pytest.raises(ValueError):
        ConvexityReport("maybe", "confirmed", 3)
