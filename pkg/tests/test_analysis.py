from fractions import Fraction
from itertools import permutations

import numpy as np
import pytest

from associahedra.analysis import (
    barycenter,
    common_vertex_count,
    integer_point_count,
    integer_points,
    integer_points_b,
    isometric_image,
    realization_stats,
    realization_stats_b,
    stats_table,
    symmetric_fiber_singletons,
    table_layout,
)
from associahedra.orientation import OrientationB, all_orientations, new_orientation, reverse
from associahedra.realization import halfspace_eval, h_representation, realization_vertices


def brute_force_count(o):
    """Integer points by scanning a generous cube with plain Python."""
    n = o.n
    _, hs = h_representation(o)
    lo, hi = -(n * n), n * n
    total = n * (n + 1) // 2
    count = 0

    def rec(prefix):
        nonlocal count
        if len(prefix) == n - 1:
            x = prefix + [total - sum(prefix)]
            if all(halfspace_eval(h, x) >= 0 for h in hs):
                count += 1
            return
        for v in range(lo, hi + 1):
            rec(prefix + [v])

    rec([])
    return count


@pytest.mark.parametrize("up", [set(), {2}])
def test_lattice_scan_matches_naive_cube_n3(up):
    o = new_orientation(3, up)
    assert integer_point_count(o) == brute_force_count(o) == 8


def test_lattice_scan_matches_naive_cube_n4():
    o = new_orientation(4, {2})
    assert integer_point_count(o) == brute_force_count(o) == 60


def test_integer_points_contain_vertices():
    o = new_orientation(5, {2, 4})
    pts = {tuple(int(v) for v in x) for x in integer_points(o)}
    assert set(realization_vertices(o)) <= pts
    assert len(pts) == 742


def test_cap_refuses():
    with pytest.raises(ValueError):
        integer_points(new_orientation(7))
    with pytest.raises(ValueError):
        stats_table(7)
    with pytest.raises(ValueError):
        integer_points_b(OrientationB(5))


@pytest.mark.parametrize("n, expected", [(3, 4), (4, 8), (5, 16), (6, 32)])
def test_loday_common_vertices(n, expected):
    assert common_vertex_count(new_orientation(n)) == expected == 2 ** (n - 1)


def test_common_vertex_examples():
    assert {common_vertex_count(o) for o in all_orientations(3)} == {4}
    assert common_vertex_count(new_orientation(5, {2, 4})) == 20


def test_stats_table_values():
    assert sorted(r.integer_point_count for r in stats_table(4)) == [55, 55, 60, 60]
    rows = stats_table(5)
    assert len(rows) == 8
    assert sorted(r.integer_point_count for r in rows) == [567, 567, 672, 672, 672, 672, 742, 742]


def test_stats_by_class():
    rows = stats_table(5, by="class")
    assert [sorted(r.orientation.up) for r in rows] == [[], [2], [3]]
    with pytest.raises(ValueError):
        stats_table(5, by="nothing")


def test_invariants_constant_on_classes_n5():
    from associahedra.orientation import equivalence_classes

    by_o = {r.orientation: r for r in stats_table(5)}
    for cls in equivalence_classes(5):
        assert len({(by_o[o].common_vertex_count, by_o[o].integer_point_count) for o in cls}) == 1


def test_table_layout_n4():
    cols = table_layout(4)
    assert [(c["up"], c["n_nabla"], c["I_nabla"]) for c in cols] == [
        ([[], [2, 3]], 8, 55),
        ([[2], [3]], 9, 60),
    ]


@pytest.mark.parametrize("n", [3, 4, 5])
def test_reverse_is_lattice_isometry(n):
    for o in all_orientations(n):
        image = isometric_image(integer_points(o), n)
        other = {tuple(int(v) for v in x) for x in integer_points(reverse(o))}
        assert image == other
        assert isometric_image(realization_vertices(o), n) == set(realization_vertices(reverse(o)))


def test_barycenter_exact():
    assert barycenter([(1, 2), (2, 2), (3, 5)]) == (Fraction(2), Fraction(3))
    with pytest.raises(ValueError):
        barycenter([])


@pytest.mark.parametrize("n", [2, 3, 4])
def test_permutahedron_barycenter(n):
    pts = list(permutations(range(1, n + 1)))
    assert barycenter(pts) == (Fraction(n + 1, 2),) * n


def test_barycenter_cyclohedron_b5():
    from associahedra.orientation import all_orientations_b
    from associahedra.realization import cyclohedron_vertices

    for b in all_orientations_b(5):
        assert barycenter(cyclohedron_vertices(b)) == (Fraction(11, 2),) * 10


def test_stats_records():
    st = realization_stats(new_orientation(3))
    assert st.to_dict() == {
        "orientation": {"type": "A", "n": 3, "up": []},
        "vertex_count": 5,
        "common_vertex_count": 4,
        "integer_point_count": 8,
        "barycenter": ["2", "2", "2"],
    }
    sb = realization_stats_b(OrientationB(2))
    assert sb.vertex_count == 6 and sb.integer_point_count >= 6


def test_type_b_lattice_points_recorded():
    counts = {len(integer_points_b(b)) for b in [OrientationB(2), OrientationB(2, frozenset({1}))]}
    assert counts == {16}
    pts = integer_points_b(OrientationB(3))
    assert np.all(pts[:, 0] + pts[:, 5] == 7)


def test_symmetric_singletons():
    assert symmetric_fiber_singletons(OrientationB(2)) == 5
    assert {symmetric_fiber_singletons(OrientationB(3, frozenset(s))) for s in ([], [1], [2], [1, 2])} == {12, 13}
