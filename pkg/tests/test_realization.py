from itertools import permutations

import pytest

from associahedra.maps import inverse
from associahedra.orientation import (
    OrientationB,
    all_orientations,
    all_orientations_b,
    label_polygon,
    new_orientation,
)
from associahedra.polygon import all_diagonals, enumerate_triangulations, triangulation
from associahedra.realization import (
    HalfSpace,
    Hyperplane,
    K_map,
    K_map_ccw,
    classify,
    coordinates,
    cyclohedron_vertices,
    h_representation,
    halfspace_eval,
    loday_coordinates,
    on_all_type_b,
    perm_point,
    skeleton,
    skeleton_b,
    solve_exact,
    symmetric_triangulation_points,
    type_b_facets,
    type_b_hyperplanes,
    verify_vertex,
)

NABLA1 = new_orientation(4, {2})
NABLA2 = new_orientation(4, {2, 3})


def k_images(o):
    return sorted((sorted(K_map(o, d)) for d in all_diagonals(label_polygon(o))), key=lambda K: (len(K), K))


def test_hexagon_extreme_points():
    p1, p2 = label_polygon(NABLA1), label_polygon(NABLA2)
    T1 = triangulation(p1, [(0, 3), (2, 3), (2, 4)])
    T3 = triangulation(p1, [(1, 2), (1, 5), (3, 5)])
    assert coordinates(NABLA1, T1) == (1, 2, 3, 4)
    assert coordinates(NABLA1, T3) == (4, 3, 2, 1)
    points2 = set(coordinates(NABLA2, T) for T in enumerate_triangulations(p2))
    assert {(1, 2, 3, 4), (4, 3, 2, 1)} <= points2


@pytest.mark.parametrize("n", [2, 4, 7])
def test_loday_fan_point(n):
    o = new_orientation(n)
    fan = triangulation(label_polygon(o), [(0, j) for j in range(2, n + 1)])
    assert coordinates(o, fan) == tuple(range(1, n + 1))


def test_perm_point():
    assert perm_point((1, 2, 3)) == (1, 2, 3)
    assert perm_point((3, 2, 1)) == (3, 2, 1)
    with pytest.raises(ValueError):
        perm_point((1, 1, 3))


def test_k_map_up2():
    assert k_images(NABLA1) == [
        [1], [3], [4], [1, 2], [1, 3], [3, 4], [1, 2, 3], [1, 3, 4], [2, 3, 4],
    ]


def test_k_map_up23():
    assert k_images(NABLA2) == [
        [1], [4], [1, 2], [1, 4], [3, 4], [1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4],
    ]


def test_list_missing_bottom_sets_is_not_an_image():
    # {2}, {2,3} in place of {3,4}, {2,3,4}: bottom sets are always admissible
    swapped = [[1], [2], [4], [1, 2], [1, 4], [2, 3], [1, 2, 3], [1, 2, 4], [1, 3, 4]]
    assert all(k_images(o) != swapped for o in all_orientations(4))


@pytest.mark.parametrize("n", range(2, 8))
def test_k_map_injective_and_top_bottom(n):
    for o in all_orientations(n):
        images = [K_map(o, d) for d in all_diagonals(label_polygon(o))]
        assert len(set(images)) == len(images) == (n + 2) * (n - 1) // 2
        for u in range(1, n):
            assert frozenset(range(1, u + 1)) in images
            assert frozenset(range(n - u + 1, n + 1)) in images


def test_k_map_case_formula_agrees_with_reading():
    for n in range(2, 8):
        for o in all_orientations(n):
            for d in all_diagonals(label_polygon(o)):
                assert K_map(o, d) == K_map_ccw(o, d)


def test_halfspace_examples():
    assert halfspace_eval(HalfSpace(4, {1}), (1, 2, 3, 4)) == 0
    assert classify(HalfSpace(4, {1}), (2, 1, 3, 4)) == "inside"
    assert classify(HalfSpace(4, {1}), (0, 2, 3, 5)) == "outside"
    with pytest.raises(ValueError):
        HalfSpace(3, {1, 2, 3})
    with pytest.raises(ValueError):
        HalfSpace(3, set())


def test_halfspace_record():
    rec = HalfSpace(4, {1, 3}).to_dict()
    assert rec == {"K": [1, 3], "normal": [2, -2, 2, -2], "rhs": -8}


@pytest.mark.parametrize("n", [2, 3, 4])
def test_permutahedron_halfspaces(n):
    subsets = [frozenset(K) for K in _proper_subsets(n)]
    for sigma in permutations(range(1, n + 1)):
        x = perm_point(sigma)
        inv = inverse(sigma)
        for K in subsets:
            v = halfspace_eval(HalfSpace(n, K), x)
            assert v >= 0
            assert (v == 0) == (K == frozenset(inv[: len(K)]))


def _proper_subsets(n):
    for mask in range(1, 2**n - 1):
        yield {i + 1 for i in range(n) if mask >> i & 1}


def test_h_representation_sizes():
    for o in (NABLA1, NABLA2):
        H, hs = h_representation(o)
        assert H.kind == "sum" and len(hs) == 9
    _, hs = h_representation(new_orientation(2))
    assert sorted(sorted(h.K) for h in hs) == [[1], [2]]


def test_top_bottom_vertices():
    for n in range(2, 7):
        for o in all_orientations(n):
            pts = {coordinates(o, T) for T in enumerate_triangulations(label_polygon(o))}
            assert tuple(range(1, n + 1)) in pts
            assert tuple(range(n, 0, -1)) in pts


@pytest.mark.parametrize("n", [3, 4, 5])
def test_vertex_on_exactly_n_minus_1_facets(n):
    for o in all_orientations(n):
        for T in enumerate_triangulations(label_polygon(o)):
            rep = verify_vertex(o, T)
            assert rep.ok and len(rep.tight) == n - 1


def test_hyperplanes():
    assert [h.index for h in type_b_hyperplanes(3)] == [1, 2, 3]
    assert on_all_type_b((1, 2, 3, 4, 5, 6))
    assert on_all_type_b((6, -3, 3, 4, 10, 1))
    assert not on_all_type_b((1, 2, 3, 5, 4, 6))
    assert Hyperplane("sum", 4).contains((1, 2, 3, 4))
    with pytest.raises(ValueError):
        Hyperplane("typeB", 6, 4)
    with pytest.raises(ValueError):
        on_all_type_b((1, 2, 3))


def test_cyclohedron_small():
    assert sorted(cyclohedron_vertices(OrientationB(1))) == [(1, 2), (2, 1)]
    for n, count in [(2, 6), (3, 20), (4, 70)]:
        for b in all_orientations_b(n):
            pts = cyclohedron_vertices(b)
            assert len(set(pts)) == len(pts) == count
            assert all(on_all_type_b(x) for x in pts)


def test_non_symmetric_orientation_leaves_type_b_hyperplanes():
    o = new_orientation(4)
    assert not all(on_all_type_b(x) for x in symmetric_triangulation_points(o))


def test_type_b_facet_count():
    for n in (2, 3, 4):
        for b in all_orientations_b(n):
            assert len(type_b_facets(b)) == n * (n + 1)


def test_skeleton_n4():
    sk = skeleton(NABLA1)
    assert len(sk.points) == 14 and len(sk.edges) == 21
    assert set(sk.degrees()) == {3}


def test_skeleton_n2_segment():
    sk = skeleton(new_orientation(2))
    assert len(sk.points) == 2 and sk.edges == [(0, 1)]


def test_skeleton_b3():
    sk = skeleton_b(OrientationB(3))
    assert len(sk.points) == 20 and len(sk.edges) == 30
    assert set(sk.degrees()) == {3}


def test_loday_fan_and_mirror():
    o = new_orientation(4)
    p = label_polygon(o)
    fan = triangulation(p, [(0, 2), (0, 3), (0, 4)])
    mirror = triangulation(p, [(1, 5), (2, 5), (3, 5)])
    assert loday_coordinates(fan) == (1, 2, 3, 4)
    assert loday_coordinates(mirror) == (4, 3, 2, 1)


def test_loday_oracle_refuses_other_labelling():
    T = enumerate_triangulations(label_polygon(NABLA1))[0]
    with pytest.raises(ValueError):
        loday_coordinates(T)


def test_solve_exact():
    from fractions import Fraction

    assert solve_exact([[1, 1], [1, -1]], [3, 1]) == (2, 1)
    assert solve_exact([[2, 0], [0, 3]], [1, 1]) == (Fraction(1, 2), Fraction(1, 3))
    assert solve_exact([[1, 1], [2, 2]], [1, 2]) is None
