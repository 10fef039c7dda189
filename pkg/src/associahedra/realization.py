"""Integer coordinates for triangulations and the matching H-representations.

All arithmetic is exact: coordinates are Python ints and the brute-force
vertex enumeration solves its linear systems over :class:`fractions.Fraction`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .orientation import (
    Orientation,
    OrientationB,
    label_polygon,
    symmetric_A_orientation,
)
from .polygon import (
    Triangulation,
    all_diagonals,
    antipode,
    bistellar_flip,
    centrally_symmetric_flip,
    centrally_symmetric_triangulations,
    enumerate_triangulations,
    symmetric_flip_orbits,
    weight,
)


def coordinates(o: Orientation, T: Triangulation) -> tuple:
    """The point of ``T``: the weight for down elements, ``n + 1 - weight`` for up ones."""
    n = o.n
    if T.polygon.n != n:
        raise ValueError("triangulation and orientation disagree on n")
    return tuple(
        n + 1 - weight(T, i) if i in o.up else weight(T, i) for i in range(1, n + 1)
    )


def perm_point(sigma) -> tuple:
    """Permutahedron vertex ``(sigma(1), ..., sigma(n))`` of a one-line permutation."""
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, len(sigma) + 1)):
        raise ValueError(f"{sigma} is not a permutation of 1..{len(sigma)}")
    return sigma


@dataclass(frozen=True)
class HalfSpace:
    """The permutahedron half space attached to ``K``, a proper nonempty subset of ``[n]``."""

    n: int
    K: frozenset

    def __post_init__(self):
        K = frozenset(self.K)
        object.__setattr__(self, "K", K)
        if not K or not K < frozenset(range(1, self.n + 1)):
            raise ValueError(f"K must be a proper nonempty subset of [1, {self.n}], got {sorted(K)}")

    @property
    def k(self) -> int:
        return len(self.K)

    def coefficients(self) -> tuple:
        """Row of the inequality ``a . x + rhs >= 0``; returns ``(a, rhs)``."""
        n, k = self.n, self.k
        a = tuple(n - k if i in self.K else -k for i in range(1, n + 1))
        return a, n * k * (n - k) // 2

    def to_dict(self) -> dict:
        a, c = self.coefficients()
        return {"K": sorted(self.K), "normal": list(a), "rhs": -c}


def halfspace_eval(h: HalfSpace, x) -> int:
    """``(n-k) sum_K x - k sum_{not K} x + n k (n-k) / 2``: zero on, positive strictly inside."""
    n, k = h.n, h.k
    if len(x) != n:
        raise ValueError(f"point has dimension {len(x)}, expected {n}")
    twice_const = n * k * (n - k)
    assert twice_const % 2 == 0
    inside = sum(x[i - 1] for i in h.K)
    outside = sum(x) - inside
    return (n - k) * inside - k * outside + twice_const // 2


def classify(h: HalfSpace, x) -> str:
    v = halfspace_eval(h, x)
    return "on" if v == 0 else ("inside" if v > 0 else "outside")


def K_map(o: Orientation, d) -> frozenset:
    """Subset of ``[n]`` attached to the diagonal ``d`` (case formula)."""
    a, b = sorted(d)
    n = o.n
    down, up = o.down, o.up
    is_dbar = o.is_down  # 0 and n+1 count as down here
    if is_dbar(a) and is_dbar(b):
        K = {i for i in down if a < i < b}
    elif is_dbar(a) and b in up:
        K = {i for i in down if a < i} | {i for i in up if b <= i}
    elif a in up and b in up:
        K = set(down) | {i for i in up if i <= a or b <= i}
    else:
        K = {i for i in down if i < b} | {i for i in up if i <= a}
    K = frozenset(K)
    assert K == K_map_ccw(o, d), (o, d)
    assert K and len(K) < n
    return K


def K_map_ccw(o: Orientation, d) -> frozenset:
    """Same subset, read counterclockwise along the polygon from the smaller label."""
    p = label_polygon(o)
    a, b = sorted(d)
    k = p.position[a]
    read = [a]
    while read[-1] != b:
        k += 1
        read.append(p.label_at(k))
    drop = {0, o.n + 1} | ({a, b} & o.down)
    return frozenset(read) - drop


@dataclass(frozen=True)
class Hyperplane:
    """Either the sum hyperplane (``index`` is None) or the type-B hyperplane ``x_i + x_{2n+1-i} = 2n+1``."""

    kind: str
    dim: int
    index: int | None = None

    def __post_init__(self):
        if self.kind == "sum":
            if self.index is not None:
                raise ValueError("the sum hyperplane has no index")
        elif self.kind == "typeB":
            if self.dim % 2 or not 1 <= (self.index or 0) <= self.dim // 2:
                raise ValueError(f"bad type-B hyperplane index {self.index} in dimension {self.dim}")
        else:
            raise ValueError(f"unknown hyperplane kind {self.kind!r}")

    def coefficients(self) -> tuple:
        """``(a, rhs)`` with ``a . x = rhs``."""
        m = self.dim
        if self.kind == "sum":
            return (1,) * m, m * (m + 1) // 2
        i = self.index
        a = [0] * m
        a[i - 1] = a[m - i] = 1
        return tuple(a), m + 1

    def contains(self, x) -> bool:
        a, rhs = self.coefficients()
        return sum(ai * xi for ai, xi in zip(a, x)) == rhs


def sum_hyperplane(n: int) -> Hyperplane:
    return Hyperplane("sum", n)


def type_b_hyperplanes(n: int) -> list[Hyperplane]:
    """The ``n`` hyperplanes ``x_i + x_{2n+1-i} = 2n+1`` in dimension ``2n``."""
    return [Hyperplane("typeB", 2 * n, i) for i in range(1, n + 1)]


def on_all_type_b(x) -> bool:
    m = len(x)
    if m % 2:
        raise ValueError("type-B hyperplanes live in even dimension")
    return all(h.contains(x) for h in type_b_hyperplanes(m // 2))


def admissible_halfspaces(o: Orientation) -> dict:
    """Map each diagonal of the labelled polygon to its admissible half space."""
    return dict(_admissible(o))


@lru_cache(maxsize=None)
def _admissible(o: Orientation) -> tuple:
    p = label_polygon(o)
    return tuple((d, HalfSpace(o.n, K_map(o, d))) for d in all_diagonals(p))


def h_representation(o: Orientation) -> tuple:
    """``(sum hyperplane, admissible half spaces)``; one half space per diagonal."""
    by_diag = admissible_halfspaces(o)
    Ks = [h.K for h in by_diag.values()]
    if len(set(Ks)) != len(Ks):  # pragma: no cover
        raise AssertionError(f"K map is not injective for {o!r}")
    n = o.n
    assert len(Ks) == (n + 2) * (n - 1) // 2
    halfspaces = sorted(by_diag.values(), key=lambda h: (h.k, sorted(h.K)))
    return sum_hyperplane(n), halfspaces


@dataclass
class VertexReport:
    """Outcome of checking one triangulation's point against every admissible half space."""

    orientation: Orientation
    triangulation: Triangulation
    point: tuple
    tight: list = field(default_factory=list)
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def verify_vertex(o: Orientation, T: Triangulation) -> VertexReport:
    x = coordinates(o, T)
    rep = VertexReport(o, T, x)
    if not sum_hyperplane(o.n).contains(x):
        rep.violations.append(("off sum hyperplane", sum(x)))
    for d, h in admissible_halfspaces(o).items():
        v = halfspace_eval(h, x)
        if v == 0:
            rep.tight.append(d)
        if d in T:
            if v != 0:
                rep.violations.append(("refined diagonal not tight", d, v))
        elif v <= 0:
            rep.violations.append(("non-refined diagonal not strictly inside", d, v))
    return rep


def realization_vertices(o: Orientation) -> list[tuple]:
    """Points of all triangulations, in canonical triangulation order."""
    p = label_polygon(o)
    return [coordinates(o, T) for T in enumerate_triangulations(p)]


def symmetric_triangulation_points(o: Orientation) -> list[tuple]:
    """Points of the centrally symmetric triangulations under an arbitrary orientation of even ``n``.

    Only for symmetric ``o`` is this the vertex set of a cyclohedron; it is
    kept general so the failure for non-symmetric orientations can be shown.
    """
    p = label_polygon(o)
    return [coordinates(o, T) for T in centrally_symmetric_triangulations(p)]


def cyclohedron_vertices(b: OrientationB) -> list[tuple]:
    o = symmetric_A_orientation(b)
    pts = symmetric_triangulation_points(o)
    for x in pts:
        if not on_all_type_b(x):  # pragma: no cover
            raise AssertionError(f"{x} is off a type-B hyperplane")
    return pts


def solve_exact(A, rhs) -> tuple | None:
    """Unique solution of ``A x = rhs`` over the rationals, or None if singular or inconsistent."""
    rows = [[Fraction(v) for v in row] + [Fraction(r)] for row, r in zip(A, rhs)]
    ncols = len(A[0])
    piv_row = 0
    pivots = []
    for c in range(ncols):
        r = next((r for r in range(piv_row, len(rows)) if rows[r][c] != 0), None)
        if r is None:
            return None
        rows[piv_row], rows[r] = rows[r], rows[piv_row]
        pv = rows[piv_row][c]
        rows[piv_row] = [v / pv for v in rows[piv_row]]
        for r2 in range(len(rows)):
            if r2 != piv_row and rows[r2][c] != 0:
                f = rows[r2][c]
                rows[r2] = [v - f * w for v, w in zip(rows[r2], rows[piv_row])]
        pivots.append(c)
        piv_row += 1
    if any(row[-1] != 0 for row in rows[piv_row:]):
        return None
    return tuple(rows[k][-1] for k in range(ncols))


def _as_int_point(x) -> tuple:
    return tuple(int(v) if v.denominator == 1 else v for v in x)


def vertices_from_h_representation(o: Orientation) -> set:
    """Brute-force vertex enumeration of the admissible H-representation.

    Every ``(n-1)``-subset of facets is intersected with the sum hyperplane;
    the unique intersection point is kept when it satisfies all half spaces.
    """
    n = o.n
    H, halfspaces = h_representation(o)
    rows = [h.coefficients() for h in halfspaces]
    a0, r0 = H.coefficients()
    found = set()
    for subset in combinations(rows, n - 1):
        A = [a0] + [a for a, _ in subset]
        rhs = [r0] + [-c for _, c in subset]
        x = solve_exact(A, rhs)
        if x is None:
            continue
        if all(sum(ai * xi for ai, xi in zip(a, x)) + c >= 0 for a, c in rows):
            found.add(_as_int_point(x))
    return found


def type_b_facets(b: OrientationB) -> list[tuple]:
    """Antipodal orbits of diagonals; each orbit supports one facet of the cyclohedron."""
    o = symmetric_A_orientation(b)
    p = label_polygon(o)
    seen, orbits = set(), []
    for d in all_diagonals(p):
        if d in seen:
            continue
        e = antipode(p, d)
        seen |= {d, e}
        orbits.append(tuple(sorted({d, e})))
    return orbits


def vertices_from_h_representation_b(b: OrientationB) -> set:
    """Brute-force vertices of: sum hyperplane, type-B hyperplanes, admissible half spaces."""
    o = symmetric_A_orientation(b)
    m = o.n
    by_diag = admissible_halfspaces(o)
    rows = [h.coefficients() for h in by_diag.values()]
    eqs = [sum_hyperplane(m).coefficients()] + [h.coefficients() for h in type_b_hyperplanes(b.n)]
    facet_rows = [by_diag[orbit[0]].coefficients() for orbit in type_b_facets(b)]
    found = set()
    for subset in combinations(facet_rows, b.n):
        A = [a for a, _ in eqs] + [a for a, _ in subset]
        rhs = [r for _, r in eqs] + [-c for _, c in subset]
        x = solve_exact(A, rhs)
        if x is None:
            continue
        if all(sum(ai * xi for ai, xi in zip(a, x)) + c >= 0 for a, c in rows):
            found.add(_as_int_point(x))
    return found


def tight_diagonals(o: Orientation, x) -> frozenset:
    return frozenset(d for d, h in admissible_halfspaces(o).items() if halfspace_eval(h, x) == 0)


@dataclass
class Skeleton:
    """Vertex-edge graph of a realization; vertices indexed like ``triangulations``."""

    triangulations: list
    points: list
    edges: list  # sorted (i, j) index pairs, i < j

    def degrees(self) -> list[int]:
        deg = [0] * len(self.points)
        for i, j in self.edges:
            deg[i] += 1
            deg[j] += 1
        return deg


def skeleton(o: Orientation) -> Skeleton:
    """Edges are pairs of vertices sharing exactly ``n - 2`` facets; checked against the flip graph."""
    p = label_polygon(o)
    tris = enumerate_triangulations(p)
    pts = [coordinates(o, T) for T in tris]
    tight = [tight_diagonals(o, x) for x in pts]
    for T, t in zip(tris, tight):
        if t != T.diagonal_set:  # pragma: no cover
            raise AssertionError(f"{T} is tight on {sorted(t)}")
    edges = [
        (i, j)
        for i, j in combinations(range(len(tris)), 2)
        if len(tight[i] & tight[j]) == o.n - 2
    ]
    index = {T: k for k, T in enumerate(tris)}
    flips = sorted(
        {tuple(sorted((k, index[bistellar_flip(T, d)[0]]))) for k, T in enumerate(tris) for d in T}
    )
    if flips != edges:  # pragma: no cover
        raise AssertionError("facet-incidence graph differs from the flip graph")
    return Skeleton(tris, pts, edges)


def skeleton_b(b: OrientationB) -> Skeleton:
    """Cyclohedron skeleton; edges share ``n - 1`` facets and agree with symmetric flips."""
    o = symmetric_A_orientation(b)
    p = label_polygon(o)
    tris = centrally_symmetric_triangulations(p)
    pts = [coordinates(o, T) for T in tris]
    orbits = type_b_facets(b)
    tight = []
    for x in pts:
        td = tight_diagonals(o, x)
        tight.append(frozenset(orb for orb in orbits if set(orb) <= td))
        assert all(set(orb) <= td or not set(orb) & td for orb in orbits)
    edges = [
        (i, j)
        for i, j in combinations(range(len(tris)), 2)
        if len(tight[i] & tight[j]) == b.n - 1
    ]
    index = {T: k for k, T in enumerate(tris)}
    flips = sorted(
        {
            tuple(sorted((k, index[centrally_symmetric_flip(T, d)])))
            for k, T in enumerate(tris)
            for d in symmetric_flip_orbits(T)
        }
    )
    if flips != edges:  # pragma: no cover
        raise AssertionError("facet-incidence graph differs from the symmetric flip graph")
    return Skeleton(tris, pts, edges)


def type_b_tight_facets(b: OrientationB, x) -> list[tuple]:
    o = symmetric_A_orientation(b)
    td = tight_diagonals(o, x)
    return [orb for orb in type_b_facets(b) if set(orb) <= td]


def dual_tree(T: Triangulation):
    """Planar binary tree dual to ``T`` for the consecutively labelled polygon.

    Leaves are ``None``; an internal node is ``(label, left, right)``.  The root
    is the triangle on the edge ``{0, n+1}``.
    """
    p = T.polygon
    if p.ccw_labels != tuple(range(p.size)):
        raise ValueError("the dual-tree oracle needs the all-down labelling")

    def build(a, b):
        if b - a == 1:
            return None
        (k,) = [k for k in range(a + 1, b) if k in T.neighbors[a] and k in T.neighbors[b]]
        return (k, build(a, k), build(k, b))

    return build(0, p.n + 1)


def _leaves(tree) -> int:
    return 1 if tree is None else _leaves(tree[1]) + _leaves(tree[2])


def loday_coordinates(T: Triangulation) -> tuple:
    """Leaf-count products of the dual binary tree (all-down orientation only)."""
    x = {}

    def walk(tree):
        if tree is None:
            return
        k, left, right = tree
        x[k] = _leaves(left) * _leaves(right)
        walk(left)
        walk(right)

    walk(dual_tree(T))
    return tuple(x[i] for i in range(1, T.polygon.n + 1))
