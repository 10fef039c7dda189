"""Triangulations of a labelled polygon.

Diagonals are pairs of labels ``(a, b)`` with ``a < b``.  Geometry (crossing,
adjacency, central symmetry) is always decided on boundary positions, because
the labelling is not monotone around the polygon.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import combinations

from .orientation import LabelledPolygon


def _pair(a: int, b: int) -> tuple:
    return (a, b) if a < b else (b, a)


def crosses(p: LabelledPolygon, d: tuple, e: tuple) -> bool:
    """Strict interleaving of the position pairs of two chords."""
    a, b = sorted((p.position[d[0]], p.position[d[1]]))
    c1, c2 = p.position[e[0]], p.position[e[1]]
    if len({a, b, c1, c2}) < 4:
        return False
    return (a < c1 < b) != (a < c2 < b)


def all_diagonals(p: LabelledPolygon) -> list[tuple]:
    """Every chord joining two non-adjacent vertices, sorted."""
    return sorted(
        _pair(a, b)
        for a, b in combinations(range(p.size), 2)
        if not p.is_boundary_edge(a, b)
    )


@dataclass(frozen=True)
class Triangulation:
    """A set of ``n - 1`` pairwise non-crossing diagonals of ``polygon``."""

    polygon: LabelledPolygon
    diagonals: tuple

    def __post_init__(self):
        diags = tuple(sorted(_pair(*d) for d in self.diagonals))
        object.__setattr__(self, "diagonals", diags)

    def validate(self) -> "Triangulation":
        p = self.polygon
        if len(set(self.diagonals)) != p.n - 1:
            raise ValueError(f"a triangulation of a {p.size}-gon has {p.n - 1} diagonals, got {self.diagonals}")
        for d in self.diagonals:
            if not (0 <= d[0] < d[1] <= p.n + 1):
                raise ValueError(f"bad diagonal {d}")
            if p.is_boundary_edge(*d):
                raise ValueError(f"{d} is a boundary edge")
        for d, e in combinations(self.diagonals, 2):
            if crosses(p, d, e):
                raise ValueError(f"diagonals {d} and {e} cross")
        return self

    def __contains__(self, d) -> bool:
        return _pair(*d) in self.diagonal_set

    def __iter__(self):
        return iter(self.diagonals)

    def __len__(self):
        return len(self.diagonals)

    @cached_property
    def diagonal_set(self) -> frozenset:
        return frozenset(self.diagonals)

    @cached_property
    def edges(self) -> frozenset:
        """Diagonals together with the boundary edges."""
        return self.diagonal_set | frozenset(self.polygon.boundary_edges())

    @cached_property
    def neighbors(self) -> dict:
        nb = {a: set() for a in range(self.polygon.size)}
        for a, b in self.edges:
            nb[a].add(b)
            nb[b].add(a)
        return {a: frozenset(s) for a, s in nb.items()}

    def to_list(self) -> list:
        return [list(d) for d in self.diagonals]

    def __repr__(self):
        return f"Triangulation({list(self.diagonals)})"


def triangulation(p: LabelledPolygon, diagonals) -> Triangulation:
    """Build and validate a triangulation from label pairs."""
    return Triangulation(p, tuple(diagonals)).validate()


def enumerate_triangulations(p: LabelledPolygon) -> list[Triangulation]:
    """All ``Catalan(n)`` triangulations of ``p`` in canonical (sorted) order."""

    @lru_cache(maxsize=None)
    def ears(i, j):
        # triangulations of the sub-polygon on positions i..j, as sets of position chords
        if j - i < 2:
            return [frozenset()]
        out = []
        for k in range(i + 1, j):
            own = set()
            if k - i > 1:
                own.add((i, k))
            if j - k > 1:
                own.add((k, j))
            for left in ears(i, k):
                for right in ears(k, j):
                    out.append(frozenset(own) | left | right)
        return out

    lab = p.ccw_labels
    tris = [
        Triangulation(p, tuple(_pair(lab[a], lab[b]) for a, b in chords))
        for chords in ears(0, p.size - 1)
    ]
    tris.sort(key=lambda t: t.diagonals)
    return tris


@lru_cache(maxsize=None)
def _mu_table(p: LabelledPolygon) -> dict:
    table = {}
    for i in range(1, p.n + 1):
        k0 = p.position[i]
        for j in range(p.n + 2):
            ok = (lambda a: a <= i) if j < i else (lambda a: a >= i)
            for step in (1, -1):
                k, dist = k0, 0
                while p.label_at(k) != j:
                    k += step
                    dist += 1
                    if not ok(p.label_at(k)):
                        break
                else:
                    table[i, j] = dist
                    break
            else:  # pragma: no cover - excluded by the arc invariant of LabelledPolygon
                raise AssertionError(f"no admissible boundary path from {i} to {j}")
    return table


def mu(p: LabelledPolygon, i: int, j: int) -> int:
    """Boundary distance from ``i`` to ``j`` along labels ``<= i`` (``j < i``) or ``>= i`` (``j >= i``)."""
    if not 1 <= i <= p.n:
        raise ValueError(f"mu is defined for i in [1, {p.n}], got {i}")
    return _mu_table(p)[i, j]


def left_argmax(T: Triangulation, i: int) -> int:
    """The neighbour ``a < i`` of ``i`` in ``T`` maximising ``mu_i(a)``."""
    return max((a for a in T.neighbors[i] if a < i), key=lambda a: mu(T.polygon, i, a))


def right_argmax(T: Triangulation, i: int) -> int:
    return max((b for b in T.neighbors[i] if b > i), key=lambda b: mu(T.polygon, i, b))


def p_left(T: Triangulation, i: int) -> int:
    return mu(T.polygon, i, left_argmax(T, i))


def p_right(T: Triangulation, i: int) -> int:
    return mu(T.polygon, i, right_argmax(T, i))


def weight(T: Triangulation, i: int) -> int:
    return p_left(T, i) * p_right(T, i)


def _apexes(T: Triangulation, d: tuple) -> tuple:
    """The third vertices of the two triangles of ``T`` on the diagonal ``d``."""
    p = T.polygon
    a, b = d
    pa, pb = p.position[a], p.position[b]
    span = (pb - pa) % p.size
    common = T.neighbors[a] & T.neighbors[b]
    ccw_side = [c for c in common if 0 < (p.position[c] - pa) % p.size < span]
    cw_side = [c for c in common if (p.position[c] - pa) % p.size > span]
    if len(ccw_side) != 1 or len(cw_side) != 1:
        raise AssertionError(f"diagonal {d} is not bounded by two triangles in {T}")
    return ccw_side[0], cw_side[0]


def bistellar_flip(T: Triangulation, d) -> tuple:
    """Replace ``d`` by the other diagonal of its quadrilateral; returns ``(T', d')``."""
    d = _pair(*d)
    if d not in T.diagonal_set:
        raise ValueError(f"{d} is not a diagonal of {T}")
    new = _pair(*_apexes(T, d))
    diags = (T.diagonal_set - {d}) | {new}
    return Triangulation(T.polygon, tuple(diags)), new


def flip_neighbors(T: Triangulation) -> list[Triangulation]:
    return [bistellar_flip(T, d)[0] for d in T.diagonals]


def antipode(p: LabelledPolygon, d) -> tuple:
    """Image of a chord under the half turn of the regular polygon."""
    if p.size % 2:
        raise ValueError("central symmetry needs an even number of vertices")
    h = p.size // 2
    return _pair(p.label_at(p.position[d[0]] + h), p.label_at(p.position[d[1]] + h))


def is_centrally_symmetric(T: Triangulation) -> bool:
    return all(antipode(T.polygon, d) in T.diagonal_set for d in T.diagonals)


def centrally_symmetric_triangulations(p: LabelledPolygon) -> list[Triangulation]:
    return [T for T in enumerate_triangulations(p) if is_centrally_symmetric(T)]


def centrally_symmetric_flip(T: Triangulation, d) -> Triangulation:
    """Flip ``d`` together with its antipode (a single flip when ``d`` is a diameter)."""
    d = _pair(*d)
    e = antipode(T.polygon, d)
    T1, _ = bistellar_flip(T, d)
    if e != d:
        T1, _ = bistellar_flip(T1, e)
    if not is_centrally_symmetric(T1):  # pragma: no cover
        raise AssertionError(f"symmetric flip of {d} broke symmetry")
    return T1


def symmetric_flip_orbits(T: Triangulation) -> list[tuple]:
    """One representative diagonal per antipodal orbit of ``T``'s diagonals."""
    seen, reps = set(), []
    for d in T.diagonals:
        if d in seen:
            continue
        e = antipode(T.polygon, d)
        seen |= {d, e}
        reps.append(d)
    return reps
