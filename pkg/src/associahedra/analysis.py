"""Common-vertex counts, lattice-point counts, barycenters and summary tables."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from .maps import fibers, fibers_B, is_common_vertex
from .orientation import (
    Orientation,
    OrientationB,
    all_orientations,
    equivalence_classes,
    label_polygon,
    reverse,
    symmetric_A_orientation,
)
from .polygon import centrally_symmetric_triangulations, enumerate_triangulations
from .realization import (
    admissible_halfspaces,
    coordinates,
    cyclohedron_vertices,
    realization_vertices,
)

DEFAULT_MAX_N = 6


def catalan(n: int) -> int:
    return comb(2 * n, n) // (n + 1)


def common_vertex_count(o: Orientation) -> int:
    p = label_polygon(o)
    return sum(is_common_vertex(o, T) for T in enumerate_triangulations(p))


def common_vertex_count_b(b: OrientationB) -> int:
    o = symmetric_A_orientation(b)
    p = label_polygon(o)
    return sum(is_common_vertex(o, T) for T in centrally_symmetric_triangulations(p))


def _halfspace_matrix(o: Orientation) -> tuple:
    rows = [h.coefficients() for h in admissible_halfspaces(o).values()]
    A = np.array([a for a, _ in rows], dtype=np.int64)
    c = np.array([c for _, c in rows], dtype=np.int64)
    return A, c


def _scan(A, c, lo, hi, complete):
    """Yield integer points of the box ``[lo, hi]`` (free coordinates) that satisfy ``A x + c >= 0``.

    ``complete`` maps an ``(N, f)`` block of free coordinates to full points
    plus a mask of rows that stay inside the box.  The outermost coordinate is
    scanned slice by slice to bound memory.
    """
    inner = [np.arange(l, h + 1, dtype=np.int64) for l, h in zip(lo[1:], hi[1:])]
    grid = np.stack(np.meshgrid(*inner, indexing="ij"), axis=-1).reshape(-1, len(inner)) if inner else np.zeros((1, 0), np.int64)
    for first in range(lo[0], hi[0] + 1):
        free = np.concatenate([np.full((len(grid), 1), first, dtype=np.int64), grid], axis=1)
        pts, keep = complete(free)
        pts = pts[keep]
        ok = np.all(pts @ A.T + c >= 0, axis=1)
        yield pts[ok]


def integer_points(o: Orientation, max_n: int = DEFAULT_MAX_N) -> np.ndarray:
    """All integer points of the realization, sorted lexicographically.

    The polytope is the convex hull of its vertices, so the per-coordinate
    vertex range is a valid bounding box; every box point on the sum
    hyperplane is tested against every admissible half space.
    """
    n = o.n
    if n > max_n:
        raise ValueError(f"integer point scan refused for n={n} > cap {max_n}")
    V = np.array(realization_vertices(o), dtype=np.int64)
    lo, hi = V.min(axis=0), V.max(axis=0)
    total = n * (n + 1) // 2
    A, c = _halfspace_matrix(o)

    def complete(free):
        last = total - free.sum(axis=1)
        keep = (last >= lo[-1]) & (last <= hi[-1])
        return np.concatenate([free, last[:, None]], axis=1), keep

    chunks = list(_scan(A, c, lo[:-1], hi[:-1], complete))
    pts = np.concatenate(chunks) if chunks else np.zeros((0, n), np.int64)
    return pts[np.lexsort(pts.T[::-1])]


def integer_point_count(o: Orientation, max_n: int = DEFAULT_MAX_N) -> int:
    return len(integer_points(o, max_n))


def integer_points_b(b: OrientationB, max_n: int = 4) -> np.ndarray:
    """Integer points of the cyclohedron (sum and type-B hyperplanes plus admissible half spaces)."""
    if b.n > max_n:
        raise ValueError(f"integer point scan refused for B_{b.n} > cap {max_n}")
    o = symmetric_A_orientation(b)
    m = o.n
    V = np.array(cyclohedron_vertices(b), dtype=np.int64)
    lo, hi = V.min(axis=0), V.max(axis=0)
    A, c = _halfspace_matrix(o)

    def complete(free):
        # x_{2n+1-i} = 2n + 1 - x_i; the sum hyperplane then holds automatically
        mirror = (m + 1 - free)[:, ::-1]
        keep = np.all((mirror >= lo[b.n:]) & (mirror <= hi[b.n:]), axis=1)
        return np.concatenate([free, mirror], axis=1), keep

    chunks = list(_scan(A, c, lo[: b.n], hi[: b.n], complete))
    pts = np.concatenate(chunks)
    return pts[np.lexsort(pts.T[::-1])]


def barycenter(points) -> tuple:
    """Exact coordinate-wise mean."""
    points = [tuple(int(v) for v in x) for x in points]
    if not points:
        raise ValueError("barycenter of an empty set")
    N = len(points)
    return tuple(Fraction(sum(col), N) for col in zip(*points))


@dataclass
class RealizationStats:
    orientation: object
    vertex_count: int
    common_vertex_count: int
    integer_point_count: int | None
    barycenter: tuple

    def to_dict(self) -> dict:
        return {
            "orientation": self.orientation.to_dict(),
            "vertex_count": self.vertex_count,
            "common_vertex_count": self.common_vertex_count,
            "integer_point_count": self.integer_point_count,
            "barycenter": [str(v) for v in self.barycenter],
        }


def realization_stats(o: Orientation, max_n: int = DEFAULT_MAX_N) -> RealizationStats:
    pts = realization_vertices(o)
    st = RealizationStats(
        o,
        len(pts),
        common_vertex_count(o),
        integer_point_count(o, max_n) if o.n <= max_n else None,
        barycenter(pts),
    )
    assert st.vertex_count == catalan(o.n)
    assert st.common_vertex_count <= st.vertex_count
    assert st.integer_point_count is None or st.integer_point_count >= st.vertex_count
    return st


def realization_stats_b(b: OrientationB, max_n: int = 4) -> RealizationStats:
    pts = cyclohedron_vertices(b)
    st = RealizationStats(
        b,
        len(pts),
        common_vertex_count_b(b),
        len(integer_points_b(b, max_n)) if b.n <= max_n else None,
        barycenter(pts),
    )
    assert st.vertex_count == comb(2 * b.n, b.n)
    return st


def stats_table(n: int, by: str = "orientation", max_n: int = DEFAULT_MAX_N) -> list[RealizationStats]:
    """One row per orientation, or per reverse/rotate class (first member as representative)."""
    if n > max_n:
        raise ValueError(f"stats for n={n} exceed the enumeration cap {max_n}")
    if by == "orientation":
        reps = all_orientations(n)
    elif by == "class":
        reps = [cls[0] for cls in equivalence_classes(n)]
    else:
        raise ValueError(f"unknown grouping {by!r}")
    return [realization_stats(o, max_n) for o in reps]


def table_layout(n: int, max_n: int = DEFAULT_MAX_N) -> list[dict]:
    """Columns grouped into reversal pairs, ordered by (n_nabla, I_nabla) then up-sets."""
    stats = {st.orientation: st for st in stats_table(n, max_n=max_n)}
    cols, seen = [], set()
    for o in all_orientations(n):
        if o in seen:
            continue
        pair = [o] if reverse(o) == o else [o, reverse(o)]
        seen.update(pair)
        st = stats[o]
        for other in pair[1:]:
            assert (stats[other].common_vertex_count, stats[other].integer_point_count) == (
                st.common_vertex_count,
                st.integer_point_count,
            )
        cols.append(
            {
                "up": [sorted(q.up) for q in pair],
                "n_nabla": st.common_vertex_count,
                "I_nabla": st.integer_point_count,
            }
        )
    cols.sort(key=lambda col: (col["n_nabla"], col["I_nabla"], [len(u) for u in col["up"]], col["up"]))
    return cols


def common_fiber_sizes(o: Orientation) -> list[int]:
    """Fiber sizes of the permutation map, in canonical triangulation order."""
    F = fibers(o)
    return [len(F[T]) for T in enumerate_triangulations(label_polygon(o))]


def isometric_image(points, n: int) -> set:
    """Image under ``x -> (n+1) - x``."""
    return {tuple(n + 1 - int(v) for v in x) for x in points}


def symmetric_fiber_singletons(b: OrientationB) -> int:
    return sum(len(v) == 1 for v in fibers_B(b).values())


def vertex_coordinates_table(o: Orientation) -> list[tuple]:
    p = label_polygon(o)
    return [(T, coordinates(o, T)) for T in enumerate_triangulations(p)]
