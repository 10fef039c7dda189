"""Oriented Coxeter graphs of type A and B and the polygon labelling they induce.

An orientation of the path graph ``A_{n-1}`` (vertices ``tau_1, ..., tau_{n-1}``)
is stored by its set of *up* elements: ``i`` in ``{2, ..., n-1}`` is up when the
edge ``{tau_{i-1}, tau_i}`` points from ``tau_i`` to ``tau_{i-1}``.  The
elements ``1`` and ``n`` are always down.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Iterator


@dataclass(frozen=True)
class Orientation:
    """Orientation of ``A_{n-1}``, given by the up elements of ``[n]``.

    Parameters
    ----------
    n : int
        Ambient dimension (the polygon has ``n + 2`` vertices).
    up : iterable of int
        Up elements, a subset of ``{2, ..., n-1}``.
    """

    n: int
    up: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"n must be an integer >= 2, got {self.n!r}")
        up = frozenset(int(i) for i in self.up)
        bad = sorted(i for i in up if not 2 <= i <= self.n - 1)
        if bad:
            raise ValueError(
                f"up elements must lie in {{2, ..., {self.n - 1}}}; got {bad} "
                "(1 and n are always down)"
            )
        object.__setattr__(self, "up", up)

    @cached_property
    def down(self) -> frozenset:
        return frozenset(range(1, self.n + 1)) - self.up

    def is_up(self, i: int) -> bool:
        return i in self.up

    def is_down(self, i: int) -> bool:
        """True for down elements of ``[n]`` and for the extra labels 0, n+1."""
        return i not in self.up

    def __repr__(self):
        return f"Orientation(n={self.n}, up={sorted(self.up)})"

    def to_dict(self) -> dict:
        return {"type": "A", "n": self.n, "up": sorted(self.up)}


def new_orientation(n: int, up: Iterable[int] = ()) -> Orientation:
    return Orientation(n, frozenset(up))


def all_orientations(n: int) -> list[Orientation]:
    """All ``2^(n-2)`` orientations of ``A_{n-1}``, ordered by up-set size then lexicographically."""
    inner = range(2, n)
    return [
        Orientation(n, frozenset(c))
        for k in range(len(inner) + 1)
        for c in combinations(inner, k)
    ]


@dataclass(frozen=True)
class OrientationB:
    """Orientation of the Coxeter graph ``B_n`` (``t -4- s_1 - s_2 - ... - s_{n-1}``).

    ``up`` is a subset of ``[n-1]``: index 1 stands for the edge ``{t, s_1}``
    and index ``i >= 2`` for ``{s_{i-1}, s_i}``.  An index is up when its edge
    points right to left (towards ``t``); the empty set is the left-to-right
    orientation.
    """

    n: int
    up: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"n must be an integer >= 1, got {self.n!r}")
        up = frozenset(int(i) for i in self.up)
        bad = sorted(i for i in up if not 1 <= i <= self.n - 1)
        if bad:
            raise ValueError(f"B_{self.n} edge indices must lie in [1, {self.n - 1}], got {bad}")
        object.__setattr__(self, "up", up)

    @property
    def t_edge_up(self) -> bool:
        """Direction of the 4-labelled edge ``{t, s_1}``."""
        return 1 in self.up

    @property
    def up_core(self) -> frozenset:
        return self.up - {1}

    def __repr__(self):
        return f"OrientationB(n={self.n}, up={sorted(self.up)})"

    def to_dict(self) -> dict:
        return {"type": "B", "n": self.n, "up": sorted(self.up)}


def all_orientations_b(n: int) -> list[OrientationB]:
    inner = range(1, n)
    return [
        OrientationB(n, frozenset(c))
        for k in range(len(inner) + 1)
        for c in combinations(inner, k)
    ]


def symmetric_A_orientation(b: OrientationB) -> Orientation:
    """The symmetric orientation of ``A_{2n-1}`` attached to ``b``.

    ``t`` is identified with ``tau_n`` and ``s_i`` with ``tau_{n+i}``; the
    edges left of ``tau_n`` are filled in by mirroring.
    """
    n = b.n
    up = {n + i for i in b.up}
    up |= {n + 1 - i for i in range(1, n) if i not in b.up}
    return Orientation(2 * n, frozenset(up))


def orientation_b_from_symmetric(o: Orientation) -> OrientationB:
    """Inverse of :func:`symmetric_A_orientation`."""
    if not is_symmetric(o):
        raise ValueError(f"{o!r} is not symmetric")
    m = o.n // 2
    return OrientationB(m, frozenset(i for i in range(1, m) if m + i in o.up))


def is_symmetric(o: Orientation) -> bool:
    if o.n % 2:
        raise ValueError(f"symmetry is defined for even n only, got n={o.n}")
    return all((i in o.up) != ((o.n + 1 - i) in o.up) for i in range(2, o.n))


def reverse(o: Orientation) -> Orientation:
    """Reverse every edge: up and down swap on ``{2, ..., n-1}``."""
    return Orientation(o.n, frozenset(range(2, o.n)) - o.up)


def rotate180(o: Orientation) -> Orientation:
    """Turn the oriented path graph by 180 degrees (``tau_k -> tau_{n-k}``)."""
    return Orientation(o.n, frozenset(o.n + 1 - i for i in range(2, o.n) if i not in o.up))


def equivalence_classes(n: int, moves=(reverse, rotate180)) -> list[list[Orientation]]:
    """Partition the orientations of ``A_{n-1}`` into orbits under ``moves``.

    Classes are listed by their smallest member in :func:`all_orientations`
    order, members inside a class in the same order.
    """
    order = {o: k for k, o in enumerate(all_orientations(n))}
    seen = set()
    classes = []
    for o in order:
        if o in seen:
            continue
        orbit = {o}
        frontier = [o]
        while frontier:
            cur = frontier.pop()
            for move in moves:
                nxt = move(cur)
                if nxt not in orbit:
                    orbit.add(nxt)
                    frontier.append(nxt)
        seen |= orbit
        classes.append(sorted(orbit, key=order.__getitem__))
    return classes


@dataclass(frozen=True)
class LabelledPolygon:
    """The ``(n+2)``-gon with labels listed counterclockwise from the vertex labelled 0."""

    n: int
    ccw_labels: tuple

    def __post_init__(self):
        labels = tuple(self.ccw_labels)
        object.__setattr__(self, "ccw_labels", labels)
        if sorted(labels) != list(range(self.n + 2)):
            raise ValueError(f"labels must be a permutation of 0..{self.n + 1}: {labels}")
        if labels[0] != 0:
            raise ValueError("position 0 must carry label 0")
        for i in range(self.n + 2):
            # {labels <= i} and {labels >= i} must each be a boundary arc
            for arc in (
                [k for k, a in enumerate(labels) if a <= i],
                [k for k, a in enumerate(labels) if a >= i],
            ):
                if not _is_cyclic_interval(arc, self.n + 2):
                    raise ValueError(f"labels <= / >= {i} do not form a boundary arc in {labels}")

    @property
    def size(self) -> int:
        return self.n + 2

    @cached_property
    def position(self) -> dict:
        return {a: k for k, a in enumerate(self.ccw_labels)}

    def label_at(self, k: int) -> int:
        return self.ccw_labels[k % self.size]

    def boundary_edges(self) -> Iterator[tuple]:
        m = self.size
        for k in range(m):
            a, b = self.ccw_labels[k], self.ccw_labels[(k + 1) % m]
            yield (min(a, b), max(a, b))

    def is_boundary_edge(self, a: int, b: int) -> bool:
        d = (self.position[a] - self.position[b]) % self.size
        return d in (1, self.size - 1)


def _is_cyclic_interval(positions, m) -> bool:
    if len(positions) in (0, m):
        return True
    s = set(positions)
    starts = [k for k in s if (k - 1) % m not in s]
    return len(starts) == 1


@lru_cache(maxsize=None)
def label_polygon(o: Orientation) -> LabelledPolygon:
    """Label the ``(n+2)``-gon: 0, the down elements increasing, ``n+1``, the up elements decreasing."""
    down = sorted(o.down)
    up = sorted(o.up, reverse=True)
    return LabelledPolygon(o.n, tuple([0] + down + [o.n + 1] + up))
