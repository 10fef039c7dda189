"""The surjection from permutations to triangulations and its fibers.

Permutations are one-line tuples ``(sigma(1), ..., sigma(n))``.  The path
construction reads the word of ``sigma^{-1}`` (right weak order convention).
"""

from __future__ import annotations

from bisect import bisect_left
from collections import defaultdict
from functools import lru_cache
from itertools import permutations, product

from .orientation import Orientation, OrientationB, label_polygon, symmetric_A_orientation
from .polygon import Triangulation, is_centrally_symmetric, p_left, p_right, _pair
from .realization import K_map


def inverse(sigma) -> tuple:
    inv = [0] * len(sigma)
    for i, s in enumerate(sigma, start=1):
        inv[s - 1] = i
    return tuple(inv)


def check_permutation(sigma) -> tuple:
    sigma = tuple(int(s) for s in sigma)
    if sorted(sigma) != list(range(1, len(sigma) + 1)):
        raise ValueError(f"{sigma} is not a permutation of 1..{len(sigma)}")
    return sigma


def phi_paths(o: Orientation, sigma) -> list[tuple]:
    """The successive paths from 0 to n+1 built while reading ``sigma^{-1}``."""
    sigma = check_permutation(sigma)
    if len(sigma) != o.n:
        raise ValueError(f"permutation of length {len(sigma)} for n={o.n}")
    path = [0] + sorted(o.down) + [o.n + 1]
    paths = [tuple(path)]
    for letter in inverse(sigma):
        k = bisect_left(path, letter)
        if letter in o.up:
            if k < len(path) and path[k] == letter:  # pragma: no cover
                raise AssertionError(f"up letter {letter} already on the path {path}")
            # path is sorted, so path[k-1] is the largest predecessor and path[k] the smallest successor
            path.insert(k, letter)
        else:
            if path[k] != letter:  # pragma: no cover
                raise AssertionError(f"down letter {letter} missing from the path {path}")
            del path[k]
        assert all(u < v for u, v in zip(path, path[1:])), path
        paths.append(tuple(path))
    return paths


def phi(o: Orientation, sigma) -> Triangulation:
    """Triangulation formed by every edge of every intermediate path, boundary excluded."""
    p = label_polygon(o)
    edges = set()
    for path in phi_paths(o, sigma):
        edges.update(_pair(u, v) for u, v in zip(path, path[1:]))
    diags = [e for e in edges if not p.is_boundary_edge(*e)]
    if len(diags) != o.n - 1:  # pragma: no cover
        raise AssertionError(f"path construction produced {len(diags)} diagonals for sigma={sigma}")
    return Triangulation(p, tuple(diags)).validate()


def phi_from_inverse_word(o: Orientation, word) -> Triangulation:
    """Convenience: ``phi`` for the permutation whose inverse reads ``word``."""
    return phi(o, inverse(check_permutation(word)))


@lru_cache(maxsize=None)
def _fibers(o: Orientation) -> dict:
    out = defaultdict(list)
    for sigma in permutations(range(1, o.n + 1)):
        out[phi(o, sigma)].append(sigma)
    return {T: tuple(v) for T, v in out.items()}


def fibers(o: Orientation) -> dict:
    """Map every triangulation to the (lexicographically ordered) permutations sent to it."""
    return dict(_fibers(o))


def fiber(o: Orientation, T: Triangulation) -> tuple:
    return _fibers(o).get(T, ())


def is_common_vertex(o: Orientation, T: Triangulation) -> bool:
    """Every ``i`` has ``p_left = 1`` or ``p_right = 1``."""
    return all(p_left(T, i) == 1 or p_right(T, i) == 1 for i in range(1, T.polygon.n + 1))


def nested_chain(o: Orientation, T: Triangulation):
    """Diagonals of ``T`` ordered so their subsets strictly increase, or None if impossible."""
    ordered = sorted(T.diagonals, key=lambda d: len(K_map(o, d)))
    Ks = [K_map(o, d) for d in ordered]
    if [len(K) for K in Ks] != list(range(1, o.n)):
        return None
    if any(not a < b for a, b in zip(Ks, Ks[1:])):
        return None
    return ordered


def permutation_from_chain(o: Orientation, chain) -> tuple:
    """The ``sigma`` with ``sigma^{-1}([i]) = K(D_i)`` for a nested chain of diagonals."""
    sets = [frozenset()] + [K_map(o, d) for d in chain] + [frozenset(range(1, o.n + 1))]
    word = []
    for a, b in zip(sets, sets[1:]):
        (x,) = b - a
        word.append(x)
    return inverse(word)


def enumerate_Wn(n: int) -> list[tuple]:
    """Signed permutations as elements of ``S_{2n}`` with ``sigma(i) + sigma(2n+1-i) = 2n+1``."""
    m = 2 * n
    out = []
    for pi in permutations(range(1, n + 1)):
        for flips in product((False, True), repeat=n):
            sigma = [0] * m
            for i in range(1, n + 1):
                v = m + 1 - pi[i - 1] if flips[i - 1] else pi[i - 1]
                sigma[i - 1] = v
                sigma[m - i] = m + 1 - v
            out.append(tuple(sigma))
    out.sort()
    return out


def is_signed(sigma) -> bool:
    m = len(sigma)
    return m % 2 == 0 and all(sigma[i] + sigma[m - 1 - i] == m + 1 for i in range(m // 2))


def phi_B(b: OrientationB, sigma) -> Triangulation:
    if not is_signed(sigma) or len(sigma) != 2 * b.n:
        raise ValueError(f"{sigma} is not a signed permutation of rank {b.n}")
    T = phi(symmetric_A_orientation(b), sigma)
    if not is_centrally_symmetric(T):  # pragma: no cover
        raise AssertionError(f"phi_B({sigma}) = {T} is not centrally symmetric")
    return T


@lru_cache(maxsize=None)
def _fibers_b(b: OrientationB) -> dict:
    out = defaultdict(list)
    for sigma in enumerate_Wn(b.n):
        out[phi_B(b, sigma)].append(sigma)
    return {T: tuple(v) for T, v in out.items()}


def fibers_B(b: OrientationB) -> dict:
    return dict(_fibers_b(b))


def fiber_B(b: OrientationB, T: Triangulation) -> tuple:
    return _fibers_b(b).get(T, ())
