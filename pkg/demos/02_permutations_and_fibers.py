# # From permutations to triangulations
#
# Reading the inverse of a permutation letter by letter moves a path from 0 to
# n + 1 across the polygon: down letters leave the path, up letters join it.
# Every edge the path ever uses is kept, and the result is a triangulation.

from collections import Counter

from associahedra import fiber, is_common_vertex, label_polygon, new_orientation, phi, triangulation
from associahedra.maps import fibers, phi_paths

o = new_orientation(5, {2, 4})

for path in phi_paths(o, (1, 2, 3, 4, 5)):
    print(path)

T = phi(o, (1, 2, 3, 4, 5))
print(T.to_list())

# ## Fibers
#
# Every triangulation is hit, and the fibers partition S_5.

sizes = Counter(len(v) for v in fibers(o).values())
print(sorted(sizes.items()))

# Singleton fibers are exactly the triangulations whose point is also a
# vertex of the permutahedron.

T = triangulation(label_polygon(o), [(1, 2), (2, 3), (2, 6), (3, 6)])
print(len(fiber(o, T)), is_common_vertex(o, T))
common = [T for T, v in fibers(o).items() if len(v) == 1]
print(len(common), all(is_common_vertex(o, T) for T in common))
