# # Common vertices and lattice points
#
# Two invariants separate orientations: the number of vertices shared with the
# permutahedron and the number of integer points inside the realization.

import numpy as np

from associahedra import new_orientation, reverse
from associahedra.analysis import integer_points, isometric_image, table_layout
from associahedra.realization import realization_vertices

for n in (3, 4, 5):
    for col in table_layout(n):
        print(n, col["up"], col["n_nabla"], col["I_nabla"])

# n = 6 takes a fraction of a second; the scan runs one numpy slice per value
# of the first coordinate.

for col in table_layout(6):
    print(6, col["up"], col["n_nabla"], col["I_nabla"])

# ## Reversal is an isometry
#
# x -> (n + 1) - x maps the integer points of one orientation onto those of
# its reverse.

o = new_orientation(5, {2})
pts = integer_points(o)
print(pts.shape, pts.min(axis=0), pts.max(axis=0))
print(isometric_image(pts, 5) == {tuple(int(v) for v in x) for x in integer_points(reverse(o))})

# The vertices average to the centre of the permutahedron.

V = np.array(realization_vertices(o))
print(V.mean(axis=0))
