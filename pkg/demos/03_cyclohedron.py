# # The cyclohedron B_3
#
# An orientation of the type-B graph is turned into a symmetric orientation of
# A_5.  Restricting to centrally symmetric triangulations of the octagon gives
# a 3-dimensional polytope with 20 vertices sitting on the hyperplanes
# x_i + x_{7-i} = 7.

from associahedra import (
    OrientationB,
    cyclohedron_vertices,
    on_all_type_b,
    skeleton_b,
    symmetric_A_orientation,
)
from associahedra.export import off_string

b = OrientationB(3)
print(symmetric_A_orientation(b).up)

pts = cyclohedron_vertices(b)
for k, x in enumerate(pts, start=1):
    print(k, x)
print(all(on_all_type_b(x) for x in pts))

# ## Skeleton
#
# Edges join vertices that share two of the twelve facets, which is the same
# as a flip of an antipodal pair of diagonals.

sk = skeleton_b(b)
print(len(sk.edges), set(sk.degrees()))

# The OFF export can be opened in any mesh viewer.

print(off_string(b).splitlines()[1])
