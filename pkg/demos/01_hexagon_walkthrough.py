# # Two hexagons, one polytope shape
#
# An orientation of the path graph with n - 1 edges is stored as its set of
# "up" elements.  Each orientation labels a polygon with n + 2 vertices, and
# every triangulation of that polygon gets an integer point in R^n.

from associahedra import (
    coordinates,
    enumerate_triangulations,
    label_polygon,
    new_orientation,
    p_left,
    p_right,
)

# ## Labelling the polygon
#
# Counterclockwise from 0: the down elements in increasing order, then n + 1,
# then the up elements in decreasing order.

left = new_orientation(4, {2})
right = new_orientation(4, {2, 3})
print(label_polygon(left).ccw_labels)   # (0, 1, 3, 4, 5, 2)
print(label_polygon(right).ccw_labels)  # (0, 1, 4, 5, 3, 2)

# ## Weights
#
# For each label i, p_left and p_right measure how far along the boundary the
# farthest neighbour of i reaches on either side.  The weight is their product.

T = enumerate_triangulations(label_polygon(left))[0]
print(T)
for i in range(1, 5):
    print(i, p_left(T, i), p_right(T, i))

# ## All 14 points
#
# Down elements use the weight, up elements use n + 1 - weight.

for T in enumerate_triangulations(label_polygon(left)):
    print(T.to_list(), coordinates(left, T))

# Both orientations reach (1, 2, 3, 4) and (4, 3, 2, 1), through different
# triangulations.  A few other points are shared as well.

pts_left = {coordinates(left, T) for T in enumerate_triangulations(label_polygon(left))}
pts_right = {coordinates(right, T) for T in enumerate_triangulations(label_polygon(right))}
print(sorted(pts_left & pts_right))
