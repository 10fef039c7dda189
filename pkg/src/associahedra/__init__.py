"""Integer realizations of associahedra and cyclohedra from oriented Coxeter graphs."""

from .orientation import (
    LabelledPolygon,
    Orientation,
    OrientationB,
    all_orientations,
    all_orientations_b,
    equivalence_classes,
    is_symmetric,
    label_polygon,
    new_orientation,
    reverse,
    rotate180,
    symmetric_A_orientation,
)
from .polygon import (
    Triangulation,
    all_diagonals,
    bistellar_flip,
    centrally_symmetric_flip,
    centrally_symmetric_triangulations,
    enumerate_triangulations,
    is_centrally_symmetric,
    mu,
    p_left,
    p_right,
    triangulation,
    weight,
)
from .realization import (
    HalfSpace,
    Hyperplane,
    K_map,
    coordinates,
    cyclohedron_vertices,
    h_representation,
    halfspace_eval,
    loday_coordinates,
    on_all_type_b,
    perm_point,
    skeleton,
    skeleton_b,
    type_b_hyperplanes,
    verify_vertex,
)
from .maps import enumerate_Wn, fiber, fiber_B, is_common_vertex, phi, phi_B
from .analysis import (
    barycenter,
    common_vertex_count,
    integer_point_count,
    stats_table,
)

__version__ = "0.1.0"
