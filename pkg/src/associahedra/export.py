"""Serialisation of vertex lists, facet lists and OFF files."""

from __future__ import annotations

import csv
import io
import json

from .orientation import OrientationB, symmetric_A_orientation
from .realization import (
    admissible_halfspaces,
    h_representation,
    halfspace_eval,
    skeleton,
    skeleton_b,
    type_b_facets,
    type_b_hyperplanes,
)


def orientation_record(o) -> dict:
    rec = o.to_dict()
    if isinstance(o, OrientationB):
        rec["symmetric_A"] = symmetric_A_orientation(o).to_dict()
    return rec


def vertex_records(tris, points) -> list[dict]:
    return [{"triangulation": T.to_list(), "point": list(x)} for T, x in zip(tris, points)]


def vertices_json(o, tris, points) -> str:
    return json.dumps({"orientation": orientation_record(o), "vertices": vertex_records(tris, points)}, indent=2)


def vertices_csv(tris, points) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    dim = len(points[0])
    w.writerow([f"x{i}" for i in range(1, dim + 1)] + ["triangulation"])
    for T, x in zip(tris, points):
        w.writerow(list(x) + [" ".join(f"{a}-{b}" for a, b in T.diagonals)])
    return buf.getvalue()


def facet_records(o) -> dict:
    """Half spaces as ``normal . x >= rhs`` records, plus the equations."""
    if isinstance(o, OrientationB):
        a = symmetric_A_orientation(o)
        by_diag = admissible_halfspaces(a)
        recs = [
            dict(by_diag[orb[0]].to_dict(), diagonals=[list(d) for d in orb])
            for orb in type_b_facets(o)
        ]
        eqs = [h_representation(a)[0]] + type_b_hyperplanes(o.n)
    else:
        by_diag = admissible_halfspaces(o)
        recs = [dict(h.to_dict(), diagonals=[list(d)]) for d, h in by_diag.items()]
        eqs = [h_representation(o)[0]]
    recs.sort(key=lambda r: (len(r["K"]), r["K"]))
    equations = []
    for h in eqs:
        coef, rhs = h.coefficients()
        equations.append({"kind": h.kind, "index": h.index, "normal": list(coef), "rhs": rhs})
    return {"equations": equations, "halfspaces": recs}


def facets_json(o) -> str:
    return json.dumps({"orientation": orientation_record(o), **facet_records(o)}, indent=2)


def facets_csv(o) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["K", "normal", "rhs"])
    for r in facet_records(o)["halfspaces"]:
        w.writerow([" ".join(map(str, r["K"])), " ".join(map(str, r["normal"])), r["rhs"]])
    return buf.getvalue()


def _cross(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def _sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def off_string(o) -> str:
    """OFF file of a 3-dimensional realization (type A with n = 4, type B with n = 3).

    Vertices are projected to their first three coordinates, an injective
    affine map on the affine hull.  Faces are listed counterclockwise as seen
    from outside.
    """
    if isinstance(o, OrientationB):
        if o.n != 3:
            raise ValueError("OFF export needs a 3-dimensional polytope (B_3)")
        sk = skeleton_b(o)
        a = symmetric_A_orientation(o)
        by_diag = admissible_halfspaces(a)
        facets = [by_diag[orb[0]] for orb in type_b_facets(o)]
    else:
        if o.n != 4:
            raise ValueError("OFF export needs a 3-dimensional polytope (type A, n=4)")
        sk = skeleton(o)
        facets = h_representation(o)[1]
    pts3 = [tuple(x[:3]) for x in sk.points]
    N = len(pts3)
    adj = {k: set() for k in range(N)}
    for i, j in sk.edges:
        adj[i].add(j)
        adj[j].add(i)
    total = tuple(sum(p[k] for p in pts3) for k in range(3))
    faces = []
    for h in facets:
        on = [k for k, x in enumerate(sk.points) if halfspace_eval(h, x) == 0]
        cycle = [on[0]]
        while len(cycle) < len(on):
            nxt = sorted(v for v in adj[cycle[-1]] if v in on and v not in cycle)
            cycle.append(nxt[0])
        p0, p1, p2 = (pts3[cycle[k]] for k in range(3))
        normal = _cross(_sub(p1, p0), _sub(p2, p0))
        # N * (p0 - centroid), kept integral
        outward = _sub(tuple(N * c for c in p0), total)
        if _dot(normal, outward) < 0:
            cycle = [cycle[0]] + cycle[1:][::-1]
        faces.append(cycle)
    lines = ["OFF", f"{N} {len(faces)} {len(sk.edges)}"]
    lines += [" ".join(map(str, p)) for p in pts3]
    lines += [" ".join(map(str, [len(f)] + f)) for f in faces]
    return "\n".join(lines) + "\n"


def parse_off(text: str) -> tuple:
    """Read back ``(vertices, faces)`` from an OFF string."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if rows[0] != ["OFF"]:
        raise ValueError("not an OFF file")
    nv, nf, _ = map(int, rows[1])
    verts = [tuple(int(v) for v in r) for r in rows[2 : 2 + nv]]
    faces = [tuple(int(v) for v in r[1:]) for r in rows[2 + nv : 2 + nv + nf]]
    for r, f in zip(rows[2 + nv :], faces):
        assert int(r[0]) == len(f)
    return verts, faces
