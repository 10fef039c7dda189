"""Command line interface.

Examples
--------
::

    associahedra vertices --type A --n 4 --up 2
    associahedra tables --n 5 --format md
    associahedra export --type B --n 3 --format off --out build/
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from . import analysis, export
from .maps import fiber, fiber_B, inverse, phi, phi_B
from .orientation import (
    Orientation,
    OrientationB,
    label_polygon,
    symmetric_A_orientation,
)
from .polygon import centrally_symmetric_triangulations, enumerate_triangulations, triangulation
from .realization import (
    coordinates,
    on_all_type_b,
    skeleton,
    skeleton_b,
    verify_vertex,
)

COMMANDS = ("vertices", "facets", "verify", "phi", "fiber", "stats", "tables", "skeleton", "export")
FORMATS = ("json", "csv", "off", "md")


class CliError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    type: str = "A"
    n: int | None = None
    up: list = field(default_factory=list)
    format: str = "json"
    out: str | None = None
    sigma: list | None = None
    triangulation: list | None = None
    by: str = "orientation"
    max_n: int = analysis.DEFAULT_MAX_N

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise CliError(f"unknown command {self.command!r}")
        if self.format not in FORMATS:
            raise CliError(f"unknown format {self.format!r}")
        if self.type not in ("A", "B"):
            raise CliError(f"unknown type {self.type!r}")
        if self.n is None:
            raise CliError("--n is required")

    def orientation(self):
        try:
            if self.type == "A":
                return Orientation(self.n, frozenset(self.up))
            return OrientationB(self.n, frozenset(self.up))
        except ValueError as exc:
            raise CliError(f"invalid orientation: {exc}") from None

    def a_orientation(self) -> Orientation:
        o = self.orientation()
        return symmetric_A_orientation(o) if isinstance(o, OrientationB) else o


def _ints(text: str) -> list:
    text = text.strip()
    return [int(t) for t in text.split(",") if t.strip()] if text else []


def _diagonals(text: str) -> list:
    if text.lstrip().startswith("["):
        return [tuple(d) for d in json.loads(text)]
    return [tuple(int(v) for v in item.split("-")) for item in text.split(",") if item.strip()]


def _vertices(cfg: RunConfig):
    o = cfg.orientation()
    a = cfg.a_orientation()
    p = label_polygon(a)
    tris = centrally_symmetric_triangulations(p) if cfg.type == "B" else enumerate_triangulations(p)
    return o, tris, [coordinates(a, T) for T in tris]


def _cmd_vertices(cfg):
    o, tris, pts = _vertices(cfg)
    if cfg.format == "csv":
        return 0, export.vertices_csv(tris, pts)
    if cfg.format == "off":
        return 0, export.off_string(o)
    if cfg.format == "md":
        lines = ["| # | point | triangulation |", "|---|---|---|"]
        lines += [f"| {k + 1} | {tuple(x)} | {T.to_list()} |" for k, (T, x) in enumerate(zip(tris, pts))]
        return 0, "\n".join(lines) + "\n"
    return 0, export.vertices_json(o, tris, pts) + "\n"


def _cmd_facets(cfg):
    o = cfg.orientation()
    if cfg.format == "csv":
        return 0, export.facets_csv(o)
    return 0, export.facets_json(o) + "\n"


def _cmd_verify(cfg):
    o, tris, pts = _vertices(cfg)
    a = cfg.a_orientation()
    failures = []
    for T in tris:
        rep = verify_vertex(a, T)
        if not rep.ok:
            failures.append({"triangulation": T.to_list(), "violations": [list(map(str, v)) for v in rep.violations]})
        if cfg.type == "B" and not on_all_type_b(rep.point):
            failures.append({"triangulation": T.to_list(), "violations": [["off a type-B hyperplane"]]})
    report = {
        "orientation": export.orientation_record(o),
        "checked": len(tris),
        "failures": failures,
        "ok": not failures,
    }
    return (0 if not failures else 1), json.dumps(report, indent=2) + "\n"


def _cmd_phi(cfg):
    if cfg.sigma is None:
        raise CliError("phi needs --sigma")
    o = cfg.orientation()
    try:
        T = phi_B(o, tuple(cfg.sigma)) if cfg.type == "B" else phi(o, tuple(cfg.sigma))
    except ValueError as exc:
        raise CliError(str(exc)) from None
    rec = {
        "orientation": export.orientation_record(o),
        "sigma": list(cfg.sigma),
        "sigma_inverse": list(inverse(cfg.sigma)),
        "triangulation": T.to_list(),
        "point": list(coordinates(cfg.a_orientation(), T)),
    }
    return 0, json.dumps(rec, indent=2) + "\n"


def _cmd_fiber(cfg):
    if cfg.triangulation is None:
        raise CliError("fiber needs --triangulation")
    o = cfg.orientation()
    a = cfg.a_orientation()
    try:
        T = triangulation(label_polygon(a), cfg.triangulation)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    F = fiber_B(o, T) if cfg.type == "B" else fiber(o, T)
    rec = {
        "orientation": export.orientation_record(o),
        "triangulation": T.to_list(),
        "fiber": [list(s) for s in F],
        "size": len(F),
    }
    return 0, json.dumps(rec, indent=2) + "\n"


def _cmd_stats(cfg):
    try:
        if cfg.type == "B":
            rows = [analysis.realization_stats_b(cfg.orientation())]
        else:
            rows = analysis.stats_table(cfg.n, by=cfg.by, max_n=cfg.max_n)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    recs = [r.to_dict() for r in rows]
    if cfg.format == "csv":
        lines = ["up,vertex_count,n_nabla,I_nabla,barycenter"]
        for r in recs:
            lines.append(
                f"{' '.join(map(str, r['orientation']['up']))},{r['vertex_count']},"
                f"{r['common_vertex_count']},{r['integer_point_count']},{' '.join(r['barycenter'])}"
            )
        return 0, "\n".join(lines) + "\n"
    return 0, json.dumps(recs, indent=2) + "\n"


def _fmt_up(up) -> str:
    return "{" + ",".join(map(str, up)) + "}" if up else "{}"


def _cmd_tables(cfg):
    try:
        cols = analysis.table_layout(cfg.n, max_n=cfg.max_n)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    if cfg.format == "md":
        head = "| Up | " + " | ".join(" / ".join(_fmt_up(u) for u in c["up"]) for c in cols) + " |"
        sep = "|---|" + "---|" * len(cols)
        nrow = "| n_nabla | " + " | ".join(str(c["n_nabla"]) for c in cols) + " |"
        irow = "| I_nabla | " + " | ".join(str(c["I_nabla"]) for c in cols) + " |"
        return 0, "\n".join([f"n={cfg.n}", "", head, sep, nrow, irow]) + "\n"
    if cfg.format == "csv":
        lines = ["up,n_nabla,I_nabla"]
        lines += [f"{' / '.join(_fmt_up(u) for u in c['up'])},{c['n_nabla']},{c['I_nabla']}" for c in cols]
        return 0, "\n".join(lines) + "\n"
    return 0, json.dumps({"n": cfg.n, "columns": cols}, indent=2) + "\n"


def _cmd_skeleton(cfg):
    o = cfg.orientation()
    sk = skeleton_b(o) if cfg.type == "B" else skeleton(o)
    rec = {
        "orientation": export.orientation_record(o),
        "vertices": [list(x) for x in sk.points],
        "edges": [list(e) for e in sk.edges],
        "degrees": sorted(set(sk.degrees())),
    }
    return 0, json.dumps(rec, indent=2) + "\n"


def _cmd_export(cfg):
    o = cfg.orientation()
    if cfg.format == "off":
        try:
            return 0, export.off_string(o)
        except ValueError as exc:
            raise CliError(str(exc)) from None
    return _cmd_vertices(cfg)


HANDLERS = {
    "vertices": _cmd_vertices,
    "facets": _cmd_facets,
    "verify": _cmd_verify,
    "phi": _cmd_phi,
    "fiber": _cmd_fiber,
    "stats": _cmd_stats,
    "tables": _cmd_tables,
    "skeleton": _cmd_skeleton,
    "export": _cmd_export,
}

_SUFFIX = {"json": "json", "csv": "csv", "off": "off", "md": "md"}


def run(cfg: RunConfig, stdout=None) -> int:
    """Execute ``cfg``; output goes to ``stdout`` or, with ``out`` set, to a file in that directory."""
    stdout = stdout or sys.stdout
    status, text = HANDLERS[cfg.command](cfg)
    if cfg.out:
        out = Path(cfg.out)
        out.mkdir(parents=True, exist_ok=True)
        up = "-".join(map(str, sorted(cfg.up))) or "none"
        path = out / f"{cfg.command}_{cfg.type}{cfg.n}_up{up}.{_SUFFIX[cfg.format]}"
        path.write_text(text)
        stdout.write(str(path) + "\n")
    else:
        stdout.write(text)
    return status


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="associahedra", description="Integer realizations of associahedra and cyclohedra.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("--config", help="JSON file with any of the options below")
    ap.add_argument("--type", choices=("A", "B"))
    ap.add_argument("--n", type=int)
    ap.add_argument("--up", type=_ints, help="comma separated up elements (type B: B-edge indices)")
    ap.add_argument("--format", choices=FORMATS)
    ap.add_argument("--out", help="write the artifact into this directory")
    ap.add_argument("--sigma", type=_ints, help="one-line permutation for `phi`")
    ap.add_argument("--triangulation", type=_diagonals, help="diagonals, e.g. 0-3,2-3,2-4 or JSON")
    ap.add_argument("--by", choices=("orientation", "class"))
    ap.add_argument("--max-n", type=int, dest="max_n")
    return ap


def config_from_args(argv=None) -> RunConfig:
    args = build_parser().parse_args(argv)
    opts = {}
    if args.config:
        opts.update(json.loads(Path(args.config).read_text()))
    for key, val in vars(args).items():
        if key != "config" and val is not None:
            opts[key] = val
    if "triangulation" in opts and opts["triangulation"] and isinstance(opts["triangulation"][0], list):
        opts["triangulation"] = [tuple(d) for d in opts["triangulation"]]
    return RunConfig(**opts)


def main(argv=None) -> int:
    try:
        cfg = config_from_args(argv)
        return run(cfg)
    except CliError as exc:
        sys.stderr.write(json.dumps({"error": str(exc)}) + "\n")
        return 2
    except TypeError as exc:
        sys.stderr.write(json.dumps({"error": f"bad configuration: {exc}"}) + "\n")
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
