"""JSON and CSV formats.

Rationals travel as "p/q" strings so that round trips are exact; JSON output
uses sorted keys and CSV uses repr-exact floats with '.' as decimal mark.
"""
from __future__ import annotations

import csv
import io
import json
from pathlib import Path

import numpy as np

from .adjacency import ModularWeightClass, WeightedAdjacencyGraph
from .bpolytope import GlobalHalfSpace, VertexLocal
from .codomain import Exceptional, Interior
from .errors import SchemaError
from .lattice import Covector
from .rational import format_fraction, to_fraction


def load_json(path) -> object:
    """Read a JSON file; decoding errors keep their line/column position."""
    text = Path(path).read_text(encoding="utf-8")
    return json.loads(text)


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2)


def _require(obj, key, where):
    if not isinstance(obj, dict) or key not in obj:
        raise SchemaError(f"{where}: missing key {key!r}")
    return obj[key]


def _rationals(values, where):
    if not isinstance(values, list):
        raise SchemaError(f"{where}: expected a list of rationals")
    try:
        return [to_fraction(v) for v in values]
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"{where}: {exc}") from None


def _integers(values, where):
    if not isinstance(values, list) or not all(isinstance(v, int) and not isinstance(v, bool)
                                               for v in values):
        raise SchemaError(f"{where}: expected a list of integers")
    return values


# -- graphs ------------------------------------------------------------------

def graph_from_json(obj) -> WeightedAdjacencyGraph:
    k = _require(obj, "torus_dim", "graph")
    if not isinstance(k, int) or k < 0:
        raise SchemaError("graph: torus_dim must be a non-negative integer")
    vertices = _require(obj, "vertices", "graph")
    edges, weights = [], {}
    for i, e in enumerate(_require(obj, "edges", "graph")):
        eid = str(_require(e, "id", f"edge #{i}"))
        ends = _require(e, "ends", f"edge {eid}")
        if not isinstance(ends, list) or len(ends) != 2:
            raise SchemaError(f"edge {eid}: ends must be a pair of vertex ids")
        edges.append((eid, tuple(ends)))
        weights[eid] = _rationals(_require(e, "weight", f"edge {eid}"), f"edge {eid} weight")
    return WeightedAdjacencyGraph(k, vertices, edges, weights)


def graph_to_json(G: WeightedAdjacencyGraph) -> dict:
    return {
        "torus_dim": G.torus_dim,
        "vertices": list(G.vertices),
        "edges": [{"id": e.id, "ends": list(e.ends), "weight": G.weights[e.id].to_strings()}
                  for e in G.edges],
    }


def class_to_json(c: ModularWeightClass) -> dict:
    out = {"class": c.tag.value}
    if c.common_kernel is not None:
        out["common_kernel"] = [list(b) for b in c.common_kernel.basis]
    if c.edge_scalars is not None:
        out["edge_scalars"] = {k: format_fraction(v) for k, v in sorted(c.edge_scalars.items())}
        out["reference_edge"] = c.reference_edge
    if c.note:
        out["note"] = c.note
    return out


# -- half-spaces and points ------------------------------------------------------

def halfspace_from_json(obj):
    kind = _require(obj, "type", "half-space")
    normal = _integers(_require(obj, "normal", "half-space"), "half-space normal")
    try:
        bound = to_fraction(_require(obj, "bound", "half-space"))
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise SchemaError(f"half-space bound: {exc}") from None
    if kind == "vertex_local":
        return VertexLocal(str(_require(obj, "vertex", "half-space")), normal, bound)
    if kind == "global":
        return GlobalHalfSpace(normal, bound)
    raise SchemaError(f"half-space: unknown type {kind!r}")


def halfspaces_from_json(obj) -> list:
    if isinstance(obj, dict) and "halfspaces" in obj:
        obj = obj["halfspaces"]
    if not isinstance(obj, list):
        raise SchemaError("half-space file must hold a list")
    return [halfspace_from_json(h) for h in obj]


def halfspace_to_json(h) -> dict:
    out = {"normal": list(h.normal.coords), "bound": format_fraction(h.bound)}
    if isinstance(h, VertexLocal):
        out.update(type="vertex_local", vertex=h.vertex)
    else:
        out["type"] = "global"
    return out


def point_from_json(obj):
    kind = _require(obj, "type", "point")
    if kind == "interior":
        return Interior(_rationals(_require(obj, "xi", "point"), "point xi"),
                        str(_require(obj, "vertex", "point")))
    if kind == "exceptional":
        return Exceptional(_rationals(_require(obj, "eta", "point"), "point eta"),
                           str(_require(obj, "edge", "point")))
    raise SchemaError(f"point: unknown type {kind!r}")


def point_to_json(p) -> dict:
    if isinstance(p, Interior):
        return {"type": "interior", "vertex": p.vertex, "xi": p.xi.to_strings()}
    return {"type": "exceptional", "edge": p.edge, "eta": p.eta.to_strings()}


def vertices_to_json(verts: list[tuple[str, Covector]]) -> list[dict]:
    return [{"vertex": v, "xi": x.to_strings()} for v, x in verts]


# -- samples -------------------------------------------------------------------------

def samples_to_csv(samples) -> str:
    """One row per sample: chart coordinates, mu_1..mu_k, z_flag."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    k = samples.moments.shape[1]
    w.writerow(list(samples.coord_names) + [f"mu_{i + 1}" for i in range(k)] + ["z_flag"])
    for p, m, f in zip(samples.points, samples.moments, samples.z_flag):
        w.writerow([repr(float(x)) for x in p] + [repr(float(x)) for x in m] + [int(bool(f))])
    return buf.getvalue()


def write_csv(samples, path) -> None:
    Path(path).write_text(samples_to_csv(samples), encoding="utf-8")


def read_csv(path) -> tuple[list[str], np.ndarray]:
    with open(path, newline="", encoding="utf-8") as fh:
        rows = list(csv.reader(fh))
    return rows[0], np.array([[float(x) for x in r] for r in rows[1:]])
