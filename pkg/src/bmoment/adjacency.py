"""Weighted adjacency graphs of b-manifolds.

Vertices stand for the components of M \\ Z, edges for the components of the
exceptional hypersurface Z, and each edge carries the modular weight of its
component as a covector in t*. Self-loops and parallel edges are allowed.
"""
from __future__ import annotations

import enum
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping

from .errors import GraphError, KernelsDifferError, MixedWeightsError, PreconditionError
from .lattice import Covector, KernelLattice, kernel_lattice, proportionality
from .validation import Check, ValidationReport


@dataclass(frozen=True)
class Edge:
    id: str
    ends: tuple[str, str]


class WeightedAdjacencyGraph:
    """Immutable connected multigraph with covector edge weights."""

    def __init__(self, torus_dim: int, vertices: Iterable, edges: Iterable, weights: Mapping):
        self.torus_dim = int(torus_dim)
        if self.torus_dim < 1:
            raise GraphError("torus dimension must be >= 1")
        self.vertices = tuple(str(v) for v in vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise GraphError("duplicate vertex ids")
        es = []
        for e in edges:
            if isinstance(e, Edge):
                es.append(e)
            else:
                eid, ends = e
                es.append(Edge(str(eid), (str(ends[0]), str(ends[1]))))
        self.edges = tuple(es)
        ids = [e.id for e in self.edges]
        if len(set(ids)) != len(ids):
            raise GraphError("duplicate edge ids")
        vs = set(self.vertices)
        for e in self.edges:
            for end in e.ends:
                if end not in vs:
                    raise GraphError(f"edge {e.id} references unknown vertex {end}")
        w = {}
        for e in self.edges:
            if e.id not in weights and str(e.id) not in weights:
                raise GraphError(f"edge {e.id} has no weight")
            cov = Covector(weights.get(e.id, weights.get(str(e.id))))
            if cov.dim != self.torus_dim:
                raise GraphError(f"weight of edge {e.id} has dimension {cov.dim}, expected {self.torus_dim}")
            w[e.id] = cov
        self.weights: Mapping[str, Covector] = MappingProxyType(w)
        if not self.vertices:
            raise GraphError("graph has no vertices")
        if not self._connected():
            raise GraphError("adjacency graph must be connected (M is connected)")

    def _connected(self) -> bool:
        adj = defaultdict(set)
        for e in self.edges:
            a, b = e.ends
            adj[a].add(b)
            adj[b].add(a)
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            v = stack.pop()
            for u in adj[v] - seen:
                seen.add(u)
                stack.append(u)
        return len(seen) == len(self.vertices)

    def edge(self, eid: str) -> Edge:
        for e in self.edges:
            if e.id == eid:
                return e
        raise KeyError(eid)

    def incident(self, v: str) -> list[Edge]:
        return [e for e in self.edges if v in e.ends]

    def degree(self, v: str) -> int:
        return sum(e.ends.count(v) for e in self.edges)

    def relabel(self, vmap: Mapping[str, str], emap: Mapping[str, str]) -> "WeightedAdjacencyGraph":
        return WeightedAdjacencyGraph(
            self.torus_dim,
            [vmap[v] for v in self.vertices],
            [(emap[e.id], (vmap[e.ends[0]], vmap[e.ends[1]])) for e in self.edges],
            {emap[e.id]: self.weights[e.id] for e in self.edges},
        )

    def scaled(self, s) -> "WeightedAdjacencyGraph":
        return WeightedAdjacencyGraph(
            self.torus_dim, self.vertices, self.edges,
            {e.id: self.weights[e.id] * s for e in self.edges},
        )

    def __eq__(self, other):
        if not isinstance(other, WeightedAdjacencyGraph):
            return NotImplemented
        return (self.torus_dim, self.vertices, self.edges, dict(self.weights)) == (
            other.torus_dim, other.vertices, other.edges, dict(other.weights))

    def __hash__(self):
        return hash((self.torus_dim, self.vertices, self.edges))

    def __repr__(self):
        return (f"WeightedAdjacencyGraph(k={self.torus_dim}, vertices={list(self.vertices)}, "
                f"edges={[(e.id, e.ends) for e in self.edges]})")


class WeightTag(enum.Enum):
    ALL_ZERO = "all_zero"
    ALL_NONZERO = "all_nonzero"


@dataclass(frozen=True)
class ModularWeightClass:
    tag: WeightTag
    common_kernel: KernelLattice | None = None
    edge_scalars: Mapping[str, Fraction] | None = None
    reference_edge: str | None = None
    note: str = ""


def classify(G: WeightedAdjacencyGraph) -> ModularWeightClass:
    """Sort a graph into the all-zero or all-nonzero class.

    In the nonzero case the common kernel and the scalars ``w_e = s_e * w_ref``
    (``ref`` = lexicographically smallest edge id) are filled in when all weights
    are proportional; otherwise both stay ``None`` and structural validation
    reports the defect.
    """
    if not G.edges:
        return ModularWeightClass(WeightTag.ALL_ZERO, note="symplectic (no exceptional hypersurface)")
    zero = sorted(e.id for e in G.edges if G.weights[e.id].is_zero())
    nonzero = sorted(e.id for e in G.edges if not G.weights[e.id].is_zero())
    if zero and nonzero:
        raise MixedWeightsError(zero, nonzero)
    if not nonzero:
        return ModularWeightClass(WeightTag.ALL_ZERO)
    ref = nonzero[0]
    wref = G.weights[ref]
    scalars = {}
    for eid in nonzero:
        lam = proportionality(wref, G.weights[eid])
        if lam is None:
            return ModularWeightClass(WeightTag.ALL_NONZERO, reference_edge=ref)
        scalars[eid] = lam
    return ModularWeightClass(
        WeightTag.ALL_NONZERO,
        common_kernel=kernel_lattice(wref),
        edge_scalars=MappingProxyType(scalars),
        reference_edge=ref,
    )


def validate_nonzero_structure(G: WeightedAdjacencyGraph) -> ValidationReport:
    """Structural constraints forced on all-nonzero weighted graphs.

    Checks, each reported separately:
      * ``degree``: every vertex has degree <= 2 (a self-loop counts twice);
      * ``opposite_weights``: two edges meeting at a vertex have weights that are
        negative multiples of each other;
      * ``line_or_even_cycle``: the graph is a path, or a cycle on an even number
        of vertices;
      * ``shared_kernel``: all weights have the same kernel.
    """
    cls = classify(G)
    if cls.tag is not WeightTag.ALL_NONZERO:
        raise PreconditionError("structure validation needs an all-nonzero weighted graph")

    high = [v for v in G.vertices if G.degree(v) > 2]
    checks = [Check("degree", not high, tuple(high), "vertices of degree > 2")]

    bad_pairs = []
    for v in G.vertices:
        inc = G.incident(v)
        ends = []
        for e in inc:
            ends.extend([e] * e.ends.count(v))
        for i in range(len(ends)):
            for j in range(i + 1, len(ends)):
                e1, e2 = ends[i], ends[j]
                lam = proportionality(G.weights[e1.id], G.weights[e2.id])
                if lam is None or lam >= 0:
                    bad_pairs.append(f"{v}:{e1.id}/{e2.id}")
    checks.append(Check("opposite_weights", not bad_pairs, tuple(bad_pairs),
                        "incident weights must be negative multiples of each other"))

    nv, ne = len(G.vertices), len(G.edges)
    max_deg = max(G.degree(v) for v in G.vertices)
    if max_deg > 2:
        shape_ok, shape = False, "branching"
    elif ne == nv - 1:
        shape_ok, shape = True, "line"
    elif ne == nv:
        shape_ok, shape = nv % 2 == 0, f"cycle of length {nv}"
    else:
        shape_ok, shape = False, "neither line nor cycle"
    checks.append(Check("line_or_even_cycle", shape_ok, () if shape_ok else (shape,), shape))

    ref = G.weights[cls.reference_edge]
    differing = [e.id for e in G.edges if proportionality(ref, G.weights[e.id]) is None]
    checks.append(Check("shared_kernel", not differing, tuple(differing),
                        "weights with a kernel different from the reference edge"))
    return ValidationReport(tuple(checks))


def common_kernel(G: WeightedAdjacencyGraph) -> KernelLattice:
    """The kernel lattice t_Z shared by every edge weight."""
    if not G.edges:
        raise PreconditionError("graph has no edges")
    kernels = {e.id: kernel_lattice(G.weights[e.id]) for e in G.edges}
    first = kernels[G.edges[0].id]
    for eid, K in kernels.items():
        if K != first:
            raise KernelsDifferError(f"kernel of edge {eid} differs from that of {G.edges[0].id}")
    return first


def sign_walk(G: WeightedAdjacencyGraph) -> list[tuple[str, int]]:
    """Walk a validated line/cycle graph and return (edge id, sign of scalar)
    in traversal order."""
    cls = classify(G)
    if cls.edge_scalars is None:
        raise PreconditionError("weights are not proportional")
    ends = [v for v in G.vertices if G.degree(v) == 1]
    start = ends[0] if ends else G.vertices[0]
    used: set[str] = set()
    out = []
    v = start
    while True:
        nxt = [e for e in G.incident(v) if e.id not in used]
        if not nxt:
            break
        e = sorted(nxt, key=lambda e: e.id)[0]
        used.add(e.id)
        out.append((e.id, 1 if cls.edge_scalars[e.id] > 0 else -1))
        v = e.ends[1] if e.ends[0] == v else e.ends[0]
    return out
