"""Seeded random graphs and b-polytopes for property checks."""
from __future__ import annotations

import numpy as np

from .adjacency import WeightedAdjacencyGraph
from .bpolytope import BPolytope, GlobalHalfSpace, VertexLocal, is_b_polytope
from .lattice import kernel_lattice, pairing


def _random_nonzero(rng, k, lo=-3, hi=3):
    while True:
        w = rng.integers(lo, hi + 1, size=k)
        if np.any(w):
            return [int(x) for x in w]


def random_connected_multigraph(rng, n_vertices: int, n_extra: int):
    """Random spanning tree plus extra edges (loops and parallels allowed)."""
    vs = [f"v{i}" for i in range(n_vertices)]
    edges = []
    for i in range(1, n_vertices):
        edges.append((vs[int(rng.integers(0, i))], vs[i]))
    for _ in range(n_extra):
        edges.append((vs[int(rng.integers(0, n_vertices))], vs[int(rng.integers(0, n_vertices))]))
    return vs, [(f"e{j}", ends) for j, ends in enumerate(edges)]


def random_mixed_graph(rng) -> WeightedAdjacencyGraph:
    """Connected graph with at least one zero and one nonzero weight."""
    k = int(rng.integers(1, 4))
    n = int(rng.integers(1, 6))
    vs, edges = random_connected_multigraph(rng, n, int(rng.integers(0, 4)))
    while len(edges) < 2:
        a = vs[int(rng.integers(0, n))]
        edges.append((f"e{len(edges)}", (a, vs[int(rng.integers(0, n))])))
    order = rng.permutation(len(edges))
    weights = {}
    for pos, j in enumerate(order):
        eid = edges[j][0]
        if pos == 0:
            weights[eid] = [0] * k
        elif pos == 1:
            weights[eid] = _random_nonzero(rng, k)
        else:
            weights[eid] = [0] * k if rng.random() < 0.5 else _random_nonzero(rng, k)
    return WeightedAdjacencyGraph(k, vs, edges, weights)


def random_all_zero_graph(rng) -> WeightedAdjacencyGraph:
    k = int(rng.integers(1, 4))
    n = int(rng.integers(1, 6))
    vs, edges = random_connected_multigraph(rng, n, int(rng.integers(0, 4)))
    return WeightedAdjacencyGraph(k, vs, edges, {e: [0] * k for e, _ in edges})


def random_all_nonzero_graph(rng) -> WeightedAdjacencyGraph:
    """A line or an even cycle whose weights alternate in sign along the walk."""
    k = int(rng.integers(1, 4))
    w = _random_nonzero(rng, k)
    cycle = rng.random() < 0.5
    n = 2 * int(rng.integers(1, 4)) if cycle else int(rng.integers(2, 7))
    vs = [f"v{i}" for i in range(n)]
    m = n if cycle else n - 1
    edges, weights = [], {}
    for j in range(m):
        eid = f"e{j}"
        edges.append((eid, (vs[j], vs[(j + 1) % n])))
        s = int(rng.integers(1, 4)) * (-1) ** j
        weights[eid] = [s * x for x in w]
    return WeightedAdjacencyGraph(k, vs, edges, weights)


def random_b_polytope(rng, max_halfspaces: int = 10) -> BPolytope | None:
    """A b-polytope on a two-vertex path, or None if the draw is invalid.

    The globals box the kernel coordinates (so the part at infinity is bounded),
    every vertex gets vertex-local normals pairing positively with the weight,
    and all bounds are chosen so that a common random point is feasible.
    """
    k = int(rng.integers(1, 4))
    w = _random_nonzero(rng, k)
    G = WeightedAdjacencyGraph(k, ["a", "b"], [("Z", ("a", "b"))], {"Z": w})
    kern = kernel_lattice(w)
    x0 = [int(x) for x in rng.integers(-3, 4, size=k)]
    hs = []
    for b in kern.basis:
        for s in (1, -1):
            X = [s * x for x in b]
            hs.append(GlobalHalfSpace(X, pairing(X, x0) + int(rng.integers(0, 3))))
    budget = max_halfspaces - len(hs)
    n_extra_global = int(rng.integers(0, 2)) if kern.rank and budget > 2 else 0
    for _ in range(n_extra_global):
        c = rng.integers(-2, 3, size=kern.rank)
        X = [int(sum(int(ci) * b[i] for ci, b in zip(c, kern.basis))) for i in range(k)]
        if any(X):
            hs.append(GlobalHalfSpace(X, pairing(X, x0) + int(rng.integers(0, 3))))
    budget = max_halfspaces - len(hs)
    per_vertex = max(1, min(3, budget // 2))
    for v in ("a", "b"):
        for _ in range(int(rng.integers(1, per_vertex + 1))):
            while True:
                X = _random_nonzero(rng, k)
                if pairing(X, w) > 0:
                    break
            hs.append(VertexLocal(v, X, pairing(X, x0) + int(rng.integers(0, 3))))
    P = BPolytope(G, hs)
    return P if is_b_polytope(P, G).passed and len(hs) <= max_halfspaces else None


def random_valid_b_polytopes(seed: int, count: int, max_halfspaces: int = 10) -> list[BPolytope]:
    rng = np.random.default_rng(seed)
    out = []
    while len(out) < count:
        P = random_b_polytope(rng, max_halfspaces)
        if P is not None:
            out.append(P)
    return out
