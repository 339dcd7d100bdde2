"""b-polytopes in the extended codomain R_G.

Two kinds of half-spaces exist:

* :class:`VertexLocal` -- normal ``X`` outside t_Z, living entirely in the
  interior stratum t* x {v};
* :class:`GlobalHalfSpace` -- normal ``X`` inside t_Z, applied on every
  stratum (to xi on interior strata, to eta on exceptional strata).

All half-spaces are closed (``<= bound``).
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .adjacency import WeightedAdjacencyGraph
from .codomain import ExtendedCodomain, ExtendedPoint, Interior
from .errors import GraphMismatchError, HalfSpaceTypeError, InvalidBPolytopeError
from .lattice import Covector, LatticeVector, pairing
from .polyhedron import Polyhedron
from .rational import to_fraction
from .validation import Check, ValidationReport


@dataclass(frozen=True)
class VertexLocal:
    vertex: str
    normal: LatticeVector
    bound: Fraction

    def __init__(self, vertex, normal, bound):
        object.__setattr__(self, "vertex", str(vertex))
        object.__setattr__(self, "normal", LatticeVector(normal))
        object.__setattr__(self, "bound", to_fraction(bound))


@dataclass(frozen=True)
class GlobalHalfSpace:
    normal: LatticeVector
    bound: Fraction

    def __init__(self, normal, bound):
        object.__setattr__(self, "normal", LatticeVector(normal))
        object.__setattr__(self, "bound", to_fraction(bound))


HalfSpace = VertexLocal | GlobalHalfSpace


class BPolytope:
    """Finite list of typed half-spaces over an all-nonzero weighted graph.

    Construction checks the half-space type invariants; overall validity is a
    separate question answered by :func:`is_b_polytope`.
    """

    def __init__(self, graph: WeightedAdjacencyGraph, halfspaces: Iterable[HalfSpace],
                 codomain: ExtendedCodomain | None = None):
        self.graph = graph
        self.codomain = codomain or ExtendedCodomain(graph)
        self.halfspaces = tuple(halfspaces)
        K = self.codomain.kernel
        for h in self.halfspaces:
            if len(h.normal) != graph.torus_dim:
                raise HalfSpaceTypeError(f"normal {h.normal} has the wrong dimension")
            if isinstance(h, VertexLocal):
                if h.vertex not in graph.vertices:
                    raise HalfSpaceTypeError(f"unknown vertex {h.vertex!r}")
                if K.contains(h.normal):
                    raise HalfSpaceTypeError(
                        f"vertex-local normal {list(h.normal)} lies in t_Z; use a global half-space")
            elif isinstance(h, GlobalHalfSpace):
                if not K.contains(h.normal):
                    raise HalfSpaceTypeError(f"global normal {list(h.normal)} is not in t_Z")
            else:
                raise TypeError(f"not a half-space: {h!r}")

    @property
    def globals(self) -> list[GlobalHalfSpace]:
        return [h for h in self.halfspaces if isinstance(h, GlobalHalfSpace)]

    def locals_at(self, v: str) -> list[VertexLocal]:
        return [h for h in self.halfspaces if isinstance(h, VertexLocal) and h.vertex == v]

    def stratum(self, v: str) -> Polyhedron:
        """The ordinary polyhedron cut out on t* x {v}."""
        if v not in self.graph.vertices:
            raise GraphMismatchError(f"unknown vertex {v!r}")
        hs = self.globals + self.locals_at(v)
        return Polyhedron([list(h.normal) for h in hs], [h.bound for h in hs], self.graph.torus_dim)

    def at_infinity(self) -> Polyhedron:
        """The polytope in t_Z* (kernel-basis coordinates) cut out by the globals."""
        K = self.codomain.kernel
        gs = self.globals
        return Polyhedron([list(K.coordinates(h.normal)) for h in gs], [h.bound for h in gs], K.rank)

    def transverse_multiplier(self, h: VertexLocal, edge: str) -> Fraction:
        """The coefficient m in X = X' + m X_e (X' in t_Z)."""
        return pairing(h.normal, self.graph.weights[edge]) / self.codomain.period(edge)

    def __repr__(self):
        return f"BPolytope({self.graph!r}, {len(self.halfspaces)} half-spaces)"


def contains(P: BPolytope, p: ExtendedPoint) -> bool:
    """Closed-set membership in R_G.

    An exceptional point is the limit r -> -infinity at fixed eta, so a
    vertex-local constraint at an endpoint of its edge holds there exactly when
    the transverse multiplier m of its normal is positive.
    """
    try:
        P.codomain.check_point(p)
    except (GraphMismatchError, KeyError) as exc:
        raise GraphMismatchError(str(exc)) from None
    if isinstance(p, Interior):
        return P.stratum(p.vertex).contains(p.xi)
    if not P.at_infinity().contains(p.eta):
        return False
    e = P.graph.edge(p.edge)
    for v in dict.fromkeys(e.ends):
        for h in P.locals_at(v):
            if P.transverse_multiplier(h, p.edge) <= 0:
                return False
    return True


def _expected_recession(P: BPolytope, v: str) -> list[Covector]:
    gens = set()
    for e in P.graph.incident(v):
        gens.add((-P.graph.weights[e.id]).primitive().coords)
    return [Covector(g) for g in sorted(gens)]


def recession_cone(P: BPolytope, v: str) -> list[Covector]:
    """Primitive generators of the recession cone of the stratum at ``v``."""
    return P.stratum(v).recession_generators()


def is_b_polytope(halfspaces, graph: WeightedAdjacencyGraph,
                  codomain: ExtendedCodomain | None = None) -> ValidationReport:
    """Validity report with three checks.

    ``nonempty``: every interior stratum is nonempty.
    ``recession``: every stratum's recession cone is exactly the cone spanned
    by the incident directions towards infinity (-w_e for each incident edge
    weight w_e, along which <X_e, xi> -> -infinity); so the polytope is
    unbounded only towards the exceptional strata.
    ``meets_infinity``: on every edge the globals cut out a nonempty, bounded
    polytope in t_Z*.
    """
    P = halfspaces if isinstance(halfspaces, BPolytope) else BPolytope(graph, halfspaces, codomain)
    empty = [v for v in P.graph.vertices if P.stratum(v).is_empty()]
    bad_cone = []
    for v in P.graph.vertices:
        if recession_cone(P, v) != _expected_recession(P, v):
            bad_cone.append(v)
    inf = P.at_infinity()
    inf_ok = (not inf.is_empty()) and inf.is_bounded()
    bad_edges = () if inf_ok else tuple(e.id for e in P.graph.edges)
    notes = []
    if inf_ok and not empty and not bad_cone and not any(
            P.stratum(v).vertices() for v in P.graph.vertices):
        notes.append("no vertices")
    return ValidationReport((
        Check("nonempty", not empty, tuple(empty), "empty interior strata"),
        Check("recession", not bad_cone, tuple(bad_cone),
              "strata whose recession cone differs from the cone of incident weights"),
        Check("meets_infinity", inf_ok, bad_edges,
              "edges whose polytope at infinity is empty or unbounded"),
    ), tuple(notes))


def vertices(P: BPolytope, method: str = "bruteforce") -> list[tuple[str, Covector]]:
    """Vertices of every interior stratum, sorted by (vertex id, coordinates)."""
    report = is_b_polytope(P, P.graph)
    if not report.passed:
        raise InvalidBPolytopeError(report)
    out = []
    for v in P.graph.vertices:
        for x in P.stratum(v).vertices(method):
            out.append((v, x))
    return sorted(out, key=lambda t: (t[0], tuple(t[1])))


def truncate(P: BPolytope, edge: str, N) -> dict[str, Polyhedron]:
    """Cut the strata adjacent to ``edge`` at r >= -N, i.e. <X_e, xi> >= -N."""
    N = to_fraction(N)
    X = P.codomain.direction(edge)
    e = P.graph.edge(edge)
    return {v: P.stratum(v).add([-x for x in X], N) for v in dict.fromkeys(e.ends)}


def truncate_all(P: BPolytope, N) -> dict[str, Polyhedron]:
    """Cut every stratum at level -N near each incident edge."""
    N = to_fraction(N)
    out = {}
    for v in P.graph.vertices:
        S = P.stratum(v)
        for e in P.graph.incident(v):
            S = S.add([-x for x in P.codomain.direction(e.id)], N)
        out[v] = S
    return out
