"""The codomain R_G = t* x V  |_|  t_Z* x E of a b-moment map.

Interior strata are copies of t*, one per vertex of the weighted adjacency
graph; exceptional strata are copies of t_Z*, one per edge, sitting "at
infinity". Near an exceptional stratum a point of t* is split as (eta, r):
eta are its coordinates on the common kernel basis, r = <X_e, xi> is the
coordinate along the primitive direction X_e transverse to t_Z. Approaching
the edge means r -> -infinity.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .adjacency import WeightTag, WeightedAdjacencyGraph, classify, common_kernel, validate_nonzero_structure
from .errors import GraphMismatchError, MissingChartError, PreconditionError
from .lattice import Covector, LatticeVector, is_unimodular, pairing, primitive_complement
from .rational import solve


@dataclass(frozen=True)
class Interior:
    xi: Covector
    vertex: str

    def __init__(self, xi, vertex):
        object.__setattr__(self, "xi", Covector(xi))
        object.__setattr__(self, "vertex", str(vertex))


@dataclass(frozen=True)
class Exceptional:
    eta: Covector
    edge: str

    def __init__(self, eta, edge):
        object.__setattr__(self, "eta", Covector(eta))
        object.__setattr__(self, "edge", str(edge))


ExtendedPoint = Interior | Exceptional


@dataclass(frozen=True)
class LogChart:
    """Chart near the exceptional stratum of ``edge`` seen from ``side``.

    ``period`` is <X_e, w_e> > 0; the transverse coordinate is
    u = sign * exp(r / period), with sign +1 on the first endpoint of the edge.
    """

    edge: str
    side: str
    direction: LatticeVector
    period: Fraction
    sign: int

    def transverse(self, r) -> float:
        return self.sign * math.exp(float(r) / float(self.period))

    def from_transverse(self, u: float) -> float:
        if u == 0:
            return -math.inf
        if (u > 0) != (self.sign > 0):
            raise ValueError("transverse coordinate lies on the other side of the edge")
        return float(self.period) * math.log(abs(u))


class ExtendedCodomain:
    """R_G for an all-nonzero, structurally valid weighted adjacency graph.

    ``directions`` optionally overrides the transverse primitive direction per
    edge; an override must pair positively with the edge weight and complete
    the kernel basis to a Z-basis.
    """

    def __init__(self, graph: WeightedAdjacencyGraph, directions=None):
        cls = classify(graph)
        if cls.tag is not WeightTag.ALL_NONZERO:
            raise PreconditionError("R_G is defined only when every modular weight is nonzero")
        report = validate_nonzero_structure(graph)
        if not report.passed:
            raise PreconditionError("graph fails structural validation: %s" % report.failed())
        self.graph = graph
        self.kernel = common_kernel(graph)
        directions = dict(directions or {})
        self._dirs: dict[str, LatticeVector] = {}
        for e in graph.edges:
            w = graph.weights[e.id]
            X = LatticeVector(directions[e.id]) if e.id in directions else primitive_complement(w)
            if pairing(X, w) <= 0:
                raise ValueError(f"direction for {e.id} must pair positively with its weight")
            if not is_unimodular([list(b) for b in self.kernel.basis] + [list(X)]):
                raise ValueError(f"direction for {e.id} does not complete the kernel basis")
            self._dirs[e.id] = X

    @property
    def torus_dim(self) -> int:
        return self.graph.torus_dim

    def direction(self, edge: str) -> LatticeVector:
        try:
            return self._dirs[edge]
        except KeyError:
            raise MissingChartError(f"no chart for edge {edge!r}") from None

    def period(self, edge: str) -> Fraction:
        return pairing(self.direction(edge), self.graph.weights[edge])

    def chart(self, edge: str, side: str) -> LogChart:
        e = self._edge(edge)
        if side not in e.ends:
            raise GraphMismatchError(f"vertex {side} is not an endpoint of {edge}")
        sign = 1 if side == e.ends[0] else -1
        return LogChart(edge, side, self.direction(edge), self.period(edge), sign)

    def charts(self) -> list[LogChart]:
        return [self.chart(e.id, v) for e in self.graph.edges for v in dict.fromkeys(e.ends)]

    def _edge(self, edge):
        try:
            return self.graph.edge(edge)
        except KeyError:
            raise MissingChartError(f"no chart for edge {edge!r}") from None

    def decompose(self, xi, edge: str) -> tuple[Covector, Fraction]:
        """Split xi into kernel coordinates eta and transverse coordinate r."""
        xi = Covector(xi)
        if xi.dim != self.torus_dim:
            raise GraphMismatchError("covector dimension does not match the graph")
        X = self.direction(edge)
        return self.kernel.restrict(xi), pairing(X, xi)

    def reconstruct(self, eta, r, edge: str) -> Covector:
        """Inverse of :meth:`decompose`."""
        rows = [list(b) for b in self.kernel.basis] + [list(self.direction(edge))]
        rhs = list(Covector(eta)) + [r]
        sol = solve(rows, rhs)
        assert sol is not None
        return Covector(sol)

    def limit_at_infinity(self, eta, edge: str) -> Exceptional:
        """The exceptional point reached as r -> -infinity at fixed eta."""
        self._edge(edge)
        eta = Covector(eta)
        if eta.dim != self.kernel.rank:
            raise GraphMismatchError(f"eta must have dimension {self.kernel.rank}")
        return Exceptional(eta, edge)

    def check_point(self, p: ExtendedPoint) -> None:
        if isinstance(p, Interior):
            if p.vertex not in self.graph.vertices:
                raise GraphMismatchError(f"unknown vertex {p.vertex!r}")
            if p.xi.dim != self.torus_dim:
                raise GraphMismatchError("xi has the wrong dimension")
        elif isinstance(p, Exceptional):
            self._edge(p.edge)
            if p.eta.dim != self.kernel.rank:
                raise GraphMismatchError("eta has the wrong dimension")
        else:
            raise TypeError(f"not an extended point: {p!r}")
