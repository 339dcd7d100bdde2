"""Desk-scale b-symplectic manifolds with Hamiltonian torus actions.

Each family works in one global coordinate chart (angles in [0, 2*pi)) and
supplies, in closed form:

* the Hamiltonians H_X of the lattice generators (the moment map components),
  which may be infinite on the exceptional hypersurface Z;
* the b-symplectic form and the fundamental vector fields, so that
  iota_{X#} omega can be compared against dH_X independently;
* the b-norm of dH_X in an invariant metric; it vanishes exactly at fixed
  points of the circle generated by X;
* the exceptional components with transversals, the exact weighted adjacency
  graph and, for nonzero weights, the b-polytope of the moment image;
* a map from the unit cube onto the domain that is uniform for the Liouville
  measure, truncated at ``depth`` along every log end (the measure is infinite).

Log ends are sampled uniformly in log|t|, which is exactly the Liouville measure
of omega = c dt/t ^ d(rho).
"""
from __future__ import annotations

import dataclasses
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from ..adjacency import WeightedAdjacencyGraph
from ..bpolytope import BPolytope, GlobalHalfSpace, VertexLocal
from ..errors import DomainError, PreconditionError
from ..rational import format_fraction, to_fraction

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class ExceptionalComponent:
    """A connected component of Z together with a transversal into ``side``.

    ``transversal(y)`` returns the chart point at defining-function value y > 0
    from the component, on the ``side`` vertex.
    """

    id: str
    ends: tuple[str, str]
    weight: tuple[Fraction, ...]
    transversal: Callable[[float], np.ndarray] = field(compare=False, repr=False)

    @property
    def side(self) -> str:
        return self.ends[0]


def _as_points(P, dim) -> np.ndarray:
    P = np.asarray(P, dtype=float)
    if P.ndim == 1:
        P = P[None, :]
    if P.shape[-1] != dim:
        raise DomainError(f"points must have {dim} coordinates, got {P.shape[-1]}")
    return P


def _wrap(a):
    return np.mod(a, TWO_PI)


def _sphere_pole_chart(z_sign: float):
    """Equal-area chart (x, y) -> (z, phi) at the pole z = z_sign of S^2."""
    def chart(x, y):
        s = 0.5 * (x * x + y * y)
        return z_sign * (1.0 - s), _wrap(np.arctan2(y, x))
    return chart


def _log_cap_chart(t_sign: float, eps: float, c: float):
    """Chart (x, y) -> (t, rho) where the circle |t| = eps is collapsed.

    With s = (x^2 + y^2)/2 the log end is parametrised by |t| = eps exp(-s/c),
    i.e. c log|t| = c log(eps) - s.
    """
    def chart(x, y):
        s = 0.5 * (x * x + y * y)
        return t_sign * eps * np.exp(-s / c), _wrap(np.arctan2(y, x))
    return chart


def _btorus_theta(side_bit, H):
    """theta with -log|tan(theta/2)| = H on side v1 (0, pi) or v2 (pi, 2 pi)."""
    theta = 2.0 * np.arctan(np.exp(-H))
    return np.where(side_bit, TWO_PI - theta, theta)


def _btorus_H(theta):
    theta = _wrap(theta)
    with np.errstate(divide="ignore"):
        H = -np.log(np.abs(np.tan(0.5 * theta)))
    H = np.where(theta == 0.0, np.inf, H)
    H = np.where(theta == math.pi, -np.inf, H)
    return H


def _btorus_on_z(theta):
    theta = _wrap(theta)
    return (theta == 0.0) | (theta == math.pi)


class ManifoldFamily:
    """Interface shared by every family; see the module docstring."""

    family: str = ""
    dim: int = 0
    rank: int = 0
    coord_names: tuple[str, ...] = ()
    periodic: tuple[bool, ...] = ()
    is_circle_action: bool = True
    has_zero_weights: bool = False
    sample_dims: int = 0

    # -- geometry ------------------------------------------------------------
    @property
    def bounds(self) -> list[tuple[float, float]]:
        raise NotImplementedError

    def in_domain(self, P) -> np.ndarray:
        P = _as_points(P, self.dim)
        ok = np.all(np.isfinite(P), axis=1)
        for i, (lo, hi) in enumerate(self.bounds):
            if not self.periodic[i]:
                ok &= (P[:, i] >= lo) & (P[:, i] <= hi)
        return ok

    def hamiltonians(self, P) -> np.ndarray:
        raise NotImplementedError

    def on_z(self, P) -> np.ndarray:
        raise NotImplementedError

    def omega(self, P) -> np.ndarray:
        raise NotImplementedError

    def generators(self, P) -> np.ndarray:
        raise NotImplementedError

    def bnorm_dH(self, P) -> np.ndarray:
        raise NotImplementedError

    def stratum(self, P) -> list[str]:
        raise NotImplementedError

    def components(self) -> list[ExceptionalComponent]:
        raise NotImplementedError

    def component(self, cid: str) -> ExceptionalComponent:
        for comp in self.components():
            if comp.id == cid:
                return comp
        raise KeyError(f"{self.family} has no exceptional component {cid!r}")

    def vertices(self) -> list[str]:
        raise NotImplementedError

    def adjacency_graph(self) -> WeightedAdjacencyGraph:
        comps = self.components()
        return WeightedAdjacencyGraph(
            self.rank, self.vertices(), [(c.id, c.ends) for c in comps],
            {c.id: c.weight for c in comps})

    def b_polytope(self) -> BPolytope | None:
        return None

    def canonical(self, P) -> np.ndarray:
        return _as_points(P, self.dim).copy()

    def local_chart(self, p) -> Callable[[np.ndarray], np.ndarray]:
        """Smooth coordinates u -> chart point with u = 0 at ``p``."""
        p = np.asarray(p, dtype=float)

        def chart(U):
            return np.atleast_2d(U) + p
        return chart

    def critical_dimension(self, p, generator: int) -> int:
        raise NotImplementedError

    # -- sampling ------------------------------------------------------------
    def sample_points(self, U) -> np.ndarray:
        raise NotImplementedError

    def with_cut(self, component: str, N: float, side: str | None = None):
        cuts = tuple(self.cuts) + ((component, side, float(N)),)
        return dataclasses.replace(self, cuts=cuts)

    def _depth(self, component: str, side: str, period: float) -> float:
        """Sampling depth of log|t| towards ``component`` from ``side``."""
        depth = self.depth
        for cid, cside, N in self.cuts:
            if cid == component and cside in (None, side):
                depth = N / period
        return depth

    def to_json(self) -> dict:
        raise NotImplementedError


# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BSphere(ManifoldFamily):
    """S^2 with omega = dz ^ d(theta) / z, circle action d/d(theta), H = -log|z|.

    Z is the equator; the two hemispheres are the vertices ``north``/``south``.
    """

    depth: float = 10.0
    cuts: tuple = ()

    family = "b_sphere"
    dim = 2
    rank = 1
    coord_names = ("z", "theta")
    periodic = (False, True)
    sample_dims = 3

    @property
    def bounds(self):
        return [(-1.0, 1.0), (0.0, TWO_PI)]

    def hamiltonians(self, P):
        P = _as_points(P, self.dim)
        with np.errstate(divide="ignore"):
            return -np.log(np.abs(P[:, :1]))

    def on_z(self, P):
        return _as_points(P, self.dim)[:, 0] == 0.0

    def omega(self, P):
        P = _as_points(P, self.dim)
        W = np.zeros((len(P), 2, 2))
        W[:, 0, 1] = 1.0 / P[:, 0]
        W[:, 1, 0] = -W[:, 0, 1]
        return W

    def generators(self, P):
        P = _as_points(P, self.dim)
        G = np.zeros((len(P), 1, 2))
        G[:, 0, 1] = 1.0
        return G

    def bnorm_dH(self, P):
        z = np.clip(_as_points(P, self.dim)[:, 0], -1.0, 1.0)
        return np.sqrt(1.0 - z * z)[:, None]

    def stratum(self, P):
        z = _as_points(P, self.dim)[:, 0]
        return ["north" if v > 0 else "south" if v < 0 else "equator" for v in z]

    def vertices(self):
        return ["north", "south"]

    def components(self):
        return [ExceptionalComponent("equator", ("north", "south"), (Fraction(-1),),
                                     lambda y: np.array([y, 0.0]))]

    def b_polytope(self):
        g = self.adjacency_graph()
        return BPolytope(g, [VertexLocal("north", [-1], 0), VertexLocal("south", [-1], 0)])

    def sample_points(self, U):
        side = np.where(U[:, 0] < 0.5, 1.0, -1.0)
        d_n = self._depth("equator", "north", 1.0)
        d_s = self._depth("equator", "south", 1.0)
        depth = np.where(side > 0, d_n, d_s)
        z = side * np.exp(-depth * U[:, 1])
        return np.column_stack([z, TWO_PI * U[:, 2]])

    def canonical(self, P):
        P = _as_points(P, self.dim).copy()
        P[np.abs(P[:, 0]) == 1.0, 1] = 0.0
        return P

    def local_chart(self, p):
        p = np.asarray(p, dtype=float)
        if abs(p[0]) == 1.0:
            pole = _sphere_pole_chart(p[0])

            def chart(U):
                U = np.atleast_2d(U)
                z, th = pole(U[:, 0], U[:, 1])
                return np.column_stack([z, th])
            return chart
        return super().local_chart(p)

    def critical_dimension(self, p, generator):
        return 0

    def to_json(self):
        return {"family": self.family, "depth": self.depth}


@dataclass(frozen=True)
class BTorus(ManifoldFamily):
    """T^2 with omega = d(theta) ^ d(alpha) / sin(theta), action d/d(alpha),
    H = -log|tan(theta/2)|. Z = {theta = 0} u {theta = pi}; no fixed points."""

    depth: float = 10.0
    cuts: tuple = ()

    family = "b_torus"
    dim = 2
    rank = 1
    coord_names = ("theta", "alpha")
    periodic = (True, True)
    sample_dims = 3

    @property
    def bounds(self):
        return [(0.0, TWO_PI), (0.0, TWO_PI)]

    def hamiltonians(self, P):
        return _btorus_H(_as_points(P, self.dim)[:, 0])[:, None]

    def on_z(self, P):
        return _btorus_on_z(_as_points(P, self.dim)[:, 0])

    def omega(self, P):
        P = _as_points(P, self.dim)
        W = np.zeros((len(P), 2, 2))
        W[:, 0, 1] = 1.0 / np.sin(P[:, 0])
        W[:, 1, 0] = -W[:, 0, 1]
        return W

    def generators(self, P):
        P = _as_points(P, self.dim)
        G = np.zeros((len(P), 1, 2))
        G[:, 0, 1] = 1.0
        return G

    def bnorm_dH(self, P):
        return np.ones((len(_as_points(P, self.dim)), 1))

    def stratum(self, P):
        th = _wrap(_as_points(P, self.dim)[:, 0])
        out = []
        for t in th:
            if t == 0.0:
                out.append("Z0")
            elif t == math.pi:
                out.append("Zpi")
            else:
                out.append("v1" if t < math.pi else "v2")
        return out

    def vertices(self):
        return ["v1", "v2"]

    def components(self):
        return [
            ExceptionalComponent("Z0", ("v1", "v2"), (Fraction(-1),), lambda y: np.array([y, 0.0])),
            ExceptionalComponent("Zpi", ("v1", "v2"), (Fraction(1),),
                                 lambda y: np.array([math.pi - y, 0.0])),
        ]

    def b_polytope(self):
        return BPolytope(self.adjacency_graph(), [])

    def sample_points(self, U):
        side_bit = U[:, 0] >= 0.5
        lo = -self._depth("Zpi", "v1", 1.0)
        hi = self._depth("Z0", "v1", 1.0)
        lo2 = -self._depth("Zpi", "v2", 1.0)
        hi2 = self._depth("Z0", "v2", 1.0)
        lo = np.where(side_bit, lo2, lo)
        hi = np.where(side_bit, hi2, hi)
        H = lo + (hi - lo) * U[:, 1]
        return np.column_stack([_btorus_theta(side_bit, H), TWO_PI * U[:, 2]])

    def critical_dimension(self, p, generator):
        raise PreconditionError("the b-torus action has no critical points")

    def to_json(self):
        return {"family": self.family, "depth": self.depth}


@dataclass(frozen=True)
class LocalModel(ManifoldFamily):
    """Neighbourhood L x S^1 x (-eps, eps) of a component of Z.

    The leaf L is a round sphere with rotation whose moment map is
    lower + (upper - lower)(1 + z)/2, so its polytope is [lower, upper]. The
    torus T_Z x S^1 acts by rotating the leaf and the angle rho, with moment
    map (mu_L(l), c log|t|). The ends |t| = eps are closed off by collapsing
    the rho-circle there, so c log|t| <= N = c log(eps) and the points with
    |t| = eps over the poles of L are fixed by the whole torus.
    """

    lower: Fraction = Fraction(0)
    upper: Fraction = Fraction(1)
    c: Fraction = Fraction(1)
    eps: Fraction = Fraction(1)
    depth: float = 10.0
    cuts: tuple = ()

    family = "local_model"
    dim = 4
    rank = 2
    coord_names = ("z_leaf", "phi_leaf", "rho", "t")
    periodic = (False, True, True, False)
    sample_dims = 5

    def __post_init__(self):
        for name in ("lower", "upper", "c", "eps"):
            object.__setattr__(self, name, to_fraction(getattr(self, name)))
        if not self.upper > self.lower:
            raise ValueError("leaf polytope needs lower < upper")
        if self.c <= 0 or self.eps <= 0:
            raise ValueError("modular period c and eps must be positive")

    @property
    def level(self) -> float:
        """N = c log(eps), the top of the log end."""
        return float(self.c) * math.log(float(self.eps))

    @property
    def bounds(self):
        e = float(self.eps)
        return [(-1.0, 1.0), (0.0, TWO_PI), (0.0, TWO_PI), (-e, e)]

    def hamiltonians(self, P):
        P = _as_points(P, self.dim)
        lo, hi, c = float(self.lower), float(self.upper), float(self.c)
        eta = np.clip(lo + (hi - lo) * 0.5 * (1.0 + P[:, 0]), lo, hi)
        with np.errstate(divide="ignore"):
            r = c * np.log(np.abs(P[:, 3]))
        # |t| <= eps on the domain; guard against one-ulp overshoot of log
        r = np.minimum(r, self.level)
        return np.column_stack([eta, r])

    def on_z(self, P):
        return _as_points(P, self.dim)[:, 3] == 0.0

    def omega(self, P):
        P = _as_points(P, self.dim)
        a = 0.5 * float(self.upper - self.lower)
        W = np.zeros((len(P), 4, 4))
        W[:, 1, 0] = a
        W[:, 0, 1] = -a
        W[:, 2, 3] = float(self.c) / P[:, 3]
        W[:, 3, 2] = -W[:, 2, 3]
        return W

    def generators(self, P):
        P = _as_points(P, self.dim)
        G = np.zeros((len(P), 2, 4))
        G[:, 0, 1] = 1.0
        G[:, 1, 2] = 1.0
        return G

    def bnorm_dH(self, P):
        P = _as_points(P, self.dim)
        a = 0.5 * float(self.upper - self.lower)
        c = float(self.c)
        z = np.clip(P[:, 0], -1.0, 1.0)
        leaf = a * np.sqrt(1.0 - z * z)
        with np.errstate(divide="ignore"):
            s = np.maximum(c * np.log(float(self.eps) / np.abs(P[:, 3])), 0.0)
        cap = np.where(np.isinf(s), c, np.sqrt(2.0 * s * c * c / (c * c + 2.0 * s)))
        return np.column_stack([leaf, cap])

    def stratum(self, P):
        t = _as_points(P, self.dim)[:, 3]
        return ["plus" if v > 0 else "minus" if v < 0 else "Z" for v in t]

    def vertices(self):
        return ["plus", "minus"]

    def components(self):
        return [ExceptionalComponent("Z", ("plus", "minus"), (Fraction(0), self.c),
                                     lambda y: np.array([0.0, 0.0, 0.0, y]))]

    def b_polytope(self):
        N = Fraction(self.level)
        return BPolytope(self.adjacency_graph(), [
            GlobalHalfSpace([-1, 0], -self.lower),
            GlobalHalfSpace([1, 0], self.upper),
            VertexLocal("plus", [0, 1], N),
            VertexLocal("minus", [0, 1], N),
        ])

    def sample_points(self, U):
        c = float(self.c)
        side = np.where(U[:, 0] < 0.5, 1.0, -1.0)
        N = self.level
        depth = np.where(side > 0, self._depth("Z", "plus", c), self._depth("Z", "minus", c))
        r = N - depth * U[:, 4]
        t = side * np.exp(r / c)
        z = 2.0 * U[:, 1] - 1.0
        return np.column_stack([z, TWO_PI * U[:, 2], TWO_PI * U[:, 3], t])

    def _depth(self, component, side, period):
        depth = self.depth
        for cid, cside, N in self.cuts:
            if cid == component and cside in (None, side):
                depth = self.level + N
        if depth <= 0:
            raise ValueError("cut level lies above the top of the log end")
        return depth

    def canonical(self, P):
        P = _as_points(P, self.dim).copy()
        P[np.abs(P[:, 0]) == 1.0, 1] = 0.0
        P[np.abs(P[:, 3]) == float(self.eps), 2] = 0.0
        return P

    def local_chart(self, p):
        p = np.asarray(p, dtype=float)
        e, c = float(self.eps), float(self.c)
        leaf = _sphere_pole_chart(p[0]) if abs(p[0]) == 1.0 else None
        cap = _log_cap_chart(np.sign(p[3]), e, c) if abs(p[3]) == e else None

        def chart(U):
            U = np.atleast_2d(U)
            out = U + p
            if leaf is not None:
                out[:, 0], out[:, 1] = leaf(U[:, 0], U[:, 1])
            if cap is not None:
                out[:, 3], out[:, 2] = cap(U[:, 2], U[:, 3])
            return out
        return chart

    def critical_dimension(self, p, generator):
        # critical set of the leaf rotation: poles x (rho, t) disc;
        # of the rho rotation: L x caps. Both are surfaces.
        return 2

    def to_json(self):
        return {
            "family": self.family,
            "leaf": {"type": "sphere", "lower": format_fraction(self.lower),
                     "upper": format_fraction(self.upper)},
            "c": format_fraction(self.c),
            "eps": format_fraction(self.eps),
            "depth": self.depth,
        }


@dataclass(frozen=True)
class ZeroWeightProduct(ManifoldFamily):
    """b-torus x S^2; the circle rotates the S^2 factor only, H = height z2.

    The Hamiltonian is smooth across Z, so both modular weights vanish.
    """

    depth: float = 10.0
    cuts: tuple = ()

    family = "zero_weight_product"
    dim = 4
    rank = 1
    coord_names = ("theta1", "alpha1", "z2", "phi2")
    periodic = (True, True, False, True)
    sample_dims = 5
    has_zero_weights = True

    @property
    def bounds(self):
        return [(0.0, TWO_PI), (0.0, TWO_PI), (-1.0, 1.0), (0.0, TWO_PI)]

    def hamiltonians(self, P):
        return _as_points(P, self.dim)[:, 2:3].copy()

    def on_z(self, P):
        return _btorus_on_z(_as_points(P, self.dim)[:, 0])

    def omega(self, P):
        P = _as_points(P, self.dim)
        W = np.zeros((len(P), 4, 4))
        W[:, 0, 1] = 1.0 / np.sin(P[:, 0])
        W[:, 1, 0] = -W[:, 0, 1]
        W[:, 3, 2] = 1.0
        W[:, 2, 3] = -1.0
        return W

    def generators(self, P):
        P = _as_points(P, self.dim)
        G = np.zeros((len(P), 1, 4))
        G[:, 0, 3] = 1.0
        return G

    def bnorm_dH(self, P):
        z = np.clip(_as_points(P, self.dim)[:, 2], -1.0, 1.0)
        return np.sqrt(1.0 - z * z)[:, None]

    def stratum(self, P):
        return BTorus().stratum(_as_points(P, self.dim)[:, :2])

    def vertices(self):
        return ["v1", "v2"]

    def components(self):
        return [
            ExceptionalComponent("Z0", ("v1", "v2"), (Fraction(0),),
                                 lambda y: np.array([y, 0.0, 0.5, 0.0])),
            ExceptionalComponent("Zpi", ("v1", "v2"), (Fraction(0),),
                                 lambda y: np.array([math.pi - y, 0.0, 0.5, 0.0])),
        ]

    def sample_points(self, U):
        side_bit = U[:, 0] >= 0.5
        H1 = self.depth * (2.0 * U[:, 1] - 1.0)
        theta1 = _btorus_theta(side_bit, H1)
        return np.column_stack([theta1, TWO_PI * U[:, 2], 2.0 * U[:, 3] - 1.0, TWO_PI * U[:, 4]])

    leaf_dims = 2

    def leaf_points(self, U, component: str = "Z0") -> np.ndarray:
        """Points of the leaf {theta1 = 0 or pi, alpha1 = 0} x S^2 inside Z."""
        th = 0.0 if component == "Z0" else math.pi
        n = len(U)
        return np.column_stack([np.full(n, th), np.zeros(n), 2.0 * U[:, 0] - 1.0, TWO_PI * U[:, 1]])

    def level_grid(self, resolution: int):
        """H on the S^2 factor over (polar angle, azimuth); H does not depend on
        the b-torus factor, which is connected."""
        polar = np.linspace(0.0, math.pi, resolution)
        azim = np.linspace(0.0, TWO_PI, resolution, endpoint=False)
        P, A = np.meshgrid(polar, azim, indexing="ij")
        return np.cos(P), (polar[1] - polar[0], azim[1] - azim[0])

    def canonical(self, P):
        P = _as_points(P, self.dim).copy()
        P[np.abs(P[:, 2]) == 1.0, 3] = 0.0
        return P

    def local_chart(self, p):
        p = np.asarray(p, dtype=float)
        if abs(p[2]) != 1.0:
            return super().local_chart(p)
        pole = _sphere_pole_chart(p[2])

        def chart(U):
            U = np.atleast_2d(U)
            out = U + p
            out[:, 2], out[:, 3] = pole(U[:, 2], U[:, 3])
            return out
        return chart

    def critical_dimension(self, p, generator):
        return 2

    def to_json(self):
        return {"family": self.family, "depth": self.depth}


@dataclass(frozen=True)
class RActionCounterexample(ManifoldFamily):
    """(R^2, dx ^ dy / x) with the R-action generated by the b-vector field
    -x d/dy and Hamiltonian H(x, y) = x.

    The flow fixes the whole line Z = {x = 0} while dH = dx never vanishes.
    (The generator carries a minus sign so that iota_{X#} omega = dH with the
    contraction convention used by every other family.)
    """

    box: float = 2.0
    depth: float = 10.0
    cuts: tuple = ()

    family = "r_action_counterexample"
    dim = 2
    rank = 1
    coord_names = ("x", "y")
    periodic = (False, False)
    sample_dims = 2
    is_circle_action = False
    has_zero_weights = True

    @property
    def bounds(self):
        return [(-self.box, self.box), (-self.box, self.box)]

    def in_domain(self, P):
        P = _as_points(P, self.dim)
        return np.all(np.isfinite(P), axis=1)

    def hamiltonians(self, P):
        return _as_points(P, self.dim)[:, :1].copy()

    def on_z(self, P):
        return _as_points(P, self.dim)[:, 0] == 0.0

    def omega(self, P):
        P = _as_points(P, self.dim)
        W = np.zeros((len(P), 2, 2))
        W[:, 0, 1] = 1.0 / P[:, 0]
        W[:, 1, 0] = -W[:, 0, 1]
        return W

    def generators(self, P):
        P = _as_points(P, self.dim)
        G = np.zeros((len(P), 1, 2))
        G[:, 0, 1] = -P[:, 0]
        return G

    def smooth_dH(self, P):
        """Components of dH in the chart (H is smooth here)."""
        P = _as_points(P, self.dim)
        out = np.zeros((len(P), 2))
        out[:, 0] = 1.0
        return out

    def bnorm_dH(self, P):
        return np.ones((len(_as_points(P, self.dim)), 1))

    def stratum(self, P):
        x = _as_points(P, self.dim)[:, 0]
        return ["right" if v > 0 else "left" if v < 0 else "Z" for v in x]

    def vertices(self):
        return ["right", "left"]

    def components(self):
        return [ExceptionalComponent("Z", ("right", "left"), (Fraction(0),),
                                     lambda y: np.array([y, 0.0]))]

    def sample_points(self, U):
        return self.box * (2.0 * U - 1.0)

    def critical_dimension(self, p, generator):
        raise PreconditionError("not a circle action")

    def to_json(self):
        return {"family": self.family, "box": self.box}


@dataclass(frozen=True)
class CSymplecticProduct(ManifoldFamily):
    """T^2 x T^2 with omega = d(theta1)^d(alpha1)/sin(theta1)
    + d(theta2)^d(alpha2)/cos(theta2), circle action d/d(alpha1).

    Z = (Z1 x T^2) u (T^2 x Z2) has transverse self-intersections along the
    corner S_c, so this is not a b-manifold and carries no adjacency graph.
    """

    depth: float = 10.0
    cuts: tuple = ()

    family = "c_symplectic_product"
    dim = 4
    rank = 1
    coord_names = ("theta1", "alpha1", "theta2", "alpha2")
    periodic = (True, True, True, True)
    sample_dims = 5

    strata = ("Z1xT2", "T1xZ2")

    @property
    def bounds(self):
        return [(0.0, TWO_PI)] * 4

    def hamiltonians(self, P):
        return _btorus_H(_as_points(P, self.dim)[:, 0])[:, None]

    def on_z(self, P):
        P = _as_points(P, self.dim)
        th2 = _wrap(P[:, 2])
        return _btorus_on_z(P[:, 0]) | (th2 == 0.5 * math.pi) | (th2 == 1.5 * math.pi)

    def omega(self, P):
        P = _as_points(P, self.dim)
        W = np.zeros((len(P), 4, 4))
        W[:, 0, 1] = 1.0 / np.sin(P[:, 0])
        W[:, 1, 0] = -W[:, 0, 1]
        W[:, 2, 3] = 1.0 / np.cos(P[:, 2])
        W[:, 3, 2] = -W[:, 2, 3]
        return W

    def generators(self, P):
        P = _as_points(P, self.dim)
        G = np.zeros((len(P), 1, 4))
        G[:, 0, 1] = 1.0
        return G

    def bnorm_dH(self, P):
        return np.ones((len(_as_points(P, self.dim)), 1))

    def corner_distance(self, P) -> np.ndarray:
        """Chart distance to S_c = Z1 x Z2 (angles measured on the circle)."""
        P = _as_points(P, self.dim)

        def circ(a, targets):
            a = _wrap(a)
            d = np.min([np.abs(a - t) for t in targets], axis=0)
            return np.minimum(d, TWO_PI - d)
        d1 = circ(P[:, 0], [0.0, math.pi, TWO_PI])
        d2 = circ(P[:, 2], [0.5 * math.pi, 1.5 * math.pi])
        return np.hypot(d1, d2)

    def stratum_transversal(self, stratum: str, base: float | None = None):
        """Transversal y -> point approaching ``stratum`` away from the corner.

        ``base`` is the coordinate along the stratum that fixes the foot point:
        theta2 for Z1 x T^2 (default 0), theta1 for T^2 x Z2 (default pi/2).
        """
        if stratum == "Z1xT2":
            b = 0.0 if base is None else float(base)
            return (lambda y: np.array([y, 0.0, b, 0.0])), np.array([0.0, 0.0, b, 0.0])
        if stratum == "T1xZ2":
            b = 0.5 * math.pi if base is None else float(base)
            return (lambda y: np.array([b, 0.0, 0.5 * math.pi - y, 0.0])), np.array(
                [b, 0.0, 0.5 * math.pi, 0.0])
        raise KeyError(f"unknown stratum {stratum!r}")

    def sample_points(self, U):
        side_bit = U[:, 0] >= 0.5
        H1 = self.depth * (2.0 * U[:, 1] - 1.0)
        return np.column_stack([_btorus_theta(side_bit, H1), TWO_PI * U[:, 2],
                                TWO_PI * U[:, 3], TWO_PI * U[:, 4]])

    def stratum(self, P):
        return BTorus().stratum(_as_points(P, self.dim)[:, :2])

    def vertices(self):
        raise PreconditionError("a c-symplectic manifold has no adjacency graph")

    def components(self):
        raise PreconditionError("Z has corners; use stratum_transversal")

    def critical_dimension(self, p, generator):
        raise PreconditionError("the alpha1 rotation has no critical points")

    def to_json(self):
        return {"family": self.family, "depth": self.depth}


FAMILIES = {cls.family: cls for cls in
            (BSphere, BTorus, LocalModel, ZeroWeightProduct, RActionCounterexample, CSymplecticProduct)}


def family_from_json(obj: dict) -> ManifoldFamily:
    """Build a family from its JSON description."""
    if not isinstance(obj, dict) or "family" not in obj:
        raise ValueError("manifold spec must be an object with a 'family' key")
    name = obj["family"]
    if name not in FAMILIES:
        raise ValueError(f"unknown family {name!r}; known: {sorted(FAMILIES)}")
    kwargs = {}
    if "depth" in obj:
        kwargs["depth"] = float(obj["depth"])
    if name == "local_model":
        leaf = obj.get("leaf", {"type": "sphere"})
        if leaf.get("type", "sphere") != "sphere":
            raise ValueError("only sphere leaves are supported")
        kwargs["lower"] = to_fraction(leaf.get("lower", "0"))
        kwargs["upper"] = to_fraction(leaf.get("upper", "1"))
        kwargs["c"] = to_fraction(obj.get("c", "1"))
        kwargs["eps"] = to_fraction(obj.get("eps", "1"))
    if name == "r_action_counterexample" and "box" in obj:
        kwargs["box"] = float(obj["box"])
    return FAMILIES[name](**kwargs)
