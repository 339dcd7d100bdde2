"""Numerical theorem checks on the model families."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from scipy import optimize
from scipy.stats import qmc

from ..bpolytope import truncate
from ..config import Tolerances, default_tolerances
from ..errors import (
    CornerProximityError,
    NonConvergentFitError,
    PreconditionError,
    ZeroWeightCutError,
)
from ..rational import to_fraction
from .families import CSymplecticProduct, ManifoldFamily

FIT_SCALES = (1e-3, 1e-4, 1e-5)


# -- modular weights ----------------------------------------------------------

@dataclass(frozen=True)
class WeightEstimate:
    coefficients: tuple[float, ...]
    raw: tuple[tuple[float, ...], ...]   # one row per fit scale
    spread: float

    def __iter__(self):
        return iter(self.coefficients)

    def __getitem__(self, i):
        return self.coefficients[i]


def _fit_log_coefficients(H, transversal, scales=FIT_SCALES, tol: Tolerances | None = None):
    tol = tol or default_tolerances()
    raw = []
    for y in scales:
        P = np.array([transversal(y), transversal(0.5 * y)])
        h = H(P)
        raw.append((h[1] - h[0]) / math.log(0.5))
    raw = np.array(raw)
    spread = float(np.max(raw.max(axis=0) - raw.min(axis=0)))
    if spread > tol.fit_spread or not np.all(np.isfinite(raw)):
        raise NonConvergentFitError(
            f"two-scale estimates {raw.tolist()} spread by {spread:.3g} > {tol.fit_spread}")
    # error of each estimate is O(y); eliminate it using the last two scales
    ratio = scales[-2] / scales[-1]
    best = (ratio * raw[-1] - raw[-2]) / (ratio - 1.0)
    return WeightEstimate(tuple(float(c) for c in best), tuple(map(tuple, raw.tolist())), spread)


def modular_weight_estimate(family: ManifoldFamily, component: str,
                            tol: Tolerances | None = None) -> WeightEstimate:
    """Log coefficient of every H_X along a transversal to ``component``.

    For each scale y the coefficient is (H(y/2) - H(y)) / log(1/2); the three
    scales are checked for agreement and then extrapolated to y -> 0.
    """
    comp = family.component(component)
    return _fit_log_coefficients(family.hamiltonians, comp.transversal, tol=tol)


def stratified_weights(family: CSymplecticProduct, bases: dict | None = None,
                       tol: Tolerances | None = None) -> dict[str, WeightEstimate]:
    """Modular weight on each b-type stratum of Z, away from the corner.

    ``bases`` optionally fixes the foot point of each transversal; a foot point
    (or any fit point) closer than ``tol.corner_distance`` to the corner is
    rejected.
    """
    if not isinstance(family, CSymplecticProduct):
        raise PreconditionError("stratified weights need the c-symplectic family")
    tol = tol or default_tolerances()
    bases = bases or {}
    out = {}
    for stratum in family.strata:
        transversal, foot = family.stratum_transversal(stratum, bases.get(stratum))
        probe = np.array([foot] + [transversal(y) for s in FIT_SCALES for y in (s, 0.5 * s)])
        d = float(family.corner_distance(probe).min())
        if d < tol.corner_distance:
            raise CornerProximityError(
                f"transversal to {stratum} passes within {d:.3g} of the corner S_c "
                f"(minimum {tol.corner_distance})")
        out[stratum] = _fit_log_coefficients(family.hamiltonians, transversal, tol=tol)
    return out


# -- fixed points ---------------------------------------------------------------

@dataclass(frozen=True)
class NonCircleDiagnostic:
    """Returned instead of fixed points when the action is not by a circle."""

    message: str
    fixed_locus: str
    dH_norm_min: float
    citation: str = "R-action counterexample"

    def to_dict(self):
        return {"diagnostic": self.message, "fixed_locus": self.fixed_locus,
                "dH_norm_min": self.dH_norm_min, "citation": self.citation}


@dataclass
class FixedPointRecord:
    """A critical submanifold of the whole torus action, as a point cloud."""

    point: np.ndarray                   # representative, chart coordinates
    moment: tuple[float, ...]
    stratum: str
    residual: float                     # max over generators of |dH_X|_b
    dimension: int                      # expected dimension of the critical set
    cloud: np.ndarray = field(repr=False, default=None)

    def to_dict(self):
        return {"point": self.point.tolist(), "moment": list(self.moment),
                "stratum": self.stratum, "residual": self.residual,
                "dimension": self.dimension, "cloud_size": 0 if self.cloud is None else len(self.cloud)}


def _counterexample_diagnostic(family) -> NonCircleDiagnostic:
    ys = np.linspace(-family.box, family.box, 101)
    line = np.column_stack([np.zeros_like(ys), ys])
    gen = family.generators(line)[:, 0, :]
    assert np.all(gen == 0.0)      # the b-vector field vanishes on all of Z
    dH = np.linalg.norm(family.smooth_dH(line), axis=1)
    return NonCircleDiagnostic(
        "flow fixed locus Z = {x = 0} has dH = dx != 0: not an S^1-action",
        "{x = 0}", float(dH.min()))


def fixed_points(family: ManifoldFamily, grid: int = 9, tol: Tolerances | None = None):
    """Simultaneous zeros of |dH_X|_b over all generators.

    A regular grid on the sampling cube (endpoints included) is searched for
    near-zeros, each candidate is refined with bounded L-BFGS-B, and points
    below ``tol.fixed_point`` are grouped by stratum and moment value. For
    zero-weight families the strata are joined through Z, so grouping is by
    moment value only.
    """
    tol = tol or default_tolerances()
    if not family.is_circle_action:
        return _counterexample_diagnostic(family)
    d = family.sample_dims

    def objective(U):
        return np.sum(family.bnorm_dH(family.sample_points(np.atleast_2d(U))) ** 2, axis=1)

    axes = [np.linspace(0.0, 1.0, grid)] * d
    U = np.array(list(itertools.product(*axes)))
    f = objective(U)
    cand = U[f < 1e-2]
    found = []
    for u in cand:
        if objective(u)[0] > tol.fixed_point ** 2:
            res = optimize.minimize(lambda x: objective(x)[0], u, method="L-BFGS-B",
                                    bounds=[(0.0, 1.0)] * d, options={"ftol": 1e-30, "gtol": 1e-14})
            u = res.x
        p = family.sample_points(u[None, :])
        r = float(np.max(family.bnorm_dH(p)))
        if r < tol.fixed_point:
            found.append((family.canonical(p)[0], r))
    if not found:
        return []
    pts = np.array([p for p, _ in found])
    res = np.array([r for _, r in found])
    mom = family.hamiltonians(pts)
    strata = family.stratum(pts)
    groups: dict = {}
    for i in range(len(pts)):
        key_m = tuple(np.round(mom[i], 9))
        key = key_m if family.has_zero_weights else (strata[i], key_m)
        groups.setdefault(key, []).append(i)
    out = []
    for key, idx in sorted(groups.items(), key=lambda kv: str(kv[0])):
        i0 = idx[len(idx) // 2]
        out.append(FixedPointRecord(
            pts[i0], tuple(float(m) + 0.0 for m in mom[i0]),
            "M" if family.has_zero_weights else strata[i0],
            float(res[idx].max()), family.critical_dimension(pts[i0], 0),
            np.unique(pts[idx], axis=0)))
    return out


# -- Hessians ---------------------------------------------------------------------

@dataclass(frozen=True)
class HessianIndices:
    eigenvalues: tuple[float, ...]
    index: int
    coindex: int
    nullity: int
    ill_conditioned: bool

    @property
    def even(self) -> bool:
        return self.index % 2 == 0 and self.coindex % 2 == 0


def _fd_hessian(f, n, h):
    Hs = np.zeros((n, n))
    f0 = f(np.zeros(n))
    E = np.eye(n) * h
    for i in range(n):
        Hs[i, i] = (f(E[i]) - 2.0 * f0 + f(-E[i])) / (h * h)
        for j in range(i + 1, n):
            v = (f(E[i] + E[j]) - f(E[i] - E[j]) - f(-E[i] + E[j]) + f(-E[i] - E[j])) / (4 * h * h)
            Hs[i, j] = Hs[j, i] = v
    return Hs


def hessian_indices(family: ManifoldFamily, point, generator: int = 0,
                    tol: Tolerances | None = None) -> HessianIndices:
    """Index, coindex and nullity of H_X at a critical point.

    The Hessian is taken by central differences in the family's smooth local
    chart at ``point`` (equal-area charts at poles and collapsed caps).
    """
    tol = tol or default_tolerances()
    chart = family.local_chart(np.asarray(point, dtype=float))

    def f(u):
        return float(family.hamiltonians(chart(u))[0, generator])

    Hs = _fd_hessian(f, family.dim, tol.hessian_step)
    lam = np.linalg.eigvalsh(Hs)
    scale = float(np.max(np.abs(lam))) if lam.size else 0.0
    zero = np.abs(lam) < tol.nullity * scale if scale > 0 else np.ones(lam.shape, bool)
    nz = np.abs(lam[~zero])
    ill = bool(nz.size and nz.max() / nz.min() > tol.ill_conditioned)
    return HessianIndices(tuple(float(x) for x in lam), int(np.sum(lam[~zero] < 0)),
                          int(np.sum(lam[~zero] > 0)), int(np.sum(zero)), ill)


# -- symplectic cuts ----------------------------------------------------------------

@dataclass(frozen=True)
class CutResult:
    family: ManifoldFamily
    component: str
    N: Fraction
    normal: tuple[int, ...]     # constraint <normal, xi> <= N, i.e. <X_e, xi> >= -N
    truncated: dict | None = field(default=None, repr=False)

    def transverse_level(self, moments: np.ndarray) -> np.ndarray:
        """<X_e, xi> for rows of moment values."""
        return -np.asarray(moments, dtype=float) @ np.asarray(self.normal, dtype=float)


def symplectic_cut(family: ManifoldFamily, component: str, N, side: str | None = None,
                   tol: Tolerances | None = None) -> CutResult:
    """Truncate ``family`` at transverse moment level -N near ``component``.

    The weight is estimated numerically first. A zero weight means the
    Hamiltonians stay bounded near Z, so no level -N is ever attained: this is
    how the dichotomy theorem's proof by cutting breaks down, and it is raised.
    """
    tol = tol or default_tolerances()
    N = to_fraction(N)
    if N <= 0:
        raise ValueError("cut level N must be positive")
    est = modular_weight_estimate(family, component, tol)
    if max(abs(c) for c in est) < tol.weight_fit:
        raise ZeroWeightCutError(
            f"component {component!r} has zero modular weight {est.coefficients}: the level "
            f"-{N} is never attained (proof of the dichotomy theorem by symplectic cutting)")
    P = family.b_polytope()
    if P is not None:
        X = P.codomain.direction(component)
        truncated = truncate(P, component, N)
    else:
        w = [round(c) for c in est]
        X = [0] * len(w)
        X[int(np.argmax(np.abs(w)))] = 1 if max(w, key=abs) > 0 else -1
        truncated = None
    return CutResult(family.with_cut(component, float(N), side), component, N,
                     tuple(-int(x) for x in X), truncated)


# -- gradient check --------------------------------------------------------------------

@dataclass(frozen=True)
class GradientReport:
    max_relative_error: float
    points: int
    passed: bool


def gradient_check(family: ManifoldFamily, n: int = 100, seed: int = 0, depth: float = 3.0,
                   tol: Tolerances | None = None) -> GradientReport:
    """Finite-difference dH_X against the contraction iota_{X#} omega.

    Points are drawn away from Z (sampling depth ``depth``) and from the
    coordinate boundary, where the chart degenerates.
    """
    tol = tol or default_tolerances()
    fam = family.__class__(**{**family.__dict__, "depth": depth}) if hasattr(family, "depth") else family
    U = qmc.Halton(d=fam.sample_dims, scramble=True, seed=seed).random(n)
    U = 0.05 + 0.9 * U
    P = fam.sample_points(U)
    P = P[~fam.on_z(P)]
    W = fam.omega(P)
    G = fam.generators(P)
    contraction = np.einsum("nki,nij->nkj", G, W)
    h = 1e-6
    fd = np.zeros_like(contraction)
    for i in range(fam.dim):
        step = h * np.maximum(1.0, np.abs(P[:, i]))
        Pp, Pm = P.copy(), P.copy()
        Pp[:, i] += step
        Pm[:, i] -= step
        fd[:, :, i] = (fam.hamiltonians(Pp) - fam.hamiltonians(Pm)) / (2.0 * step[:, None])
    num = np.linalg.norm(fd - contraction, axis=2)
    den = np.maximum(np.linalg.norm(contraction, axis=2), 1e-12)
    err = float(np.max(num / den))
    return GradientReport(err, len(P), err < tol.gradient)
