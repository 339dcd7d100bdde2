"""Sample-based checks: hull density, leaf image and level-set connectivity."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import ndimage
from scipy.spatial import cKDTree
from scipy.spatial.distance import directed_hausdorff

from ..adjacency import WeightTag, classify
from ..config import Tolerances, default_tolerances
from ..errors import EmptyLevelSetError, InsufficientSamplesError, NotAllZeroError, PreconditionError
from .families import ManifoldFamily
from .sampling import MomentSampleSet, image_sample, quasi_uniform


@dataclass(frozen=True)
class ConvexityReport:
    pairs: int
    violations: int
    delta: float
    worst_distance: float

    @property
    def passed(self) -> bool:
        return self.violations == 0


def convexity_check(samples, m: int = 1000, delta: float | None = None, seed: int = 0,
                    tol: Tolerances | None = None) -> ConvexityReport:
    """Midpoints of m random sample pairs must lie within ``delta`` of a sample.

    ``samples`` is a MomentSampleSet or an (n, k) array; non-finite rows are dropped.
    """
    tol = tol or default_tolerances()
    delta = tol.hull_delta if delta is None else delta
    X = samples.moments if isinstance(samples, MomentSampleSet) else np.asarray(samples, float)
    X = X.reshape(len(X), -1)
    X = X[np.all(np.isfinite(X), axis=1)]
    if len(X) < 2:
        raise InsufficientSamplesError(f"need at least 2 finite samples, got {len(X)}")
    rng = np.random.default_rng(seed)
    i = rng.integers(0, len(X), m)
    j = rng.integers(0, len(X), m)
    dist, _ = cKDTree(X).query(0.5 * (X[i] + X[j]))
    return ConvexityReport(m, int(np.sum(dist > delta)), float(delta), float(dist.max()))


def hausdorff(A: np.ndarray, B: np.ndarray) -> float:
    A = np.asarray(A, float).reshape(len(A), -1)
    B = np.asarray(B, float).reshape(len(B), -1)
    return max(directed_hausdorff(A, B)[0], directed_hausdorff(B, A)[0])


def verify_leaf_image(family: ManifoldFamily, n: int, seed: int = 0,
                      component: str | None = None) -> float:
    """Symmetric Hausdorff distance between sampled mu(M) and mu(L).

    L is one symplectic leaf inside Z. Only families whose weights are all
    zero qualify.
    """
    if classify(family.adjacency_graph()).tag is not WeightTag.ALL_ZERO:
        raise NotAllZeroError(f"{family.family} does not have all-zero modular weights")
    if not hasattr(family, "leaf_points"):
        raise PreconditionError(f"{family.family} has no compact leaf to sample")
    component = component or family.components()[0].id
    M = image_sample(family, n, seed).moments
    L = family.hamiltonians(family.leaf_points(quasi_uniform(family.leaf_dims, n, seed + 1), component))
    return hausdorff(M, L)


class UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        root = a
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[a] != root:
            self.parent[a], a = root, self.parent[a]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)

    def count(self, items) -> int:
        return len({self.find(a) for a in items})


def count_level_components(values: np.ndarray, spacing, h: float, periodic=(False, False),
                           collapsed_rows=()) -> int:
    """Connected components of the band |f - h| < 2 * spacing * max|grad f|.

    Grid cells are 4-connected; ``periodic`` axes wrap around and every row
    listed in ``collapsed_rows`` is one point (e.g. a pole in polar angle).
    """
    spacing = np.broadcast_to(np.asarray(spacing, float), (values.ndim,))
    grads = np.gradient(values, *spacing)
    gnorm = float(np.max(np.sqrt(sum(g * g for g in grads))))
    band = 2.0 * float(spacing.max()) * gnorm
    mask = np.abs(values - h) < band
    if not mask.any():
        raise EmptyLevelSetError(f"no grid cell within {band:.3g} of level {h}")
    labels, n = ndimage.label(mask)
    uf = UnionFind(n + 1)
    for axis, wrap in enumerate(periodic):
        if wrap:
            a = np.take(labels, 0, axis=axis)
            b = np.take(labels, -1, axis=axis)
            for la, lb in zip(a.ravel(), b.ravel()):
                if la and lb:
                    uf.union(la, lb)
    for r in collapsed_rows:
        row = labels[r][labels[r] > 0]
        for lb in row[1:]:
            uf.union(row[0], lb)
    return uf.count(range(1, n + 1))


def level_connectivity(family: ManifoldFamily, h: float, resolution: int = 200) -> int:
    """Number of components of the level set H = h (grid estimate)."""
    if not hasattr(family, "level_grid"):
        raise PreconditionError(f"{family.family} provides no level grid")
    values, spacing = family.level_grid(resolution)
    return count_level_components(values, spacing, h, periodic=(False, True),
                                  collapsed_rows=(0, resolution - 1))
