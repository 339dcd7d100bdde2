"""Seeded quasi-uniform sampling of moment images."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy.stats import qmc

from ..errors import DomainError
from .families import ManifoldFamily


def moment_eval(family: ManifoldFamily, points) -> tuple[np.ndarray, np.ndarray]:
    """Moment values of ``points`` and a flag for points on a log-divergent Z.

    Components on a nonzero-weight exceptional component are +-inf exactly;
    on zero-weight families the value is finite there and the flag is False.
    """
    P = np.atleast_2d(np.asarray(points, dtype=float))
    ok = family.in_domain(P)
    if not np.all(ok):
        bad = np.flatnonzero(~ok)[:5].tolist()
        raise DomainError(f"points {bad} lie outside the {family.family} coordinate domain")
    values = family.hamiltonians(P)
    flag = family.on_z(P) & (not family.has_zero_weights)
    return values, flag


@dataclass(frozen=True)
class MomentSampleSet:
    family: dict
    seed: int
    n: int
    points: np.ndarray = field(repr=False)
    moments: np.ndarray = field(repr=False)
    z_flag: np.ndarray = field(repr=False)
    coord_names: tuple[str, ...] = ()

    @property
    def finite(self) -> np.ndarray:
        return self.moments[np.all(np.isfinite(self.moments), axis=1)]

    def summary(self) -> dict:
        m = self.finite
        return {
            "family": self.family,
            "seed": self.seed,
            "samples": self.n,
            "on_z": int(self.z_flag.sum()),
            "min": m.min(axis=0).tolist() if len(m) else [],
            "max": m.max(axis=0).tolist() if len(m) else [],
        }


def quasi_uniform(d: int, n: int, seed: int) -> np.ndarray:
    """n points of a scrambled Halton sequence in [0, 1)^d."""
    return qmc.Halton(d=d, scramble=True, seed=seed).random(n)


def image_sample(family: ManifoldFamily, n: int, seed: int = 0) -> MomentSampleSet:
    """n Liouville-uniform domain samples and their moment values.

    Sample i depends only on (seed, i), so results match any chunked or
    parallel evaluation of the same index range.
    """
    if n < 1:
        raise ValueError("samples must be >= 1")
    P = family.sample_points(quasi_uniform(family.sample_dims, n, seed))
    values, flag = moment_eval(family, P)
    return MomentSampleSet(family.to_json(), seed, n, P, values, flag, family.coord_names)
