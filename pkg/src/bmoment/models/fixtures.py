"""Non-examples used to show that the checks can fail."""
from __future__ import annotations

import numpy as np


def double_well(resolution: int = 200):
    """f = (x^2 - 1)^2 + y^2 on [-1.5, 1.5] x [-1, 1].

    Levels in (0, 1) have two components, one around each well.
    """
    x = np.linspace(-1.5, 1.5, resolution)
    y = np.linspace(-1.0, 1.0, resolution)
    X, Y = np.meshgrid(x, y, indexing="ij")
    return (X * X - 1.0) ** 2 + Y * Y, (x[1] - x[0], y[1] - y[0])


def two_clusters(n: int = 2000, seed: int = 0, separation: float = 4.0) -> np.ndarray:
    """Two tight Gaussian blobs; midpoints of cross pairs fall in the gap."""
    rng = np.random.default_rng(seed)
    a = rng.normal(0.0, 0.05, size=(n // 2, 2))
    b = rng.normal(0.0, 0.05, size=(n - n // 2, 2)) + [separation, 0.0]
    return np.vstack([a, b])
