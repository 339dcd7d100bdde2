"""Numerical tolerances for the model checks.

Every default can be overridden per call by passing a :class:`Tolerances`;
the environment variable ``BMOMENT_TOLERANCE_SCALE`` multiplies all of them at
once (float, default 1.0).
"""
from __future__ import annotations

import dataclasses
import os
from dataclasses import dataclass

ENV_SCALE = "BMOMENT_TOLERANCE_SCALE"


@dataclass(frozen=True)
class Tolerances:
    weight_fit: float = 1e-3       # modular weight coefficient accuracy
    fit_spread: float = 1e-2       # max spread of the three two-scale estimates
    fixed_point: float = 1e-8      # |dH| below this after refinement
    nullity: float = 1e-4          # relative eigenvalue threshold for the kernel
    vertex_match: float = 1e-6     # polytope vertices vs fixed-point moments
    hull_delta: float = 0.05       # density radius in the convexity check
    hausdorff: float = 0.05        # leaf image vs full image
    cut_slack: float = 1e-6        # min H >= -N - slack after a cut
    gradient: float = 1e-5         # finite-difference vs contraction, relative
    # not scaled: a geometric precondition and step sizes
    corner_distance: float = 1e-2
    hessian_step: float = 1e-4
    ill_conditioned: float = 1e8

    _unscaled = ("corner_distance", "hessian_step", "ill_conditioned")

    def scaled(self, s: float) -> "Tolerances":
        changes = {f.name: getattr(self, f.name) * s
                   for f in dataclasses.fields(self) if f.name not in self._unscaled}
        return dataclasses.replace(self, **changes)


def tolerance_scale() -> float:
    raw = os.environ.get(ENV_SCALE, "").strip()
    if not raw:
        return 1.0
    s = float(raw)
    if not s > 0:
        raise ValueError(f"{ENV_SCALE} must be positive, got {raw!r}")
    return s


def default_tolerances() -> Tolerances:
    return Tolerances().scaled(tolerance_scale())
