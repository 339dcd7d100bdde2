# Numerical checks of the structure theory on the model manifolds.
#
# Run with:  python demos/04_theorem_checks.py

# %%
import math

from bmoment.bpolytope import vertices
from bmoment.errors import CornerProximityError, ZeroWeightCutError
from bmoment.models.analysis import (
    fixed_points, hessian_indices, modular_weight_estimate, stratified_weights, symplectic_cut,
)
from bmoment.models.families import (
    BSphere, BTorus, CSymplecticProduct, LocalModel, RActionCounterexample, ZeroWeightProduct,
)
from bmoment.models.sampling import image_sample

# Modular weights are the log coefficients of H near each component of Z.
for fam in (BTorus(), ZeroWeightProduct()):
    for comp in fam.components():
        print(fam.family, comp.id, modular_weight_estimate(fam, comp.id).coefficients)

# %%
# Vertices of the b-polytope are the moment values of the fixed points.
lm = LocalModel()
print([(v, xi.to_strings()) for v, xi in vertices(lm.b_polytope())])
print([(r.stratum, r.moment) for r in fixed_points(lm)])

# %%
# Hessians at critical points: indices and coindices are even.
for fam in (BSphere(), ZeroWeightProduct()):
    for r in fixed_points(fam):
        h = hessian_indices(fam, r.point)
        print(fam.family, r.moment, (h.index, h.coindex, h.nullity))

# %%
# The R-action on (R^2, dx dy / x) fixes Z, yet dH = dx is never zero.
print(fixed_points(RActionCounterexample()).message)

# %%
# A cut at level -N exists near nonzero weights only.
cut = symplectic_cut(BSphere(), "equator", 3)
print("b-sphere cut, max H:", image_sample(cut.family, 10_000).moments.max())
try:
    symplectic_cut(ZeroWeightProduct(), "Z0", 3)
except ZeroWeightCutError as exc:
    print("refused:", exc)

# %%
# c-symplectic product: the weight is nonzero on one stratum and zero on the other.
w = stratified_weights(CSymplecticProduct())
print({k: v.coefficients for k, v in w.items()})
try:
    stratified_weights(CSymplecticProduct(), {"Z1xT2": math.pi / 2 - 1e-3})
except CornerProximityError as exc:
    print("rejected:", exc)
