# b-polytopes over the local model near one component of Z.
#
# The torus is T^2 = (leaf rotation) x (rotation of the normal angle). The
# edge weight is (0, 1), so t_Z is spanned by (1, 0). The image on each side
# is [0, 1] x (-inf, 0].
#
# Run with:  python demos/02_b_polytopes.py

# %%
from fractions import Fraction

from bmoment import (
    BPolytope, Exceptional, GlobalHalfSpace, Interior, VertexLocal, WeightedAdjacencyGraph,
    contains, is_b_polytope, recession_cone, truncate, vertices,
)

G = WeightedAdjacencyGraph(2, ["plus", "minus"], [("Z", ("plus", "minus"))], {"Z": [0, 1]})
P = BPolytope(G, [
    GlobalHalfSpace([-1, 0], 0),          # eta >= 0
    GlobalHalfSpace([1, 0], 1),           # eta <= 1
    VertexLocal("plus", [0, 1], 0),       # r <= 0 on the plus side
    VertexLocal("minus", [0, 1], 0),
])
print(is_b_polytope(P, G).to_dict()["valid"])

# %%
# Vertices per stratum, by brute force and by double description.
for v, xi in vertices(P):
    print(v, xi.to_strings())
assert vertices(P) == vertices(P, "dd")

# %%
# The stratum is unbounded only towards Z.
print("recession:", [g.to_strings() for g in recession_cone(P, "plus")])

# %%
# Points at infinity live in t_Z* x {edge}.
print(contains(P, Interior([Fraction(1, 2), -7], "plus")))
print(contains(P, Exceptional([Fraction(1, 2)], "Z")))
print(contains(P, Exceptional([2], "Z")))

# %%
# A symplectic cut at r >= -5 leaves a rectangle on each side.
for side, poly in truncate(P, "Z", 5).items():
    print(side, [x.to_strings() for x in poly.vertices()])
