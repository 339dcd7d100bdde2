# Weighted adjacency graphs: one vertex per component of M \ Z, one edge per
# component of Z, each edge labelled by its modular weight.
#
# Run with:  python demos/01_weighted_graphs.py

# %%
from bmoment import WeightedAdjacencyGraph, classify, validate_nonzero_structure
from bmoment.errors import MixedWeightsError

# The b-torus: two cylinders glued along two circles, weights -1 and +1.
torus = WeightedAdjacencyGraph(
    1, ["v1", "v2"], [("Z0", ("v1", "v2")), ("Zpi", ("v1", "v2"))], {"Z0": [-1], "Zpi": [1]}
)
cls = classify(torus)
print(cls.tag.value, dict(cls.edge_scalars))

# %%
# Structural checks for nonzero weights. Each check lists its offenders.
report = validate_nonzero_structure(torus)
for name, check in report.to_dict()["checks"].items():
    print(f"{name:20s} {'ok' if check['passed'] else 'FAIL'}  {check['detail']}")

# %%
# An odd cycle cannot alternate signs, so it fails twice.
tri = WeightedAdjacencyGraph(
    2, ["a", "b", "c"],
    [("e1", ("a", "b")), ("e2", ("b", "c")), ("e3", ("c", "a"))],
    {"e1": [1, 0], "e2": [-1, 0], "e3": [1, 0]},
)
print(validate_nonzero_structure(tri).failed())

# %%
# Mixing zero and nonzero weights is rejected outright.
mixed = WeightedAdjacencyGraph(
    2, ["a", "b", "c"], [("e1", ("a", "b")), ("e2", ("b", "c"))], {"e1": [1, 0], "e2": [0, 0]}
)
try:
    classify(mixed)
except MixedWeightsError as exc:
    print("rejected:", exc)
