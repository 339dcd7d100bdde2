"""Exception hierarchy.

Everything raised deliberately by the package derives from ``BMomentError`` so
callers (and the command-line front end) can separate mathematical rejections
from programming errors.
"""


class BMomentError(Exception):
    """Base class."""


class DimensionMismatchError(BMomentError, ValueError):
    pass


class NoComplementError(BMomentError, ValueError):
    """A zero covector has no transverse primitive direction."""


class GraphError(BMomentError, ValueError):
    """Malformed adjacency graph (dangling endpoints, disconnected, ...)."""


class MixedWeightsError(BMomentError):
    """Some modular weights vanish and others do not.

    No connected b-symplectic manifold with an effective Hamiltonian torus
    action realises this (dichotomy theorem: the weights are either all zero or
    all nonzero), so such a graph is rejected as input.
    """

    def __init__(self, zero_edges, nonzero_edges):
        self.zero_edges = list(zero_edges)
        self.nonzero_edges = list(nonzero_edges)
        super().__init__(
            "mixed modular weights: zero on %s, nonzero on %s; "
            "by the dichotomy theorem the modular weights of a connected "
            "b-symplectic manifold are all zero or all nonzero"
            % (self.zero_edges, self.nonzero_edges)
        )


class KernelsDifferError(BMomentError):
    pass


class PreconditionError(BMomentError):
    pass


class GraphMismatchError(BMomentError, ValueError):
    pass


class MissingChartError(BMomentError, KeyError):
    pass


class InvalidBPolytopeError(BMomentError):
    def __init__(self, report):
        self.report = report
        super().__init__("not a valid b-polytope: " + ", ".join(report.failed()))


class HalfSpaceTypeError(BMomentError, ValueError):
    pass


class DomainError(BMomentError, ValueError):
    """A point lies outside the coordinate domain of a model family."""


class NonConvergentFitError(BMomentError):
    pass


class ZeroWeightCutError(BMomentError):
    """Cutting at H >= -N near a zero-weight component is impossible: the
    Hamiltonian is bounded there, so the level -N is never approached. This is
    the mechanism behind the impossibility of mixed weights."""


class CornerProximityError(BMomentError, ValueError):
    pass


class NotAllZeroError(PreconditionError):
    pass


class InsufficientSamplesError(BMomentError, ValueError):
    pass


class EmptyLevelSetError(BMomentError):
    pass


class SchemaError(BMomentError, ValueError):
    """Input JSON parsed but does not describe the expected object."""
