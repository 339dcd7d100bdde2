import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bmoment.adjacency import WeightedAdjacencyGraph
from bmoment.codomain import Exceptional, ExtendedCodomain, Interior
from bmoment.errors import GraphMismatchError, MissingChartError, PreconditionError
from bmoment.lattice import Covector, pairing

rationals = st.fractions(max_denominator=20).filter(lambda q: abs(q) < 50)


def edge_graph(w):
    return WeightedAdjacencyGraph(len(w), ["a", "b"], [("e", ("a", "b"))], {"e": w})


def test_coordinate_splitting():
    R = ExtendedCodomain(edge_graph([1, 0]))
    assert tuple(R.direction("e")) == (1, 0)
    assert R.decompose([3, 5], "e") == (Covector([5]), 3)
    assert R.decompose([0, 0], "e") == (Covector([0]), 0)


def test_explicit_direction_two_four():
    R = ExtendedCodomain(edge_graph([2, 4]), directions={"e": [-1, 1]})
    assert [tuple(b) for b in R.kernel.basis] == [(2, -1)]
    assert R.decompose([1, 1], "e") == (Covector([1]), 0)
    assert R.period("e") == 2


def test_default_direction_two_four():
    R = ExtendedCodomain(edge_graph([2, 4]))
    assert tuple(R.direction("e")) == (1, 0)


def test_bad_direction_rejected():
    with pytest.raises(ValueError):
        ExtendedCodomain(edge_graph([2, 4]), directions={"e": [1, -1]})   # pairs negatively
    with pytest.raises(ValueError):
        ExtendedCodomain(edge_graph([2, 4]), directions={"e": [3, 0]})    # not unimodular


def test_needs_nonzero_weights():
    with pytest.raises(PreconditionError):
        ExtendedCodomain(edge_graph([0, 0]))


def test_missing_chart():
    R = ExtendedCodomain(edge_graph([1, 0]))
    with pytest.raises(MissingChartError):
        R.decompose([1, 1], "nope")


def test_limit_at_infinity():
    R = ExtendedCodomain(edge_graph([1, 0]))
    assert R.limit_at_infinity([5], "e") == Exceptional([5], "e")
    # xi_n = (-n, 5): eta stays 5 while r -> -infinity
    for n in (1, 10, 1000):
        eta, r = R.decompose([-n, 5], "e")
        assert eta == Covector([5]) and r == -n
    for n in (1, 10, 1000):
        eta, _ = R.decompose([-n, 5 + Fraction(1, n)], "e")
        assert abs(eta[0] - 5) <= Fraction(1, n)
    with pytest.raises(GraphMismatchError):
        R.limit_at_infinity([5, 1], "e")


def test_charts_and_transverse_coordinate():
    R = ExtendedCodomain(edge_graph([0, 3]))
    ca, cb = R.chart("e", "a"), R.chart("e", "b")
    assert (ca.sign, cb.sign) == (1, -1)
    assert ca.transverse(-3 * math.log(2)) == pytest.approx(0.5)
    assert cb.transverse(-3 * math.log(2)) == pytest.approx(-0.5)
    assert ca.from_transverse(0.5) == pytest.approx(-3 * math.log(2))
    assert ca.from_transverse(0.0) == -math.inf
    assert len(R.charts()) == 2


def test_check_point():
    R = ExtendedCodomain(edge_graph([1, 0]))
    R.check_point(Interior([1, 2], "a"))
    with pytest.raises(GraphMismatchError):
        R.check_point(Interior([1, 2], "zz"))
    with pytest.raises(GraphMismatchError):
        R.check_point(Exceptional([1, 2], "e"))


@settings(max_examples=100, deadline=None)
@given(st.lists(st.integers(-4, 4), min_size=3, max_size=3).filter(any),
       st.lists(rationals, min_size=3, max_size=3), st.lists(rationals, min_size=3, max_size=3))
def test_round_trip_and_affine_r(w, xi, delta):
    R = ExtendedCodomain(edge_graph(w))
    eta, r = R.decompose(xi, "e")
    assert R.reconstruct(eta, r, "e") == Covector(xi)
    _, r2 = R.decompose([a + b for a, b in zip(xi, delta)], "e")
    assert r2 - r == pairing(R.direction("e"), delta)
