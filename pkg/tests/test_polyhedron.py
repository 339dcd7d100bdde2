from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.optimize import linprog

from bmoment.lattice import Covector
from bmoment.polyhedron import Polyhedron


def square():
    return Polyhedron([[1, 0], [-1, 0], [0, 1], [0, -1]], [1, 0, 1, 0])


def test_square_vertices():
    want = [Covector(v) for v in [(0, 0), (0, 1), (1, 0), (1, 1)]]
    assert square().vertices() == want
    assert square().vertices("dd") == want
    assert square().is_bounded()


def test_half_line():
    P = Polyhedron([[-1]], [0])
    assert P.vertices() == [Covector([0])]
    assert P.recession_generators() == [Covector([1])]
    assert not P.is_bounded()


def test_lineality_in_both_signs():
    P = Polyhedron([[1, 0], [-1, 0]], [1, 1])
    assert P.vertices() == []
    assert sorted(map(tuple, P.recession_generators())) == [(0, -1), (0, 1)]


def test_empty_and_zero_dim():
    assert Polyhedron([[1], [-1]], [0, -1]).is_empty()
    assert not Polyhedron([], [], dim=0).is_empty()
    assert Polyhedron([], [], dim=0).is_bounded()


def test_contains_and_active():
    P = square()
    assert P.contains([Fraction(1, 2), 1])
    assert not P.contains([2, 0])
    assert P.active([1, 1]) == [0, 2]


def _lp_vertex_oracle(A, b, x):
    """x is a vertex iff it is feasible and its active rows have full rank."""
    A = np.array(A, float)
    act = np.abs(A @ np.array(x, float) - np.array(b, float)) < 1e-9
    return bool(np.all(A @ np.array(x, float) <= np.array(b, float) + 1e-9)) and \
        np.linalg.matrix_rank(A[act]) == A.shape[1] if act.any() else False


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 3), st.integers(0, 10_000))
def test_enumerators_agree_and_match_lp_oracle(k, seed):
    rng = np.random.default_rng(seed)
    m = int(rng.integers(k + 1, 9))
    A = rng.integers(-3, 4, size=(m, k)).tolist()
    x0 = rng.integers(-2, 3, size=k)
    b = [int(np.dot(a, x0)) + int(rng.integers(0, 3)) for a in A]
    P = Polyhedron(A, b)
    bf, dd = P.vertices(), P.vertices("dd")
    assert bf == dd
    for v in bf:
        assert _lp_vertex_oracle(A, b, [float(x) for x in v])
    # every LP optimum in a bounded direction lands on an enumerated vertex
    c = rng.normal(size=k)
    res = linprog(c, A_ub=np.array(A, float), b_ub=np.array(b, float), bounds=[(None, None)] * k,
                  method="highs-ds")
    if res.status == 0 and bf:
        best = min(float(np.dot(c, [float(x) for x in v])) for v in bf)
        assert res.fun == pytest.approx(best, abs=1e-7)
