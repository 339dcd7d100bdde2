"""The thirteen acceptance criteria, each at its stated tolerance."""
import time
from fractions import Fraction

import numpy as np
import pytest

from bmoment.adjacency import WeightTag, classify, validate_nonzero_structure
from bmoment.bpolytope import contains, is_b_polytope, recession_cone, vertices
from bmoment.codomain import Interior
from bmoment.errors import MixedWeightsError, ZeroWeightCutError
from bmoment.models.analysis import (
    NonCircleDiagnostic,
    fixed_points,
    hessian_indices,
    modular_weight_estimate,
    stratified_weights,
    symplectic_cut,
)
from bmoment.models.checks import convexity_check, count_level_components, level_connectivity, verify_leaf_image
from bmoment.models.families import (
    BSphere,
    BTorus,
    CSymplecticProduct,
    LocalModel,
    RActionCounterexample,
    ZeroWeightProduct,
)
from bmoment.models.fixtures import double_well, two_clusters
from bmoment.models.sampling import image_sample
from bmoment.random_instances import (
    random_all_nonzero_graph,
    random_all_zero_graph,
    random_mixed_graph,
    random_valid_b_polytopes,
)

from conftest import ACCEPTANCE_LINES


@pytest.fixture
def record():
    t0 = time.perf_counter()

    def _record(n, title, ok, detail):
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {n:2d} {title}: {detail} ({time.perf_counter() - t0:.1f}s)"
        ACCEPTANCE_LINES[n] = line
        print(line)
        assert time.perf_counter() - t0 < 60.0
        assert ok, line
    return _record


def test_c01_dichotomy(record):
    rng = np.random.default_rng(2024)
    mixed = 0
    for _ in range(100):
        try:
            classify(random_mixed_graph(rng))
        except MixedWeightsError:
            mixed += 1
    zero = sum(classify(random_all_zero_graph(rng)).tag is WeightTag.ALL_ZERO for _ in range(100))
    nonzero = 0
    for _ in range(100):
        G = random_all_nonzero_graph(rng)
        nonzero += classify(G).tag is WeightTag.ALL_NONZERO and validate_nonzero_structure(G).passed
    record(1, "dichotomy", (mixed, zero, nonzero) == (100, 100, 100),
           f"mixed rejected {mixed}/100, all-zero accepted {zero}/100, all-nonzero accepted {nonzero}/100")


def test_c02_weight_recovery(record):
    c0 = modular_weight_estimate(BTorus(), "Z0")[0]
    cpi = modular_weight_estimate(BTorus(), "Zpi")[0]
    zw = max(abs(modular_weight_estimate(ZeroWeightProduct(), c)[0]) for c in ("Z0", "Zpi"))
    ok = abs(abs(c0) - 1) < 1e-3 and abs(abs(cpi) - 1) < 1e-3 and c0 * cpi < 0 and zw < 1e-3
    record(2, "modular weight recovery", ok, f"b-torus {c0:+.6f}, {cpi:+.6f}; zero-weight |c| = {zw:.2e}")


def test_c03_local_model_image(record):
    fam = LocalModel()
    P = fam.b_polytope()
    s = image_sample(fam, 10_000, seed=0)
    strata = fam.stratum(s.points)
    bad = sum(not contains(P, Interior([Fraction(x) for x in m], v)) for m, v in zip(s.moments, strata))
    record(3, "local-model image in b-polytope", bad == 0 and len(s.moments) == 10_000,
           f"{bad} violations over 10^4 samples")


def test_c04_convexity(record):
    lm = convexity_check(image_sample(LocalModel(), 100_000, seed=0), m=1000, delta=0.05, seed=0)
    zw = convexity_check(image_sample(ZeroWeightProduct(), 100_000, seed=0), m=1000, delta=0.05, seed=0)
    power = convexity_check(two_clusters(seed=0), m=1000, delta=0.05, seed=0)
    ok = lm.violations == 0 and zw.violations == 0 and power.violations > 0
    record(4, "convexity", ok, f"local model {lm.violations}, zero-weight {zw.violations}, "
                               f"two-cluster fixture {power.violations} violations")


def _moment_set(fam):
    return sorted((r.stratum, tuple(r.moment)) for r in fixed_points(fam))


def test_c05_vertices_are_fixed_points(record):
    details, ok = [], True
    for fam in (BSphere(), LocalModel(), LocalModel(lower=-1, upper=Fraction(5, 2), c=2, eps=Fraction(1, 2))):
        verts = sorted((v, tuple(float(x) for x in xi)) for v, xi in vertices(fam.b_polytope()))
        fps = _moment_set(fam)
        same = len(verts) == len(fps) and all(
            a[0] == b[0] and max(abs(x - y) for x, y in zip(a[1], b[1])) < 1e-6 for a, b in zip(verts, fps))
        ok &= same
        details.append(f"{fam.family} {len(verts)} vertices / {len(fps)} fixed points")
    record(5, "vertices = fixed points", ok, "; ".join(details))


def test_c06_recession_cones(record):
    checked, ok = 0, True
    for fam in (BSphere(), BTorus(), LocalModel(), LocalModel(c=3, eps=Fraction(1, 4))):
        P = fam.b_polytope()
        assert is_b_polytope(P, P.graph).passed
        for v in P.graph.vertices:
            want = sorted({(-P.graph.weights[e.id]).primitive().coords for e in P.graph.incident(v)})
            got = sorted(tuple(int(x) for x in g) for g in recession_cone(P, v))
            ok &= got == want
            checked += 1
    record(6, "recession cones = incident weights", ok,
           f"{checked} strata, generators equal primitive -w_e exactly")


def test_c07_leaf_image(record):
    d = verify_leaf_image(ZeroWeightProduct(), 10_000, seed=0)
    record(7, "zero-weight leaf image", d < 0.05, f"Hausdorff {d:.2e} < 0.05")


def test_c08_morse_bott(record):
    rows, ok = 0, True
    for fam in (BSphere(), LocalModel(), ZeroWeightProduct()):
        for r in fixed_points(fam):
            for g in range(fam.rank):
                hi = hessian_indices(fam, r.point, g)
                ok &= hi.index % 2 == 0 and hi.coindex % 2 == 0
                ok &= hi.nullity == fam.critical_dimension(r.point, g)
                rows += 1
    record(8, "Morse-Bott evenness", ok and rows > 0, f"{rows} (critical point, generator) pairs even")


def test_c09_level_connectedness(record):
    counts = [level_connectivity(ZeroWeightProduct(), float(h), 200) for h in np.linspace(-1, 1, 20)]
    values, spacing = double_well(200)
    dw = count_level_components(values, spacing, 0.5)
    ok = counts == [1] * 20 and dw == 2
    record(9, "connected level sets", ok, f"20 levels all single component: {counts == [1] * 20}; double well {dw}")


def test_c10_counterexample(record):
    res = fixed_points(RActionCounterexample())
    ok = isinstance(res, NonCircleDiagnostic) and res.dH_norm_min > 0
    record(10, "R-action counterexample", ok, res.message if ok else f"got {res!r}")


def test_c11_symplectic_cut(record):
    refused = 0
    for cid in ("Z0", "Zpi"):
        try:
            symplectic_cut(ZeroWeightProduct(), cid, 5)
        except ZeroWeightCutError:
            refused += 1
    lows, ok = [], refused == 2
    for fam, cid, N in ((LocalModel(), "Z", 5), (BSphere(), "equator", 3), (BTorus(), "Zpi", 7)):
        cut = symplectic_cut(fam, cid, N)
        low = float(cut.transverse_level(image_sample(cut.family, 10_000, seed=0).moments).min())
        ok &= low >= -N - 1e-6
        lows.append(f"{fam.family} min {low:.4f} >= {-N}")
    record(11, "symplectic cut", ok, f"zero-weight refused {refused}/2; " + ", ".join(lows))


def test_c12_csymplectic(record):
    w = stratified_weights(CSymplecticProduct())
    a, b = w["Z1xT2"][0], w["T1xZ2"][0]
    ok = abs(abs(a) - 1) < 1e-3 and abs(b) < 1e-3
    record(12, "c-symplectic strata", ok, f"Z1xT2 {a:+.6f}, T1xZ2 {b:+.1e}")


def test_c13_oracle_equivalence(record):
    polys = random_valid_b_polytopes(seed=13, count=50)
    assert all(P.graph.torus_dim <= 3 and len(P.halfspaces) <= 10 for P in polys)
    agree = sum(vertices(P, "bruteforce") == vertices(P, "dd") for P in polys)
    nonempty = sum(bool(vertices(P)) for P in polys)
    record(13, "vertex enumeration oracle", agree == 50, f"{agree}/50 agree ({nonempty} with vertices)")
