"""Named theorem-verification suites.

Each criterion function returns a list of :class:`CheckResult`; a suite is a
fixed group of criteria. Every check names the result it exercises.
"""
from __future__ import annotations

import math
import time
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .adjacency import WeightTag, classify, validate_nonzero_structure
from .bpolytope import contains, is_b_polytope, recession_cone, vertices, _expected_recession
from .codomain import Interior
from .config import Tolerances, default_tolerances
from .errors import CornerProximityError, MixedWeightsError, NotAllZeroError, ZeroWeightCutError
from .models.analysis import (
    NonCircleDiagnostic,
    fixed_points,
    gradient_check,
    hessian_indices,
    modular_weight_estimate,
    stratified_weights,
    symplectic_cut,
)
from .models.checks import convexity_check, count_level_components, level_connectivity, verify_leaf_image
from .models.families import (
    BSphere,
    BTorus,
    CSymplecticProduct,
    LocalModel,
    RActionCounterexample,
    ZeroWeightProduct,
)
from .models.fixtures import double_well, two_clusters
from .models.sampling import image_sample
from .random_instances import (
    random_all_nonzero_graph,
    random_all_zero_graph,
    random_mixed_graph,
    random_valid_b_polytopes,
)

CITE_DICHOTOMY = "dichotomy theorem: modular weights are all zero or all nonzero"
CITE_WEIGHT = "modular weight: log coefficient c of H_X near Z"
CITE_OPPOSITE = "adjacent modular weights are negative multiples of each other"
CITE_LOCAL = "local normal form: image (mu_L, c log|t|) near Z"
CITE_CONVEX = "convexity of b-moment images"
CITE_VERTICES = "b-polytope vertices are precisely fixed-point images"
CITE_RECESSION = "recession cone equals the incident modular weight"
CITE_LEAF = "zero weights: mu(M) = mu(Z) = mu(L)"
CITE_MORSE_BOTT = "Morse-Bott: indices and coindices are even"
CITE_LEVELS = "no index or coindex 1: connected level sets"
CITE_COUNTEREXAMPLE = "R-action counterexample: dH = dx never vanishes"
CITE_CUT = "proof of the dichotomy by symplectic cutting at -N"
CITE_CSYMPLECTIC = "c-symplectic product: nonzero weight on one stratum, zero on the other"
CITE_ORACLE = "vertex enumeration oracle: brute force equals double description"
CITE_GRADIENT = "Hamiltonian condition iota_{X#} omega = dH_X"


@dataclass(frozen=True)
class CheckResult:
    name: str
    citation: str
    passed: bool
    measured: object
    tolerance: object

    def to_dict(self):
        return {"name": self.name, "citation": self.citation, "passed": bool(self.passed),
                "measured": self.measured, "tolerance": self.tolerance}


@dataclass
class VerificationReport:
    suite: str
    checks: list[CheckResult]
    runtime: float = field(default=0.0, compare=False)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_dict(self) -> dict:
        """Deterministic part of the report (runtime excluded)."""
        return {"suite": self.suite, "passed": self.passed,
                "checks": [c.to_dict() for c in self.checks]}


def _f(x) -> float:
    return float(f"{float(x):.12g}")


# -- criteria ------------------------------------------------------------------------

def criterion_dichotomy(seed: int = 0, trials: int = 100) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    mixed = 0
    for _ in range(trials):
        try:
            classify(random_mixed_graph(rng))
        except MixedWeightsError:
            mixed += 1
    zero = sum(classify(random_all_zero_graph(rng)).tag is WeightTag.ALL_ZERO for _ in range(trials))
    nonzero = 0
    for _ in range(trials):
        G = random_all_nonzero_graph(rng)
        nonzero += classify(G).tag is WeightTag.ALL_NONZERO and validate_nonzero_structure(G).passed
    return [
        CheckResult("mixed graphs rejected", CITE_DICHOTOMY, mixed == trials, mixed, trials),
        CheckResult("all-zero graphs accepted", CITE_DICHOTOMY, zero == trials, zero, trials),
        CheckResult("all-nonzero graphs accepted", CITE_DICHOTOMY, nonzero == trials, nonzero, trials),
    ]


def criterion_graph_file(G) -> list[CheckResult]:
    try:
        tag = classify(G).tag.value
    except MixedWeightsError as exc:
        return [CheckResult("input graph is a pure class", CITE_DICHOTOMY, False, str(exc), "pure")]
    return [CheckResult("input graph is a pure class", CITE_DICHOTOMY, True, tag, "pure")]


def criterion_weight_recovery(tol: Tolerances) -> list[CheckResult]:
    bt = BTorus()
    c0 = modular_weight_estimate(bt, "Z0", tol)[0]
    cpi = modular_weight_estimate(bt, "Zpi", tol)[0]
    zw = max(abs(modular_weight_estimate(ZeroWeightProduct(), cid, tol)[0]) for cid in ("Z0", "Zpi"))
    err = max(abs(abs(c0) - 1.0), abs(abs(cpi) - 1.0))
    return [
        CheckResult("b-torus weight magnitudes", CITE_WEIGHT, err < tol.weight_fit, _f(err), tol.weight_fit),
        CheckResult("b-torus weights opposite", CITE_OPPOSITE, c0 * cpi < 0, [_f(c0), _f(cpi)], "c0*cpi<0"),
        CheckResult("zero-weight product weight", CITE_WEIGHT, zw < tol.weight_fit, _f(zw), tol.weight_fit),
    ]


def criterion_local_image(n: int = 10_000, seed: int = 0) -> list[CheckResult]:
    lm = LocalModel()
    P = lm.b_polytope()
    s = image_sample(lm, n, seed)
    strata = lm.stratum(s.points)
    bad = sum(not contains(P, Interior([Fraction(x) for x in m], v))
              for m, v in zip(s.moments, strata))
    return [CheckResult("local model samples inside the b-polytope", CITE_LOCAL, bad == 0, bad, 0)]


def criterion_convexity(families, n: int, m: int, tol: Tolerances, seed: int = 0,
                        power: bool = True) -> list[CheckResult]:
    out = []
    for fam in families:
        rep = convexity_check(image_sample(fam, n, seed), m, tol.hull_delta, seed)
        out.append(CheckResult(f"{fam.family} image convex", CITE_CONVEX, rep.violations == 0,
                               rep.violations, 0))
    if power:
        rep = convexity_check(two_clusters(seed=seed), m, tol.hull_delta, seed)
        out.append(CheckResult("two-cluster fixture detected", CITE_CONVEX, rep.violations > 0,
                               rep.violations, ">0"))
    return out


def _match(a, b, eps):
    return all(any(sa == sb and np.max(np.abs(np.subtract(xa, xb))) < eps for sb, xb in b)
               for sa, xa in a)


def criterion_vertices(tol: Tolerances) -> list[CheckResult]:
    out = []
    for fam in (BSphere(), LocalModel(), LocalModel(lower=-1, upper=Fraction(5, 2), c=2, eps=Fraction(1, 2))):
        verts = [(v, [float(x) for x in xi]) for v, xi in vertices(fam.b_polytope())]
        fps = [(r.stratum, list(r.moment)) for r in fixed_points(fam, tol=tol)]
        ok = len(verts) == len(fps) and _match(verts, fps, tol.vertex_match) and _match(
            fps, verts, tol.vertex_match)
        out.append(CheckResult(f"{fam.family} {fam.to_json().get('c', '')} vertices = fixed points".replace("  ", " "),
                               CITE_VERTICES, ok, [len(verts), len(fps)], tol.vertex_match))
    return out


def builtin_b_polytopes():
    return [BSphere(), BTorus(), LocalModel(), LocalModel(lower=-1, upper=Fraction(5, 2), c=2,
                                                           eps=Fraction(1, 2))]


def criterion_recession() -> list[CheckResult]:
    out = []
    for fam in builtin_b_polytopes():
        P = fam.b_polytope()
        if not is_b_polytope(P, P.graph).passed:
            continue
        for v in P.graph.vertices:
            got = [list(map(str, g)) for g in recession_cone(P, v)]
            want = [list(map(str, g)) for g in _expected_recession(P, v)]
            out.append(CheckResult(f"{fam.family} stratum {v} recession cone", CITE_RECESSION,
                                   got == want, got, want))
    return out


def criterion_leaf_image(n: int, tol: Tolerances, seed: int = 0) -> list[CheckResult]:
    d = verify_leaf_image(ZeroWeightProduct(), n, seed)
    try:
        verify_leaf_image(BSphere(), 10, seed)
        rejected = False
    except NotAllZeroError:
        rejected = True
    return [
        CheckResult("Hausdorff(mu(M), mu(L))", CITE_LEAF, d < tol.hausdorff, _f(d), tol.hausdorff),
        CheckResult("nonzero-weight family rejected", CITE_LEAF, rejected, rejected, True),
    ]


def criterion_morse_bott(tol: Tolerances) -> list[CheckResult]:
    out = []
    for fam in (BSphere(), LocalModel(), ZeroWeightProduct()):
        for rec in fixed_points(fam, tol=tol):
            for g in range(fam.rank):
                hi = hessian_indices(fam, rec.point, g, tol)
                expected = fam.critical_dimension(rec.point, g)
                ok = hi.even and hi.nullity == expected and not hi.ill_conditioned
                out.append(CheckResult(
                    f"{fam.family} {rec.stratum} {list(rec.moment)} X{g + 1}", CITE_MORSE_BOTT, ok,
                    {"index": hi.index, "coindex": hi.coindex, "nullity": hi.nullity},
                    {"parity": "even", "nullity": expected}))
    return out


def criterion_gradient(tol: Tolerances) -> list[CheckResult]:
    out = []
    for fam in (BSphere(), BTorus(), LocalModel(), ZeroWeightProduct(), RActionCounterexample(),
                CSymplecticProduct()):
        rep = gradient_check(fam, 100, 0, tol=tol)
        out.append(CheckResult(f"{fam.family} dH = iota omega", CITE_GRADIENT, rep.passed,
                               _f(rep.max_relative_error), tol.gradient))
    return out


def criterion_levels(resolution: int = 200, levels: int = 20) -> list[CheckResult]:
    zw = ZeroWeightProduct()
    counts = [level_connectivity(zw, float(h), resolution) for h in np.linspace(-1.0, 1.0, levels)]
    values, spacing = double_well(resolution)
    dw = count_level_components(values, spacing, 0.5)
    return [
        CheckResult("zero-weight product level sets connected", CITE_LEVELS,
                    all(c == 1 for c in counts), counts, 1),
        CheckResult("double-well fixture has two components", CITE_LEVELS, dw == 2, dw, 2),
    ]


def criterion_counterexample() -> list[CheckResult]:
    res = fixed_points(RActionCounterexample())
    diag = isinstance(res, NonCircleDiagnostic)
    return [CheckResult("R-action yields diagnostic, no records", CITE_COUNTEREXAMPLE, diag,
                        res.to_dict() if diag else len(res), "diagnostic")]


def criterion_cut(n: int, tol: Tolerances, seed: int = 0) -> list[CheckResult]:
    out = []
    for cid in ("Z0", "Zpi"):
        try:
            symplectic_cut(ZeroWeightProduct(), cid, 5)
            raised = False
        except ZeroWeightCutError:
            raised = True
        out.append(CheckResult(f"zero-weight cut at {cid} refused", CITE_CUT, raised, raised, True))
    for fam, cid, N in ((LocalModel(), "Z", 5), (BSphere(), "equator", 3), (BTorus(), "Z0", 4)):
        cut = symplectic_cut(fam, cid, N, tol=tol)
        s = image_sample(cut.family, n, seed)
        low = float(cut.transverse_level(s.moments).min())
        ok = low >= -N - tol.cut_slack
        out.append(CheckResult(f"{fam.family} cut at {cid}, N={N}", CITE_CUT, ok, _f(low),
                               _f(-N - tol.cut_slack)))
    return out


def criterion_csymplectic(tol: Tolerances) -> list[CheckResult]:
    w = stratified_weights(CSymplecticProduct(), tol=tol)
    e1 = abs(abs(w["Z1xT2"][0]) - 1.0)
    e2 = abs(w["T1xZ2"][0])
    try:
        stratified_weights(CSymplecticProduct(), {"Z1xT2": 0.5 * math.pi - 1e-3}, tol=tol)
        rejected = False
    except CornerProximityError:
        rejected = True
    return [
        CheckResult("stratum Z1 x T2 weight magnitude 1", CITE_CSYMPLECTIC, e1 < tol.weight_fit,
                    _f(w["Z1xT2"][0]), tol.weight_fit),
        CheckResult("stratum T1 x Z2 weight 0", CITE_CSYMPLECTIC, e2 < tol.weight_fit, _f(e2),
                    tol.weight_fit),
        CheckResult("corner-adjacent transversal rejected", CITE_CSYMPLECTIC, rejected, rejected, True),
    ]


def criterion_oracle(seed: int = 0, count: int = 50) -> list[CheckResult]:
    polys = random_valid_b_polytopes(seed, count)
    agree = sum(vertices(P, "bruteforce") == vertices(P, "dd") for P in polys)
    return [CheckResult("brute force vs double description", CITE_ORACLE, agree == count, agree, count)]


# -- suites ----------------------------------------------------------------------------

SUITES = ("dichotomy", "local_model", "zero_weight", "morse_bott", "vertices", "csymplectic", "cut")


def run_suite(name: str, samples: int | None = None, graph=None,
              tol: Tolerances | None = None) -> VerificationReport:
    """Run one suite; ``samples`` overrides the per-check sample counts."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; known: {', '.join(SUITES)}")
    tol = tol or default_tolerances()
    t0 = time.perf_counter()
    if name == "dichotomy":
        checks = criterion_dichotomy() + criterion_weight_recovery(tol)
        if graph is not None:
            checks += criterion_graph_file(graph)
    elif name == "local_model":
        checks = (criterion_local_image(samples or 10_000)
                  + criterion_convexity([LocalModel()], samples or 100_000, 1000, tol)
                  + criterion_recession())
    elif name == "zero_weight":
        checks = (criterion_leaf_image(samples or 10_000, tol)
                  + criterion_convexity([ZeroWeightProduct()], samples or 100_000, 1000, tol)
                  + criterion_levels())
    elif name == "morse_bott":
        checks = criterion_morse_bott(tol) + criterion_counterexample() + criterion_gradient(tol)
    elif name == "vertices":
        checks = criterion_vertices(tol) + criterion_oracle()
    elif name == "csymplectic":
        checks = criterion_csymplectic(tol)
    else:
        checks = criterion_cut(samples or 10_000, tol)
    return VerificationReport(name, checks, time.perf_counter() - t0)
