import math
from fractions import Fraction

import numpy as np
import pytest
from scipy import integrate

from bmoment.errors import (
    CornerProximityError,
    DomainError,
    NonConvergentFitError,
    PreconditionError,
    ZeroWeightCutError,
)
from bmoment.models.analysis import (
    NonCircleDiagnostic,
    _fit_log_coefficients,
    fixed_points,
    gradient_check,
    hessian_indices,
    modular_weight_estimate,
    stratified_weights,
    symplectic_cut,
)
from bmoment.models.families import (
    BSphere,
    BTorus,
    CSymplecticProduct,
    LocalModel,
    RActionCounterexample,
    ZeroWeightProduct,
    family_from_json,
)
from bmoment.models.sampling import image_sample, moment_eval

ALL = [BSphere(), BTorus(), LocalModel(), ZeroWeightProduct(), RActionCounterexample(), CSymplecticProduct()]


class TestMomentEval:
    def test_local_model_formula(self):
        mu, flag = moment_eval(LocalModel(), [[2 * 0.3 - 1, 0.0, 1.0, math.exp(-2)]])
        assert mu[0] == pytest.approx([0.3, -2.0]) and not flag[0]

    def test_btorus_equator_of_h(self):
        mu, _ = moment_eval(BTorus(), [[math.pi / 2, 1.0]])
        assert mu[0, 0] == pytest.approx(0.0, abs=1e-15)

    def test_btorus_against_quadrature(self):
        # H vanishes at pi/2 and 3pi/2; elsewhere it is the integral of the
        # contraction -1/sin(theta) from the nearer of the two
        for th, start in ((0.3, math.pi / 2), (1.0, math.pi / 2), (2.5, math.pi / 2), (4.0, 1.5 * math.pi)):
            val, _ = integrate.quad(lambda s: -1.0 / math.sin(s), start, th)
            assert moment_eval(BTorus(), [[th, 0.0]])[0][0, 0] == pytest.approx(val, rel=1e-10)

    def test_counterexample(self):
        assert moment_eval(RActionCounterexample(), [[2.0, 5.0]])[0][0, 0] == 2.0

    def test_flag_on_nonzero_weight_z(self):
        mu, flag = moment_eval(BSphere(), [[0.0, 1.0]])
        assert flag[0] and mu[0, 0] == math.inf
        mu, flag = moment_eval(LocalModel(), [[0.0, 0.0, 0.0, 0.0]])
        assert flag[0] and mu[0, 1] == -math.inf

    def test_no_flag_on_zero_weight_z(self):
        mu, flag = moment_eval(ZeroWeightProduct(), [[0.0, 0.0, 0.5, 0.0]])
        assert not flag[0] and mu[0, 0] == 0.5

    def test_outside_domain(self):
        with pytest.raises(DomainError):
            moment_eval(BSphere(), [[1.5, 0.0]])
        with pytest.raises(DomainError):
            moment_eval(LocalModel(), [[0.0, 0.0, 0.0, 2.0]])


class TestHamiltonianCondition:
    @pytest.mark.parametrize("fam", ALL, ids=lambda f: f.family)
    def test_gradient_matches_contraction(self, fam):
        rep = gradient_check(fam, 100, seed=3)
        assert rep.points == 100 and rep.max_relative_error < 1e-5


class TestWeights:
    def test_local_model(self):
        est = modular_weight_estimate(LocalModel(c=1), "Z")
        assert est[0] == pytest.approx(0.0, abs=1e-12)
        assert est[1] == pytest.approx(1.0, abs=1e-3)

    def test_local_model_period(self):
        assert modular_weight_estimate(LocalModel(c=Fraction(5, 2)), "Z")[1] == pytest.approx(2.5, abs=1e-3)

    def test_btorus_opposite(self):
        a = modular_weight_estimate(BTorus(), "Z0")[0]
        b = modular_weight_estimate(BTorus(), "Zpi")[0]
        assert a == pytest.approx(-1.0, abs=1e-3) and b == pytest.approx(1.0, abs=1e-3)

    def test_bsphere_matches_graph(self):
        assert modular_weight_estimate(BSphere(), "equator")[0] == pytest.approx(-1.0, abs=1e-3)

    @pytest.mark.parametrize("cid", ["Z0", "Zpi"])
    def test_zero_weight(self, cid):
        assert abs(modular_weight_estimate(ZeroWeightProduct(), cid)[0]) < 1e-3

    def test_estimates_agree_with_declared_graph(self):
        for fam in (BSphere(), BTorus(), LocalModel(c=3), ZeroWeightProduct()):
            for comp in fam.components():
                est = modular_weight_estimate(fam, comp.id)
                assert np.allclose(est.coefficients, [float(w) for w in comp.weight], atol=1e-3)

    def test_non_convergent_fit(self):
        with pytest.raises(NonConvergentFitError):
            _fit_log_coefficients(lambda P: np.sin(1.0 / P[:, :1]), lambda y: np.array([y]))

    def test_stratified(self):
        w = stratified_weights(CSymplecticProduct())
        assert abs(w["Z1xT2"][0]) == pytest.approx(1.0, abs=1e-3)
        assert abs(w["T1xZ2"][0]) < 1e-3

    def test_corner_rejected(self):
        with pytest.raises(CornerProximityError):
            stratified_weights(CSymplecticProduct(), {"Z1xT2": math.pi / 2 - 1e-3})
        with pytest.raises(CornerProximityError):
            stratified_weights(CSymplecticProduct(), {"T1xZ2": 1e-3})

    def test_stratified_precondition(self):
        with pytest.raises(PreconditionError):
            stratified_weights(BTorus())


class TestFixedPoints:
    def test_bsphere_poles(self):
        fps = fixed_points(BSphere())
        assert sorted((r.stratum, tuple(r.point)) for r in fps) == [("north", (1.0, 0.0)), ("south", (-1.0, 0.0))]
        assert all(r.moment == (0.0,) for r in fps)

    def test_btorus_none(self):
        assert fixed_points(BTorus()) == []

    def test_counterexample_diagnostic(self):
        d = fixed_points(RActionCounterexample())
        assert isinstance(d, NonCircleDiagnostic)
        assert d.fixed_locus == "{x = 0}" and d.dH_norm_min == 1.0

    def test_local_model_corners(self):
        fam = LocalModel(lower=-1, upper=2, c=2, eps=Fraction(1, 3))
        got = sorted((r.stratum, r.moment) for r in fixed_points(fam))
        N = 2 * math.log(1 / 3)
        want = sorted((s, (a, N)) for s in ("plus", "minus") for a in (-1.0, 2.0))
        assert [g[0] for g in got] == [w[0] for w in want]
        assert np.allclose([g[1] for g in got], [w[1] for w in want], atol=1e-12)

    def test_zero_weight_submanifolds(self):
        fps = fixed_points(ZeroWeightProduct())
        assert sorted(r.moment for r in fps) == [(-1.0,), (1.0,)]
        assert all(len(r.cloud) > 1 for r in fps)


class TestHessian:
    def test_zero_weight_north_is_maximum(self):
        fam = ZeroWeightProduct()
        hi = hessian_indices(fam, [1.0, 0.5, 1.0, 0.0])
        assert (hi.index, hi.coindex, hi.nullity) == (2, 0, fam.dim - 2)
        # oracle: H = z = 1 - (x^2 + y^2)/2 in the equal-area chart, Hessian -I
        assert np.allclose(sorted(hi.eigenvalues)[:2], [-1.0, -1.0], atol=1e-6)

    def test_zero_weight_south_is_minimum(self):
        hi = hessian_indices(ZeroWeightProduct(), [1.0, 0.5, -1.0, 0.0])
        assert (hi.index, hi.coindex, hi.nullity) == (0, 2, 2)

    def test_bsphere_pole_even(self):
        hi = hessian_indices(BSphere(), [1.0, 0.0])
        assert hi.even and hi.nullity == 0 and not hi.ill_conditioned

    def test_local_model_both_generators(self):
        fam = LocalModel()
        for r in fixed_points(fam):
            for g in range(2):
                hi = hessian_indices(fam, r.point, g)
                assert hi.even and hi.nullity == 2


class TestSampling:
    def test_deterministic(self):
        a = image_sample(LocalModel(), 500, seed=9)
        b = image_sample(LocalModel(), 500, seed=9)
        assert np.array_equal(a.points, b.points) and np.array_equal(a.moments, b.moments)
        assert not np.array_equal(a.points, image_sample(LocalModel(), 500, seed=10).points)

    def test_prefix_stable(self):
        a = image_sample(BSphere(), 1000, seed=1)
        b = image_sample(BSphere(), 400, seed=1)
        assert np.array_equal(a.points[:400], b.points)

    def test_ranges(self):
        assert np.all(np.abs(image_sample(ZeroWeightProduct(), 10_000).moments) <= 1.0)
        assert np.all(image_sample(BSphere(), 10_000).moments >= 0.0)
        m = image_sample(LocalModel(), 10_000).moments
        assert np.all((m[:, 0] >= 0) & (m[:, 0] <= 1)) and np.all(m[:, 1] < 0)

    def test_liouville_uniform_in_log(self):
        # omega = dz dtheta / z: the Liouville measure is uniform in log|z|
        m = image_sample(BSphere(depth=4.0), 20_000).moments[:, 0]
        hist, _ = np.histogram(m, bins=8, range=(0, 4))
        assert hist.min() > 0.9 * hist.mean()

    def test_zero_samples(self):
        with pytest.raises(ValueError):
            image_sample(BSphere(), 0)


class TestCuts:
    def test_local_model(self):
        cut = symplectic_cut(LocalModel(), "Z", 5)
        m = image_sample(cut.family, 10_000).moments
        assert m[:, 1].min() >= -5 - 1e-6 and m[:, 1].max() < 0
        assert cut.truncated["plus"].is_bounded()

    def test_bsphere(self):
        cut = symplectic_cut(BSphere(), "equator", 3)
        s = image_sample(cut.family, 10_000)
        assert s.points[:, 0].__abs__().min() >= math.exp(-3) - 1e-12
        assert s.moments.max() <= 3 + 1e-6

    def test_one_side_only(self):
        cut = symplectic_cut(BSphere(), "equator", 2, side="north")
        s = image_sample(cut.family, 4000)
        north = s.points[:, 0] > 0
        assert s.moments[north].max() <= 2 + 1e-9 and s.moments[~north].max() > 2

    @pytest.mark.parametrize("cid", ["Z0", "Zpi"])
    def test_zero_weight_refused(self, cid):
        with pytest.raises(ZeroWeightCutError, match="dichotomy"):
            symplectic_cut(ZeroWeightProduct(), cid, 5)

    def test_positive_level(self):
        with pytest.raises(ValueError):
            symplectic_cut(LocalModel(), "Z", 0)


def test_family_json_round_trip():
    fam = LocalModel(lower=Fraction(1, 3), upper=2, c=Fraction(3, 2), eps=Fraction(1, 2))
    assert family_from_json(fam.to_json()) == fam
    for f in ALL:
        assert family_from_json(f.to_json()).family == f.family
    with pytest.raises(ValueError):
        family_from_json({"family": "klein_bottle"})
