import math

import numpy as np
import pytest

from lerchlab import quadrature as qd
from lerchlab.catalog import IntegralParams


CFG = qd.QuadConfig(rel_tol=1e-12)


class TestHalfline:
    @pytest.mark.parametrize("f,want", [
        (lambda x: np.exp(-x), 1.0),
        (lambda x: x ** 2 * np.exp(-x), 2.0),
        (lambda x: np.exp(-x) / np.sqrt(x), math.sqrt(math.pi)),
        (lambda x: np.exp(-x * x), math.sqrt(math.pi) / 2),
        (lambda x: 1.0 / (1.0 + x * x), math.pi / 2),
    ])
    def test_reference_integrals(self, f, want):
        res = qd.integrate_halfline(f, CFG)
        assert res.converged
        assert abs(res.value - want) <= 1e-11 * max(1.0, abs(want))
        assert res.err_estimate < 1e-9

    def test_nonfinite_raises(self):
        with pytest.raises(qd.IntegrationError):
            qd.integrate_halfline(lambda x: np.full_like(x, np.nan), CFG)


class TestUnitInterval:
    @pytest.mark.parametrize("f,want", [
        (lambda x: np.ones_like(x), 1.0),
        (lambda x: 1.0 / np.sqrt(x), 2.0),
        (lambda x: np.log(x), -1.0),
        (lambda x: -np.log(1.0 - x), 1.0),
    ])
    def test_reference_integrals(self, f, want):
        res = qd.integrate_unit_interval(f, CFG)
        assert res.converged
        assert abs(res.value - want) <= 1e-11 * max(1.0, abs(want))

    def test_split_at_one(self):
        res = qd.integrate_split_at_one(lambda x: np.exp(-x), CFG)
        assert abs(res.value - 1.0) < 1e-11
        res = qd.integrate_split_at_one(lambda x: 1.0 / (1.0 + x * x), CFG)
        assert abs(res.value - math.pi / 2) < 1e-11


class TestRemovableGuard:
    def test_limit_at_one(self):
        a, b = -0.5, 0.75
        u = np.array([1.0])
        # (u^a - u^b)/log(1/u) -> b - a as u -> 1
        got = qd.removable_singularity_guard(a, b, u)
        assert got[0] == pytest.approx(b - a)

    def test_matches_direct_formula_away_from_one(self):
        a, b = -0.5, 0.75
        u = np.array([0.3, 0.99, 1.01, 4.0])
        want = (u ** a - u ** b) / np.log(1.0 / u)
        got = qd.removable_singularity_guard(a, b, u)
        assert np.allclose(got, want, rtol=1e-12)

    def test_near_one_is_smooth(self):
        a, b = -0.5, -0.75
        u = 1.0 + np.array([-1e-5, -1e-9, 0.0, 1e-9, 1e-5])
        got = qd.removable_singularity_guard(a, b, u)
        assert np.all(np.isfinite(got))
        assert np.max(np.abs(np.diff(got))) < 1e-4

    def test_non_removable_rejected(self):
        with pytest.raises(qd.NonRemovableError):
            qd.removable_singularity_guard(-0.5, -0.75, np.array([1.0]),
                                           coeff=2.0)


class TestReduced1D:
    def test_k0_single_matches_2d(self):
        params = IntegralParams(m=-0.5, k=0.0, a=1.0, p=1.0, q=0.25)
        r1 = qd.integrate_reduced_1d(params, CFG)
        r2 = qd.integrate_2d_paper(params, qd.QuadConfig(rel_tol=1e-10))
        assert abs(r1.value - r2.value) <= 1e-9 * abs(r1.value)

    def test_pair_antisymmetry(self):
        # swapping (m, t) negates the pair integrand
        params = IntegralParams(m=-0.5, k=1.0, a=1.0, p=0.25, q=0.25)
        fwd = qd.integrate_reduced_1d(params, CFG, second_exponent=0.5)
        swapped = IntegralParams(m=0.5, k=1.0, a=1.0, p=0.25, q=0.25)
        bwd = qd.integrate_reduced_1d(swapped, CFG, second_exponent=-0.5)
        assert abs(fwd.value + bwd.value) <= 1e-10 * abs(fwd.value)

    def test_k_minus_one_needs_pair(self):
        params = IntegralParams(m=-0.5, k=-1.0, a=1.0, p=0.25, q=0.25)
        with pytest.raises(qd.IntegrationError):
            qd.integrate_reduced_1d(params, CFG)

    def test_denominator_root_on_path_rejected(self):
        params = IntegralParams(m=-0.5, k=0.0, a=1.0, p=-1.0, q=0.25)
        with pytest.raises(qd.IntegrationError):
            qd.integrate_reduced_1d(params, CFG)


class Test2D:
    def test_decoupled_separable_product(self):
        # without the x^2/(4y) coupling the k=0 integral factorizes into
        # Gamma(m+1) p^(-m-1) * Gamma(-m) q^m
        params = IntegralParams(m=-0.5, k=0.0, a=1.0, p=1.0, q=0.25)
        res = qd.integrate_2d_paper(params, qd.QuadConfig(rel_tol=1e-10),
                                    drop_gaussian_coupling=True)
        want = math.gamma(0.5) * math.gamma(0.5) * 0.25 ** -0.5
        assert abs(res.value - want) <= 1e-9 * want

    def test_fubini_swap(self):
        params = IntegralParams(m=-0.5 - 0.6j, k=0.0, a=1.0, p=1.0, q=0.25)
        cfg = qd.QuadConfig(rel_tol=1e-10)
        xy = qd.integrate_2d_paper(params, cfg, order="xy")
        yx = qd.integrate_2d_paper(params, cfg, order="yx")
        assert abs(xy.value - yx.value) <= 1e-9 * abs(xy.value)

    def test_bad_order_rejected(self):
        params = IntegralParams(m=-0.5, k=0.0)
        with pytest.raises(ValueError):
            qd.integrate_2d_paper(params, order="diagonal")


class TestConfig:
    def test_max_level_bounds(self):
        with pytest.raises(ValueError):
            qd.QuadConfig(max_level=2)
        with pytest.raises(ValueError):
            qd.QuadConfig(max_level=25)

    def test_result_reports_evaluations(self):
        res = qd.integrate_halfline(lambda x: np.exp(-x), CFG)
        assert res.evaluations > 0
