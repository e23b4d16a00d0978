import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy import special as sps

from blochgibbs.errors import DomainError, PoleProximityError
from blochgibbs.models import (GibbsPoint, ModelKind, POWER_LAW_MODELS,
                               approx_beta_large, approx_beta_small,
                               atanh_omega, integrated_density, mean_energy,
                               mean_energy_asymptotic, mean_energy_series,
                               mean_polarization, modal_beta_estimate,
                               modal_curvature, omega_complex, partition, pdf,
                               polarization_asymptotic,
                               reflection_identity_residual,
                               structure_function, var_energy)
from blochgibbs.oracles import integrate_semiinfinite

LN2 = math.log(2.0)
ALL_MODELS = POWER_LAW_MODELS + (ModelKind.KMB,)
BETA_GRID = (0.3, 1.0, 3.0, 10.0)


def quad_moment(point, weight):
    f = lambda E: weight(np.asarray(E, dtype=float)) * pdf(point, E)
    return integrate_semiinfinite(f, tol=1e-10).value


class TestTypes:
    def test_dimensions(self):
        assert [m.m for m in (ModelKind.REAL, ModelKind.COMPLEX,
                              ModelKind.QUATERNIONIC, ModelKind.CLASSICAL)] == \
            [1, 2, 4, 0]
        assert ModelKind.KMB.m is None

    def test_omega_exponents(self):
        assert ModelKind.REAL.omega_exponent == 0.0
        assert ModelKind.COMPLEX.omega_exponent == 0.5
        assert ModelKind.QUATERNIONIC.omega_exponent == 1.5
        assert ModelKind.CLASSICAL.omega_exponent == -0.5

    def test_gibbs_point_validation(self):
        with pytest.raises(DomainError):
            GibbsPoint(ModelKind.COMPLEX, -0.1)
        with pytest.raises(DomainError):
            GibbsPoint(ModelKind.COMPLEX, math.nan)
        with pytest.raises(DomainError):
            GibbsPoint("complex", 1.0)

    def test_beta_zero_only_for_polarization(self):
        point = GibbsPoint(ModelKind.COMPLEX, 0.0)
        assert mean_polarization(point) == 1.0
        for op in (partition, mean_energy, var_energy):
            with pytest.raises(DomainError):
                op(point)

    def test_energy_value_bijection(self):
        from blochgibbs.models import EnergyValue
        ev = EnergyValue.from_polarization(0.5)
        assert ev.E == pytest.approx(-math.log(0.75), abs=1e-15)
        assert ev.r == pytest.approx(0.5, abs=1e-15)
        assert EnergyValue(0.0).r == 0.0
        assert EnergyValue.from_polarization(1.0).E == math.inf
        assert EnergyValue.from_polarization(1.0).r == 1.0
        with pytest.raises(DomainError):
            EnergyValue(-0.1)
        with pytest.raises(DomainError):
            EnergyValue.from_polarization(1.5)


class TestStructureFunction:
    def test_complex_at_ln2(self):
        assert structure_function(ModelKind.COMPLEX, LN2) == \
            pytest.approx(math.sqrt(0.5), abs=1e-12)

    def test_real_constant(self):
        assert structure_function(ModelKind.REAL, 17.3) == 1.0

    def test_kmb_at_ln2(self):
        want = 2 * math.atanh(math.sqrt(0.5))
        assert structure_function(ModelKind.KMB, LN2) == \
            pytest.approx(want, abs=1e-12)
        assert want == pytest.approx(1.7627471740, abs=1e-9)

    def test_classical_divergence_marker(self):
        assert structure_function(ModelKind.CLASSICAL, 0.0) == math.inf

    def test_negative_energy_rejected(self):
        with pytest.raises(DomainError):
            structure_function(ModelKind.COMPLEX, -0.5)

    def test_kmb_equals_2atanh_everywhere(self):
        # naive atanh is well-conditioned only while 1 - om^2 stays large;
        # past that the high-precision oracle takes over
        import mpmath as mp
        mp.mp.dps = 40
        for e in np.logspace(-4, 0.7, 30):
            om = float(omega_complex(e))
            assert structure_function(ModelKind.KMB, e) == \
                pytest.approx(2 * math.atanh(om), abs=1e-12)
        for e in (10.0, 40.0, 200.0):
            # ln((1+om)/(1-om)) with 1-om = e^-E/(1+om) substituted, so the
            # oracle stays finite at any E
            s = mp.sqrt(1 - mp.exp(-mp.mpf(e)))
            want = float(2 * mp.log(1 + s) + mp.mpf(e))
            assert structure_function(ModelKind.KMB, e) == \
                pytest.approx(want, abs=1e-12)


class TestPartition:
    def test_examples(self):
        assert partition(GibbsPoint(ModelKind.COMPLEX, 1.0)) == \
            pytest.approx(2.0 / 3.0, abs=1e-13)
        assert partition(GibbsPoint(ModelKind.REAL, 2.0)) == \
            pytest.approx(0.5, abs=1e-14)
        assert partition(GibbsPoint(ModelKind.KMB, 1.0)) == \
            pytest.approx(2.0, abs=1e-13)

    def test_unified_formula_matches_per_family_quotients(self):
        for beta in (0.1, 0.5, 1.0, 2.0, 10.0, 100.0):
            g = math.gamma
            per_family = {
                ModelKind.COMPLEX: math.sqrt(math.pi) * g(beta) / (2 * g(1.5 + beta)),
                ModelKind.QUATERNIONIC:
                    3 * math.sqrt(math.pi) * g(beta) / (4 * g(2.5 + beta)),
                ModelKind.REAL: 1.0 / beta,
                ModelKind.CLASSICAL: math.sqrt(math.pi) * g(beta) / g(0.5 + beta),
            }
            for model, want in per_family.items():
                got = partition(GibbsPoint(model, beta))
                assert got == pytest.approx(want, rel=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            partition(GibbsPoint(ModelKind.CLASSICAL, 0.0))


class TestPdf:
    def test_complex_vanishes_at_zero(self):
        assert pdf(GibbsPoint(ModelKind.COMPLEX, 1.0), 0.0) == 0.0

    def test_real_exponential(self):
        got = pdf(GibbsPoint(ModelKind.REAL, 2.0), 0.25)
        assert got == pytest.approx(2.0 * math.exp(-0.5), abs=1e-12)

    @pytest.mark.parametrize("model", ALL_MODELS)
    @pytest.mark.parametrize("beta", (0.3, 1.0, 3.0))
    def test_normalization(self, model, beta):
        point = GibbsPoint(model, beta)
        res = integrate_semiinfinite(lambda E: pdf(point, E), tol=1e-9)
        assert res.value == pytest.approx(1.0, abs=1e-8)

    def test_vectorized(self):
        point = GibbsPoint(ModelKind.QUATERNIONIC, 0.7)
        es = np.array([0.1, 1.0, 5.0])
        batch = pdf(point, es)
        for e, v in zip(es, batch):
            assert v == pytest.approx(pdf(point, float(e)), rel=1e-15)


class TestMoments:
    def test_mean_examples(self):
        assert mean_energy(GibbsPoint(ModelKind.REAL, 4.0)) == \
            pytest.approx(0.25, abs=1e-13)
        assert mean_energy(GibbsPoint(ModelKind.COMPLEX, 1.0)) == \
            pytest.approx(8.0 / 3.0 - 2 * LN2, abs=1e-12)
        assert mean_energy(GibbsPoint(ModelKind.CLASSICAL, 1.0)) == \
            pytest.approx(2.0 - 2 * LN2, abs=1e-12)

    def test_var_examples(self):
        assert var_energy(GibbsPoint(ModelKind.COMPLEX, 1.0)) == \
            pytest.approx(40.0 / 9.0 - math.pi**2 / 3.0, abs=1e-11)
        assert var_energy(GibbsPoint(ModelKind.REAL, 3.0)) == \
            pytest.approx(1.0 / 9.0, abs=1e-13)

    def test_var_large_beta_approximation(self):
        got = var_energy(GibbsPoint(ModelKind.COMPLEX, 100.0))
        assert got == pytest.approx(1.5e-4, rel=0.03)

    @pytest.mark.parametrize("model", ALL_MODELS)
    @pytest.mark.parametrize("beta", (0.5, 1.0, 3.0))
    def test_match_log_partition_derivatives(self, model, beta):
        # h = 1e-5 for the first difference; the second difference divides
        # float rounding by h^2, so it needs the wider step to stay below
        # its 1e-5 tolerance
        lz = lambda b: math.log(partition(GibbsPoint(model, b)))
        h = 1e-5
        fd_mean = -(lz(beta + h) - lz(beta - h)) / (2 * h)
        assert abs(fd_mean - mean_energy(GibbsPoint(model, beta))) <= 1e-6
        h = 1e-4
        fd_var = (lz(beta + h) - 2 * lz(beta) + lz(beta - h)) / h**2
        assert abs(fd_var - var_energy(GibbsPoint(model, beta))) <= 1e-5

    @pytest.mark.parametrize("model", ALL_MODELS)
    @pytest.mark.parametrize("beta", BETA_GRID)
    def test_quadrature_equivalence(self, model, beta):
        point = GibbsPoint(model, beta)
        qe = quad_moment(point, lambda E: E)
        qr = quad_moment(point, omega_complex)
        assert qe == pytest.approx(mean_energy(point), rel=1e-8)
        assert qr == pytest.approx(mean_polarization(point), rel=1e-8)

    def test_var_positive(self):
        for model in ALL_MODELS:
            for beta in BETA_GRID:
                assert var_energy(GibbsPoint(model, beta)) > 0


class TestMeanPolarization:
    def test_examples(self):
        assert mean_polarization(GibbsPoint(ModelKind.COMPLEX, 1.0)) == \
            pytest.approx(0.75, abs=1e-13)
        assert mean_polarization(GibbsPoint(ModelKind.QUATERNIONIC, 1.0)) == \
            pytest.approx(5.0 / 6.0, abs=1e-13)

    def test_quat_complex_ratio(self):
        for beta in (0.2, 1.0, 4.0, 50.0):
            ratio = (mean_polarization(GibbsPoint(ModelKind.QUATERNIONIC, beta))
                     / mean_polarization(GibbsPoint(ModelKind.COMPLEX, beta)))
            assert ratio == pytest.approx(2 * (3 + 2 * beta) / (3 * (2 + beta)),
                                          rel=1e-12)

    def test_unit_limit_all_models(self):
        for model in ALL_MODELS:
            assert mean_polarization(GibbsPoint(model, 0.0)) == 1.0

    @pytest.mark.parametrize("model", ALL_MODELS)
    def test_decreasing_to_zero(self, model):
        betas = np.logspace(-2, 3, 40)
        vals = [mean_polarization(GibbsPoint(model, b)) for b in betas]
        assert all(a > b for a, b in zip(vals, vals[1:]))
        assert vals[-1] < 0.1

    def test_kmb_gap_location(self):
        got = (mean_polarization(GibbsPoint(ModelKind.KMB, 0.49825))
               - mean_polarization(GibbsPoint(ModelKind.COMPLEX, 0.49825)))
        assert got == pytest.approx(0.0526, abs=5e-4)

    @settings(max_examples=40, deadline=None)
    @given(st.floats(min_value=0.02, max_value=50.0))
    def test_dominance_ordering(self, beta):
        vals = [mean_polarization(GibbsPoint(m, beta)) for m in POWER_LAW_MODELS]
        assert vals[0] > vals[1] > vals[2] > vals[3]


class TestMeanEnergySeries:
    @pytest.mark.parametrize("beta", (0.5, 1.0, 5.0))
    def test_matches_digamma_difference(self, beta):
        res = mean_energy_series(beta, tol=1e-9)
        want = mean_energy(GibbsPoint(ModelKind.COMPLEX, beta))
        assert res.value == pytest.approx(want, abs=1e-8)
        assert res.terms_used <= 10**4


class TestIntegratedDensity:
    def test_complex_closed_form(self):
        want = 2 * (math.atanh(math.sqrt(0.5)) - math.sqrt(0.5))
        assert integrated_density(ModelKind.COMPLEX, LN2) == \
            pytest.approx(want, abs=1e-12)
        assert want == pytest.approx(0.3485336, abs=1e-6)

    def test_classical_closed_form(self):
        assert integrated_density(ModelKind.CLASSICAL, LN2) == \
            pytest.approx(1.7627472, abs=1e-6)

    def test_real_is_identity(self):
        assert integrated_density(ModelKind.REAL, 7.3) == 7.3

    def test_difference_limit(self):
        got = (integrated_density(ModelKind.COMPLEX, 40.0)
               - integrated_density(ModelKind.QUATERNIONIC, 40.0))
        assert got == pytest.approx(2.0 / 3.0, abs=1e-8)

    def test_difference_monotone(self):
        es = np.linspace(0.05, 25.0, 60)
        diffs = [integrated_density(ModelKind.COMPLEX, e)
                 - integrated_density(ModelKind.QUATERNIONIC, e) for e in es]
        assert all(a < b for a, b in zip(diffs, diffs[1:]))

    def test_inversion_identity(self):
        for e0 in np.logspace(math.log10(0.01), math.log10(30.0), 60):
            om = float(omega_complex(e0))
            n = integrated_density(ModelKind.COMPLEX, e0)
            assert abs(om - math.tanh((n + 2 * om) / 2)) <= 1e-10

    def test_kmb_against_dilogarithm_closed_form(self):
        # independent oracle: N_kmb has a closed form through Li2 that the
        # implementation (pure quadrature) never touches
        li2 = lambda z: sps.spence(1.0 - z)
        for e0 in (0.01, 0.3, LN2, 1.57565, 5.0, 20.0):
            r = float(omega_complex(e0))
            want = (e0**2 / 2 + 2 * li2((1 - r) / 2) - 2 * li2(0.5)
                    - 2 * LN2 * (-e0 - math.log1p(r)) - math.log1p(r)**2)
            assert integrated_density(ModelKind.KMB, e0) == \
                pytest.approx(want, abs=2e-10)

    def test_all_derivatives_are_structure_functions(self):
        h = 1e-6
        for model in ALL_MODELS:
            for e0 in (0.5, 2.0):
                fd = (integrated_density(model, e0 + h)
                      - integrated_density(model, e0 - h)) / (2 * h)
                assert fd == pytest.approx(structure_function(model, e0),
                                           rel=1e-5)

    def test_domain(self):
        with pytest.raises(DomainError):
            integrated_density(ModelKind.COMPLEX, -1.0)


class TestModalEstimates:
    def test_complex_example(self):
        assert modal_beta_estimate(ModelKind.COMPLEX, LN2) == \
            pytest.approx(0.5, abs=1e-14)

    def test_real_zero(self):
        assert modal_beta_estimate(ModelKind.REAL, 5.0) == 0.0

    def test_quaternionic_matches_brute_derivative(self):
        h = 1e-7
        brute = (math.log(structure_function(ModelKind.QUATERNIONIC, LN2 + h))
                 - math.log(structure_function(ModelKind.QUATERNIONIC, LN2 - h))) \
            / (2 * h)
        got = modal_beta_estimate(ModelKind.QUATERNIONIC, LN2)
        assert got == pytest.approx(1.5, abs=1e-12)
        assert got == pytest.approx(brute, abs=1e-7)

    @pytest.mark.parametrize("model", ALL_MODELS)
    def test_curvature_matches_finite_difference(self, model):
        if model is ModelKind.REAL:
            assert modal_curvature(model, 1.0) == 0.0
            return
        h = 1e-4
        for e in (0.7, 2.5):
            lnom = lambda x: math.log(structure_function(model, x))
            fd = -(lnom(e + h) - 2 * lnom(e) + lnom(e - h)) / h**2
            assert modal_curvature(model, e) == pytest.approx(fd, rel=1e-5)

    def test_domain(self):
        with pytest.raises(DomainError):
            modal_beta_estimate(ModelKind.COMPLEX, 0.0)


class TestBetaApproximations:
    def test_large_beta_moderate_regime(self):
        # exact inverse of the mean-energy law at <E> = <E>(beta=1)
        target = mean_energy(GibbsPoint(ModelKind.COMPLEX, 1.0))
        approx = approx_beta_large(target)
        assert approx == pytest.approx(1.1716, abs=1e-4)
        assert abs(approx - 1.0) / 1.0 < 0.20

    def test_large_beta_deep_regime(self):
        from blochgibbs import rootfind
        f = lambda b: mean_energy(GibbsPoint(ModelKind.COMPLEX, b)) - 0.15
        root = rootfind.brent(f, 1.0, 100.0)
        assert approx_beta_large(0.15) == pytest.approx(10.0, abs=1e-12)
        assert abs(10.0 - root) / root < 0.03

    def test_small_beta_arithmetic(self):
        assert approx_beta_small(16.3) == \
            pytest.approx(1.0 / (16.3 - 2.0 - LN2), abs=1e-15)

    def test_domains(self):
        with pytest.raises(DomainError):
            approx_beta_small(2.0)
        with pytest.raises(DomainError):
            approx_beta_large(0.0)


class TestAsymptoticExpansions:
    def test_five_term_sum_near_exact(self):
        got = mean_energy_asymptotic(10.0, 5)
        want = mean_energy(GibbsPoint(ModelKind.COMPLEX, 10.0))
        assert got == pytest.approx(0.1464865625, abs=1e-12)
        assert abs(got - want) <= 1e-6

    def test_leading_term(self):
        assert mean_energy_asymptotic(100.0, 1) == pytest.approx(0.015, abs=1e-15)

    def test_residual_order_six_scaling(self):
        r2 = abs(mean_energy_asymptotic(2.0, 5)
                 - mean_energy(GibbsPoint(ModelKind.COMPLEX, 2.0)))
        r4 = abs(mean_energy_asymptotic(4.0, 5)
                 - mean_energy(GibbsPoint(ModelKind.COMPLEX, 4.0)))
        assert r2 / r4 == pytest.approx(64.0, rel=0.5)

    def test_polarization_expansion_beta25(self):
        want = mean_polarization(GibbsPoint(ModelKind.COMPLEX, 25.0))
        assert abs(polarization_asymptotic(25.0) - want) <= 1e-5

    def test_polarization_expansion_beta100(self):
        want = mean_polarization(GibbsPoint(ModelKind.COMPLEX, 100.0))
        got = polarization_asymptotic(100.0)
        assert abs(got - want) <= 1e-6
        leading = 2.0 / (math.sqrt(math.pi) * 10.0)
        assert abs(got - leading) < 0.01 * leading

    def test_expansion_is_asymptotic_only(self):
        assert abs(polarization_asymptotic(1.0) - 0.75) > 0.01

    def test_domains(self):
        with pytest.raises(DomainError):
            mean_energy_asymptotic(1.0, 6)
        with pytest.raises(DomainError):
            polarization_asymptotic(-1.0)


class TestReflectionIdentity:
    @pytest.mark.parametrize("beta", (0.25, 1.3))
    def test_residual_tiny(self, beta):
        assert reflection_identity_residual(beta) <= 1e-9

    def test_pole_rejected(self):
        with pytest.raises(PoleProximityError):
            reflection_identity_residual(0.5)

    @settings(max_examples=30, deadline=None)
    @given(st.floats(min_value=0.05, max_value=4.0))
    def test_residual_away_from_poles(self, beta):
        if abs(2 * beta - round(2 * beta)) < 5e-3:
            return
        assert reflection_identity_residual(beta) <= 1e-8


class TestStableHelpers:
    def test_atanh_omega_large_argument(self):
        # naive artanh overflows past E ~ 36; the stable form must not
        got = float(atanh_omega(200.0))
        assert got == pytest.approx(math.log(2.0) + 100.0, abs=1e-10)
