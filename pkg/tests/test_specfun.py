import math

import numpy as np
import pytest
import scipy.special

from gastba import specfun
from gastba.errors import DomainError, NearTrivialZeroWarning, PoleError

import oracles


class TestComplexOrder:
    def test_rejects_non_finite(self):
        with pytest.raises(DomainError):
            specfun.ComplexOrder(math.nan, 0.0)
        with pytest.raises(DomainError):
            specfun.ComplexOrder(0.5, math.inf)

    def test_converts_to_complex(self):
        assert complex(specfun.ComplexOrder(0.5, 14.0)) == 0.5 + 14.0j


class TestGamma:
    def test_identity_case(self):
        assert specfun.gamma(1.0) == pytest.approx(1.0, abs=1e-14)

    def test_half(self):
        assert specfun.gamma(0.5).real == pytest.approx(math.sqrt(math.pi), rel=1e-14)

    def test_complex_point_against_integral_oracle(self):
        # frozen from the defining-integral quadrature oracle
        live = oracles.gamma_defining_integral(0.75 + 2j)
        assert live == pytest.approx(oracles.GAMMA_075_2I, abs=5e-14)
        assert specfun.gamma(0.75 + 2j) == pytest.approx(oracles.GAMMA_075_2I, rel=1e-12)

    def test_poles(self):
        for bad in (0.0, -1.0, -2.0, -7.0):
            with pytest.raises(PoleError):
                specfun.gamma(bad)

    def test_twelve_digits_within_disk(self):
        rng = np.random.default_rng(7)
        for _ in range(200):
            z = complex(rng.uniform(-50, 50), rng.uniform(-50, 50))
            if abs(z) > 50 or (z.imag == 0 and z.real <= 0):
                continue
            if z.real <= 0 and abs(z.real - round(z.real)) < 1e-2 and abs(z.imag) < 1e-2:
                continue
            ref = complex(scipy.special.gamma(z))
            if not (math.isfinite(ref.real) and math.isfinite(ref.imag)):
                continue
            assert specfun.gamma(z) == pytest.approx(ref, rel=1e-12)

    def test_reflection_duplication_identity(self):
        # sin(pi nu) Gamma(1-2 nu) Gamma(nu) = sqrt(pi) 2**(-2 nu) Gamma(1/2 - nu)
        rng = np.random.default_rng(11)
        checked = 0
        while checked < 50:
            nu = complex(rng.uniform(-3, 3), rng.uniform(-3, 3))
            if min(abs(2 * nu.real - round(2 * nu.real)), abs(nu.real - round(nu.real))) < 0.05 and abs(nu.imag) < 0.05:
                continue
            lhs = specfun.sinpi(nu) * specfun.gamma(1 - 2 * nu) * specfun.gamma(nu)
            rhs = math.sqrt(math.pi) * 2.0 ** (-2 * nu) * specfun.gamma(0.5 - nu)
            assert abs(lhs - rhs) <= 1e-10 * abs(rhs)
            checked += 1


class TestZeta:
    def test_two(self):
        assert specfun.zeta(2.0).real == pytest.approx(math.pi**2 / 6, rel=1e-13)

    def test_four(self):
        assert specfun.zeta(4.0).real == pytest.approx(math.pi**4 / 90, rel=1e-13)

    def test_zero(self):
        assert specfun.zeta(0.0) == pytest.approx(-0.5, abs=1e-12)

    def test_pole(self):
        with pytest.raises(PoleError):
            specfun.zeta(1.0)

    def test_near_trivial_zero_warns(self):
        with pytest.warns(NearTrivialZeroWarning):
            specfun.zeta(-2.0 + 1e-9)

    def test_against_high_precision_oracle(self):
        pts = [0.5, 1.5, 3.0, 0.5 + 14j, 0.3 + 7.5j, 0.9 + 0.1j]
        for nu in pts:
            ref = complex(oracles.mp_zeta(nu))
            assert specfun.zeta(nu) == pytest.approx(ref, rel=1e-12)

    def test_reflection_consistency_on_strip(self):
        # zeta(nu) vs the functional-equation route, built here independently
        rng = np.random.default_rng(3)
        for _ in range(100):
            nu = complex(rng.uniform(0.05, 0.95), rng.uniform(-25, 25))
            chi = (
                2.0**nu
                * math.pi ** (nu - 1)
                * specfun.sinpi(nu / 2)
                * complex(scipy.special.gamma(1 - nu))
            )
            direct = specfun.zeta(nu)
            via_reflection = chi * specfun.zeta(1 - nu)
            assert abs(direct - via_reflection) < 1e-10 * (1 + abs(direct))

    def test_negative_axis_values(self):
        assert specfun.zeta(-1.0).real == pytest.approx(-1.0 / 12.0, rel=1e-12)
        with pytest.warns(NearTrivialZeroWarning):
            assert abs(specfun.zeta(-2.0)) < 1e-15


class TestPolylogSeries:
    def test_li1_is_log(self):
        assert specfun.polylog_series(1.0, 0.5).real == pytest.approx(
            math.log(2), rel=1e-14
        )

    def test_li3_near_one_approaches_zeta3(self):
        val = specfun.polylog_series(3.0, 1 - 1e-9).real
        assert val == pytest.approx(oracles.ZETA_3, abs=5e-9)

    def test_minus_one_matches_eta_identity(self):
        nu = 0.5 + 14j
        lhs = -specfun.polylog_series(nu, -1.0)
        rhs = (1 - 2 ** (1 - nu)) * specfun.zeta(nu)
        assert lhs == pytest.approx(rhs, rel=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            specfun.polylog_series(2.0, 1.0)
        with pytest.raises(DomainError):
            specfun.polylog_series(2.0, -1.5)
        with pytest.raises(DomainError):
            specfun.polylog_series(-0.5, -1.0)

    def test_zero_argument(self):
        assert specfun.polylog_series(1.7, 0.0) == 0


class TestFermiDiracPolylog:
    def test_empty_gas_limit(self):
        y = 1e-6
        val = specfun.fermi_dirac_polylog(2.0, y)
        assert val.real == pytest.approx(-y, abs=1e-11)

    def test_unit_argument_matches_eta(self):
        # -Li_nu(-1) = (1 - 2**(1-nu)) zeta(nu)
        val = specfun.fermi_dirac_polylog(0.5, 1.0)
        eta_half = (1 - 2**0.5) * oracles.ZETA_HALF
        assert val.real == pytest.approx(-eta_half, rel=1e-9)
        assert val.real == pytest.approx(-oracles.FREE_1D_DENSITY_FACTOR, rel=1e-9)

    def test_degenerate_asymptotics(self):
        # Li_{3/2}(-e**40) ~ -(40)**1.5 / Gamma(5/2)
        val = specfun.fermi_dirac_polylog(1.5, math.exp(40.0))
        asymptotic = -(40.0**1.5) / specfun.gamma(2.5).real
        assert val.real == pytest.approx(asymptotic, rel=2e-3)

    def test_continuation_agrees_with_series_inside_disk(self):
        rng = np.random.default_rng(5)
        for _ in range(25):
            nu = complex(rng.uniform(0.3, 3.0), rng.uniform(-2.0, 2.0))
            y = rng.uniform(0.05, 1.0)
            quad_val = specfun.fermi_dirac_polylog(nu, y)
            series_val = specfun.polylog_series(nu, -y)
            assert abs(quad_val - series_val) < 1e-9

    def test_domain(self):
        with pytest.raises(DomainError):
            specfun.fermi_dirac_polylog(-0.5, 1.0)
        with pytest.raises(DomainError):
            specfun.fermi_dirac_polylog(2.0, -1.0)


class TestBosePolylogIntegral:
    def test_dilog_half(self):
        assert specfun.bose_polylog_integral(2.0, 0.5).real == pytest.approx(
            oracles.LI2_HALF, rel=1e-10
        )

    def test_small_argument_leading_term(self):
        z = 1e-8
        assert specfun.bose_polylog_integral(1.3, z).real == pytest.approx(z, rel=1e-6)

    def test_near_one_matches_series(self):
        a = specfun.bose_polylog_integral(1.5, 0.99)
        b = specfun._polylog_series_direct(0.99, 1.5 + 0j, 1e-16).value
        assert abs(a - b) < 1e-9

    def test_domain(self):
        for bad in (1.0, 1.2, 0.0, -0.3):
            with pytest.raises(DomainError):
                specfun.bose_polylog_integral(2.0, bad)

    def test_series_integral_agreement(self):
        rng = np.random.default_rng(9)
        for _ in range(40):
            nu = complex(rng.uniform(0.6, 4.0), rng.uniform(-1.5, 1.5))
            z = rng.uniform(0.01, 0.95)
            a = specfun.polylog_series(nu, z)
            b = specfun.bose_polylog_integral(nu, z)
            assert abs(a - b) < 1e-9


class TestRogersDilog:
    def test_half(self):
        assert specfun.rogers_dilog(0.5) == pytest.approx(math.pi**2 / 12, abs=1e-13)

    def test_zero(self):
        assert specfun.rogers_dilog(0.0) == 0.0

    def test_golden_mean(self):
        r = (math.sqrt(5) - 1) / 2
        assert specfun.rogers_dilog(r) == pytest.approx(math.pi**2 / 10, abs=1e-12)

    def test_limit_at_one(self):
        assert specfun.rogers_dilog(1.0) == pytest.approx(math.pi**2 / 6, abs=1e-14)

    def test_domain(self):
        with pytest.raises(DomainError):
            specfun.rogers_dilog(1.2)

    def test_euler_functional_equation(self):
        rng = np.random.default_rng(13)
        for z in rng.uniform(1e-6, 1 - 1e-6, size=300):
            lhs = specfun.rogers_dilog(z) + specfun.rogers_dilog(1 - z)
            assert lhs == pytest.approx(math.pi**2 / 6, abs=1e-11)

    def test_landen_functional_equation(self):
        rng = np.random.default_rng(17)
        for z in rng.uniform(1e-6, 1 - 1e-6, size=300):
            lhs = specfun.rogers_dilog(z) + specfun.rogers_dilog(-z / (1 - z))
            assert lhs == pytest.approx(0.0, abs=1e-11)

    def test_matches_series_route(self):
        rng = np.random.default_rng(19)
        for z in rng.uniform(-0.99, 0.99, size=50):
            if z == 0:
                continue
            series_li2 = specfun.polylog_series(2.0, float(z)).real
            expected = series_li2 + 0.5 * math.log(abs(z)) * math.log1p(-z)
            assert specfun.rogers_dilog(float(z)) == pytest.approx(expected, abs=1e-12)


class TestXiFunction:
    def test_xi_two(self):
        assert specfun.xi_function(2.0).real == pytest.approx(math.pi / 6, rel=1e-13)

    def test_duality_pair(self):
        a = specfun.xi_function(0.3 + 5j)
        b = specfun.xi_function(0.7 - 5j)
        assert abs(a - b) < 1e-10

    def test_small_at_critical_zero(self):
        at_zero = abs(specfun.xi_function(0.5 + 14.134725141734694j))
        nearby = abs(specfun.xi_function(0.5 + 15.0j))
        assert at_zero < 1e-4 * nearby

    def test_poles(self):
        for bad in (0.0, 1.0):
            with pytest.raises(PoleError):
                specfun.xi_function(bad)


class TestEvalResults:
    def test_error_estimates_within_tolerance(self):
        r = specfun.dirichlet_eta_eval(0.5 + 3j, tol=1e-13)
        assert r.abs_error_estimate <= 1e-12
        assert r.terms_or_nodes_used > 0
        ref = complex(oracles.mp_eta(0.5 + 3j))
        assert abs(r.value - ref) <= 10 * r.abs_error_estimate + 1e-14

    def test_fermi_eval_reports_nodes(self):
        r = specfun.fermi_dirac_polylog_eval(1.5, 2.0)
        assert r.terms_or_nodes_used > 0
        assert r.abs_error_estimate < 1e-9
