"""Special functions of complex order on the real argument axis.

Everything downstream is built from the functions here: complex Gamma,
Riemann zeta on the whole plane (alternating eta series with
Cohen-Rodriguez Villegas-Zagier acceleration, reflection for Re nu <= 0),
polylogarithms Li_nu(z) for real z (power series, Bose integral, and the
Fermi-Dirac integral continuation to arguments below -1), the Rogers
dilogarithm, and the xi combination pi**(-nu/2) Gamma(nu/2) zeta(nu).

Branch convention: logarithms are principal everywhere, so for k > 0 the
power k**w means exp(w*log(k)).
"""
from __future__ import annotations

import cmath
import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy import integrate, special

from .errors import (
    ConvergenceError,
    DomainError,
    NearTrivialZeroWarning,
    PoleError,
)

_LN2 = math.log(2.0)
_SQRT8 = math.sqrt(8.0)
_LOG_CRVZ = math.log(3.0 + _SQRT8)
_LOG_SQRT_2PI = 0.5 * math.log(2.0 * math.pi)


@dataclass(frozen=True)
class ComplexOrder:
    """Complex order nu = sigma + i*t of a transcendental function."""

    sigma: float
    t: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.sigma) and math.isfinite(self.t)):
            raise DomainError("complex order must have finite components")

    def __complex__(self) -> complex:
        return complex(self.sigma, self.t)


@dataclass(frozen=True)
class EvalResult:
    """Value of a transcendental evaluation with an honest error estimate."""

    value: complex
    abs_error_estimate: float
    terms_or_nodes_used: int


def _order(nu) -> complex:
    """Coerce ComplexOrder | complex | float to a validated complex number."""
    z = complex(nu)
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise DomainError(f"non-finite order {nu!r}")
    return z


def sinpi(z) -> complex:
    """sin(pi*z) with argument reduction on the real part.

    Avoids the catastrophic cancellation of sin(pi*(n + r)) for large |n|.
    """
    z = complex(z)
    n = math.floor(z.real + 0.5)
    r = z.real - n
    s = complex(
        math.sin(math.pi * r) * math.cosh(math.pi * z.imag),
        math.cos(math.pi * r) * math.sinh(math.pi * z.imag),
    )
    return -s if n % 2 else s


# Lanczos coefficients, g = 7, 9 terms (relative error ~ 2e-13 on Re z > 1/2).
_LANCZOS_G = 7.0
_LANCZOS = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def _gamma(z: complex) -> complex:
    if z.real < 0.5:
        # reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return math.pi / (sinpi(z) * _gamma(1.0 - z))
    z = z - 1.0
    x = _LANCZOS[0]
    for i, c in enumerate(_LANCZOS[1:], start=1):
        x += c / (z + i)
    t = z + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (z + 0.5) * cmath.exp(-t) * x


def gamma(nu) -> complex:
    """Gamma function for complex order, >= 12 significant digits for |nu| <= 50."""
    z = _order(nu)
    if z.imag == 0.0 and z.real <= 0.0 and z.real == round(z.real):
        raise PoleError(f"Gamma pole at nu = {z.real:g}")
    return _gamma(z)


def _crvz_terms(tol: float, t: float) -> int:
    """Series length for the accelerated alternating sum.

    The acceleration error scales like (3+sqrt(8))**(-n) amplified by
    exp(pi*|Im nu|/2) off the real axis.
    """
    n = int(math.ceil((-math.log(tol) + 0.5 * math.pi * abs(t)) / _LOG_CRVZ)) + 12
    return min(n, 360)


def _alternating_sum(a: np.ndarray) -> complex:
    """sum_{k>=0} (-1)**k a[k] by Chebyshev-weighted acceleration."""
    n = len(a)
    d = (3.0 + _SQRT8) ** n
    d = 0.5 * (d + 1.0 / d)
    b = -1.0
    c = -d
    s = 0.0 + 0.0j
    for k in range(n):
        c = b - c
        s += c * a[k]
        b *= (k + n) * (k - n) / ((k + 0.5) * (k + 1.0))
    return s / d


def dirichlet_eta_eval(nu, tol: float = 1e-15) -> EvalResult:
    """eta(nu) = sum (-1)**(n-1) n**(-nu), accelerated; valid on the whole plane
    in the sense of analytic continuation, accurate for moderate |Im nu|."""
    z = _order(nu)
    n = _crvz_terms(tol, z.imag)
    k = np.arange(1, n + 1, dtype=float)
    a = np.exp(-z * np.log(k))
    s = _alternating_sum(a)
    # acceleration remainder plus floating-point roundoff of the weighted sum
    rem = math.exp(0.5 * math.pi * abs(z.imag) - n * _LOG_CRVZ)
    rnd = 4.0 * n * np.finfo(float).eps * float(np.max(np.abs(a)))
    return EvalResult(s, rem + rnd, n)


def dirichlet_eta(nu) -> complex:
    return dirichlet_eta_eval(nu).value


def _eta_prefactor(z: complex) -> complex:
    """1 - 2**(1-nu), the factor linking eta and zeta."""
    return 1.0 - cmath.exp((1.0 - z) * _LN2)


def _zeta_eta_route(z: complex) -> complex:
    return dirichlet_eta(z) / _eta_prefactor(z)


def _zeta_reflection(z: complex) -> complex:
    # zeta(nu) = 2**nu pi**(nu-1) sin(pi nu/2) Gamma(1-nu) zeta(1-nu)
    chi = 2.0**z * math.pi ** (z - 1.0) * sinpi(0.5 * z) * _gamma(1.0 - z)
    return chi * _zeta_eta_route(1.0 - z)


def zeta(nu) -> complex:
    """Riemann zeta anywhere off the pole at nu = 1.

    Re nu > 0 uses the accelerated eta series; Re nu <= 0 the functional
    equation. Accuracy degrades in a small neighborhood of the points
    nu = 1 + 2*pi*i*k/log(2), k != 0, where the eta prefactor vanishes.
    """
    z = _order(nu)
    if z == 1.0:
        raise PoleError("zeta pole at nu = 1")
    if abs(z) < 1e-8:
        # expansion around the origin; the raw reflection is 0 * inf here
        return -0.5 - _LOG_SQRT_2PI * z
    if z.real > 0.0:
        return _zeta_eta_route(z)
    if z.imag == 0.0:
        m = round(-z.real / 2.0)
        if m >= 1 and abs(z.real + 2.0 * m) < 1e-6:
            warnings.warn(
                f"zeta evaluated within 1e-6 of the trivial zero at {-2 * m}",
                NearTrivialZeroWarning,
                stacklevel=2,
            )
    return _zeta_reflection(z)


def xi_function(nu) -> complex:
    """xi(nu) = pi**(-nu/2) Gamma(nu/2) zeta(nu); satisfies xi(nu) = xi(1-nu)."""
    z = _order(nu)
    if z == 0.0 or z == 1.0:
        raise PoleError(f"xi pole at nu = {z}")
    return math.pi ** (-z / 2.0) * gamma(z / 2.0) * zeta(z)


# ---------------------------------------------------------------------------
# polylogarithms
# ---------------------------------------------------------------------------


def _polylog_series_direct(z_arg: float, nu: complex, tol: float) -> EvalResult:
    """Direct power series for |z| < 1 (geometric convergence)."""
    max_terms = 2_000_000
    a = abs(z_arg)
    s = 0.0 + 0.0j
    zn = 1.0
    for n in range(1, max_terms + 1):
        zn *= z_arg
        term = zn * cmath.exp(-nu * math.log(n))
        s += term
        if abs(term) < tol * (1.0 + abs(s)) and n > 4:
            tail = abs(term) * a / (1.0 - a)
            return EvalResult(s, tail, n)
    raise ConvergenceError(f"polylog series stalled at z = {z_arg}")


def _polylog_series_neg(y: float, nu: complex, tol: float) -> EvalResult:
    """Li_nu(-y) for 0 < y <= 1: alternating series, accelerated near y = 1.

    Below y = 1/2 the plain sum converges geometrically and the Chebyshev
    acceleration (whose error floor is set by the term count, not by y)
    would be the less accurate choice.
    """
    if y < 0.5:
        return _polylog_series_direct(-y, nu, tol)
    n = _crvz_terms(tol, nu.imag)
    k = np.arange(1, n + 1, dtype=float)
    a = np.exp(k * math.log(y) - nu * np.log(k))
    s = -_alternating_sum(a)
    rem = math.exp(0.5 * math.pi * abs(nu.imag) - n * _LOG_CRVZ)
    rnd = 4.0 * n * np.finfo(float).eps
    return EvalResult(s, rem + rnd, n)


def polylog_series_eval(nu, z: float, tol: float = 1e-14) -> EvalResult:
    z_arg = float(z)
    w = _order(nu)
    if z_arg >= 1.0 or z_arg < -1.0:
        raise DomainError(
            f"polylog series argument must lie in [-1, 1), got {z_arg}"
            " (use fermi_dirac_polylog for arguments below -1)"
        )
    if z_arg == -1.0 and w.real <= 0.0:
        raise DomainError("z = -1 requires Re nu > 0")
    if z_arg == 0.0:
        return EvalResult(0.0 + 0.0j, 0.0, 0)
    if w == 1.0:
        return EvalResult(complex(-math.log1p(-z_arg)), 1e-16, 1)
    if z_arg < 0.0:
        return _polylog_series_neg(-z_arg, w, tol)
    if 1.0 - z_arg < 1e-3 and w.real > 0.0:
        # series convergence degrades as z -> 1; the Bose integral does not
        return bose_polylog_integral_eval(w, z_arg)
    return _polylog_series_direct(z_arg, w, tol)


def polylog_series(nu, z: float) -> complex:
    """Li_nu(z) = sum_n z**n / n**nu for real z in [-1, 1)."""
    return polylog_series_eval(nu, z).value


def _quad_complex(f, a, b, *, t: float = 0.0, points=None, limit=300):
    """Integrate f(s)*exp(i*t*s) for real-valued f over [a, b].

    For t != 0 the oscillation is handled by weighted (Fourier) quadrature.
    Returns (complex value, abs error estimate, node count). The integrator's
    own convergence complaints are silenced; its abserr output is what we
    propagate, so a poor panel shows up in the error estimate instead.
    """
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", category=integrate.IntegrationWarning)
        if t == 0.0:
            v, e = integrate.quad(f, a, b, points=points, limit=limit,
                                  epsabs=1e-14, epsrel=1e-12)
            return complex(v), e, limit
        vc, ec = integrate.quad(f, a, b, weight="cos", wvar=t, limit=limit,
                                epsabs=1e-13, epsrel=1e-12)
        vs, es = integrate.quad(f, a, b, weight="sin", wvar=t, limit=limit,
                                epsabs=1e-13, epsrel=1e-12)
        return complex(vc, vs), ec + es, 2 * limit


def _fermi_integral_exp(nu: complex, w: float) -> EvalResult:
    """I = integral_0^inf x**(nu-1) / (exp(x - w) + 1) dx via x = exp(s).

    Written in terms of w = log(y) so that huge arguments y = e**w never
    overflow: the integrand is exp(sigma*s) * expit(w - exp(s)).
    """
    sig, t = nu.real, nu.imag
    if t < 0.0:  # conjugation symmetry for real arguments
        r = _fermi_integral_exp(nu.conjugate(), w)
        return EvalResult(r.value.conjugate(), r.abs_error_estimate,
                          r.terms_or_nodes_used)
    big = math.log(1e18)
    s_max = math.log(max(w, 0.0) + big)
    for _ in range(4):
        s_max = math.log(max(max(w, 0.0) + sig * max(s_max, 1.0) + big, 10.0))
    s_min = math.log(1e-18 * sig) / sig

    def h(s):
        return math.exp(sig * s) * special.expit(w - math.exp(s))

    points = None
    if t == 0.0 and w > 1.0:
        points = [math.log(w)]
    val, err, nodes = _quad_complex(h, s_min, s_max, t=t, points=points)
    return EvalResult(val, err, nodes)


def fermi_dirac_polylog_eval(nu, y: float, tol: float = 1e-9) -> EvalResult:
    w = _order(nu)
    if w.real <= 0.0:
        raise DomainError("Fermi-Dirac integral requires Re nu > 0")
    if y <= 0.0:
        raise DomainError("argument y must be positive")
    r = _fd_from_log(w, math.log(y))
    if r.abs_error_estimate > max(tol * (1.0 + abs(r.value)), 1e2 * tol):
        raise ConvergenceError(
            f"Fermi-Dirac quadrature error {r.abs_error_estimate:.2e} exceeds "
            f"tolerance {tol:.2e}"
        )
    return r


def _fd_from_log(w: complex, log_y: float) -> EvalResult:
    """Li_nu(-e**log_y) by quadrature; the estimate is as reported by the
    integrator (very conservative for the oscillatory weights), divided by
    |Gamma(nu)|, which is the honest amplification off the real axis."""
    r = _fermi_integral_exp(w, log_y)
    g = _gamma(w)
    val = -r.value / g
    err = r.abs_error_estimate / abs(g)
    return EvalResult(val, err, r.terms_or_nodes_used)


def fermi_dirac_polylog(nu, y: float) -> complex:
    """Li_nu(-y) for any y > 0 through the Fermi-Dirac integral.

    Analytic continuation of the power series past y = 1:
    Li_nu(-y) = -(1/Gamma(nu)) * integral_0^inf y x**(nu-1)/(e**x + y) dx,
    valid for Re nu > 0 on the whole positive y axis.
    """
    return fermi_dirac_polylog_eval(nu, y).value


def polylog_neg_exp_eval(nu, log_y: float, tol: float = 1e-12) -> EvalResult:
    """Li_nu(-e**log_y) with its error estimate, series or integral.

    log_y <= 0 uses the alternating series (fast, machine precision);
    log_y > 0 the Fermi-Dirac continuation. Saddle solvers call this with
    log_y = -delta so that deeply negative delta never overflows.
    """
    w = _order(nu)
    if log_y <= 0.0:
        return _polylog_series_neg(math.exp(log_y), w, tol)
    if w.real <= 0.0:
        raise DomainError("continuation below -1 requires Re nu > 0")
    return _fd_from_log(w, log_y)


def polylog_neg_exp(nu, log_y: float, tol: float = 1e-12) -> complex:
    """Value-only variant of polylog_neg_exp_eval."""
    return polylog_neg_exp_eval(nu, log_y, tol).value


def bose_polylog_integral_eval(nu, z: float, tol: float = 1e-9) -> EvalResult:
    w = _order(nu)
    if w.real <= 0.0:
        raise DomainError("Bose integral requires Re nu > 0")
    if not 0.0 < z < 1.0:
        raise DomainError(
            f"Bose integral argument must lie in (0, 1), got {z}"
            " (it diverges at z = 1 unless Re nu > 1)"
        )
    sig, t = w.real, w.imag
    if t < 0.0:
        r = bose_polylog_integral_eval(w.conjugate(), z, tol)
        return EvalResult(r.value.conjugate(), r.abs_error_estimate,
                          r.terms_or_nodes_used)
    big = math.log(1e18)
    s_max = math.log(max(sig * 3.0 + big, 10.0))
    s_min = math.log(1e-18 * sig * (1.0 - z) / z) / sig

    def h(s):
        return math.exp(sig * s) * z / (math.exp(math.exp(s)) - z)

    val, err, nodes = _quad_complex(h, s_min, s_max, t=t)
    g = _gamma(w)
    out = val / g
    err /= abs(g)
    if err > max(tol * (1.0 + abs(out)), 1e2 * tol):
        raise ConvergenceError(
            f"Bose quadrature error {err:.2e} exceeds tolerance {tol:.2e}"
        )
    return EvalResult(out, err, nodes)


def bose_polylog_integral(nu, z: float) -> complex:
    """Li_nu(z) for 0 < z < 1 via Gamma(nu) Li_nu(z) = int_0^inf z x**(nu-1)/(e**x - z) dx."""
    return bose_polylog_integral_eval(nu, z).value


def polylog_auto(nu, z: float, tol: float = 1e-12) -> complex:
    """Li_nu(z) for real z < 1, picking the right representation.

    z in [-1, 1) goes through the power series, z < -1 through the
    Fermi-Dirac continuation.
    """
    if z < -1.0:
        return polylog_neg_exp(nu, math.log(-z), tol)
    return polylog_series_eval(nu, z, tol).value


def rogers_dilog(z: float) -> float:
    """Rogers dilogarithm Lr2(z) = Li2(z) + (1/2) log|z| log(1-z) for z <= 1.

    Continuous at z = 0 with Lr2(0) = 0; z = 1 is accepted as the limit
    value pi**2/6 (the free bosonic case).
    """
    z = float(z)
    if z > 1.0:
        raise DomainError("Rogers dilogarithm has a branch cut for z > 1")
    if z == 1.0:
        return math.pi**2 / 6.0
    if z == 0.0:
        return 0.0
    li2 = float(special.spence(1.0 - z))
    return li2 + 0.5 * math.log(abs(z)) * math.log1p(-z)
