import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gaussmoments.errors import ConvergenceError, DomainError, PoleError
from gaussmoments.specfun import (
    SeriesControl,
    cospi,
    double_factorial,
    gamma,
    kummer_phi,
    parabolic_cylinder_d,
    principal_power,
    recip_gamma,
    rising_factorial,
    sinpi,
    tricomi_psi,
)

mpmath.mp.dps = 40


def rel(a, b):
    return abs(a - b) / abs(b)


# extended-precision oracles, written straight from the series definitions


def mp_phi(a, b, z):
    a, b, z = mpmath.mpf(a), mpmath.mpf(b), mpmath.mpf(z)
    term = total = mpmath.mpf(1)
    n = 0
    while True:
        term *= (a + n) / (b + n) * z / (n + 1)
        total += term
        n += 1
        if n > abs(z) + 5 and abs(term) < mpmath.mpf(10) ** -45 * abs(total):
            return total


def mp_psi(a, b, z):
    a, b = mpmath.mpf(a), mpmath.mpf(b)
    return (mpmath.gamma(1 - b) * mpmath.rgamma(a - b + 1) * mp_phi(a, b, z)
            + mpmath.gamma(b - 1) * mpmath.rgamma(a) * mpmath.power(mpmath.mpc(z), 1 - b)
            * mp_phi(a - b + 1, 2 - b, z))


def mp_pcf(nu, z):
    nu, z = mpmath.mpf(nu), mpmath.mpc(z)
    w = mpmath.re(z * z / 2)
    return 2 ** (nu / 2) * mpmath.exp(-z * z / 4) * (
        mpmath.sqrt(mpmath.pi) * mpmath.rgamma((1 - nu) / 2) * mp_phi(-nu / 2, 0.5, w)
        - mpmath.sqrt(2 * mpmath.pi) * z * mpmath.rgamma(-nu / 2) * mp_phi((1 - nu) / 2, 1.5, w))


# ---------------------------------------------------------------------------
# Gamma


def test_gamma_examples():
    assert gamma(5) == 24.0
    assert rel(gamma(0.5), 1.7724538509055160) < 1e-15
    # frozen from mpmath.quad of t**(-1/4) e**(-t) over (0, inf)
    assert rel(gamma(0.75), 1.2254167024651776451) < 1e-13


def test_gamma_quadrature_oracle_for_frozen_value():
    integral = mpmath.quad(lambda t: t ** -0.25 * mpmath.exp(-t), [0, 1, mpmath.inf])
    assert abs(integral - mpmath.mpf("1.2254167024651776451")) < 1e-18


def test_gamma_accuracy_sweep():
    rng = np.random.default_rng(7)
    xs = np.concatenate([rng.uniform(-170, 170, 3000), rng.uniform(-3, 3, 1000)])
    worst = max(float(rel(gamma(x), mpmath.gamma(mpmath.mpf(float(x))))) for x in xs)
    assert worst <= 1e-13


@pytest.mark.parametrize("x", [0, -1, -3, -170])
def test_gamma_poles(x):
    with pytest.raises(PoleError):
        gamma(x)


def test_gamma_overflow():
    with pytest.raises(OverflowError):
        gamma(172.0)
    assert math.isfinite(gamma(171.5))


@pytest.mark.parametrize("x, expected", [(0, 0.0), (-3, 0.0), (3, 0.5)])
def test_recip_gamma_examples(x, expected):
    assert recip_gamma(x) == expected


def test_recip_gamma_is_total():
    assert recip_gamma(-200.5) == -math.inf
    assert recip_gamma(200.0) == 0.0 or recip_gamma(200.0) < 1e-300
    with pytest.raises(DomainError):
        recip_gamma(math.nan)


@settings(max_examples=300, deadline=None)
@given(st.floats(-160, 160).filter(lambda x: abs(x - round(x)) > 1e-6 or x > 0.5))
def test_recip_gamma_times_gamma_is_one(x):
    assert abs(recip_gamma(x) * gamma(x) - 1.0) <= 1e-12


@pytest.mark.parametrize("nu", np.linspace(-0.99, 0.99, 41))
def test_reflection(nu):
    lhs = gamma((1 + nu) / 2) * gamma((1 - nu) / 2)
    assert rel(lhs, math.pi / math.cos(math.pi * nu / 2)) <= 1e-12


# ---------------------------------------------------------------------------
# factorials


def test_rising_factorial_examples():
    assert rising_factorial(3, 4) == 360.0
    assert rising_factorial(-7.25, 0) == 1.0
    oracle = mpmath.gamma(2.5) / mpmath.gamma(0.5)
    assert abs(rising_factorial(0.5, 2) - oracle) < 1e-15


@given(st.floats(-50, 50), st.integers(0, 60))
def test_rising_factorial_recurrence(z, n):
    assert rising_factorial(z, n + 1) == rising_factorial(z, n) * (z + n)


def test_rising_factorial_errors():
    with pytest.raises(DomainError):
        rising_factorial(1.0, -1)
    with pytest.raises(OverflowError):
        rising_factorial(100.0, 400)


def test_double_factorial_examples():
    assert double_factorial(7) == 105.0
    assert double_factorial(1) == 1.0
    # the Gamma continuation at z = 0 is sqrt(2/pi), not the combinatorial 1
    assert rel(double_factorial(0), float(mpmath.sqrt(2 / mpmath.pi))) < 1e-15


@pytest.mark.parametrize("z", [-0.5, 0.3, 2.0, 4.5, 9.9])
def test_double_factorial_gamma_form(z):
    oracle = mpmath.sqrt(mpmath.mpf(2) ** (z + 1) / mpmath.pi) * mpmath.gamma(z / 2 + 1)
    assert rel(double_factorial(z), oracle) < 1e-13


@pytest.mark.parametrize("z", [1, 3, 5, 7, 9, 11, 21])
def test_double_factorial_product_matches_gamma_form(z):
    oracle = mpmath.sqrt(mpmath.mpf(2) ** (z + 1) / mpmath.pi) * mpmath.gamma(mpmath.mpf(z) / 2 + 1)
    assert rel(double_factorial(z), oracle) < 1e-15


def test_double_factorial_pole():
    with pytest.raises(PoleError):
        double_factorial(-4)


# ---------------------------------------------------------------------------
# trig and principal powers


def test_sinpi_cospi_exact_zeros():
    for n in range(-10, 11):
        assert sinpi(n) == 0.0
        assert cospi(n + 0.5) == 0.0


@given(st.floats(-1e6, 1e6))
def test_sinpi_cospi_unit_circle(x):
    assert abs(sinpi(x) ** 2 + cospi(x) ** 2 - 1) < 1e-15


def test_principal_power_axes():
    assert principal_power(1j, 2) == -1
    assert principal_power(-1, 0.5) == 1j
    assert principal_power(-4, 0.5) == 2j
    assert principal_power(complex(-1, -0.0), 0.5) == 1j
    assert principal_power(-1j, 1) == -1j


@given(st.complex_numbers(max_magnitude=1e3, min_magnitude=1e-3, allow_nan=False),
       st.floats(-4, 4))
def test_principal_power_matches_exp_log(z, w):
    ref = complex(mpmath.exp(w * mpmath.log(mpmath.mpc(z))))
    if z.imag == 0 and z.real < 0:
        ref = complex(mpmath.exp(w * (mpmath.log(-z.real) + 1j * mpmath.pi)))
    assert abs(principal_power(z, w) - ref) <= 1e-13 * max(1.0, abs(ref))


@given(st.complex_numbers(max_magnitude=1e6, allow_nan=False, allow_infinity=False))
def test_conjugation_is_involution(z):
    assert z.conjugate().conjugate() == z


@pytest.mark.parametrize("nu", np.linspace(0, 6, 61))
def test_cosine_identity(nu):
    ratio = (1 + principal_power(-1.0, nu)) / (2 * principal_power(1j, nu))
    assert abs(ratio.real - math.cos(math.pi * nu / 2)) <= 1e-13
    assert abs(ratio.imag) <= 1e-13


# ---------------------------------------------------------------------------
# Kummer Phi


def test_kummer_phi_examples():
    assert kummer_phi(0.3, 1.7, 0.0) == 1.0
    assert rel(kummer_phi(1, 1, 2), 7.38905609893065) < 1e-14
    # frozen from 40-digit term-by-term summation
    assert rel(kummer_phi(-0.5, 0.5, -2), 2.5279113098818290978) < 1e-14


def test_kummer_phi_frozen_value_oracle():
    assert abs(mp_phi(-0.5, 0.5, -2) - mpmath.mpf("2.5279113098818290978")) < 1e-18


def test_kummer_phi_against_direct_summation():
    rng = np.random.default_rng(3)
    worst = 0.0
    for _ in range(300):
        a, b, z = rng.uniform(-3, 3), rng.uniform(0.05, 5), rng.uniform(-20, 20)
        worst = max(worst, float(rel(kummer_phi(a, b, z), mp_phi(a, b, z))))
    # alternating direct series near a zero of Phi set the floor here
    assert worst < 1e-11


@pytest.mark.parametrize("nu", [-0.5, 0.5, 2.7, 5.3, 8.0])
@pytest.mark.parametrize("x", [0.5, 30.0, 300.0, 699.0])
def test_kummer_phi_moment_arguments_large(nu, x):
    ctl = SeriesControl.for_argument(x)
    assert rel(kummer_phi(-nu / 2, 0.5, -x, ctl), mpmath.hyp1f1(-nu / 2, 0.5, -x)) < 1e-13


def dyadic(lo, hi):
    # multiples of 2**-30: gamma_param - alpha is then exact in the test, so a
    # rounded parameter cannot masquerade as a function error near alpha = 0
    return st.integers(int(lo * 2**30), int(hi * 2**30)).map(lambda k: k / 2**30)


@settings(max_examples=500, deadline=None)
@given(dyadic(-3, 3), dyadic(0.01, 5).filter(lambda g: not g.is_integer()),
       st.floats(-20, 20))
def test_kummer_transformation(alpha, gamma_param, z):
    lhs = kummer_phi(alpha, gamma_param, z)
    rhs = math.exp(z) * kummer_phi(gamma_param - alpha, gamma_param, -z)
    assert abs(lhs - rhs) <= 1e-12 * abs(rhs)


def test_kummer_phi_errors():
    with pytest.raises(PoleError):
        kummer_phi(1.0, -2.0, 1.0)
    with pytest.raises(DomainError):
        kummer_phi(1.0, 0.5, 701.0)
    with pytest.raises(ConvergenceError):
        kummer_phi(0.3, 0.5, 600.0)  # default budget of 500 terms
    with pytest.raises(ConvergenceError):
        kummer_phi(0.3, 0.5, 5.0, SeriesControl(max_terms=3))


def test_series_control_validation():
    with pytest.raises(DomainError):
        SeriesControl(rel_tolerance=0.0)
    with pytest.raises(DomainError):
        SeriesControl(max_terms=0)
    assert SeriesControl().max_terms == 500
    assert SeriesControl.for_argument(700).max_terms > 700


# ---------------------------------------------------------------------------
# Tricomi Psi


def test_tricomi_psi_examples():
    v = tricomi_psi(-0.5, 0.5, 1.0)
    assert abs(v - complex(mp_psi(-0.5, 0.5, 1.0))) < 1e-14
    assert abs(v.imag) <= 1e-14 * abs(v)
    w = tricomi_psi(-1.0, 0.5, -2.0)
    assert abs(w - complex(mp_psi(-1.0, 0.5, -2.0))) < 1e-14


@pytest.mark.parametrize("a, b, z", [(-0.85, 0.5, -0.3), (0.4, 0.5, -3.0),
                                      (-1.25, 0.5, -12.0), (1.3, 2.5, 4.0), (-0.2, 1.7, -1.0)])
def test_tricomi_psi_against_composed_oracle(a, b, z):
    ref = complex(mp_psi(a, b, z))
    assert abs(tricomi_psi(a, b, z) - ref) <= 1e-13 * abs(ref)


@given(st.floats(-3, 3), st.floats(0.1, 0.9), st.floats(0.1, 20))
def test_tricomi_psi_real_for_positive_argument(a, b, z):
    v = tricomi_psi(a, b, z)
    assert abs(v.imag) <= 1e-14 * max(abs(v), 1e-300)


def test_tricomi_psi_errors():
    with pytest.raises(DomainError):
        tricomi_psi(0.5, 0.5, 0.0)
    with pytest.raises(DomainError):
        tricomi_psi(0.5, 2.0, 1.0)


# ---------------------------------------------------------------------------
# parabolic cylinder


def test_pcf_examples():
    for z in (-2.0, 0.3, 1.7):
        assert abs(parabolic_cylinder_d(0.0, z) - math.exp(-z * z / 4)) < 1e-15
    # frozen from the composed 40-digit Gamma and Phi oracles
    ref = complex(-0.9350540969983749978, -0.71716816792589419792)
    assert abs(parabolic_cylinder_d(1.5, -0.7j) - ref) < 1e-14
    assert abs(complex(mp_pcf(1.5, -0.7j)) - ref) < 1e-17


@pytest.mark.parametrize("nu", np.linspace(-0.95, 8, 40))
def test_pcf_at_zero(nu):
    expected = 2 ** (nu / 2) * math.sqrt(math.pi) * recip_gamma((1 - nu) / 2)
    assert abs(parabolic_cylinder_d(nu, 0) - expected) <= 1e-13 * max(1.0, abs(expected))


@pytest.mark.parametrize("nu", [-0.7, 0.5, 1.5, 3.0, 4.2])
@pytest.mark.parametrize("z", [-3.0, -0.4, 1.2, 2.5, 2.0j, -5.5j])
def test_pcf_against_mpmath(nu, z):
    ref = complex(mpmath.pcfd(nu, z))
    assert abs(parabolic_cylinder_d(nu, z) - ref) <= 1e-12 * abs(ref)


def test_pcf_errors():
    with pytest.raises(DomainError):
        parabolic_cylinder_d(1.0, 1 + 1j)
    with pytest.raises(DomainError):
        parabolic_cylinder_d(1.0, 40.0)
