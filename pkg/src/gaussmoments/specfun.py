"""Double-precision special functions: Gamma, confluent hypergeometric
functions and parabolic cylinder functions.

Complex values are plain Python ``complex``.  Every power of a complex or
negative base goes through :func:`principal_power`, so a single branch
convention (argument in ``(-pi, pi]``) holds throughout the package.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from .errors import ConvergenceError, DomainError, PoleError

EPS = 2.220446049250313e-16
SQRT_PI = 1.7724538509055160273
SQRT_2PI = 2.5066282746310005024
LOG_PI = 1.1447298858494001741
HALF_LOG_2PI = 0.91893853320467274178

#: Largest argument for which Gamma is finite in double precision.
GAMMA_MAX_ARG = 171.62437695630272
#: Largest |z| accepted by the confluent hypergeometric series.
PHI_ARG_CAP = 700.0

# Lanczos approximation, g = 7, ten coefficients (interpolating at z = 0..9).
_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.9999999999999966,
    676.5203681218834,
    -1259.1392167222684,
    771.3234287750658,
    -176.61502914144285,
    12.507343194602255,
    -0.1385709069161041,
    9.74893255800344e-06,
    3.0431806209689345e-07,
    -4.084111571708373e-08,
)


@dataclass(frozen=True)
class SeriesControl:
    """Truncation policy for the hypergeometric series."""

    rel_tolerance: float = 1e-16
    max_terms: int = 500

    def __post_init__(self):
        if not (self.rel_tolerance > 0 and math.isfinite(self.rel_tolerance)):
            raise DomainError("rel_tolerance must be positive and finite")
        if int(self.max_terms) != self.max_terms or self.max_terms < 1:
            raise DomainError("max_terms must be an integer >= 1")

    @classmethod
    def for_argument(cls, z: float, rel_tolerance: float = 1e-16) -> "SeriesControl":
        """Control whose term budget covers a series in ``z`` up to the cap.

        The terms of the series peak near ``n = |z|`` and then decay like a
        Gaussian of width ``sqrt(|z|)``, so the default budget of 500 terms
        is too small once ``|z|`` exceeds roughly 300.
        """
        z = abs(z)
        needed = int(z + 40.0 * math.sqrt(z)) + 60
        return cls(rel_tolerance=rel_tolerance, max_terms=max(500, needed))


def _check_finite(name, x):
    if not math.isfinite(x):
        raise DomainError(f"{name} must be finite, got {x!r}")


def _is_nonpositive_integer(x: float) -> bool:
    return x <= 0 and float(x).is_integer()


# ---------------------------------------------------------------------------
# trigonometric helpers with exact zeros


def sinpi(x: float) -> float:
    """sin(pi*x), exactly zero at integers."""
    n = round(2.0 * x)
    f = x - 0.5 * n
    q = n % 4
    if q == 0:
        r = math.sin(math.pi * f)
    elif q == 1:
        r = math.cos(math.pi * f)
    elif q == 2:
        r = -math.sin(math.pi * f)
    else:
        r = -math.cos(math.pi * f)
    return r + 0.0


def cospi(x: float) -> float:
    """cos(pi*x), exactly zero at half-integers."""
    n = round(2.0 * x)
    f = x - 0.5 * n
    q = n % 4
    if q == 0:
        r = math.cos(math.pi * f)
    elif q == 1:
        r = -math.sin(math.pi * f)
    elif q == 2:
        r = -math.cos(math.pi * f)
    else:
        r = math.sin(math.pi * f)
    return r + 0.0


def principal_power(z: complex, w: float) -> complex:
    """``z**w`` on the principal branch, ``exp(w * Log z)``.

    Bases on the real or imaginary axis use exact quarter-turn phases, so
    ``1j**2`` is exactly ``-1`` and ``(-1)**0.5`` is exactly ``1j``.  The
    negative real axis (including a ``-0.0`` imaginary part) maps to the
    argument ``+pi``.
    """
    z = complex(z)
    if z == 0:
        if w > 0:
            return 0j
        if w == 0:
            return 1 + 0j
        raise DomainError("0 raised to a nonpositive power")
    if z.imag == 0:
        turns = 0.0 if z.real > 0 else 1.0
    elif z.real == 0:
        turns = 0.5 if z.imag > 0 else -0.5
    else:
        return cmath.exp(w * cmath.log(z))
    mag = abs(z) ** w
    if turns == 0.0:
        return complex(mag, 0.0)
    phase = turns * w
    return complex(mag * cospi(phase), mag * sinpi(phase))


# ---------------------------------------------------------------------------
# Gamma


def _lanczos_sum(xm1: float) -> float:
    acc = _LANCZOS_COEF[0]
    for i in range(1, len(_LANCZOS_COEF)):
        acc += _LANCZOS_COEF[i] / (xm1 + i)
    return acc


def _gamma_pos(x: float) -> float:
    # x >= 0.5 and x <= GAMMA_MAX_ARG
    if x.is_integer():
        return float(math.factorial(int(x) - 1))
    xm1 = x - 1.0
    t = xm1 + _LANCZOS_G + 0.5
    half = t ** (0.5 * (xm1 + 0.5))
    return SQRT_2PI * _lanczos_sum(xm1) * (half * math.exp(-t)) * half


def _log_gamma_pos(x: float) -> float:
    xm1 = x - 1.0
    t = xm1 + _LANCZOS_G + 0.5
    return HALF_LOG_2PI + (xm1 + 0.5) * math.log(t) - t + math.log(_lanczos_sum(xm1))


def _gamma_one_minus(x: float) -> float:
    # Gamma(1 - x) for x < 0.5; 1 - x is inexact whenever it changes binade,
    # so x <= -0.5 goes through Gamma(1 - x) = -x Gamma(-x) instead.
    if x <= -0.5:
        return -x * _gamma_pos(-x)
    return _gamma_pos(1.0 - x)


def gamma(x: float) -> float:
    """Gamma function of a real argument.

    Uses the Lanczos approximation for ``x >= 0.5`` and the reflection
    formula below that.  Raises :class:`PoleError` at nonpositive integers
    and :class:`OverflowError` when the result exceeds double range.
    """
    x = float(x)
    _check_finite("x", x)
    if _is_nonpositive_integer(x):
        raise PoleError(f"Gamma has a pole at {x!r}")
    if x >= 0.5:
        if x > GAMMA_MAX_ARG:
            raise OverflowError(f"Gamma({x!r}) exceeds double range")
        return _gamma_pos(x)
    s = sinpi(x)
    if x <= -GAMMA_MAX_ARG:
        return math.copysign(math.exp(LOG_PI - math.log(abs(s)) - _log_gamma_pos(1.0 - x)), s)
    with_reflection = math.pi / (s * _gamma_one_minus(x))
    if not math.isfinite(with_reflection):
        raise OverflowError(f"Gamma({x!r}) exceeds double range")
    return with_reflection


def recip_gamma(x: float) -> float:
    """1/Gamma(x), an entire function: exactly 0.0 at nonpositive integers.

    For very negative non-integer ``x`` the true value exceeds double range
    and ``+-inf`` is returned.
    """
    x = float(x)
    _check_finite("x", x)
    if _is_nonpositive_integer(x):
        return 0.0
    if x >= 0.5:
        if x > GAMMA_MAX_ARG:
            return math.exp(-_log_gamma_pos(x))
        return 1.0 / _gamma_pos(x)
    s = sinpi(x)
    if x < -169.0:
        log_mag = math.log(abs(s)) + _log_gamma_pos(1.0 - x) - LOG_PI
        mag = math.exp(log_mag) if log_mag < 709.0 else math.inf
        return math.copysign(mag, s)
    return s * _gamma_one_minus(x) / math.pi


def rising_factorial(z: float, n: int) -> float:
    """Pochhammer symbol z(z+1)...(z+n-1); 1.0 for n = 0."""
    if int(n) != n or n < 0:
        raise DomainError("n must be a nonnegative integer")
    result = 1.0
    for k in range(int(n)):
        result *= z + k
    if not math.isfinite(result):
        raise OverflowError(f"rising factorial ({z!r}, {n}) exceeds double range")
    return result


def double_factorial(z: float) -> float:
    """Double factorial continued to real ``z`` through the Gamma function.

    ``sqrt(2**(z+1)/pi) * Gamma(z/2 + 1)``.  Odd integers ``z >= -1`` use the
    exact product ``z (z-2) ... 3 1``, which the Gamma form equals there.
    At even integers the Gamma form differs from the combinatorial even
    double factorial (``0 -> sqrt(2/pi)``, not 1); the Gamma form is returned.
    """
    z = float(z)
    _check_finite("z", z)
    if z.is_integer() and z >= -1 and int(z) % 2 == 1:
        result = 1.0
        for k in range(int(z), 1, -2):
            result *= k
        if not math.isfinite(result):
            raise OverflowError(f"{z!r}!! exceeds double range")
        return result
    arg = 0.5 * z + 1.0
    if _is_nonpositive_integer(arg):
        raise PoleError(f"double factorial undefined at {z!r}")
    return 2.0 ** (0.5 * (z + 1.0)) / SQRT_PI * gamma(arg)


# ---------------------------------------------------------------------------
# Confluent hypergeometric functions


def _sum_series(a, b, z, start, ctl):
    """Sum start * sum_n (a)_n/(b)_n z^n/n!.  Returns (value, error bound)."""
    term = start
    total = start
    abs_total = abs(start)
    for n in range(ctl.max_terms):
        term *= (a + n) * z / ((b + n) * (n + 1))
        total += term
        abs_total += abs(term)
        m = n + 1
        roundoff = (4 * m + 1) * EPS * abs_total
        if term == 0.0:
            return total, roundoff
        if a + m > 0 and b + m > 0:
            # every later term ratio is bounded by this
            bound = abs(z) * max(1.0, (a + m) / (b + m)) / (m + 1)
            if bound < 1.0:
                tail = abs(term) * bound / (1.0 - bound)
                if tail <= ctl.rel_tolerance * abs(total):
                    if not math.isfinite(total):
                        raise OverflowError("hypergeometric series overflowed")
                    return total, tail + roundoff
    raise ConvergenceError(
        f"1F1({a!r}; {b!r}; {z!r}) not converged after {ctl.max_terms} terms"
    )


def _phi_scaled(a, b, z, log_scale=0.0, ctl=None):
    """exp(log_scale) * Phi(a, b; z) together with an absolute error bound.

    Terminating series (``a`` a nonpositive integer) are summed as they
    stand; for ``z < 0`` they have nonnegative terms.  Otherwise a negative
    argument is first mapped through Kummer's transformation
    ``Phi(a, b; z) = e^z Phi(b-a, b; -z)``, with ``e^z`` folded into the first
    term so that neither factor can overflow on its own.
    """
    if ctl is None:
        ctl = SeriesControl.for_argument(z)
    if z < 0 and not _is_nonpositive_integer(a):
        a, z, log_scale = b - a, -z, log_scale + z
    start = math.exp(log_scale)
    if start == 0.0 or not math.isfinite(start):
        raise OverflowError(f"scale factor exp({log_scale!r}) out of double range")
    if z == 0:
        return start, 0.0
    return _sum_series(a, b, z, start, ctl)


def _check_phi_args(alpha, gamma_param, z):
    _check_finite("alpha", alpha)
    _check_finite("gamma_param", gamma_param)
    _check_finite("z", z)
    if _is_nonpositive_integer(gamma_param):
        raise PoleError(f"1F1 has a pole at gamma_param = {gamma_param!r}")
    if abs(z) > PHI_ARG_CAP:
        raise DomainError(f"|z| = {abs(z)!r} exceeds the series cap {PHI_ARG_CAP}")


def kummer_phi(alpha: float, gamma_param: float, z: float,
               ctl: SeriesControl | None = None) -> float:
    """Kummer's confluent hypergeometric function 1F1(alpha; gamma_param; z).

    ``ctl`` defaults to :class:`SeriesControl` with its 500-term budget.
    Raises :class:`ConvergenceError` when the budget runs out.
    """
    alpha, gamma_param, z = float(alpha), float(gamma_param), float(z)
    _check_phi_args(alpha, gamma_param, z)
    value, _ = _phi_scaled(alpha, gamma_param, z, 0.0, ctl or SeriesControl())
    return value


def tricomi_psi(alpha: float, gamma_param: float, z: float,
                ctl: SeriesControl | None = None) -> complex:
    """Tricomi's confluent hypergeometric function U(alpha, gamma_param, z).

    Built from two Kummer functions.  For ``z < 0`` the factor
    ``z**(1 - gamma_param)`` is taken on the principal branch and the result
    is complex.  Integer ``gamma_param`` (where the two-term form degenerates)
    and ``z == 0`` raise :class:`DomainError`.
    """
    value, _ = _psi(float(alpha), float(gamma_param), float(z), ctl)
    return value


def _psi(a, b, z, ctl=None):
    _check_phi_args(a, b, z)
    if z == 0:
        raise DomainError("Tricomi Psi is evaluated only at z != 0")
    if b.is_integer():
        raise DomainError(f"two-term Tricomi form undefined for integer gamma_param {b!r}")
    ctl = ctl or SeriesControl.for_argument(z)
    value = 0j
    err = 0.0
    c1 = gamma(1.0 - b) * recip_gamma(a - b + 1.0)
    if c1 != 0.0:
        p1, e1 = _phi_scaled(a, b, z, 0.0, ctl)
        value += c1 * p1
        err += abs(c1) * e1
    c2 = gamma(b - 1.0) * recip_gamma(a)
    if c2 != 0.0:
        zpow = principal_power(z, 1.0 - b)
        p2, e2 = _phi_scaled(a - b + 1.0, 2.0 - b, z, 0.0, ctl)
        value += c2 * zpow * p2
        err += abs(c2 * zpow) * e2
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise OverflowError(f"Psi({a!r}, {b!r}; {z!r}) exceeds double range")
    return value, err + 10 * EPS * abs(value)


# ---------------------------------------------------------------------------
# Parabolic cylinder function


def parabolic_cylinder_d(nu: float, z: complex) -> complex:
    """Weber's parabolic cylinder function D_nu(z).

    Only real or purely imaginary ``z`` is supported, which keeps the Kummer
    argument ``z**2/2`` real.  For large positive real ``z`` the two terms
    cancel and relative accuracy degrades like ``exp(z**2/2) * eps``;
    asymptotic expansions are not provided.
    """
    value, _ = _pcf(float(nu), z)
    return value


def _pcf(nu, z, ctl=None):
    _check_finite("nu", nu)
    z = complex(z)
    if z.real != 0 and z.imag != 0:
        raise DomainError("D_nu is supported only on the real and imaginary axes")
    _check_finite("z", abs(z))
    w = (z * z).real
    half = 0.5 * w
    if abs(half) > PHI_ARG_CAP:
        raise DomainError(f"|z|^2/2 = {abs(half)!r} exceeds the series cap {PHI_ARG_CAP}")
    ctl = ctl or SeriesControl.for_argument(half)
    log_scale = -0.25 * w
    c1 = SQRT_PI * recip_gamma(0.5 * (1.0 - nu))
    c2 = SQRT_2PI * recip_gamma(-0.5 * nu)
    value = 0j
    err = 0.0
    if c1 != 0.0:
        p1, e1 = _phi_scaled(-0.5 * nu, 0.5, half, log_scale, ctl)
        value += c1 * p1
        err += abs(c1) * e1
    if c2 != 0.0 and z != 0:
        p2, e2 = _phi_scaled(0.5 * (1.0 - nu), 1.5, half, log_scale, ctl)
        value -= c2 * z * p2
        err += abs(c2 * z) * e2
    scale = 2.0 ** (0.5 * nu)
    value *= scale
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise OverflowError(f"D_{nu!r}({z!r}) exceeds double range")
    return value, scale * err + 10 * EPS * abs(value)
