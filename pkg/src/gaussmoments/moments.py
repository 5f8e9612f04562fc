"""Raw, central and absolute moments of a normal distribution of real order.

Each moment family can be evaluated through several algebraically equivalent
closed forms (the :class:`FormulaPath` values).  They share no code beyond the
special functions, which is what makes :func:`consistency_report` a useful
cross-check.

For fractional orders the raw and central moments are complex: ``x**nu`` for
``x < 0`` is taken as ``|x|**nu * exp(1j*pi*nu)``, the principal branch.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple

from .errors import DomainError, InvalidPathError, OrderOutOfRangeError
from .specfun import (
    EPS,
    PHI_ARG_CAP,
    SQRT_2PI,
    SQRT_PI,
    SeriesControl,
    _pcf,
    _phi_scaled,
    _psi,
    cospi,
    double_factorial,
    gamma,
    principal_power,
    recip_gamma,
)

#: Orders within this distance of an integer are treated as integers.
INTEGER_TOL = 1e-12
#: Agreement required between formula paths, scaled by max(1, |value|).
PATH_RTOL = 1e-10

# ulp-scale slack charged per special-function evaluation in err_estimate
_SLACK_PER_CALL = 5 * EPS


class MomentKind(str, Enum):
    RAW = "raw"
    CENTRAL = "central"
    RAW_ABS = "raw_abs"
    CENTRAL_ABS = "central_abs"


class FormulaPath(str, Enum):
    """Closed form used to evaluate a moment.

    ``PCF``
        parabolic cylinder function of an imaginary argument (raw/central), or
        of a real argument for the absolute moments.
    ``PHI_PAIR``
        two Kummer functions weighted by reciprocal Gamma values.
    ``PSI``
        Tricomi's function, conjugated for positive mean.
    ``INTEGER``
        even/odd split for integer order; real arithmetic, exact zeros.
    ``GAMMA_FORM``
        the Gamma-only forms: central moments, absolute moments.
    """

    AUTO = "auto"
    PCF = "pcf"
    PHI_PAIR = "phi_pair"
    PSI = "psi"
    INTEGER = "integer"
    GAMMA_FORM = "gamma_form"


@dataclass(frozen=True)
class NormalParams:
    mu: float
    sigma: float

    def __post_init__(self):
        if not math.isfinite(self.mu):
            raise DomainError("mu must be finite")
        if not (math.isfinite(self.sigma) and self.sigma > 0):
            raise DomainError("sigma must be positive and finite")
        if 0.5 * self.ratio**2 > PHI_ARG_CAP:
            raise DomainError(
                f"(mu/sigma)^2/2 must not exceed {PHI_ARG_CAP:g}"
            )

    @property
    def ratio(self) -> float:
        return self.mu / self.sigma

    @property
    def half_ratio_sq(self) -> float:
        """(mu/sigma)**2 / 2, the Kummer argument magnitude."""
        r = self.ratio
        return 0.5 * r * r


@dataclass(frozen=True)
class MomentQuery:
    kind: MomentKind
    nu: float

    def __post_init__(self):
        object.__setattr__(self, "kind", MomentKind(self.kind))
        check_order(self.nu)


@dataclass(frozen=True)
class MomentResult:
    value: complex
    path: FormulaPath
    err_estimate: float


class PathCheck(NamedTuple):
    path: FormulaPath
    result: MomentResult
    deviation: float


def is_integer_order(nu: float) -> bool:
    return abs(nu - round(nu)) <= INTEGER_TOL


def check_order(nu: float) -> None:
    if not math.isfinite(nu):
        raise OrderOutOfRangeError("nu must be finite")
    if nu <= -1:
        raise OrderOutOfRangeError("nu must exceed -1")


def _finish(value, path, err, calls):
    value = complex(value)
    if not (math.isfinite(value.real) and math.isfinite(value.imag)):
        raise OverflowError("moment exceeds double range")
    return MomentResult(value, path, err + calls * _SLACK_PER_CALL * abs(value))


def _j_sigma_pow(sigma, nu):
    return principal_power(1j * sigma, nu)


# ---------------------------------------------------------------------------
# raw moments


def _raw_pcf(p, nu):
    x = p.half_ratio_sq
    d, d_err = _pcf(nu, complex(0.0, -p.ratio))
    factor = _j_sigma_pow(p.sigma, nu) * math.exp(-0.5 * x)
    return factor * d, abs(factor) * d_err, 3


def _raw_phi_pair(p, nu):
    x = p.half_ratio_sq
    ctl = SeriesControl.for_argument(x)
    inner = 0j
    err = 0.0
    c1 = SQRT_PI * recip_gamma(0.5 * (1.0 - nu))
    if c1 != 0.0:
        v, e = _phi_scaled(-0.5 * nu, 0.5, -x, 0.0, ctl)
        inner += c1 * v
        err += abs(c1) * e
    c2 = p.ratio * SQRT_2PI * recip_gamma(-0.5 * nu)
    if c2 != 0.0:
        v, e = _phi_scaled(0.5 * (1.0 - nu), 1.5, -x, 0.0, ctl)
        inner += 1j * c2 * v
        err += abs(c2) * e
    factor = _j_sigma_pow(p.sigma, nu) * 2.0 ** (0.5 * nu)
    return factor * inner, abs(factor) * err, 4


def _raw_psi(p, nu):
    x = p.half_ratio_sq
    if x == 0.0:
        # Psi(a, 1/2; z) -> Gamma(1/2) / Gamma(a + 1/2) as z -> 0
        psi, psi_err = complex(SQRT_PI * recip_gamma(0.5 - 0.5 * nu)), 0.0
    else:
        psi, psi_err = _psi(-0.5 * nu, 0.5, -x)
        if p.mu > 0:
            psi = psi.conjugate()
    factor = _j_sigma_pow(p.sigma, nu) * 2.0 ** (0.5 * nu)
    return factor * psi, abs(factor) * psi_err, 5


def _raw_integer(p, nu):
    n = int(round(nu))
    x = p.half_ratio_sq
    if n % 2 == 0:
        coef = p.sigma**n * double_factorial(n - 1)
        v, e = _phi_scaled(-0.5 * n, 0.5, -x)
    else:
        coef = p.mu * p.sigma ** (n - 1) * double_factorial(n)
        v, e = _phi_scaled(0.5 * (1 - n), 1.5, -x)
    return complex(coef * v), abs(coef) * e, 2


def _central_gamma_form(sigma, nu):
    factor = _j_sigma_pow(sigma, nu) * 2.0 ** (0.5 * nu)
    return factor * (SQRT_PI * recip_gamma(0.5 * (1.0 - nu))), 0.0, 2


_RAW_PATHS = {
    FormulaPath.PCF: _raw_pcf,
    FormulaPath.PHI_PAIR: _raw_phi_pair,
    FormulaPath.PSI: _raw_psi,
    FormulaPath.INTEGER: _raw_integer,
}


def raw_moment(p: NormalParams, nu: float,
               path: FormulaPath = FormulaPath.AUTO) -> MomentResult:
    """E[X**nu] for X ~ N(mu, sigma**2).

    ``AUTO`` picks the integer path for integer orders and the Kummer pair
    otherwise.  ``GAMMA_FORM`` is only valid for ``mu == 0``.
    """
    check_order(nu)
    path = FormulaPath(path)
    if path is FormulaPath.AUTO:
        path = FormulaPath.INTEGER if is_integer_order(nu) else FormulaPath.PHI_PAIR
    if path is FormulaPath.INTEGER and not is_integer_order(nu):
        raise InvalidPathError(f"integer path requires an integer order, got nu={nu!r}")
    if path is FormulaPath.GAMMA_FORM:
        if p.mu != 0:
            raise InvalidPathError("gamma_form evaluates raw moments only when mu == 0")
        return central_moment(p, nu, path)
    value, err, calls = _RAW_PATHS[path](p, nu)
    return _finish(value, path, err, calls)


def central_moment(p: NormalParams, nu: float,
                   path: FormulaPath = FormulaPath.AUTO) -> MomentResult:
    """E[(X - mu)**nu]; does not depend on ``p.mu``.

    Every path except ``GAMMA_FORM`` is the raw moment of ``N(0, sigma**2)``
    through the same path, so odd integer orders give exactly 0.
    """
    check_order(nu)
    path = FormulaPath(path)
    if path is FormulaPath.AUTO:
        path = FormulaPath.INTEGER if is_integer_order(nu) else FormulaPath.GAMMA_FORM
    if path is FormulaPath.GAMMA_FORM:
        value, err, calls = _central_gamma_form(p.sigma, nu)
        return _finish(value, path, err, calls)
    return raw_moment(NormalParams(0.0, p.sigma), nu, path)


def central_moment_cosine_form(sigma: float, nu: float) -> complex:
    """Central moment written with cos(pi*nu/2) and Gamma((nu+1)/2)."""
    check_order(nu)
    factor = _j_sigma_pow(sigma, nu) * 2.0 ** (0.5 * nu)
    return factor * cospi(0.5 * nu) * gamma(0.5 * (nu + 1.0)) / SQRT_PI


def central_moment_parity_form(sigma: float, nu: float) -> complex:
    """Central moment written with (1 + (-1)**nu), (-1)**nu = exp(1j*pi*nu)."""
    check_order(nu)
    parity = 1.0 + principal_power(-1.0, nu)
    return parity * sigma**nu * 2.0 ** (0.5 * nu - 1.0) * gamma(0.5 * (nu + 1.0)) / SQRT_PI


# ---------------------------------------------------------------------------
# absolute moments


def _abs_gamma_form(p, nu):
    x = p.half_ratio_sq
    coef = p.sigma**nu * 2.0 ** (0.5 * nu) * gamma(0.5 * (nu + 1.0)) / SQRT_PI
    v, e = _phi_scaled(-0.5 * nu, 0.5, -x)
    return coef * v, coef * e, 2


def _abs_pcf(p, nu):
    # half-line Laplace integrals give D_{-nu-1}(r) + D_{-nu-1}(-r)
    r = p.ratio
    x = p.half_ratio_sq
    d_plus, e_plus = _pcf(-nu - 1.0, r)
    d_minus, e_minus = _pcf(-nu - 1.0, -r)
    coef = (p.sigma**nu * 2.0 ** (0.5 * nu) / SQRT_PI * math.exp(-0.5 * x)
            * 2.0 ** (-0.5 * (nu + 1.0)) * gamma(nu + 1.0))
    return coef * (d_plus + d_minus).real, coef * (e_plus + e_minus), 4


_ABS_PATHS = {
    FormulaPath.GAMMA_FORM: _abs_gamma_form,
    FormulaPath.PCF: _abs_pcf,
}


def _abs_moment(p, nu, path):
    check_order(nu)
    path = FormulaPath(path)
    if path is FormulaPath.AUTO:
        path = FormulaPath.GAMMA_FORM
    if path not in _ABS_PATHS:
        raise InvalidPathError(f"absolute moments support gamma_form and pcf, not {path.value}")
    value, err, calls = _ABS_PATHS[path](p, nu)
    value = float(value)
    if not math.isfinite(value):
        raise OverflowError("moment exceeds double range")
    return MomentResult(complex(value, 0.0), path, err + calls * _SLACK_PER_CALL * abs(value))


def raw_abs_moment(p: NormalParams, nu: float,
                   path: FormulaPath = FormulaPath.AUTO) -> MomentResult:
    """E[|X|**nu]: positive, real, even in mu."""
    return _abs_moment(p, nu, path)


def central_abs_moment(p: NormalParams, nu: float,
                       path: FormulaPath = FormulaPath.AUTO) -> MomentResult:
    """E[|X - mu|**nu]; independent of mu."""
    return _abs_moment(NormalParams(0.0, p.sigma), nu, path)


# ---------------------------------------------------------------------------
# dispatch and cross-checks

_FAMILIES = {
    MomentKind.RAW: raw_moment,
    MomentKind.CENTRAL: central_moment,
    MomentKind.RAW_ABS: raw_abs_moment,
    MomentKind.CENTRAL_ABS: central_abs_moment,
}


def moment(p: NormalParams, q: MomentQuery,
           path: FormulaPath = FormulaPath.AUTO) -> MomentResult:
    return _FAMILIES[q.kind](p, q.nu, path)


def valid_paths(kind: MomentKind, p: NormalParams, nu: float) -> list[FormulaPath]:
    """Concrete paths able to evaluate ``kind`` at (p, nu)."""
    kind = MomentKind(kind)
    if kind in (MomentKind.RAW_ABS, MomentKind.CENTRAL_ABS):
        return [FormulaPath.GAMMA_FORM, FormulaPath.PCF]
    paths = [FormulaPath.PCF, FormulaPath.PHI_PAIR, FormulaPath.PSI]
    if is_integer_order(nu):
        paths.append(FormulaPath.INTEGER)
    if kind is MomentKind.CENTRAL or p.mu == 0:
        paths.append(FormulaPath.GAMMA_FORM)
    return paths


def consistency_report(p: NormalParams, nu: float,
                       kind: MomentKind = MomentKind.RAW) -> list[PathCheck]:
    """Evaluate every valid path and the worst disagreement of each.

    ``deviation`` is the largest absolute difference between this path and
    any other, divided by ``max(1, |values|)``; all paths are expected to
    stay below :data:`PATH_RTOL`.
    """
    kind = MomentKind(kind)
    check_order(nu)
    family = _FAMILIES[kind]
    results = [(path, family(p, nu, path)) for path in valid_paths(kind, p, nu)]
    report = []
    for path, res in results:
        worst = 0.0
        for other_path, other in results:
            if other_path is path:
                continue
            scale = max(1.0, abs(res.value), abs(other.value))
            worst = max(worst, abs(res.value - other.value) / scale)
        report.append(PathCheck(path, res, worst))
    return report
