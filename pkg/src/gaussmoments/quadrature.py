"""Globally adaptive Gauss-Kronrod (7/15) quadrature for real or complex
integrands on a finite interval."""

from __future__ import annotations

import heapq
import math
from typing import Callable, NamedTuple

from .errors import ToleranceNotMetError

EPS = 2.220446049250313e-16

# Kronrod abscissae on [0, 1), descending; odd indices are the Gauss nodes.
_XK = (
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
)
_WK = (
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
)
_WK_CENTER = 0.209482141084727828012999174891714
_WG = (
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
)
_WG_CENTER = 0.417959183673469387755102040816327


class QuadResult(NamedTuple):
    value: complex | float
    error: float
    l1: float
    evaluations: int


def gk15(f: Callable, a: float, b: float):
    """One 15-point Kronrod panel.

    Returns ``(kronrod, |kronrod - gauss|, integral of |f|)``.
    """
    c = 0.5 * (a + b)
    h = 0.5 * (b - a)
    fc = f(c)
    k = _WK_CENTER * fc
    g = _WG_CENTER * fc
    l1 = _WK_CENTER * abs(fc)
    for i, x in enumerate(_XK):
        dx = h * x
        f1 = f(c - dx)
        f2 = f(c + dx)
        k += _WK[i] * (f1 + f2)
        l1 += _WK[i] * (abs(f1) + abs(f2))
        if i % 2:
            g += _WG[i // 2] * (f1 + f2)
    h = abs(h)
    return k * h, abs(k - g) * h, l1 * h


def _fsum_complex(values):
    re = math.fsum(v.real for v in values)
    im = math.fsum(getattr(v, "imag", 0.0) for v in values)
    return complex(re, im) if im else re


def integrate(f: Callable, a: float, b: float, *, abs_tol: float = 0.0,
              rel_tol: float = 0.0, max_depth: int = 60,
              max_intervals: int = 20000) -> QuadResult:
    """Integrate ``f`` over ``[a, b]`` until the summed panel errors fall
    below ``max(abs_tol, rel_tol * integral of |f|)``.

    The panel with the largest error is bisected each step.  A panel's error
    is ``|K15 - G7|``, floored at 50 ulp of its ``|f|`` integral.  Raises
    :class:`ToleranceNotMetError` once the worst panel reaches ``max_depth``
    bisections or the panel count reaches ``max_intervals``.
    """
    if not (abs_tol > 0 or rel_tol > 0):
        raise ValueError("need a positive abs_tol or rel_tol")
    if a == b:
        return QuadResult(0.0, 0.0, 0.0, 0)

    def panel(lo, hi, depth):
        val, err, l1 = gk15(f, lo, hi)
        err = max(err, 50 * EPS * l1)
        return (-err, lo, hi, depth, val, l1)

    heap = [panel(a, b, 0)]
    evaluations = 15
    err_sum = -heap[0][0]
    l1_sum = heap[0][5]
    while True:
        target = max(abs_tol, rel_tol * l1_sum)
        if err_sum <= target:
            break
        neg_err, lo, hi, depth, val, l1 = heap[0]
        if depth >= max_depth or len(heap) >= max_intervals:
            value = _fsum_complex([item[4] for item in heap])
            raise ToleranceNotMetError(
                f"quadrature on [{a!r}, {b!r}] reached error {err_sum:.3g} "
                f"against target {target:.3g}",
                value=value, error=err_sum,
            )
        heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        left = panel(lo, mid, depth + 1)
        right = panel(mid, hi, depth + 1)
        heapq.heappush(heap, left)
        heapq.heappush(heap, right)
        evaluations += 30
        err_sum += neg_err - left[0] - right[0]
        l1_sum += left[5] + right[5] - l1
    err_total = math.fsum(-item[0] for item in heap)
    return QuadResult(
        _fsum_complex([item[4] for item in heap]),
        err_total,
        math.fsum(item[5] for item in heap),
        evaluations,
    )


def integrate_power_weighted(f: Callable, nu: float, upper: float, *,
                             abs_tol: float = 0.0, rel_tol: float = 0.0,
                             max_depth: int = 60) -> QuadResult:
    """Integral of ``u**nu * f(u)`` over ``[0, upper]`` for ``nu > -1``.

    For ``nu < 0`` the substitution ``u = t**(1/(1+nu))`` turns the
    integrable singularity at 0 into a bounded integrand.
    """
    if upper <= 0:
        return QuadResult(0.0, 0.0, 0.0, 0)
    if nu >= 0:
        return integrate(lambda u: u**nu * f(u), 0.0, upper,
                         abs_tol=abs_tol, rel_tol=rel_tol, max_depth=max_depth)
    k = 1.0 / (1.0 + nu)
    return integrate(lambda t: k * f(t**k), 0.0, upper ** (1.0 + nu),
                     abs_tol=abs_tol, rel_tol=rel_tol, max_depth=max_depth)
