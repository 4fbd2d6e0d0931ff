"""Scalar kernels: bracketed root solving, adaptive quadrature, log-gamma and
the Rogers dilogarithm.

Everything here is a pure function of its arguments.
"""
from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Callable, Optional

from .errors import DomainError, NoConvergence, NoSignChange

PI2_6 = math.pi ** 2 / 6.0


@dataclass(frozen=True)
class Tolerances:
    """Numerical tolerances used across the package.

    Parameters
    ----------
    root_abs : float
        Absolute bound on ``|func(x)|`` accepted by the root solver.
    quad_abs : float
        Absolute error target of the adaptive quadrature.
    series_tail : float
        Truncation bound for series summation.
    max_iter : int
        Iteration budget of the root solver.
    """

    root_abs: float = 1e-12
    quad_abs: float = 1e-10
    series_tail: float = 1e-16
    max_iter: int = 200

    def __post_init__(self):
        for name in ("root_abs", "quad_abs", "series_tail"):
            value = getattr(self, name)
            if not (value > 0 and math.isfinite(value)):
                raise ValueError(f"{name} must be a positive finite number, got {value!r}")
        if int(self.max_iter) != self.max_iter or self.max_iter < 1:
            raise ValueError(f"max_iter must be a positive integer, got {self.max_iter!r}")


DEFAULT_TOL = Tolerances()


def _sign(v: float) -> int:
    if v > 0:
        return 1
    if v < 0:
        return -1
    if v == 0:
        return 0
    raise ValueError("function value is NaN")


@dataclass(frozen=True)
class Bracket:
    """An interval ``[lo, hi]`` whose endpoint values have opposite signs."""

    lo: float
    hi: float
    f_lo_sign: int
    f_hi_sign: int

    def __post_init__(self):
        if not self.lo < self.hi:
            raise NoSignChange(f"empty bracket [{self.lo}, {self.hi}]")
        if self.f_lo_sign == self.f_hi_sign:
            raise NoSignChange(
                f"no sign change on [{self.lo}, {self.hi}] (both signs {self.f_lo_sign})")

    @classmethod
    def around(cls, func: Callable[[float], float], lo: float, hi: float) -> "Bracket":
        """Evaluate ``func`` at both ends and build the bracket."""
        return cls(lo, hi, _sign(func(lo)), _sign(func(hi)))


def solve_bracketed(func: Callable[[float], float], bracket: Bracket,
                    tol: Tolerances = DEFAULT_TOL,
                    fprime: Optional[Callable[[float], float]] = None) -> float:
    """Find a root of a continuous function inside a sign-change bracket.

    Safeguarded Newton iteration: a Newton step (or a secant step when
    ``fprime`` is not given) is taken when it stays inside the current
    bracket and shrinks fast enough, otherwise the bracket is bisected.

    Returns
    -------
    float
        A point ``x`` in ``[bracket.lo, bracket.hi]`` with
        ``|func(x)| <= tol.root_abs``.

    Raises
    ------
    NoSignChange
        If the bracket does not enclose a sign change.
    NoConvergence
        If the tolerance is not met within ``tol.max_iter`` evaluations, or
        the bracket shrinks to floating-point resolution first.
    """
    if bracket.f_lo_sign == 0:
        return bracket.lo
    if bracket.f_hi_sign == 0:
        return bracket.hi
    lo, hi = bracket.lo, bracket.hi
    s_lo = bracket.f_lo_sign
    x = 0.5 * (lo + hi)
    dx_old = dx = hi - lo
    x_prev = f_prev = None
    for _ in range(int(tol.max_iter)):
        fx = func(x)
        if not math.isfinite(fx):
            raise NoConvergence(f"function is not finite at x={x!r}")
        if abs(fx) <= tol.root_abs:
            return x
        if _sign(fx) == s_lo:
            lo = x
        else:
            hi = x
        if hi - lo <= 4.0 * math.ulp(max(abs(lo), abs(hi))):
            raise NoConvergence(
                f"bracket collapsed at x={x!r} with residual {fx!r} > {tol.root_abs!r}")

        if fprime is not None:
            slope = fprime(x)
        elif x_prev is not None and x != x_prev:
            slope = (fx - f_prev) / (x - x_prev)
        else:
            slope = float("nan")
        x_prev, f_prev = x, fx

        newton_ok = (math.isfinite(slope) and slope != 0.0
                     and abs(2.0 * fx) <= abs(dx_old * slope))
        if newton_ok:
            step = fx / slope
            x_new = x - step
            newton_ok = lo < x_new < hi
        dx_old = dx
        if newton_ok:
            dx = step
            x = x_new
        else:
            x_new = 0.5 * (lo + hi)
            dx = x - x_new
            x = x_new
    raise NoConvergence(f"root not found within {tol.max_iter} iterations")


# Gauss-Kronrod 7/15 nodes and weights on [-1, 1].
_XGK = (0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
        0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
        0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
        0.207784955007898467600689403773245, 0.000000000000000000000000000000000)
_WGK = (0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
        0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
        0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
        0.204432940075298892414161999234649, 0.209482141084727828012999174891714)
_WG = (0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
       0.381830050505118944950369775488975, 0.417959183673469387755102040816327)


def _gk15(func, a, b):
    center = 0.5 * (a + b)
    half = 0.5 * (b - a)
    fc = func(center)
    kronrod = _WGK[7] * fc
    gauss = _WG[3] * fc
    for j in range(7):
        dx = half * _XGK[j]
        f1 = func(center - dx)
        f2 = func(center + dx)
        kronrod += _WGK[j] * (f1 + f2)
        if j % 2 == 1:
            gauss += _WG[j // 2] * (f1 + f2)
    return kronrod * half, abs((kronrod - gauss) * half)


def integrate(func: Callable[[float], float], a: float, b: float,
              tol: Tolerances = DEFAULT_TOL, limit_at_a: Optional[float] = None,
              max_intervals: int = 4000) -> float:
    """Adaptive Gauss-Kronrod (7/15) integral of ``func`` over ``[a, b]``.

    The interval with the largest error estimate is bisected until the summed
    estimate drops below ``tol.quad_abs``. Nodes never touch the endpoints, so
    integrands with a removable singularity (or an integrable one) at ``a``
    are fine; ``limit_at_a`` is returned for ``func(a)`` if it is ever needed.
    """
    if a == b:
        return 0.0
    if b < a:
        return -integrate(func, b, a, tol, limit_at_a, max_intervals)
    if limit_at_a is not None:
        inner = func

        def func(t):
            return limit_at_a if t == a else inner(t)

    value, err = _gk15(func, a, b)
    heap = [(-err, a, b, value)]
    total, total_err = value, err
    while total_err > tol.quad_abs:
        if len(heap) >= max_intervals:
            raise NoConvergence(
                f"quadrature error estimate {total_err:.3g} after {len(heap)} intervals")
        neg_err, lo, hi, val = heapq.heappop(heap)
        mid = 0.5 * (lo + hi)
        if not lo < mid < hi:
            raise NoConvergence("quadrature interval reached floating-point resolution")
        v1, e1 = _gk15(func, lo, mid)
        v2, e2 = _gk15(func, mid, hi)
        heapq.heappush(heap, (-e1, lo, mid, v1))
        heapq.heappush(heap, (-e2, mid, hi, v2))
        total += v1 + v2 - val
        total_err += e1 + e2 + neg_err
    # re-sum to drop the drift of the running updates
    return math.fsum(item[3] for item in heap)


def log_gamma(z: float) -> float:
    """Natural logarithm of the gamma function for positive real ``z``."""
    if not z > 0 or math.isinf(z):
        raise DomainError(f"log_gamma needs a positive finite argument, got {z!r}")
    return math.lgamma(z)


def rogers_dilog(x: float, tol: Tolerances = DEFAULT_TOL) -> float:
    r"""Rogers dilogarithm on ``[0, 1]``.

    .. math:: L(x) = \sum_{n\ge1} x^n/n^2 + \tfrac12 \ln x \ln(1-x)

    The series is summed directly for ``x <= 1/2``; larger arguments go
    through ``L(x) = pi^2/6 - L(1 - x)``.
    """
    if not 0.0 <= x <= 1.0:
        raise DomainError(f"rogers_dilog is defined on [0, 1], got {x!r}")
    if x > 0.5:
        return PI2_6 - rogers_dilog(1.0 - x, tol)
    if x == 0.0:
        return 0.0
    terms = []
    power = x
    n = 1
    while True:
        term = power / (n * n)
        terms.append(term)
        if term < tol.series_tail:
            break
        n += 1
        power *= x
    return math.fsum(terms) + 0.5 * math.log(x) * math.log1p(-x)
