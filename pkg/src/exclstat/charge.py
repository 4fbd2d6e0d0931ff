"""Effective central charge from generating-function data.

Two independent routes are provided. The integral route works for any
extensive statistics,

    c = 6/pi^2 [ int_0^x0 ln f(t) dt/t - 1/2 ln x0 ln f(x0) ],
    ln x0 + phi ln f(x0) = 0,

and the closed route uses Rogers dilogarithms: ``6/pi^2 L(y0)`` with
``ln y0 = (g + phi) ln(1 - y0)`` for Haldane-Wu, and
``6/pi^2 [L(x0) - L(x0**(G+1)) / (G+1)]`` for Gentile.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .errors import DomainError, NoConvergence
from .genfun import Gentile, HaldaneWu, Statistics, log_slope, log_value
from .numerics import DEFAULT_TOL, Bracket, Tolerances, integrate, rogers_dilog, solve_bracketed

SIX_OVER_PI2 = 6.0 / math.pi ** 2


@dataclass(frozen=True)
class ChargeProblem:
    """A statistics together with the scattering parameter ``phi >= 0``."""

    stat: Statistics
    phi: float = 0.0

    def __post_init__(self):
        if not isinstance(self.stat, (HaldaneWu, Gentile)):
            raise TypeError(f"expected HaldaneWu or Gentile, got {type(self.stat).__name__}")
        if not (self.phi >= 0 and math.isfinite(self.phi)):
            raise DomainError(f"phi must be a non-negative finite number, got {self.phi!r}")

    @property
    def nu(self) -> Optional[float]:
        """``g + phi`` for Haldane-Wu, ``None`` for Gentile."""
        if isinstance(self.stat, HaldaneWu):
            return self.stat.g + self.phi
        return None


@dataclass(frozen=True)
class ChargeResult:
    x0: float
    y0: Optional[float]
    c_integral: float
    c_closed: float
    residual: float
    y_from_x0: Optional[float] = None


def _grow_down(h, start: float = -1.0, max_steps: int = 200) -> float:
    lo, step = start, 1.0
    for _ in range(max_steps):
        if h(lo) < 0:
            return lo
        lo -= step
        step *= 2.0
    raise NoConvergence("could not bracket the root from below")


def solve_x0(prob: ChargeProblem, tol: Tolerances = DEFAULT_TOL) -> float:
    """Root in ``(0, 1]`` of ``ln x + phi ln f(x) = 0``; exactly 1 for ``phi = 0``."""
    phi = prob.phi
    if phi == 0:
        return 1.0
    stat = prob.stat

    def h(v):
        return v + phi * log_value(stat, math.exp(v), tol)

    def dh(v):
        return 1.0 + phi * log_slope(stat, math.exp(v), tol)

    if isinstance(stat, HaldaneWu) and stat.g == 0:
        # f = 1/(1 - x) blows up at x = 1, so approach it from below
        hi = -1.0
        while h(hi) <= 0:
            hi *= 0.5
            if hi > -1e-300:
                raise NoConvergence("boson x0 bracket failed")
    else:
        hi = 0.0
    lo = _grow_down(h, hi - 1.0)
    v = solve_bracketed(h, Bracket.around(h, lo, hi), tol, fprime=dh)
    return math.exp(v)


def solve_y0(nu: float, tol: Tolerances = DEFAULT_TOL) -> float:
    """Root in ``(0, 1)`` of ``ln y = nu ln(1 - y)``; 1 for ``nu = 0``.

    Solved for ``w = ln(y / (1 - y))`` so both ends stay resolved.
    """
    if not (nu >= 0 and math.isfinite(nu)):
        raise DomainError(f"nu must be a non-negative finite number, got {nu!r}")
    if nu == 0:
        return 1.0

    def k(w):
        return -_log1pexp(-w) + nu * _log1pexp(w)

    def dk(w):
        y = _expit(w)
        return (1.0 - y) + nu * y

    lo, hi = -1.0, 1.0
    while k(lo) > 0:
        lo *= 2.0
    while k(hi) < 0:
        hi *= 2.0
    w = solve_bracketed(k, Bracket.around(k, lo, hi), tol, fprime=dk)
    return _expit(w)


def _log1pexp(w: float) -> float:
    if w > 0:
        return w + math.log1p(math.exp(-w))
    return math.log1p(math.exp(w))


def _expit(w: float) -> float:
    if w >= 0:
        return 1.0 / (1.0 + math.exp(-w))
    e = math.exp(w)
    return e / (1.0 + e)


def _integrand(stat: Statistics, tol: Tolerances):
    def func(t):
        return log_value(stat, t, tol) / t
    return func


def charge_integral(prob: ChargeProblem, tol: Tolerances = DEFAULT_TOL,
                    x0: Optional[float] = None) -> float:
    """Central charge by direct quadrature of ``ln f(t)/t``.

    The integrand tends to ``f'(0) = 1`` at ``t = 0``. For the boson corner
    (``g = 0``, ``phi = 0``) the upper limit is the logarithmic singularity of
    ``ln f`` at ``t = 1``; the integral is taken as improper there and the
    boundary term ``ln x0 ln f(x0)`` is replaced by its limit 0.
    """
    stat = prob.stat
    if x0 is None:
        x0 = solve_x0(prob, tol)
    integral = integrate(_integrand(stat, tol), 0.0, x0, tol, limit_at_a=1.0)
    boson_corner = isinstance(stat, HaldaneWu) and stat.g == 0 and x0 == 1.0
    boundary = 0.0 if (boson_corner or x0 == 1.0) else 0.5 * math.log(x0) * log_value(stat, x0, tol)
    return SIX_OVER_PI2 * (integral - boundary)


def charge_closed(prob: ChargeProblem, tol: Tolerances = DEFAULT_TOL,
                  x0: Optional[float] = None, y0: Optional[float] = None) -> float:
    """Central charge from the closed dilogarithm forms."""
    stat = prob.stat
    if isinstance(stat, HaldaneWu):
        if y0 is None:
            y0 = solve_y0(prob.nu, tol)
        return SIX_OVER_PI2 * rogers_dilog(y0, tol)
    if x0 is None:
        x0 = solve_x0(prob, tol)
    G1 = stat.G + 1.0
    return SIX_OVER_PI2 * (rogers_dilog(x0, tol) - rogers_dilog(x0 ** G1, tol) / G1)


def charge_both(prob: ChargeProblem, tol: Tolerances = DEFAULT_TOL) -> ChargeResult:
    """Run both routes and record their disagreement.

    For Haldane-Wu the intermediate variable ``1 - 1/f(x0)`` is reported as
    ``y_from_x0``; it must coincide with ``y0``.
    """
    stat = prob.stat
    x0 = solve_x0(prob, tol)
    c_int = charge_integral(prob, tol, x0=x0)
    y0 = y_from_x0 = None
    if isinstance(stat, HaldaneWu):
        y0 = solve_y0(prob.nu, tol)
        if stat.g == 0 and x0 == 1.0:
            y_from_x0 = 1.0
        else:
            y_from_x0 = -math.expm1(-log_value(stat, x0, tol))
    c_cl = charge_closed(prob, tol, x0=x0, y0=y0)
    return ChargeResult(x0=x0, y0=y0, c_integral=c_int, c_closed=c_cl,
                        residual=abs(c_int - c_cl), y_from_x0=y_from_x0)
