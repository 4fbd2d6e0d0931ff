"""Entropy density and state counting for extensive statistics."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from .errors import DomainError, NoConvergence
from .genfun import Gentile, HaldaneWu, Statistics, log_slope, log_value, polynomial_power
from .numerics import DEFAULT_TOL, Bracket, Tolerances, log_gamma, solve_bracketed


@dataclass(frozen=True)
class ThermoPoint:
    """Filling ``mu``, saddle point ``x`` and entropy density ``s`` (nats)."""

    mu: float
    x: float
    s: float


@dataclass(frozen=True)
class CountResult:
    """Number of ways ``W`` to place ``n`` particles in ``N`` states.

    ``W`` is a Python ``int`` whenever it is exact (Gentile, and Haldane-Wu
    with ``g`` in {0, 1}); otherwise the gamma-extended real value, which is
    ``inf`` beyond the float range while ``log_W`` stays finite.
    """

    N: int
    n: int
    W: object
    log_W: Optional[float] = None

    def __post_init__(self):
        if self.log_W is None:
            # math.log handles exact integers of any size
            object.__setattr__(self, "log_W", math.log(self.W) if self.W > 0 else -math.inf)


def mu_max(stat: Statistics) -> float:
    """Maximal occupation of a single state: ``G`` or ``1/g``."""
    if isinstance(stat, Gentile):
        return float(stat.G)
    if isinstance(stat, HaldaneWu):
        return math.inf if stat.g == 0 else 1.0 / stat.g
    raise TypeError(f"expected HaldaneWu or Gentile, got {type(stat).__name__}")


def _xlogx(x: float) -> float:
    return 0.0 if x == 0 else x * math.log(x)


def _log_slope_dv(stat: HaldaneWu, v: float, tol: Tolerances) -> float:
    g = stat.g
    inv_f = math.exp(-log_value(stat, math.exp(v), tol))
    sigma = (1.0 - inv_f) / (g + (1.0 - g) * inv_f)
    denom = g + (1.0 - g) * inv_f
    # d sigma / d ln x = f sigma / (g f + 1 - g)**2, written with 1/f
    return sigma * inv_f / (denom * denom)


def _saddle_bracket(stat: Statistics, h, max_steps: int = 200) -> Bracket:
    lo = -1.0
    step = 1.0
    for _ in range(max_steps):
        if h(lo) < 0:
            break
        lo -= step
        step *= 2.0
    else:
        raise NoConvergence("could not bracket the saddle point from below")
    if isinstance(stat, HaldaneWu) and stat.g == 0:
        # boson saddle point lies in 0 < x < 1
        hi = -1.0
        for _ in range(max_steps):
            if h(hi) > 0:
                break
            hi *= 0.5
        else:
            raise NoConvergence("could not bracket the boson saddle point")
    else:
        hi = 1.0
        step = 1.0
        for _ in range(max_steps):
            if h(hi) > 0:
                break
            hi += step
            step *= 2.0
        else:
            raise NoConvergence("could not bracket the saddle point from above")
    if hi <= lo:
        lo = hi - 1.0
        while h(lo) >= 0:
            lo -= 1.0
    return Bracket.around(h, lo, hi)


def entropy_generic(stat: Statistics, mu: float, tol: Tolerances = DEFAULT_TOL) -> ThermoPoint:
    """Entropy density from the saddle-point equations.

    Solves ``x f'(x) = mu f(x)`` for ``x > 0`` (in the variable ``ln x``) and
    returns ``s = ln f(x) - mu ln x``. Works for any statistics exposing a
    generating function; only ``f`` and ``f'`` are used.
    """
    top = mu_max(stat)
    if not 0.0 < mu < top:
        raise DomainError(f"mu must lie in (0, {top}), got {mu!r}")

    def h(v):
        return log_slope(stat, math.exp(v), tol) - mu

    def dh(v):
        return _log_slope_dv(stat, v, tol)

    fprime = dh if isinstance(stat, HaldaneWu) else None
    v = solve_bracketed(h, _saddle_bracket(stat, h), tol, fprime=fprime)
    x = math.exp(v)
    s = log_value(stat, x, tol) - mu * v
    return ThermoPoint(mu=mu, x=x, s=s)


def entropy_closed_hw(g: float, mu: float) -> float:
    """Closed-form Haldane-Wu entropy density.

    ``(1 + mu(1-g)) ln(1 + mu(1-g)) - mu ln mu - (1 - g mu) ln(1 - g mu)``,
    with ``0 ln 0 = 0`` so that both ends of ``[0, 1/g]`` give zero.
    """
    if not 0.0 <= g <= 1.0:
        raise DomainError(f"g must lie in [0, 1], got {g!r}")
    top = math.inf if g == 0 else 1.0 / g
    if not 0.0 <= mu <= top:
        raise DomainError(f"mu must lie in [0, {top}], got {mu!r}")
    a = 1.0 + mu * (1.0 - g)
    b = 1.0 - g * mu
    if b < 0:
        b = 0.0
    return _xlogx(a) - _xlogx(mu) - _xlogx(b)


def count_states(stat: Statistics, N: int, n: int) -> CountResult:
    """Number of configurations of ``n`` particles in ``N`` states.

    Haldane-Wu reads the factorials of the counting formula as gamma
    functions, ``Gamma(N + (1-g)n + g) / (Gamma(n+1) Gamma(N - gn + g))``,
    and returns 0 once ``N - gn + g <= 0``; ``g`` in {0, 1} is exact. Gentile
    needs integer ``G`` and extracts the exact coefficient of ``t**n`` in
    ``(1 + t + ... + t**G)**N``.
    """
    if int(N) != N or int(n) != n:
        raise DomainError("N and n must be integers")
    N, n = int(N), int(n)
    if N < 1 or n < 0:
        raise DomainError(f"need N >= 1 and n >= 0, got N={N}, n={n}")
    if isinstance(stat, Gentile):
        if not stat.is_integer:
            raise DomainError(f"state counting needs an integer Gentile parameter, got {stat.G!r}")
        G = int(stat.G)
        if n > G * N:
            return CountResult(N, n, 0)
        coeffs = polynomial_power([1] * (G + 1), N, n)
        return CountResult(N, n, coeffs[n])
    if not isinstance(stat, HaldaneWu):
        raise TypeError(f"expected HaldaneWu or Gentile, got {type(stat).__name__}")
    g = stat.g
    if g == 1.0:
        return CountResult(N, n, math.comb(N, n))
    if g == 0.0:
        return CountResult(N, n, math.comb(N + n - 1, n))
    low = N - g * n + g
    if low <= 0:
        return CountResult(N, n, 0.0)
    log_w = log_gamma(N + (1.0 - g) * n + g) - log_gamma(n + 1.0) - log_gamma(low)
    W = math.exp(log_w) if log_w < 709.0 else math.inf
    return CountResult(N, n, W, log_w)


def finite_size_entropy(stat: Statistics, N: int, mu: float) -> float:
    """``(1/N) ln W(N, mu N)``; ``mu N`` must be an integer."""
    n = mu * N
    if not float(n).is_integer():
        raise DomainError(f"mu*N = {n!r} is not an integer")
    return count_states(stat, N, int(n)).log_W / N


def extrapolate_entropy(sizes: Sequence[int], values: Sequence[float]) -> float:
    """Large-N limit of ``a_N = (1/N) ln W(N, mu N)``.

    Fits ``a_N = s + (A ln N + B) / N`` exactly through three sizes, which is
    Richardson extrapolation for the Gaussian (local central limit) finite
    size correction ``-ln(2 pi N var) / (2N)``.
    """
    if len(sizes) != 3 or len(values) != 3:
        raise ValueError("extrapolate_entropy needs exactly three sizes")
    N = np.asarray(sizes, dtype=float)
    A = np.column_stack([np.ones(3), np.log(N) / N, 1.0 / N])
    return float(np.linalg.solve(A, np.asarray(values, dtype=float))[0])
