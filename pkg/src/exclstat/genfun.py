"""Generating functions of the Haldane-Wu and Gentile statistics.

The Haldane-Wu generating function ``f_g(t)`` is the positive root of

    f - 1 = t * f**(1 - g),

and the Gentile one is the truncated geometric sum ``1 + t + ... + t**G``
written as ``(1 - t**(G+1)) / (1 - t)`` so that ``G`` need not be integer.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Optional, Sequence, Union

from .errors import DomainError, OutsideRadius, TailTooLarge
from .numerics import DEFAULT_TOL, Bracket, Tolerances, solve_bracketed


@dataclass(frozen=True)
class HaldaneWu:
    """Haldane-Wu statistics with exclusion parameter ``0 <= g <= 1``.

    ``g = 1`` are fermions, ``g = 0`` bosons.
    """

    g: float

    def __post_init__(self):
        if not 0.0 <= self.g <= 1.0:
            raise DomainError(f"Haldane-Wu parameter g must lie in [0, 1], got {self.g!r}")

    @property
    def label(self) -> str:
        return f"HaldaneWu(g={self.g!r})"


@dataclass(frozen=True)
class Gentile:
    """Gentile statistics: at most ``G`` particles per state, ``G > 0``.

    Non-integer ``G`` is accepted (the rational form of the generating
    function still makes sense) and is flagged by :attr:`is_integer`.
    """

    G: float

    def __post_init__(self):
        if not (self.G > 0 and math.isfinite(self.G)):
            raise DomainError(f"Gentile parameter G must be positive and finite, got {self.G!r}")

    @property
    def is_integer(self) -> bool:
        return float(self.G).is_integer()

    @property
    def label(self) -> str:
        return f"Gentile(G={self.G!r})"


Statistics = Union[HaldaneWu, Gentile]


def _check_stat(stat):
    if not isinstance(stat, (HaldaneWu, Gentile)):
        raise TypeError(f"expected HaldaneWu or Gentile, got {type(stat).__name__}")


# ---------------------------------------------------------------------------
# pointwise evaluation


def log_haldane_wu(g: float, t: float, tol: Tolerances = DEFAULT_TOL) -> float:
    """``ln f_g(t)`` for ``t >= 0`` and any ``g >= 0``.

    ``g > 1`` is outside the physical family but the implicit equation keeps
    a unique positive root; it is needed for the reversed majorization.
    The root is found for ``u = ln f`` from

        ln(1 - exp(-u)) + g*u - ln t = 0,

    which is increasing in ``u`` and never overflows.
    """
    if g < 0:
        raise DomainError(f"g must be non-negative, got {g!r}")
    if t < 0:
        raise DomainError(f"the implicit equation is solved for t >= 0 only, got t={t!r}")
    if t == 0:
        return 0.0
    if g == 1.0:
        return math.log1p(t)
    if g == 0.0:
        if t >= 1.0:
            raise DomainError(f"boson generating function diverges for t >= 1 (t={t!r})")
        return -math.log1p(-t)
    log_t = math.log(t)

    def psi(u):
        return math.log(-math.expm1(-u)) + g * u - log_t

    def dpsi(u):
        # 1/expm1(u) without overflow for large u
        return math.exp(-u) / -math.expm1(-u) + g

    if g < 1.0:
        # f >= 1 + t; the upper end grows geometrically (ln2/g is finite
        # in exact arithmetic but overflows for subnormal g)
        lo = math.log1p(t)
        hi = None
    else:
        # f <= 1 + t, and f - 1 >= t * (1 + t)**(1 - g)
        hi = math.log1p(t)
        lo = math.log1p(math.exp(log_t + (1.0 - g) * math.log1p(t)))
    # psi is increasing; a rounding-level bracket may show one sign only
    if psi(lo) >= 0:
        return lo
    if hi is None:
        step = max(1.0, lo)
        hi = lo + step
        while psi(hi) < 0:
            step *= 2.0
            hi = lo + step
            if math.isinf(hi):
                raise DomainError(f"ln f exceeds the float range at g={g!r}, t={t!r}")
    elif hi <= lo or psi(hi) <= 0:
        return hi
    return solve_bracketed(psi, Bracket(lo, hi, -1, 1), tol, fprime=dpsi)


def haldane_wu_value(g: float, t: float, tol: Tolerances = DEFAULT_TOL) -> float:
    """``f_g(t)`` for ``t >= 0``, any ``g >= 0`` (see :func:`log_haldane_wu`)."""
    if g == 1.0:
        return 1.0 + t
    if g == 0.0:
        if t >= 1.0:
            raise DomainError(f"boson generating function diverges for t >= 1 (t={t!r})")
        if t < 0:
            raise DomainError(f"the implicit equation is solved for t >= 0 only, got t={t!r}")
        return 1.0 / (1.0 - t)
    return math.exp(log_haldane_wu(g, t, tol))


def gentile_value(G: float, t: float) -> float:
    """``F_G(t) = (1 - t**(G+1)) / (1 - t)`` with the limit ``G + 1`` at ``t = 1``."""
    if t < 0:
        if not float(G).is_integer():
            raise DomainError("negative t needs an integer Gentile parameter")
        return math.fsum(t ** k for k in range(int(G) + 1))
    if t == 0:
        return 1.0
    if t == 1.0:
        return G + 1.0
    if float(G).is_integer() and abs(t - 1.0) < 1e-6:
        return math.fsum(t ** k for k in range(int(G) + 1))
    lt = math.log(t)
    return math.expm1((G + 1.0) * lt) / math.expm1(lt)


def log_gentile(G: float, t: float) -> float:
    if t > 1.0:
        # ln F = G ln t + ln((1 - t**-(G+1)) / (1 - 1/t)), safe for huge t
        inv = 1.0 / t
        return G * math.log(t) + math.log(gentile_value(G, inv))
    return math.log(gentile_value(G, t))


def evaluate(stat: Statistics, t: float, tol: Tolerances = DEFAULT_TOL) -> float:
    """Value of the generating function of ``stat`` at ``t``.

    Non-negative ``t`` uses the implicit-equation solver (Haldane-Wu) or the
    rational closed form (Gentile). Negative ``t`` is only available inside
    the radius of convergence and goes through the Taylor series.
    """
    _check_stat(stat)
    if isinstance(stat, Gentile):
        return gentile_value(stat.G, t)
    if t < 0:
        return series_value(stat, SeriesKind.F, t, tol=tol)
    return haldane_wu_value(stat.g, t, tol)


def log_value(stat: Statistics, t: float, tol: Tolerances = DEFAULT_TOL) -> float:
    """``ln f(t)`` for ``t >= 0``, without forming ``f`` when it is large."""
    _check_stat(stat)
    if isinstance(stat, Gentile):
        return log_gentile(stat.G, t)
    return log_haldane_wu(stat.g, t, tol)


def power_value(stat: Statistics, t: float, m: float, tol: Tolerances = DEFAULT_TOL) -> float:
    """``f(t)**m`` for real ``m`` (pointwise route for non-integer powers)."""
    return math.exp(m * log_value(stat, t, tol))


def derivative(stat: Statistics, t: float, tol: Tolerances = DEFAULT_TOL) -> float:
    """Exact first derivative ``f'(t)`` for ``t >= 0``.

    Haldane-Wu uses ``t f' (g f + 1 - g) = f**2 - f``; Gentile differentiates
    the rational form.
    """
    _check_stat(stat)
    if t < 0:
        raise DomainError(f"derivative is provided for t >= 0, got {t!r}")
    if isinstance(stat, HaldaneWu):
        g = stat.g
        if t == 0:
            return 1.0
        f = haldane_wu_value(g, t, tol)
        return f * (f - 1.0) / (t * (g * f + 1.0 - g))
    G = stat.G
    if t == 0:
        return 1.0
    # t F'/F = [q((G+1)L) - q(L)] / L  with  q(a) = a / (1 - exp(-a)),  L = ln t
    return gentile_value(G, t) * gentile_log_slope(G, t) / t


def _q(a: float) -> float:
    if a == 0.0:
        return 1.0
    if a < 0:
        return a * math.exp(a) / math.expm1(a)
    return a / -math.expm1(-a)


def gentile_log_slope(G: float, t: float) -> float:
    """``t F_G'(t) / F_G(t)``, increasing from 0 (t -> 0) to ``G`` (t -> inf)."""
    if t == 0:
        return 0.0
    L = math.log(t)
    if abs((G + 1.0) * L) < 1e-3:
        a2 = (G + 1.0) ** 2 - 1.0
        a4 = (G + 1.0) ** 4 - 1.0
        return 0.5 * G + a2 * L / 12.0 - a4 * L ** 3 / 720.0
    return (_q((G + 1.0) * L) - _q(L)) / L


def log_slope(stat: Statistics, t: float, tol: Tolerances = DEFAULT_TOL) -> float:
    """Logarithmic derivative ``t f'(t) / f(t)`` for ``t >= 0``.

    For Haldane-Wu this is ``(f - 1) / (g f + 1 - g)``, evaluated through
    ``1/f`` so that large ``f`` does not overflow.
    """
    _check_stat(stat)
    if t < 0:
        raise DomainError(f"log_slope is provided for t >= 0, got {t!r}")
    if isinstance(stat, Gentile):
        return gentile_log_slope(stat.G, t)
    g = stat.g
    inv_f = math.exp(-log_haldane_wu(g, t, tol))
    return (1.0 - inv_f) / (g + (1.0 - g) * inv_f)


def radius(stat: Statistics) -> float:
    """Radius of absolute convergence of the Taylor series of ``f``.

    ``t0 = exp(-g ln g - (1-g) ln(1-g))`` for Haldane-Wu. Gentile generating
    functions are polynomials (or entire-like rational forms), reported as
    ``math.inf``.
    """
    _check_stat(stat)
    if isinstance(stat, Gentile):
        return math.inf
    return haldane_wu_radius(stat.g)


def haldane_wu_radius(g: float) -> float:
    if not 0.0 <= g <= 1.0:
        raise DomainError(f"g must lie in [0, 1], got {g!r}")
    return math.exp(-_xlogx(g) - _xlogx(1.0 - g))


def _xlogx(x: float) -> float:
    return 0.0 if x == 0 else x * math.log(x)


# ---------------------------------------------------------------------------
# Taylor coefficients


class SeriesKind(enum.Enum):
    F = "f"
    LOG_F = "log_f"
    F_POW_M = "f_pow_m"
    H_POW_M = "h_pow_m"


@dataclass(frozen=True)
class SeriesCoefficients:
    """Leading Taylor coefficients ``coeffs[n]``, ``n = 0..n_max``.

    ``g`` is ``None`` for Gentile series; ``radius`` is ``math.inf`` there.
    """

    kind: SeriesKind
    coeffs: tuple
    g: Optional[float]
    radius: float
    m: Optional[float] = None

    @property
    def n_max(self) -> int:
        return len(self.coeffs) - 1


def _scaled_product(factors) -> float:
    """Product of floats that keeps a separate binary exponent, so long
    products with huge intermediate values neither overflow nor underflow."""
    mant, expo = 1.0, 0
    for factor in factors:
        if factor == 0.0:
            return 0.0
        mant, e = math.frexp(mant * factor)
        expo += e
    return math.ldexp(mant, expo)


def f_coefficient(g: float, n: int) -> float:
    """``f_n = prod_{k=2}^{n} (1 - g n / k)``, with ``f_0 = f_1 = 1``."""
    if n <= 1:
        return 1.0
    return _scaled_product((k - g * n) / k for k in range(2, n + 1))


def log_coefficient(g: float, n: int) -> float:
    """``w_n = (1/n) prod_{k=1}^{n-1} (1 - g n / k)``, with ``w_0 = 0``.

    Pole-free at ``g = 0`` and ``g = 1``, where it gives ``1/n`` and
    ``(-1)**(n+1)/n``.
    """
    if n == 0:
        return 0.0
    return _scaled_product((k - g * n) / k for k in range(1, n)) / n


def power_coefficient(g: float, m: int, n: int) -> float:
    """Coefficient of ``t**n`` in ``f_g(t)**m`` for integer ``m``."""
    if n == 0:
        return 1.0
    if m == 0:
        return 0.0
    if n == 1:
        return float(m)
    return m * _scaled_product((k + m - 1 - g * n) / k for k in range(2, n + 1))


def h_power_coefficient(g: float, m: int, n: int) -> float:
    """Coefficient of ``t**n`` in ``(f_g(t) - 1)**m`` for integer ``m >= 1``.

    Uses ``(m/n) prod_{k=m+1}^{n} (k - g n)/(k - m)``, a pole-free rewrite of
    the gamma-ratio form.
    """
    if n < m:
        return 0.0
    if n == m:
        return 1.0
    return (m / n) * _scaled_product((k - g * n) / (k - m) for k in range(m + 1, n + 1))


def coefficients(stat: Statistics, kind: SeriesKind, n_max: int,
                 m: Optional[float] = None) -> SeriesCoefficients:
    """Taylor coefficients of ``f``, ``ln f``, ``f**m`` or ``(f - 1)**m``.

    Haldane-Wu supports every kind (``m`` integer; ``m >= 1`` for
    ``H_POW_M``). Gentile with integer ``G`` supports ``F`` and ``F_POW_M``
    with ``m >= 0`` as exact polynomial coefficients.
    """
    _check_stat(stat)
    kind = SeriesKind(kind)
    n_max = int(n_max)
    if n_max < 0:
        raise DomainError(f"n_max must be >= 0, got {n_max}")
    if kind in (SeriesKind.F_POW_M, SeriesKind.H_POW_M):
        if m is None or not float(m).is_integer():
            raise DomainError(f"{kind.name} needs an integer power m, got {m!r}; "
                              "use power_value for non-integer powers")
        m = int(m)
        if kind is SeriesKind.H_POW_M and m < 1:
            raise DomainError(f"H_POW_M needs m >= 1, got {m}")
    elif m is not None:
        raise DomainError(f"{kind.name} takes no power m")

    if isinstance(stat, Gentile):
        if not stat.is_integer or kind not in (SeriesKind.F, SeriesKind.F_POW_M):
            raise DomainError(f"{kind.name} coefficients are not provided for {stat.label}")
        power = 1 if kind is SeriesKind.F else m
        if power < 0:
            raise DomainError("Gentile F_POW_M needs m >= 0")
        poly = polynomial_power([1] * (int(stat.G) + 1), power, n_max)
        coeffs = tuple(float(c) for c in poly) + (0.0,) * (n_max + 1 - len(poly))
        return SeriesCoefficients(kind, coeffs, None, math.inf, m)

    g = stat.g
    if kind is SeriesKind.F:
        coeffs = tuple(f_coefficient(g, n) for n in range(n_max + 1))
    elif kind is SeriesKind.LOG_F:
        coeffs = tuple(log_coefficient(g, n) for n in range(n_max + 1))
    elif kind is SeriesKind.F_POW_M:
        coeffs = tuple(power_coefficient(g, m, n) for n in range(n_max + 1))
    else:
        coeffs = tuple(h_power_coefficient(g, m, n) for n in range(n_max + 1))
    return SeriesCoefficients(kind, coeffs, g, haldane_wu_radius(g), m)


def polynomial_power(coeffs: Sequence[int], power: int, n_max: Optional[int] = None) -> list:
    """Exact integer coefficients of ``p(t)**power`` up to degree ``n_max``.

    The polynomial is packed into one big integer (Kronecker substitution),
    so the repeated convolution is done by Python's integer multiplication.
    """
    coeffs = [int(c) for c in coeffs]
    if any(c < 0 for c in coeffs):
        raise DomainError("polynomial_power packs non-negative coefficients only")
    if power < 0:
        raise DomainError("power must be non-negative")
    degree = (len(coeffs) - 1) * power
    if n_max is None:
        n_max = degree
    if power == 0:
        return [1]
    bound = sum(coeffs) ** power
    bits = bound.bit_length() + 1
    packed = 0
    for c in reversed(coeffs):
        packed = (packed << bits) | c
    product = packed ** power
    mask = (1 << bits) - 1
    top = min(n_max, degree)
    return [(product >> (bits * k)) & mask for k in range(top + 1)]


# ---------------------------------------------------------------------------
# series evaluation


def eval_series(coeffs: SeriesCoefficients, t: float,
                tol: Tolerances = DEFAULT_TOL) -> float:
    """Horner sum of a truncated Taylor series.

    Raises
    ------
    OutsideRadius
        If ``|t| >= coeffs.radius``.
    TailTooLarge
        If any of the last few included terms exceeds ``tol.series_tail``
        (several are inspected because isolated coefficients can vanish).
    """
    if not abs(t) < coeffs.radius:
        raise OutsideRadius(f"|t|={abs(t)!r} is not inside the radius {coeffs.radius!r}")
    c = coeffs.coeffs
    if math.isfinite(coeffs.radius):
        last = range(max(0, len(c) - 4), len(c))
        tail = max(abs(c[n]) * abs(t) ** n for n in last)
        if tail > tol.series_tail:
            raise TailTooLarge(
                f"last terms reach {tail:.3g} > {tol.series_tail:.3g}; increase n_max")
    acc = 0.0
    for value in reversed(c):
        acc = acc * t + value
    return acc


def terms_for_tail(g: float, t: float, tail: float) -> int:
    """A term count after which ``|c_n t^n|`` of the Haldane-Wu series falls
    below ``tail`` (the coefficients decay like ``t0**-n`` at worst)."""
    ratio = abs(t) / haldane_wu_radius(g)
    if ratio == 0:
        return 4
    if ratio >= 1:
        raise OutsideRadius(f"|t| / radius = {ratio!r} >= 1")
    return int(math.ceil(math.log(tail) / math.log(ratio))) + 8


def series_value(stat: HaldaneWu, kind: SeriesKind, t: float, m: Optional[int] = None,
                 tol: Tolerances = DEFAULT_TOL, n_max: Optional[int] = None) -> float:
    """Evaluate a Haldane-Wu Taylor series with an automatically sized prefix."""
    if not isinstance(stat, HaldaneWu):
        raise DomainError("series_value is provided for Haldane-Wu statistics")
    if n_max is None:
        n_max = terms_for_tail(stat.g, t, tol.series_tail)
    while True:
        coeffs = coefficients(stat, kind, n_max, m)
        try:
            return eval_series(coeffs, t, tol)
        except TailTooLarge:
            if n_max > 200000:
                raise
            n_max *= 2


def duality_residual(g: float, t: float, tol: Tolerances = DEFAULT_TOL) -> float:
    """``f_g(t) f_{1-g}(-t) - 1``, which vanishes identically.

    Both factors go through their Taylor series, so ``|t|`` must be below
    both radii.
    """
    if not 0.0 < g < 1.0:
        raise DomainError(f"duality is checked for 0 < g < 1, got {g!r}")
    if t == 0:
        return 0.0
    a = series_value(HaldaneWu(g), SeriesKind.F, t, tol=tol)
    b = series_value(HaldaneWu(1.0 - g), SeriesKind.F, -t, tol=tol)
    return a * b - 1.0
