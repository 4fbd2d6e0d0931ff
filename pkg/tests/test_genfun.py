import itertools
import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from exclstat.errors import DomainError, OutsideRadius, TailTooLarge
from exclstat.genfun import (Gentile, HaldaneWu, SeriesCoefficients, SeriesKind, coefficients,
                             derivative, duality_residual, eval_series, evaluate, log_haldane_wu,
                             log_slope, log_value, polynomial_power, power_value, radius, series_value)

G_GRID = [round(0.1 * k, 1) for k in range(1, 10)]


# exact oracles ------------------------------------------------------------

def binom_series(a, n_max):
    """Coefficients of (1 + x)**a as Fractions."""
    out = [Fraction(1)]
    for k in range(1, n_max + 1):
        out.append(out[-1] * (a - k + 1) / k)
    return out


def mul(a, b, n_max):
    return [sum(a[i] * b[n - i] for i in range(n + 1)) for n in range(n_max + 1)]


def compose_binom(h, a, n_max):
    """(1 + h(t))**a for a series h with h[0] = 0."""
    c = binom_series(a, n_max)
    out = [Fraction(0)] * (n_max + 1)
    power = [Fraction(1)] + [Fraction(0)] * n_max
    for k in range(n_max + 1):
        out = [o + c[k] * p for o, p in zip(out, power)]
        power = mul(power, h, n_max)
    return out


def exact_f_series(g, n_max):
    """Fixed-point iteration of h = t (1 + h)**(1 - g) in exact arithmetic."""
    g = Fraction(g)
    h = [Fraction(0)] * (n_max + 1)
    for _ in range(n_max + 1):
        rhs = compose_binom(h, 1 - g, n_max)
        h = [Fraction(0)] + rhs[:n_max]
    return [Fraction(1)] + h[1:]


def exact_log_series(f, n_max):
    """ln f from n l_n = sum_k k f_k (n-k) ... via l' f = f'."""
    l = [Fraction(0)] * (n_max + 1)
    for n in range(1, n_max + 1):
        # n f_n = sum_{k=1}^{n} k l_k f_{n-k}
        acc = n * f[n] - sum(k * l[k] * f[n - k] for k in range(1, n))
        l[n] = acc / n
    return l


EXACT_G = [Fraction(1, 2), Fraction(1, 3), Fraction(2, 5), Fraction(3, 4)]
N_EXACT = 14


@pytest.fixture(scope="module", params=EXACT_G, ids=str)
def exact(request):
    g = request.param
    return g, exact_f_series(g, N_EXACT)


# types ----------------------------------------------------------------------

def test_statistics_validation():
    with pytest.raises(DomainError):
        HaldaneWu(-0.1)
    with pytest.raises(DomainError):
        HaldaneWu(1.5)
    with pytest.raises(DomainError):
        Gentile(0)
    with pytest.raises(DomainError):
        Gentile(math.inf)
    assert Gentile(3).is_integer and not Gentile(2.5).is_integer


# pointwise values -------------------------------------------------------------

class TestEvaluate:
    def test_fermion(self):
        for t in (0.0, 1.0, 2.0):
            assert evaluate(HaldaneWu(1), t) == pytest.approx(1 + t, abs=1e-12)

    def test_boson(self):
        assert evaluate(HaldaneWu(0), 0.5) == pytest.approx(2.0, abs=1e-12)
        with pytest.raises(DomainError):
            evaluate(HaldaneWu(0), 1.0)

    def test_semion_golden_ratio(self):
        assert evaluate(HaldaneWu(0.5), 1.0) == pytest.approx((3 + math.sqrt(5)) / 2, abs=1e-12)

    @pytest.mark.parametrize("t", [1e-8, 0.01, 0.5, 1.0, 3.0, 40.0, 1e4])
    def test_semion_closed_form(self, t):
        root = (t + math.sqrt(t * t + 4)) / 2
        assert evaluate(HaldaneWu(0.5), t) == pytest.approx(root * root, rel=1e-13)

    def test_g_above_one(self):
        # f - 1 = t / f
        for t in (0.1, 1.0, 3.0):
            assert math.exp(log_haldane_wu(2.0, t)) == pytest.approx((1 + math.sqrt(1 + 4 * t)) / 2,
                                                                     rel=1e-13)

    def test_gentile(self):
        assert evaluate(Gentile(1), 2.0) == pytest.approx(3.0, abs=1e-12)
        assert evaluate(Gentile(3), 0.5) == pytest.approx(1.875, abs=1e-12)
        assert evaluate(Gentile(2), 1.0) == pytest.approx(3.0, abs=1e-12)
        assert evaluate(Gentile(2.5), 1.0) == pytest.approx(3.5, abs=1e-12)
        assert evaluate(Gentile(2), -1.0) == pytest.approx(1.0, abs=1e-12)

    @pytest.mark.parametrize("G", [1, 2, 3, 7, 20])
    @pytest.mark.parametrize("t", [0.3, 0.999, 1.0 - 1e-9, 1.0 + 1e-7, 1.2, 5.0])
    def test_gentile_polynomial_oracle(self, G, t):
        oracle = math.fsum(t ** k for k in range(G + 1))
        assert evaluate(Gentile(G), t) == pytest.approx(oracle, rel=1e-12)

    def test_negative_t_through_series(self):
        # semion: f^(1/2) = (t + sqrt(t^2 + 4)) / 2 also for t < 0
        t = -0.5
        root = (t + math.sqrt(t * t + 4)) / 2
        assert evaluate(HaldaneWu(0.5), t) == pytest.approx(root * root, abs=1e-12)
        with pytest.raises(OutsideRadius):
            evaluate(HaldaneWu(0.5), -3.0)

    def test_derivative_examples(self):
        assert derivative(HaldaneWu(0.3), 0.0) == 1.0
        assert derivative(Gentile(4), 0.0) == 1.0
        assert derivative(Gentile(3), 1.0) == pytest.approx(6.0, abs=1e-12)
        with pytest.raises(DomainError):
            derivative(HaldaneWu(0.3), -0.1)

    @pytest.mark.parametrize("stat", [HaldaneWu(0.0), HaldaneWu(0.2), HaldaneWu(0.5),
                                      HaldaneWu(1.0), Gentile(1), Gentile(2.5), Gentile(6)])
    @pytest.mark.parametrize("t", [0.05, 0.4, 0.9, 1.0, 2.5])
    def test_derivative_against_difference_quotient(self, stat, t):
        if stat == HaldaneWu(0.0) and t >= 0.9:
            t = 0.6
        h = 1e-5 * t
        fd = (evaluate(stat, t + h) - evaluate(stat, t - h)) / (2 * h)
        assert derivative(stat, t) == pytest.approx(fd, rel=1e-7)
        assert log_slope(stat, t) == pytest.approx(t * fd / evaluate(stat, t), rel=1e-7)

    def test_gentile_log_slope_limits(self):
        assert log_slope(Gentile(3), 1.0) == pytest.approx(1.5, abs=1e-12)
        assert log_slope(Gentile(3), 1e-9) == pytest.approx(0.0, abs=1e-8)
        assert log_slope(Gentile(3), 1e9) == pytest.approx(3.0, abs=1e-8)

    def test_power_value(self):
        phi = (1 + math.sqrt(5)) / 2
        assert power_value(HaldaneWu(0.5), 1.0, 2.5) == pytest.approx(phi ** 5, rel=1e-13)


class TestInvariants:
    @settings(max_examples=150, deadline=None)
    @given(st.one_of(st.just(0.0), st.floats(min_value=1e-6, max_value=1.0)),
           st.floats(min_value=0.0, max_value=50.0))
    def test_implicit_equation_residual(self, g, t):
        # (f - 1 - t f^(1-g)) / f, since f overflows for small g on this range
        if g == 0 and t >= 1:
            return
        lf = log_value(HaldaneWu(g), t)
        assert abs(-math.expm1(-lf) - t * math.exp(-g * lf)) <= 1e-10

    def test_tiny_g(self):
        # ln f ~ ln(1/g) stays representable for t = 1
        lf = log_value(HaldaneWu(1e-300), 1.0)
        assert abs(-math.expm1(-lf) - math.exp(-1e-300 * lf)) <= 1e-12
        with pytest.raises(DomainError):
            log_value(HaldaneWu(1e-313), 2.0)

    @settings(max_examples=100, deadline=None)
    @given(st.floats(min_value=0.01, max_value=1.0), st.floats(min_value=0.0, max_value=20.0),
           st.floats(min_value=1e-3, max_value=1.0))
    def test_monotone_and_bounded(self, g, t, dt):
        lo = evaluate(HaldaneWu(g), t)
        hi = evaluate(HaldaneWu(g), t + dt)
        assert hi > lo
        # upper bound from (f - 1) = t f^(1-g) with f >= 1 + t
        assert 1 + t - 1e-12 <= lo

    @settings(max_examples=100, deadline=None)
    @given(st.floats(min_value=0.05, max_value=0.95), st.floats(min_value=0.0, max_value=0.8))
    def test_decreasing_in_g(self, g, frac):
        t = frac * radius(HaldaneWu(g))
        assert evaluate(HaldaneWu(g), t) >= evaluate(HaldaneWu(min(1.0, g + 0.05)), t) - 1e-12


# radius and coefficients ----------------------------------------------------

@pytest.mark.parametrize("g", [0.1, 0.3, 0.5, 0.7, 0.9])
def test_radius(g):
    oracle = (1 / g) ** g * (1 / (1 - g)) ** (1 - g)
    assert radius(HaldaneWu(g)) == pytest.approx(oracle, rel=1e-14)


def test_radius_examples():
    assert radius(HaldaneWu(0.5)) == pytest.approx(2.0, rel=1e-15)
    assert radius(HaldaneWu(0.3)) == pytest.approx(1.8420228, abs=1e-7)
    assert radius(HaldaneWu(0.0)) == 1.0
    assert radius(HaldaneWu(1.0)) == 1.0
    assert radius(Gentile(3)) == math.inf


class TestCoefficients:
    def test_semion_examples(self):
        c = coefficients(HaldaneWu(0.5), SeriesKind.F, 3).coeffs
        assert c == pytest.approx((1.0, 1.0, 0.5, 0.125), abs=1e-15)

    def test_fermion_and_boson(self):
        assert coefficients(HaldaneWu(1), SeriesKind.F, 5).coeffs == pytest.approx((1, 1, 0, 0, 0, 0))
        assert coefficients(HaldaneWu(0), SeriesKind.F, 5).coeffs == pytest.approx((1,) * 6)

    def test_against_exact_f(self, exact):
        g, f = exact
        c = coefficients(HaldaneWu(float(g)), SeriesKind.F, N_EXACT).coeffs
        for a, b in zip(c, f):
            assert a == pytest.approx(float(b), rel=1e-13, abs=1e-300)

    def test_against_exact_log(self, exact):
        g, f = exact
        l = exact_log_series(f, N_EXACT)
        c = coefficients(HaldaneWu(float(g)), SeriesKind.LOG_F, N_EXACT).coeffs
        assert c[0] == 0.0
        for a, b in zip(c[1:], l[1:]):
            assert a == pytest.approx(float(b), rel=1e-13, abs=1e-300)

    @pytest.mark.parametrize("m", [0, 1, 2, 3, 5])
    def test_against_exact_power(self, exact, m):
        g, f = exact
        p = [Fraction(1)] + [Fraction(0)] * N_EXACT
        for _ in range(m):
            p = mul(p, f, N_EXACT)
        c = coefficients(HaldaneWu(float(g)), SeriesKind.F_POW_M, N_EXACT, m=m).coeffs
        for a, b in zip(c, p):
            assert a == pytest.approx(float(b), rel=1e-12, abs=1e-300)

    @pytest.mark.parametrize("m", [1, 2, 4])
    def test_against_exact_h_power(self, exact, m):
        g, f = exact
        h = [Fraction(0)] + f[1:]
        p = [Fraction(1)] + [Fraction(0)] * N_EXACT
        for _ in range(m):
            p = mul(p, h, N_EXACT)
        c = coefficients(HaldaneWu(float(g)), SeriesKind.H_POW_M, N_EXACT, m=m).coeffs
        for a, b in zip(c, p):
            assert a == pytest.approx(float(b), rel=1e-12, abs=1e-300)

    def test_large_index_finite(self):
        c = coefficients(HaldaneWu(0.3), SeriesKind.F, 3000).coeffs
        assert all(math.isfinite(x) for x in c)
        # ratio approaches 1/t0 in modulus
        r = abs(c[3000] / c[2999]) if c[2999] else None
        if r is not None:
            assert r == pytest.approx(1 / radius(HaldaneWu(0.3)), rel=0.02)

    def test_gentile_polynomial(self):
        c = coefficients(Gentile(2), SeriesKind.F_POW_M, 6, m=2).coeffs
        assert c == (1.0, 2.0, 3.0, 2.0, 1.0, 0.0, 0.0)
        assert coefficients(Gentile(3), SeriesKind.F, 2).coeffs == (1.0, 1.0, 1.0)

    def test_domain(self):
        with pytest.raises(DomainError):
            coefficients(HaldaneWu(0.5), SeriesKind.F_POW_M, 5, m=1.5)
        with pytest.raises(DomainError):
            coefficients(HaldaneWu(0.5), SeriesKind.H_POW_M, 5, m=0)
        with pytest.raises(DomainError):
            coefficients(HaldaneWu(0.5), SeriesKind.F, 5, m=2)
        with pytest.raises(DomainError):
            coefficients(Gentile(2.5), SeriesKind.F, 5)
        with pytest.raises(DomainError):
            coefficients(Gentile(2), SeriesKind.LOG_F, 5)
        with pytest.raises(DomainError):
            coefficients(HaldaneWu(0.5), SeriesKind.F, -1)


@pytest.mark.parametrize("G, power", [(1, 5), (2, 3), (3, 4), (4, 2)])
def test_polynomial_power_brute_force(G, power):
    counts = [0] * (G * power + 1)
    for occ in itertools.product(range(G + 1), repeat=power):
        counts[sum(occ)] += 1
    assert polynomial_power([1] * (G + 1), power) == counts
    assert polynomial_power([1] * (G + 1), power, 3) == counts[:4]


def test_polynomial_power_edge_cases():
    assert polynomial_power([1, 1], 0) == [1]
    with pytest.raises(DomainError):
        polynomial_power([1, -1], 2)
    # large exact coefficients
    big = polynomial_power([1, 1, 1], 200, 200)
    assert big[1] == 200 and big[2] == 200 + 200 * 199 // 2


# series evaluation -----------------------------------------------------------

class TestEvalSeries:
    def test_geometric(self):
        c = SeriesCoefficients(SeriesKind.F, tuple([1.0] * 80), 0.0, 1.0)
        assert eval_series(c, 0.5) == pytest.approx(2.0, abs=1e-15)

    def test_outside_radius(self):
        c = coefficients(HaldaneWu(0.5), SeriesKind.F, 10)
        with pytest.raises(OutsideRadius):
            eval_series(c, 2.0)

    def test_tail_too_large(self):
        c = coefficients(HaldaneWu(0.5), SeriesKind.F, 10)
        with pytest.raises(TailTooLarge):
            eval_series(c, 1.5)

    @pytest.mark.parametrize("g", G_GRID)
    def test_solver_vs_series(self, g):
        t0 = radius(HaldaneWu(g))
        for t in np.linspace(0, 0.9 * t0, 7):
            a = series_value(HaldaneWu(g), SeriesKind.F, float(t))
            b = evaluate(HaldaneWu(g), float(t))
            assert abs(a - b) <= 1e-9
            la = series_value(HaldaneWu(g), SeriesKind.LOG_F, float(t))
            assert abs(la - log_value(HaldaneWu(g), float(t))) <= 1e-9


class TestDuality:
    def test_semion_self_dual(self):
        assert abs(duality_residual(0.5, 1.0)) <= 1e-12

    @pytest.mark.parametrize("g", G_GRID)
    def test_grid(self, g):
        bound = 0.9 * min(radius(HaldaneWu(g)), radius(HaldaneWu(1 - g)))
        for t in np.linspace(-bound, bound, 9):
            assert abs(duality_residual(g, float(t))) <= 1e-10

    def test_domain(self):
        with pytest.raises(DomainError):
            duality_residual(1.0, 0.1)
