"""Acceptance criteria 1-10, each at its stated tolerance and time budget.

Every test records one PASS/FAIL line; ``conftest.py`` prints them in the
terminal summary. Run just this module with ``pytest tests/test_acceptance.py``.
"""
import subprocess
import sys
import time
from fractions import Fraction

import numpy as np

from exclstat.charge import ChargeProblem, charge_both, charge_closed
from exclstat.genfun import (Gentile, HaldaneWu, SeriesKind, coefficients, duality_residual, evaluate,
                             radius, series_value)
from exclstat.identities import (nu_half_boundary, verify_dilog_inequality,
                                 verify_entropy_charge_majorization, verify_majorization,
                                 verify_reverse_majorization, verify_special_value_families)
from exclstat.thermo import (count_states, entropy_closed_hw, entropy_generic, extrapolate_entropy,
                             finite_size_entropy)

RESULTS = {}

G9 = [round(0.1 * k, 1) for k in range(1, 10)]
G19 = [round(0.05 * k, 2) for k in range(1, 20)]
PHI6 = (0.0, 0.25, 0.5, 1.0, 2.0, 5.0)


def record(number, title, ok, detail):
    line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {title}: {detail}"
    RESULTS[number] = line
    print(line)
    assert ok, line


def convolution_power(base, m, n_max):
    value, scale = np.array([1.0]), np.array([1.0])
    for _ in range(m):
        value = np.convolve(value, base)[:n_max + 1]
        scale = np.convolve(scale, np.abs(base))[:n_max + 1]
    return value, scale


def test_criterion_01_free_fermion():
    start = time.perf_counter()
    r = charge_both(ChargeProblem(HaldaneWu(1.0), 0.0))
    elapsed = time.perf_counter() - start
    err = max(abs(r.c_integral - 0.5), abs(r.c_closed - 0.5), r.residual)
    record(1, "free-fermion anchor", err <= 1e-10 and elapsed < 1.0,
           f"max error {err:.2e} (tol 1e-10), {elapsed:.3f} s (limit 1 s)")


def test_criterion_02_charge_equivalence_sweep():
    start = time.perf_counter()
    worst = max(charge_both(ChargeProblem(HaldaneWu(g), phi)).residual
                for g in G19 for phi in PHI6)
    elapsed = time.perf_counter() - start
    record(2, "integral vs dilogarithm charge, 19x6 grid", worst <= 1e-8 and elapsed < 30.0,
           f"max |c_integral - c_closed| {worst:.2e} (tol 1e-8), {elapsed:.2f} s (limit 30 s)")


def test_criterion_03_rational_charges():
    worst_value = worst_spread = 0.0
    for nu, target in ((2.0, 0.4), (1.0, 0.5), (0.5, 0.6)):
        values = [charge_closed(ChargeProblem(HaldaneWu(g), nu - g))
                  for g in np.linspace(0.0, min(1.0, nu), 11)]
        worst_value = max(worst_value, max(abs(v - target) for v in values))
        worst_spread = max(worst_spread, max(values) - min(values))
    record(3, "rational charges 2/5, 1/2, 3/5", worst_value <= 1e-10 and worst_spread <= 1e-10,
           f"max error {worst_value:.2e}, max split dependence {worst_spread:.2e} (tol 1e-10)")


def test_criterion_04_series():
    solver = 0.0
    for g in G9:
        t0 = radius(HaldaneWu(g))
        for t in np.linspace(0.0, 0.9 * t0, 19):
            t = float(t)
            solver = max(solver, abs(series_value(HaldaneWu(g), SeriesKind.F, t)
                                     - evaluate(HaldaneWu(g), t)))
    power = hpower = 0.0
    n_max = 40
    for g in G9:
        base = np.array(coefficients(HaldaneWu(g), SeriesKind.F, n_max).coeffs)
        for m in range(2, 7):
            closed = np.array(coefficients(HaldaneWu(g), SeriesKind.F_POW_M, n_max, m).coeffs)
            conv, scale = convolution_power(base, m, n_max)
            power = max(power, float(np.max(np.abs(closed - conv) / scale)))
        h = base.copy()
        h[0] = 0.0
        for m in range(2, 6):
            closed = np.array(coefficients(HaldaneWu(g), SeriesKind.H_POW_M, n_max, m).coeffs)
            conv, scale = convolution_power(h, m, n_max)
            nz = scale > 0
            hpower = max(hpower, float(np.max(np.abs(closed - conv)[nz] / scale[nz])),
                         float(np.max(np.abs(closed[~nz]))) if (~nz).any() else 0.0)
    ok = solver <= 1e-9 and power <= 1e-10 and hpower <= 1e-10
    record(4, "Taylor series", ok,
           f"solver vs series {solver:.2e} (tol 1e-9), f^m vs convolution {power:.2e}, "
           f"(f-1)^m vs convolution {hpower:.2e} (tol 1e-10, relative to |.|^m convolution)")


def test_criterion_05_special_values():
    reports = verify_special_value_families()
    boundary = nu_half_boundary()
    by_name = {r.name: r for r in reports}
    ok = all(r.passed for r in reports) and round(boundary, 2) == 0.88
    detail = ", ".join(f"{r.name} {r.max_residual:.1e}/{r.tolerance:.0e}" for r in reports
                       if r.max_residual is not None)
    record(5, "series identities at nu = 2, 1, 1/2", ok and "special_value_nu_half" in by_name,
           f"{detail}; boundary {boundary:.6f}")


def test_criterion_06_majorization():
    reports = [verify_majorization(G) for G in (1.5, 2.0, 3.0, 5.0, 10.0)]
    reports += [verify_reverse_majorization(G) for G in (0.3, 0.5, 0.8, 0.95)]
    for G in (1.5, 2.0, 3.0):
        reports += verify_entropy_charge_majorization(G)
    dilog = verify_dilog_inequality()
    reports += dilog
    strict = [r for r in reports if r.min_margin is not None]
    least = min(r.min_margin for r in strict)
    equality = max(r.max_residual for r in dilog if r.name.startswith("dilog_equality"))
    ok = all(r.passed for r in reports) and least > 0 and equality <= 1e-7
    record(6, "majorization and dilogarithm inequality", ok,
           f"{len(strict)} strict checks, smallest margin {least:.2e}; "
           f"equality endpoints within {equality:.2e} (tol 1e-7)")


def test_criterion_07_entropy():
    s_err = f_err = 0.0
    for g in G19:
        for k in range(1, 20):
            mu = k / (20 * g)
            p = entropy_generic(HaldaneWu(g), mu)
            s_err = max(s_err, abs(p.s - entropy_closed_hw(g, mu)))
            f_err = max(f_err, abs(evaluate(HaldaneWu(g), p.x) - (1 + (1 - g) * mu) / (1 - g * mu)))
    exact = True
    for G in range(1, 5):
        for N in range(1, 13):
            for t in (Fraction(1, 3), Fraction(5, 2)):
                lhs = sum(count_states(Gentile(G), N, n).W * t ** n
                          for n in range(G * N + 1))
                exact &= lhs == sum(t ** k for k in range(G + 1)) ** N
    ok = s_err <= 1e-8 and f_err <= 1e-8 and exact
    record(7, "entropy consistency", ok,
           f"closed form {s_err:.2e}, saddle identity {f_err:.2e} (tol 1e-8), "
           f"extensivity N<=12, G<=4 {'exact' if exact else 'MISMATCH'}")


def test_criterion_08_asymptotic_entropy():
    start = time.perf_counter()
    s = entropy_generic(Gentile(2), 1.0).s
    sizes = (512, 1024, 2048)
    a = [finite_size_entropy(Gentile(2), N, 1.0) for N in sizes]
    extrapolated = extrapolate_entropy(sizes, a)
    elapsed = time.perf_counter() - start
    direct = abs(a[-1] - s)
    extra = abs(extrapolated - s)
    ok = direct < 0.01 and extra < 1e-4 and elapsed < 60.0
    record(8, "finite-size entropy of Gentile(2) at mu = 1", ok,
           f"|a_2048 - s| {direct:.2e} (tol 1e-2), extrapolated {extra:.2e} (tol 1e-4), "
           f"{elapsed:.2f} s (limit 60 s)")


def test_criterion_09_duality():
    worst = 0.0
    for g in G9:
        bound = 0.9 * min(radius(HaldaneWu(g)), radius(HaldaneWu(1 - g)))
        for t in np.linspace(-bound, bound, 21):
            worst = max(worst, abs(duality_residual(g, float(t))))
    record(9, "duality f_g(t) f_(1-g)(-t) = 1", worst <= 1e-10,
           f"max residual {worst:.2e} (tol 1e-10)")


def test_criterion_10_full_verify_cli():
    start = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "exclstat", "verify"],
                          capture_output=True, text=True, check=False)
    elapsed = time.perf_counter() - start
    summary = proc.stdout.strip().splitlines()[-1] if proc.stdout.strip() else proc.stderr[-200:]
    record(10, "full verify run", proc.returncode == 0 and elapsed < 300.0,
           f"exit {proc.returncode}, {summary}, {elapsed:.1f} s (limit 300 s)")
