"""Acceptance criteria, one test each, with the stated tolerances and time limits.

Each test prints a single ``[criterion N] PASS|FAIL`` line (visible even
without ``-s``) before asserting.
"""

import cmath
import math
import subprocess
import sys
import time

import numpy as np
import pytest

from harmclass.bounds import (
    Verdict,
    an_sum_bound,
    bn_bound,
    convex_null_condition,
    extremal_analytic,
    growth_envelope,
    random_member,
    re_half_check,
    sampled_membership,
)
from harmclass.harmonic import HarmonicSeries, convex_combination, convolve_harmonic, epsilon_slice, evaluate
from harmclass.radii import TABLE1, g1, g1_series, g2, g2_series, solve_radii
from harmclass.specfun import ClassParams

SEED = 20240611
EPS8 = [cmath.exp(2j * math.pi * k / 8) for k in range(8)]
GRID_ALPHAS = (1.0, 0.75, 0.5, 1 / 3, 0.25)
GRID_MS = (0.01, 0.1, 0.5, 1.0, 2.0)
GRID_RS = tuple(k / 10 for k in range(1, 10))


@pytest.fixture
def report(capsys):
    def emit(n, ok, detail):
        with capsys.disabled():
            print(f"\n[criterion {n}] {'PASS' if ok else 'FAIL'}: {detail}")
        return ok
    return emit


def test_criterion_1_table1(report):
    t0 = time.perf_counter()
    errs = []
    for alpha, m, r_star, r_c in TABLE1:
        res = solve_radii(ClassParams(alpha, m))
        errs.append(max(abs(res.r_star - r_star), abs(res.r_c - r_c)))
    elapsed = time.perf_counter() - t0
    worst = max(errs)
    ok = worst <= 5e-6 and elapsed < 1.0
    assert report(1, ok, f"reference radii max deviation {worst:.2e} (<= 5e-6), {elapsed:.3f}s (< 1s)")


def test_criterion_2_closed_form_roots(report):
    t0 = time.perf_counter()
    errs = [abs(solve_radii(ClassParams(1.0, 0.5)).r_star - (1 - math.exp(-1)))]
    for m, want in ((0.25, 0.25), (2.0, 1 / 11)):
        c = 0.5 / (2 * (m - 0.5 + 1))
        assert c / (1 + c) == pytest.approx(want, rel=1e-15)
        errs.append(abs(solve_radii(ClassParams(0.5, m)).r_c - c / (1 + c)))
    elapsed = time.perf_counter() - t0
    worst = max(errs)
    ok = worst <= 1e-9 and elapsed < 0.1
    assert report(2, ok, f"closed-form roots max error {worst:.2e} (<= 1e-9), {elapsed:.3f}s (< 0.1s)")


def test_criterion_3_dual_evaluation(report):
    t0 = time.perf_counter()
    worst = 0.0
    for alpha in GRID_ALPHAS:
        for m in GRID_MS:
            p = ClassParams(alpha, m)
            for r in GRID_RS:
                worst = max(worst, abs(g1(p, r) - g1_series(p, r)), abs(g2(p, r) - g2_series(p, r)))
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-10 and elapsed < 1.0
    assert report(3, ok, f"closed vs series max gap {worst:.2e} on 5x5x9 grid (<= 1e-10), {elapsed:.3f}s (< 1s)")


def test_criterion_4_growth_closed_forms(report):
    r = 0.5
    env = growth_envelope(ClassParams(1.0, 1.0), r)
    # alpha = 1, M = 1: sum r^n/(n(n-1)) = r + (1-r) log(1-r); the alternating sum uses -r
    upper = r + 2 * (r + (1 - r) * math.log1p(-r))
    lower = r + 2 * (r - (1 + r) * math.log1p(r))
    errs = [abs(env.upper - upper), abs(env.lower - lower),
            abs(env.upper - 0.8068528), abs(env.lower - 0.2836046)]
    p = ClassParams(1.0, 1.0)
    f = extremal_analytic(p, 256)
    for x in (0.1, 0.3, 0.5):
        errs.append(abs(abs(evaluate(f, x)) - growth_envelope(p, x).upper))
    worst = max(errs)
    ok = worst <= 1e-6
    assert report(4, ok, f"envelope and sharpness max error {worst:.2e} (<= 1e-6)")


def test_criterion_5_members_and_bounds(report):
    t0 = time.perf_counter()
    rng = np.random.default_rng(SEED)
    violations = 0
    checked = 0
    for _ in range(200):
        p = ClassParams(rng.uniform(0.05, 1.0), rng.uniform(0.01, 3.0))
        f = random_member(p, rng)
        n = np.arange(2, f.degree + 1)
        bn = np.array([bn_bound(k, p) for k in n])
        an = np.array([an_sum_bound(k, p) for k in n])
        violations += int(np.sum(np.abs(f.b) > bn)) + int(np.sum(np.abs(f.a) + np.abs(f.b) > an))
        z = rng.uniform(0.0, 0.95, 50) * np.exp(2j * np.pi * rng.uniform(size=50))
        vals = np.abs(evaluate(f, z))
        for zi, v in zip(z, vals):
            env = growth_envelope(p, abs(zi))
            violations += int(not (env.lower <= v <= env.upper))
            checked += 1
    elapsed = time.perf_counter() - t0
    ok = violations == 0 and elapsed < 10.0
    assert report(5, ok, f"200 members, {checked} sandwich points, {violations} violations, {elapsed:.2f}s (< 10s)")


def _convex_null_params(rng):
    alpha = rng.uniform(0.36, 1.0)
    m_max = alpha - 1 + 3 * (1 + alpha) / (6 * alpha + 4)
    p = ClassParams(alpha, rng.uniform(0.05, 1.0) * m_max)
    assert convex_null_condition(p)
    return p


def test_criterion_6_closure(report):
    rng = np.random.default_rng(SEED + 1)
    witnesses = 0
    half_fail = 0
    for _ in range(50):
        p = ClassParams(rng.uniform(0.05, 1.0), rng.uniform(0.01, 3.0))
        fs = [random_member(p, rng) for _ in range(3)]
        f = convex_combination(fs, rng.dirichlet(np.ones(3)))
        witnesses += sampled_membership(f, p).verdict is Verdict.NOT_MEMBER_WITNESS
    for _ in range(50):
        p = _convex_null_params(rng)
        f1, f2 = random_member(p, rng), random_member(p, rng)
        witnesses += sampled_membership(convolve_harmonic(f1, f2), p).verdict is Verdict.NOT_MEMBER_WITNESS
        for eps in EPS8:
            half_fail += not re_half_check(epsilon_slice(f2, eps))[0]
    ok = witnesses == 0 and half_fail == 0
    assert report(6, ok, f"50 convex combinations + 50 convolutions: {witnesses} witnesses; "
                         f"{half_fail} Re(F/z) <= 1/2 slices of 400")


def test_criterion_7_negative_controls(report):
    p = ClassParams(1.0, 0.5)
    f = HarmonicSeries.from_coeffs(None, [1.1 * bn_bound(2, p)])
    v = sampled_membership(f, p)
    conds = (convex_null_condition(ClassParams(1.0, 0.5)), convex_null_condition(ClassParams(1.0, 0.7)))
    ok = v.verdict is Verdict.NOT_MEMBER_WITNESS and v.witness[1] < 0 and conds == (True, False)
    assert report(7, ok, f"inflated b2 -> {v.verdict.value} (margin {v.margin_min:.3e}); "
                         f"convex-null (M=0.5, M=0.7) -> {conds}")


def test_criterion_8_ordering(report):
    bad = 0
    pts = 0
    for alpha in GRID_ALPHAS:
        for m in GRID_MS:
            p = ClassParams(alpha, m)
            for r in GRID_RS + tuple(np.linspace(0, 0.99, 34)):
                bad += g2(p, r) < g1(p, r)
                pts += 1
    solved = 0
    for alpha, m, _, _ in TABLE1:
        res = solve_radii(ClassParams(alpha, m))
        bad += res.r_c > res.r_star
        solved += 1
    for alpha in GRID_ALPHAS:
        for m in GRID_MS:
            if alpha == 1.0 and m == 0.01:
                continue  # r_star = 1 - exp(-50), beyond the series budget
            res = solve_radii(ClassParams(alpha, m))
            bad += res.r_c > res.r_star
            solved += 1
    ok = bad == 0
    assert report(8, ok, f"G2 >= G1 at {pts} points and r_c <= r_star in {solved} solves: {bad} violations")


def test_criterion_9_cli_determinism(report, tmp_path):
    def run(*argv):
        subprocess.run([sys.executable, "-m", "harmclass", *argv], check=True, capture_output=True)

    outs = []
    for k in range(2):
        table, svg = tmp_path / f"table{k}.csv", tmp_path / f"plot{k}.svg"
        run("table1", "--out", str(table))
        run("plot", "--alpha", "1", "--m", "0.5", "--alpha", "0.5", "--m", "0.25", "--which", "both",
            "--out", str(svg))
        outs.append((table.read_bytes(), svg.read_bytes()))
    ok = outs[0] == outs[1] and all(outs[0])
    assert report(9, ok, "table1 and plot outputs byte-identical across two processes")
