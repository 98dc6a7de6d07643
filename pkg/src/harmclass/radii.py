"""Radii of starlikeness and convexity.

With c = alpha / (2 kappa) and F(r) = 2F1(1, 1/alpha; 1 + 1/alpha; r):

    G1(r) = alpha r F(r) - c
    G2(r) = r / (1 - r) + (2 alpha - 1) r F(r) - c

r_star and r_c are the roots of G1 and G2 in (0, 1). Both functions also
have positive-coefficient series forms

    G1(r) + c = sum_{n>=2} r**(n-1) / (1/alpha + n - 2)
    G2(r) + c = sum_{n>=2} n r**(n-1) / (1/alpha + n - 2)

so each is strictly increasing, G2 >= G1, and each root is unique.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy import integrate

from .errors import ArgumentOutOfRange, BracketFailure, BudgetExceeded
from .harmonic import HarmonicSeries
from .specfun import (
    DEFAULT_CONFIG,
    ClassParams,
    SeriesEvalConfig,
    check_radius,
    hyp2f1_special,
    terms_needed,
)

MAX_ITERATIONS = 200

# Published (alpha, M, r_star, r_c), six significant digits.
TABLE1 = (
    (1.0, 1 / 2, 0.632121, 0.357799),
    (1 / 2, 1 / 4, 0.454395, 0.25),
    (1 / 2, 2.0, 0.176134, 0.0909091),
    (1 / 3, 1 / 9, 0.42966, 0.237029),
    (3 / 4, 1 / 100, 0.823912, 0.515173),
    (3 / 4, 1 / 10, 0.732081, 0.436194),
    (1 / 4, 1 / 5, 0.368607, 0.200939),
)


@dataclass(frozen=True)
class RadiiResult:
    r_star: float
    r_c: float
    residual_star: float
    residual_c: float
    iterations: int


@dataclass(frozen=True)
class CurveSample:
    r: float
    g1: float
    g2: float


def _offset(params: ClassParams) -> float:
    return params.alpha / (2.0 * params.kappa)


def g1(params: ClassParams, r: float, cfg: SeriesEvalConfig = DEFAULT_CONFIG) -> float:
    """alpha r F(r) - alpha / (2 kappa)."""
    r = check_radius(r, cfg)
    return params.alpha * r * hyp2f1_special(params, r, cfg) - _offset(params)


def g2(params: ClassParams, r: float, cfg: SeriesEvalConfig = DEFAULT_CONFIG) -> float:
    """r / (1 - r) + (2 alpha - 1) r F(r) - alpha / (2 kappa)."""
    r = check_radius(r, cfg)
    alpha = params.alpha
    mid = 0.0 if alpha == 0.5 else (2.0 * alpha - 1.0) * r * hyp2f1_special(params, r, cfg)
    return r / (1.0 - r) + mid - _offset(params)


def _proof_series(params: ClassParams, r: float, cfg: SeriesEvalConfig, power: int) -> float:
    # sum_{n>=2} n**power r**(n-1) / (1/alpha + n - 2)
    r = check_radius(r, cfg)
    if r == 0.0:
        return 0.0
    c = 1.0 / params.alpha
    log_r = math.log(r)

    def tail(n: int) -> float:
        geo = math.exp(n * log_r) / (1.0 - r)
        if power == 0:
            return geo / (c + n - 1)
        # n / (n - 2 + c) is monotone in n; bound it over n > N
        return max(1.0, (n + 1) / (c + n - 1)) * geo

    last = terms_needed(tail, cfg.tolerance, cfg.max_terms, start=1)
    n = np.arange(2, last + 1, dtype=float)
    return math.fsum(n**power * np.power(r, n - 1) / (c + n - 2.0))


def g1_series(params: ClassParams, r: float, cfg: SeriesEvalConfig = DEFAULT_CONFIG) -> float:
    """G1 from its positive series; independent of hyp2f1_special."""
    return _proof_series(params, r, cfg, 0) - _offset(params)


def g2_series(params: ClassParams, r: float, cfg: SeriesEvalConfig = DEFAULT_CONFIG) -> float:
    """G2 from its positive series; independent of hyp2f1_special."""
    return _proof_series(params, r, cfg, 1) - _offset(params)


def _beta_integral(params: ClassParams, r: float) -> float:
    # int_0^1 s**(1/alpha - 1) / (1 - r s) ds = alpha F(r)
    p = 1.0 / params.alpha - 1.0
    val, _ = integrate.quad(lambda s: s**p / (1.0 - r * s), 0.0, 1.0,
                            epsabs=1e-14, epsrel=1e-13, limit=200)
    return val


def g1_integral(params: ClassParams, r: float) -> float:
    """G1 via adaptive quadrature of r int_0^1 s**(1/alpha-1) / (1 - r s) ds."""
    return r * _beta_integral(params, r) - _offset(params)


def g2_integral(params: ClassParams, r: float) -> float:
    """G2 via quadrature, in the (2 - 1/alpha) integral form."""
    return (r / (1.0 - r) + (2.0 - 1.0 / params.alpha) * r * _beta_integral(params, r)
            - _offset(params))


def _bracket(G: Callable[[float], float], r_cap: float) -> tuple[float, float]:
    # G(0) < 0 and G increases to +inf; walk b = 1 - 2**-k toward r_cap
    a, k = 0.0, 1
    while True:
        b = min(1.0 - 2.0**-k, r_cap)
        if G(b) > 0.0:
            return a, b
        if b >= r_cap:
            raise BracketFailure("no sign change below r_cap")
        a, k = b, k + 1


def _scan(G: Callable[[float], float], hi: float, step: float = 1e-4) -> tuple[float, float]:
    a = 0.0
    while a < hi:
        b = min(a + step, hi)
        if G(b) > 0.0:
            return a, b
        a = b
    raise BracketFailure("scan found no sign change")


def _bisect(G: Callable[[float], float], a: float, b: float) -> tuple[float, int]:
    ga, gb = G(a), G(b)
    if not (ga <= 0.0 < gb):
        a, b = _scan(G, b)
        ga, gb = G(a), G(b)
    it = 0
    while it < MAX_ITERATIONS:
        mid = 0.5 * (a + b)
        if mid <= a or mid >= b:
            break
        gm = G(mid)
        it += 1
        if gm == 0.0:
            return mid, it
        if gm < 0.0:
            a, ga = mid, gm
        else:
            b, gb = mid, gm
    return (a if abs(ga) <= abs(gb) else b), it


def smallest_root(G: Callable[[float], float], r_cap: float = DEFAULT_CONFIG.r_cap) -> tuple[float, int]:
    """Root of an increasing G with G(0) < 0, bisected to machine precision."""
    a, b = _bracket(G, r_cap)
    return _bisect(G, a, b)


def solve_radii(params: ClassParams, tol: float = 1e-10,
                cfg: SeriesEvalConfig | None = None) -> RadiiResult:
    """Solve G1(r_star) = 0 and G2(r_c) = 0.

    Series inside G are evaluated to ``tol / 100`` (floored at 1e-15), so the
    returned residuals satisfy |G| <= 10 tol.
    """
    if cfg is None:
        cfg = SeriesEvalConfig(tolerance=max(1e-15, tol / 100.0))
    try:
        r_star, it1 = smallest_root(lambda r: g1(params, r, cfg), cfg.r_cap)
        r_c, it2 = smallest_root(lambda r: g2(params, r, cfg), cfg.r_cap)
    except (BracketFailure, BudgetExceeded) as exc:
        raise type(exc)(f"{exc} for alpha={params.alpha!r}, M={params.m!r}") from None
    res_star, res_c = g1(params, r_star, cfg), g2(params, r_c, cfg)
    return RadiiResult(r_star, r_c, res_star, res_c, it1 + it2)


def curve(params: ClassParams, r_min: float, r_max: float, steps: int,
          cfg: SeriesEvalConfig = DEFAULT_CONFIG) -> list[CurveSample]:
    """G1 and G2 on ``steps`` equally spaced radii from r_min to r_max inclusive."""
    if not (0.0 <= r_min < r_max <= cfg.r_cap):
        raise ArgumentOutOfRange(f"need 0 <= r_min < r_max <= {cfg.r_cap}, got {r_min}, {r_max}")
    if steps < 2:
        raise ArgumentOutOfRange(f"steps must be >= 2, got {steps}")
    rs = [r_min + (r_max - r_min) * i / (steps - 1) for i in range(steps)]
    rs[-1] = r_max
    return [CurveSample(r, g1(params, r, cfg), g2(params, r, cfg)) for r in rs]


def starlike_convex_sums(f: HarmonicSeries, r: float) -> tuple[float, float]:
    """S1 = sum n (|a_n| + |b_n|) r**(n-1) and S2 = sum n**2 (|a_n| + |b_n|) r**(n-1).

    f(rz)/r is starlike when S1 <= 1 and convex when S2 <= 1.
    """
    n = np.arange(2, f.degree + 1, dtype=float)
    mag = (np.abs(f.a) + np.abs(f.b)) * np.power(r, n - 1)
    return math.fsum(n * mag), math.fsum(n * n * mag)
