"""Coefficient bounds, growth envelope and membership oracles for P0_H(alpha, M).

Membership of f = h + conj(g) means

    Re L_alpha h(z) + M > |L_alpha g(z)|   for all |z| < 1,

where L_alpha u = (1 - alpha) u' + alpha z u''. Everything here is either a
closed-form bound in terms of kappa = M - alpha + 1 and the weights
w_n = n + alpha n (n - 2), or a check of one of those statements on a
finite function.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import ArgumentOutOfRange
from .harmonic import AnalyticSeries, HarmonicSeries, apply_L, evaluate
from .specfun import (
    DEFAULT_CONFIG,
    ClassParams,
    SeriesEvalConfig,
    check_radius,
    terms_needed,
    weight,
    weights,
)

STRICT_SLACK = 1e-12
DEFAULT_RADII = 24
DEFAULT_ANGLES = 48
DEFAULT_EPS = 8


class Verdict(str, enum.Enum):
    MEMBER_CERTIFIED = "member_certified"
    NOT_MEMBER_WITNESS = "not_member_witness"
    INCONCLUSIVE = "inconclusive"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class GrowthEnvelope:
    radius: float
    lower: float
    upper: float
    terms_used: int


@dataclass(frozen=True)
class MembershipVerdict:
    """Outcome of a membership test.

    ``witness`` is ``(z, margin)`` at the worst sampled point when the
    verdict is NOT_MEMBER_WITNESS. ``slice_margin_min`` is the smallest
    Re L_alpha(h + eps g) + M over the sampled unimodular eps, when
    slices were sampled.
    """

    verdict: Verdict
    margin_min: float
    witness: tuple[complex, float] | None = None
    slice_margin_min: float | None = None

    def __post_init__(self):
        if self.verdict is Verdict.NOT_MEMBER_WITNESS:
            assert self.witness is not None and self.witness[1] < 0.0


def bn_bound(n: int, params: ClassParams) -> float:
    """Sharp bound |b_n| <= kappa / w_n."""
    return params.kappa / weight(n, params)


def an_sum_bound(n: int, params: ClassParams) -> float:
    """Sharp bound on |a_n| + |b_n|, ||a_n| - |b_n|| and |a_n|: 2 kappa / w_n."""
    return 2.0 * params.kappa / weight(n, params)


def extremal_coanalytic(n: int, params: ClassParams) -> HarmonicSeries:
    """z + (kappa / w_n) conj(z**n), which attains the b_n bound."""
    b = np.zeros(n - 1, dtype=complex)
    b[-1] = bn_bound(n, params)
    return HarmonicSeries.from_coeffs(None, b)


def extremal_analytic(params: ClassParams, degree: int) -> HarmonicSeries:
    """z + sum_{n=2}^{degree} (2 kappa / w_n) z**n."""
    if degree < 1:
        raise ArgumentOutOfRange(f"degree must be >= 1, got {degree}")
    return HarmonicSeries.from_coeffs(2.0 * params.kappa / weights(degree, params))


def growth_envelope(params: ClassParams, radius: float,
                    cfg: SeriesEvalConfig = DEFAULT_CONFIG) -> GrowthEnvelope:
    """Two-sided bound on |f(z)| for members f and |z| = radius.

    upper = r + 2 kappa sum_{n>=2} r**n / (n (1 + alpha (n - 2)))
    lower = r + 2 kappa sum_{n>=2} (-1)**(n-1) r**n / (n (1 + alpha (n - 2)))

    The upper tail after N terms is at most
    2 kappa r**(N+1) / ((N+1)(1 + alpha (N-1))(1 - r)); the alternating
    lower tail is at most its first omitted term, which is smaller.
    """
    r = check_radius(radius, cfg)
    if r == 0.0:
        return GrowthEnvelope(0.0, 0.0, 0.0, 0)
    alpha, kappa = params.alpha, params.kappa
    log_r = math.log(r)

    def tail(n: int) -> float:
        return (2.0 * kappa * math.exp((n + 1) * log_r)
                / ((n + 1) * (1.0 + alpha * (n - 1)) * (1.0 - r)))

    last = terms_needed(tail, cfg.tolerance, cfg.max_terms, start=1)
    n = np.arange(2, last + 1, dtype=float)
    terms = np.power(r, n) / (n * (1.0 + alpha * (n - 2.0)))
    signs = np.where(n % 2 == 0, -1.0, 1.0)
    upper = r + 2.0 * kappa * math.fsum(terms)
    lower = r + 2.0 * kappa * math.fsum(signs * terms)
    return GrowthEnvelope(r, lower, upper, int(last))


def sufficient_membership(f: HarmonicSeries, params: ClassParams) -> MembershipVerdict:
    """Coefficient test: sum w_n (|a_n| + |b_n|) < kappa certifies membership.

    The test is only sufficient, so failing it (including the equality
    case, within STRICT_SLACK) is reported as inconclusive.
    """
    w = weights(f.degree, params)
    total = math.fsum(w * (np.abs(f.a) + np.abs(f.b)))
    margin = params.kappa - total
    if margin > STRICT_SLACK * max(1.0, params.kappa):
        return MembershipVerdict(Verdict.MEMBER_CERTIFIED, margin)
    return MembershipVerdict(Verdict.INCONCLUSIVE, margin)


def sample_grid(n_radii: int, n_angles: int, r_cap: float = DEFAULT_CONFIG.r_cap) -> np.ndarray:
    """Points r_i e^{i theta_j}, shape (n_radii, n_angles).

    r_i = i r_cap / (n_radii + 1) for i = 1..n_radii; theta_j = 2 pi j / n_angles.
    """
    if n_radii < 1 or n_angles < 1:
        raise ArgumentOutOfRange("grid sizes must be >= 1")
    radii = np.arange(1, n_radii + 1) / (n_radii + 1) * r_cap
    theta = 2.0 * np.pi * np.arange(n_angles) / n_angles
    return radii[:, None] * np.exp(1j * theta)[None, :]


def membership_margins(f: HarmonicSeries, params: ClassParams, z) -> np.ndarray:
    """Re L_alpha h(z) + M - |L_alpha g(z)| at each z."""
    return np.real(apply_L(f.h, params, z)) + params.m - np.abs(apply_L(f.b, params, z))


def slice_margins(f: HarmonicSeries, params: ClassParams, eps: complex, z) -> np.ndarray:
    """Re L_alpha(h + eps g)(z) + M at each z."""
    lh = apply_L(f.h, params, z)
    lg = apply_L(f.b, params, z)
    return np.real(lh + complex(eps) * lg) + params.m


def sampled_membership(
    f: HarmonicSeries,
    params: ClassParams,
    n_radii: int = DEFAULT_RADII,
    n_angles: int = DEFAULT_ANGLES,
    eps_count: int = DEFAULT_EPS,
    r_cap: float = DEFAULT_CONFIG.r_cap,
) -> MembershipVerdict:
    """Search a polar grid for a point violating the defining inequality.

    Sampling can refute membership but never certify it, so the result is
    either NOT_MEMBER_WITNESS (some margin below -STRICT_SLACK) or
    INCONCLUSIVE. The slices h + eps g for eps_count equally spaced eps
    are checked too; their margins can only be larger than the harmonic
    margin at the same point.
    """
    if eps_count < 1:
        raise ArgumentOutOfRange("eps_count must be >= 1")
    z = sample_grid(n_radii, n_angles, r_cap)
    lh = apply_L(f.h, params, z)
    lg = apply_L(f.b, params, z)
    margins = np.real(lh) + params.m - np.abs(lg)
    eps = np.exp(2j * np.pi * np.arange(eps_count) / eps_count)
    slice_min = float(min(np.min(np.real(lh + e * lg)) + params.m for e in eps))
    # first occurrence in row-major order = lexicographic (i, j) tie-break
    k = int(np.argmin(margins))
    worst = float(margins.flat[k])
    if worst < -STRICT_SLACK:
        return MembershipVerdict(Verdict.NOT_MEMBER_WITNESS, worst,
                                 (complex(z.flat[k]), worst), slice_min)
    return MembershipVerdict(Verdict.INCONCLUSIVE, worst, None, slice_min)


def convex_null_condition(params: ClassParams) -> bool:
    """kappa <= 3 (1 + alpha) / (6 alpha + 4)."""
    alpha = params.alpha
    return params.kappa <= 3.0 * (1.0 + alpha) / (6.0 * alpha + 4.0)


def convex_null_sequence(params: ClassParams, prefix_len: int) -> np.ndarray:
    """(c_0, ..., c_prefix_len) with c_0 = 1 and c_{n-1} = 2 kappa / w_n."""
    if prefix_len < 1:
        raise ArgumentOutOfRange("prefix_len must be >= 1")
    tail = 2.0 * params.kappa / weights(prefix_len + 1, params)
    return np.concatenate([[1.0], tail])


def convex_null_sequence_check(params: ClassParams, prefix_len: int = 8) -> bool:
    """Differences of the prefix are nonnegative and nonincreasing."""
    if prefix_len < 4:
        raise ArgumentOutOfRange(f"prefix_len must be >= 4, got {prefix_len}")
    d = -np.diff(convex_null_sequence(params, prefix_len))
    return bool(np.all(d >= 0.0) and np.all(d[:-1] >= d[1:]))


def re_half_check(
    F: AnalyticSeries,
    n_radii: int = DEFAULT_RADII,
    n_angles: int = DEFAULT_ANGLES,
    r_cap: float = DEFAULT_CONFIG.r_cap,
) -> tuple[bool, float]:
    """Minimum of Re(F(z)/z) on the polar grid and whether it exceeds 1/2."""
    z = sample_grid(n_radii, n_angles, r_cap)
    f = HarmonicSeries(F)
    vals = np.real(evaluate(f, z) / z)
    lo = float(np.min(vals))
    return lo > 0.5, lo


def random_member(params: ClassParams, rng: np.random.Generator, degree: int = 16,
                  rho: float | None = None) -> HarmonicSeries:
    """Random member of the class with coefficients up to ``degree``.

    Complex Gaussian a_n, b_n are rescaled so that
    sum w_n (|a_n| + |b_n|) = rho * kappa with rho ~ U(0.1, 0.9), which
    places the function strictly inside the coefficient-certified region.
    """
    size = degree - 1
    a = rng.standard_normal(size) + 1j * rng.standard_normal(size)
    b = rng.standard_normal(size) + 1j * rng.standard_normal(size)
    if rho is None:
        rho = rng.uniform(0.1, 0.9)
    w = weights(degree, params)
    scale = rho * params.kappa / math.fsum(w * (np.abs(a) + np.abs(b)))
    return HarmonicSeries.from_coeffs(a * scale, b * scale)
