"""Restricted Gauss hypergeometric function and series plumbing.

The only hypergeometric function this package needs is

    2F1(1, 1/alpha; 1 + 1/alpha; r) = sum_{n>=0} r**n / (1 + alpha*n),

since (1)_n (c)_n / ((c+1)_n n!) = c / (c + n) with c = 1/alpha. Every
series here has positive terms dominated by a geometric series, so the
truncation point is chosen up front from an explicit tail bound and the
kept terms are summed with ``math.fsum``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Literal

import numpy as np

from .errors import ArgumentOutOfRange, BudgetExceeded

__all__ = [
    "ClassParams",
    "SeriesEvalConfig",
    "DEFAULT_CONFIG",
    "hyp2f1_special",
    "weight",
    "weights",
    "log_closed_form",
    "terms_needed",
]


@dataclass(frozen=True)
class ClassParams:
    """The pair (alpha, M) selecting one class of harmonic mappings.

    ``kappa = M - alpha + 1`` is the scale that appears in every bound.
    """

    alpha: float
    m: float

    def __post_init__(self):
        alpha, m = float(self.alpha), float(self.m)
        if not (0.0 < alpha <= 1.0):
            raise ArgumentOutOfRange(f"alpha must lie in (0, 1], got {self.alpha!r}")
        if not m > 0.0:
            raise ArgumentOutOfRange(f"M must be > 0, got {self.m!r}")
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "m", m)
        assert self.kappa > 0.0

    @property
    def kappa(self) -> float:
        return self.m - self.alpha + 1.0


@dataclass(frozen=True)
class SeriesEvalConfig:
    """Truncation controls shared by every series evaluator.

    Attributes:
        tolerance: absolute bound on the discarded tail.
        max_terms: hard cap on the number of summed terms.
        r_cap: largest admissible argument; keeps away from the pole at 1.
    """

    tolerance: float = 1e-12
    max_terms: int = 1_000_000
    r_cap: float = 1.0 - 1e-9

    def __post_init__(self):
        if not self.tolerance >= 1e-15:
            raise ArgumentOutOfRange(f"tolerance must be >= 1e-15, got {self.tolerance!r}")
        if not (1 <= self.max_terms <= 10**7):
            raise ArgumentOutOfRange(f"max_terms must lie in [1, 1e7], got {self.max_terms!r}")
        if not (0.0 < self.r_cap <= 1.0 - 1e-9):
            raise ArgumentOutOfRange(f"r_cap must lie in (0, 1 - 1e-9], got {self.r_cap!r}")


DEFAULT_CONFIG = SeriesEvalConfig()


def check_radius(r: float, cfg: SeriesEvalConfig) -> float:
    r = float(r)
    if not (0.0 <= r <= cfg.r_cap):
        raise ArgumentOutOfRange(f"r must lie in [0, {cfg.r_cap!r}], got {r!r}")
    return r


def terms_needed(tail: Callable[[int], float], tol: float, max_terms: int, start: int = 0) -> int:
    """Smallest N >= start with ``tail(N) <= tol``.

    ``tail`` must be nonincreasing in N. Raises BudgetExceeded when even
    ``max_terms`` does not suffice.
    """
    if tail(start) <= tol:
        return start
    lo, hi = start, start + 1
    while tail(hi) > tol:
        if hi >= max_terms:
            raise BudgetExceeded(
                f"tail bound {tail(max_terms):.3g} still above tolerance {tol:.3g} "
                f"after {max_terms} terms"
            )
        lo, hi = hi, min(2 * hi, max_terms)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if tail(mid) <= tol:
            hi = mid
        else:
            lo = mid
    return hi


def hyp2f1_special(params: ClassParams, r: float, cfg: SeriesEvalConfig = DEFAULT_CONFIG) -> float:
    """Evaluate 2F1(1, 1/alpha; 1 + 1/alpha; r) for 0 <= r <= r_cap.

    The sum stops at the first N for which
    r**(N+1) / ((1 + alpha*N) * (1 - r)) <= cfg.tolerance, which bounds
    everything discarded.
    """
    r = check_radius(r, cfg)
    if r == 0.0:
        return 1.0
    alpha = params.alpha

    def tail(n: int) -> float:
        return math.exp((n + 1) * math.log(r)) / ((1.0 + alpha * n) * (1.0 - r))

    last = terms_needed(tail, cfg.tolerance, cfg.max_terms)
    n = np.arange(last + 1, dtype=float)
    return math.fsum(np.power(r, n) / (1.0 + alpha * n))


def weight(n: int, params: ClassParams) -> float:
    """Coefficient weight n + alpha*n*(n - 2) of the operator L_alpha."""
    if n < 2:
        raise ArgumentOutOfRange(f"n must be >= 2, got {n}")
    return n + params.alpha * n * (n - 2)


def weights(degree: int, params: ClassParams) -> np.ndarray:
    """Weights for n = 2..degree as a float array (empty when degree < 2)."""
    n = np.arange(2, degree + 1, dtype=float)
    return n + params.alpha * n * (n - 2.0)


def log_closed_form(alpha_kind: Literal["one", "half"], r: float,
                    cfg: SeriesEvalConfig = DEFAULT_CONFIG) -> float:
    """Logarithmic closed forms of the restricted 2F1 at alpha = 1 and 1/2.

    alpha = 1:   -log(1 - r) / r
    alpha = 1/2: (2 / r**2) * (-log(1 - r) - r)

    Both tend to 1 as r -> 0; below r = 1e-4 a short Taylor expansion is used
    because the alpha = 1/2 form loses digits to cancellation there.
    """
    r = check_radius(r, cfg)
    if alpha_kind not in ("one", "half"):
        raise ArgumentOutOfRange(f"alpha_kind must be 'one' or 'half', got {alpha_kind!r}")
    if r < 1e-4:
        if alpha_kind == "one":
            return math.fsum(r**k / (k + 1) for k in range(8))
        return math.fsum(2.0 * r**k / (k + 2) for k in range(8))
    ell = -math.log1p(-r)
    if alpha_kind == "one":
        return ell / r
    return 2.0 * (ell - r) / (r * r)
