"""Numerics for the harmonic mapping class P0_H(alpha, M).

Coefficient and growth bounds, radii of starlikeness and convexity,
membership tests and the convolution algebra of the class.
"""

from .bounds import (
    GrowthEnvelope,
    MembershipVerdict,
    Verdict,
    an_sum_bound,
    bn_bound,
    convex_null_condition,
    convex_null_sequence_check,
    extremal_analytic,
    extremal_coanalytic,
    growth_envelope,
    random_member,
    re_half_check,
    sampled_membership,
    sufficient_membership,
)
from .errors import (
    ArgumentOutOfRange,
    BracketFailure,
    BudgetExceeded,
    CoefficientFileError,
    NotConvexWeights,
    NotUnitModulus,
)
from .harmonic import (
    AnalyticSeries,
    HarmonicSeries,
    apply_L,
    convex_combination,
    convolve_harmonic,
    convolve_rotation,
    convolve_tilde,
    epsilon_slice,
    evaluate,
    read_coefficients,
    write_coefficients,
)
from .radii import CurveSample, RadiiResult, curve, g1, g2, solve_radii
from .specfun import ClassParams, SeriesEvalConfig, hyp2f1_special, log_closed_form, weight

__version__ = "0.1.0"
