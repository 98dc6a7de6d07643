"""Truncated normalized harmonic mappings f = h + conj(g).

Coefficients are stored from index 2 upward; the normalization
h(0) = 0, h'(0) = 1, g(0) = g'(0) = 0 is structural and never stored.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Sequence, TextIO

import numpy as np

from .errors import (
    ArgumentOutOfRange,
    CoefficientFileError,
    NotConvexWeights,
    NotUnitModulus,
)
from .specfun import ClassParams, weights

MAX_DEGREE = 10_000
UNIT_TOL = 1e-12
CSV_HEADER = "n,a_re,a_im,b_re,b_im"


def _as_coeffs(values) -> np.ndarray:
    arr = np.array(values if values is not None else [], dtype=complex).reshape(-1)
    if arr.size + 1 > MAX_DEGREE:
        raise ArgumentOutOfRange(f"degree {arr.size + 1} exceeds the cap {MAX_DEGREE}")
    return arr


def _pad(arr: np.ndarray, size: int) -> np.ndarray:
    if arr.size >= size:
        return arr
    return np.concatenate([arr, np.zeros(size - arr.size, dtype=complex)])


@dataclass(frozen=True, eq=False)
class AnalyticSeries:
    """z + sum_{n=2}^{N} c_n z**n; ``coeffs[k]`` holds c_{k+2}."""

    coeffs: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=complex))

    def __post_init__(self):
        object.__setattr__(self, "coeffs", _as_coeffs(self.coeffs))

    @property
    def degree(self) -> int:
        return self.coeffs.size + 1

    def coeff(self, n: int) -> complex:
        if n == 1:
            return 1.0 + 0.0j
        if 2 <= n <= self.degree:
            return complex(self.coeffs[n - 2])
        return 0.0j


@dataclass(frozen=True, eq=False)
class HarmonicSeries:
    """f = h + conj(g) with h = z + sum a_n z**n and g = sum b_n z**n, n >= 2.

    Both parts are zero-padded to a common degree.
    """

    h: AnalyticSeries = field(default_factory=AnalyticSeries)
    g_coeffs: np.ndarray = field(default_factory=lambda: np.zeros(0, dtype=complex))

    def __post_init__(self):
        a = self.h.coeffs
        b = _as_coeffs(self.g_coeffs)
        size = max(a.size, b.size)
        object.__setattr__(self, "h", AnalyticSeries(_pad(a, size)))
        object.__setattr__(self, "g_coeffs", _pad(b, size))

    @classmethod
    def from_coeffs(cls, a=None, b=None) -> "HarmonicSeries":
        """Build from sequences (a_2, a_3, ...) and (b_2, b_3, ...)."""
        return cls(AnalyticSeries(a), b)

    @classmethod
    def identity(cls) -> "HarmonicSeries":
        return cls()

    @property
    def a(self) -> np.ndarray:
        return self.h.coeffs

    @property
    def b(self) -> np.ndarray:
        return self.g_coeffs

    @property
    def degree(self) -> int:
        return self.h.degree

    def __repr__(self) -> str:
        return f"HarmonicSeries(degree={self.degree}, a={self.a!r}, b={self.b!r})"


def _check_disk(z) -> np.ndarray:
    zz = np.asarray(z, dtype=complex)
    if np.any(np.abs(zz) >= 1.0):
        raise ArgumentOutOfRange("z must lie in the open unit disk")
    return zz


def _poly_tail(coeffs: np.ndarray, z: np.ndarray, shift: int) -> np.ndarray:
    """sum_k coeffs[k] * z**(k + shift), by Horner's rule, elementwise in z."""
    acc = np.zeros_like(z)
    for c in coeffs[::-1]:
        acc = acc * z + c
    return acc * z**shift


def evaluate(f: HarmonicSeries, z):
    """f(z) = h(z) + conj(g(z)) for z (scalar or array) in the open disk."""
    zz = _check_disk(z)
    val = zz + _poly_tail(f.a, zz, 2) + np.conj(_poly_tail(f.b, zz, 2))
    return complex(val) if val.ndim == 0 else val


def apply_L(part, params: ClassParams, z):
    """L_alpha u(z) = (1 - alpha) u'(z) + alpha z u''(z).

    ``part`` is either an AnalyticSeries (normalized, so the leading z
    contributes the constant 1 - alpha) or a bare co-analytic coefficient
    array (b_2, ..., b_N) with no linear term. On z**n the operator gives
    w_n z**(n-1) with w_n = n + alpha*n*(n-2).
    """
    zz = _check_disk(z)
    if isinstance(part, AnalyticSeries):
        coeffs, lead = part.coeffs, 1.0 - params.alpha
    else:
        coeffs, lead = _as_coeffs(part), 0.0
    w = weights(coeffs.size + 1, params)
    val = lead + _poly_tail(w * coeffs, zz, 1)
    return complex(val) if val.ndim == 0 else val


def check_unit(value: complex, name: str) -> complex:
    value = complex(value)
    if abs(abs(value) - 1.0) > UNIT_TOL:
        raise NotUnitModulus(f"|{name}| must be 1 (within {UNIT_TOL:g}), got {abs(value)!r}")
    return value


def epsilon_slice(f: HarmonicSeries, eps: complex) -> AnalyticSeries:
    """The analytic function h + eps*g for a unimodular eps."""
    eps = check_unit(eps, "eps")
    return AnalyticSeries(f.a + eps * f.b)


def _common(x: np.ndarray, y: np.ndarray) -> int:
    return min(x.size, y.size)


def convolve_harmonic(f1: HarmonicSeries, f2: HarmonicSeries) -> HarmonicSeries:
    """Hadamard product h1*h2 + conj(g1*g2), truncated to the smaller degree."""
    k = _common(f1.a, f2.a)
    return HarmonicSeries.from_coeffs(f1.a[:k] * f2.a[:k], f1.b[:k] * f2.b[:k])


def convolve_tilde(f: HarmonicSeries, phi: AnalyticSeries) -> HarmonicSeries:
    """h*phi + conj(g*phi) for analytic phi."""
    k = _common(f.a, phi.coeffs)
    c = phi.coeffs[:k]
    return HarmonicSeries.from_coeffs(f.a[:k] * c, f.b[:k] * c)


def convolve_rotation(f: HarmonicSeries, phi: AnalyticSeries, beta: complex) -> HarmonicSeries:
    """f * (phi + beta*conj(phi)) = h*phi + conj(conj(beta) * (g*phi))."""
    beta = check_unit(beta, "beta")
    k = _common(f.a, phi.coeffs)
    c = phi.coeffs[:k]
    return HarmonicSeries.from_coeffs(f.a[:k] * c, np.conj(beta) * (f.b[:k] * c))


def convex_combination(fs: Sequence[HarmonicSeries], ts: Sequence[float]) -> HarmonicSeries:
    """sum_i t_i f_i with t_i >= 0 and sum t_i = 1."""
    if len(fs) == 0:
        raise NotConvexWeights("need at least one function")
    if len(fs) != len(ts):
        raise NotConvexWeights(f"{len(fs)} functions but {len(ts)} weights")
    ts = [float(t) for t in ts]
    if any(t < 0.0 for t in ts) or abs(math.fsum(ts) - 1.0) > 1e-12:
        raise NotConvexWeights(f"weights must be nonnegative and sum to 1, got {ts}")
    size = max(f.a.size for f in fs)
    a = sum(t * _pad(f.a, size) for f, t in zip(fs, ts))
    b = sum(t * _pad(f.b, size) for f, t in zip(fs, ts))
    return HarmonicSeries.from_coeffs(a, b)


# -- coefficient CSV ---------------------------------------------------------

def format_number(x: float, digits: int = 17) -> str:
    s = format(float(x), f".{digits}g")
    return "0" if s == "-0" else s


def format_coefficients(f: HarmonicSeries, comments: Iterable[str] = ()) -> str:
    """Render f in the coefficient CSV format (rows n = 2..N)."""
    lines = [f"# {c}" for c in comments]
    lines.append(CSV_HEADER)
    for k, (an, bn) in enumerate(zip(f.a, f.b)):
        fields = [str(k + 2)] + [format_number(v) for v in (an.real, an.imag, bn.real, bn.imag)]
        lines.append(",".join(fields))
    return "\n".join(lines) + "\n"


def write_coefficients(f: HarmonicSeries, path: str | Path, comments: Iterable[str] = ()) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_coefficients(f, comments))


def parse_coefficients(stream: TextIO) -> HarmonicSeries:
    """Parse a coefficient CSV; lines starting with '#' are comments."""
    header_seen = False
    a: list[complex] = []
    b: list[complex] = []
    for lineno, raw in enumerate(stream, start=1):
        line = raw.rstrip("\r\n")
        if line.startswith("#"):
            continue
        if not header_seen:
            if line.strip() != CSV_HEADER:
                raise CoefficientFileError(f"expected header {CSV_HEADER!r}, got {line!r}", lineno)
            header_seen = True
            continue
        if line.strip() == "":
            raise CoefficientFileError("blank line", lineno)
        fields = line.split(",")
        if len(fields) != 5:
            raise CoefficientFileError(f"expected 5 fields, got {len(fields)}", lineno)
        try:
            n = int(fields[0])
        except ValueError:
            raise CoefficientFileError(f"bad index {fields[0]!r}", lineno) from None
        expected = len(a) + 2
        if n != expected:
            raise CoefficientFileError(f"expected n={expected}, got n={n}", lineno)
        try:
            vals = [float(s) for s in fields[1:]]
        except ValueError:
            raise CoefficientFileError(f"bad number in {line!r}", lineno) from None
        if not all(math.isfinite(v) for v in vals):
            raise CoefficientFileError("non-finite coefficient", lineno)
        a.append(complex(vals[0], vals[1]))
        b.append(complex(vals[2], vals[3]))
        if len(a) + 1 > MAX_DEGREE:
            raise CoefficientFileError(f"degree exceeds {MAX_DEGREE}", lineno)
    if not header_seen:
        raise CoefficientFileError("missing header", 1)
    return HarmonicSeries.from_coeffs(a, b)


def read_coefficients(path: str | Path) -> HarmonicSeries:
    with open(path, encoding="utf-8", newline="") as fh:
        return parse_coefficients(fh)


def loads_coefficients(text: str) -> HarmonicSeries:
    return parse_coefficients(io.StringIO(text))
