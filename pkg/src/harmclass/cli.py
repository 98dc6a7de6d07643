"""Command-line interface.

Exit codes: 0 success, 1 usage or file format error, 2 numeric failure,
4 membership rejected under --strict.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import svgplot
from .bounds import (
    extremal_analytic,
    extremal_coanalytic,
    growth_envelope,
    sampled_membership,
    sufficient_membership,
)
from .errors import (
    ArgumentOutOfRange,
    BracketFailure,
    BudgetExceeded,
    CoefficientFileError,
    NotUnitModulus,
)
from .harmonic import (
    AnalyticSeries,
    convolve_harmonic,
    convolve_rotation,
    convolve_tilde,
    format_coefficients,
    format_number,
    read_coefficients,
)
from .radii import TABLE1, curve, solve_radii
from .specfun import ClassParams

EXIT_USAGE, EXIT_NUMERIC, EXIT_REJECTED = 1, 2, 4


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _params(args) -> ClassParams:
    return ClassParams(args.alpha, args.m)


def _digits(args) -> int:
    return 17 if getattr(args, "full_precision", False) else 9


def _echo(**kw) -> str:
    return "# " + " ".join(f"{k}={v!r}" if isinstance(v, float) else f"{k}={v}" for k, v in kw.items())


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


def cmd_radii(args) -> int:
    params = _params(args)
    res = solve_radii(params, tol=args.tol)
    d = _digits(args)
    lines = [_echo(alpha=params.alpha, m=params.m, tol=args.tol)]
    if args.csv:
        lines.append("alpha,M,r_star,r_c")
        lines.append(",".join(format_number(v, d) for v in (params.alpha, params.m, res.r_star, res.r_c)))
    else:
        lines.append(f"r_star={format_number(res.r_star, d)} r_c={format_number(res.r_c, d)}")
    sys.stdout.write("\n".join(lines) + "\n")
    return 0


def cmd_table1(args) -> int:
    d = _digits(args)
    lines = [_echo(table="table1", tol=args.tol), "alpha,M,r_star,r_c"]
    for alpha, m, _, _ in TABLE1:
        res = solve_radii(ClassParams(alpha, m), tol=args.tol)
        lines.append(",".join(format_number(v, d) for v in (alpha, m, res.r_star, res.r_c)))
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_curve(args) -> int:
    params = _params(args)
    rows = curve(params, args.rmin, args.rmax, args.steps)
    cols = {"g1": ("G1",), "g2": ("G2",), "both": ("G1", "G2")}[args.which]
    lines = [_echo(alpha=params.alpha, m=params.m, rmin=args.rmin, rmax=args.rmax, steps=args.steps),
             ",".join(("r",) + cols)]
    for s in rows:
        vals = [s.r] + [s.g1 if c == "G1" else s.g2 for c in cols]
        lines.append(",".join(format_number(v, 17) for v in vals))
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_plot(args) -> int:
    alphas, ms = args.alpha or [], args.m or []
    if not alphas:
        raise UsageError("at least one --alpha/--m pair is required")
    if len(alphas) != len(ms):
        raise UsageError(f"got {len(alphas)} --alpha values but {len(ms)} --m values")
    pairs = [ClassParams(a, m) for a, m in zip(alphas, ms)]
    Path(args.out).write_text(svgplot.render(pairs, args.which), encoding="utf-8", newline="\n")
    return 0


def cmd_growth(args) -> int:
    params = _params(args)
    if args.samples < 2:
        raise UsageError("--samples must be >= 2")
    d = _digits(args)
    lines = [_echo(alpha=params.alpha, m=params.m, samples=args.samples, rmax=args.rmax),
             "r,lower,upper"]
    for i in range(args.samples):
        r = args.rmax * i / (args.samples - 1)
        env = growth_envelope(params, r)
        lines.append(",".join(format_number(v, d) for v in (r, env.lower, env.upper)))
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def cmd_check(args) -> int:
    params = _params(args)
    f = read_coefficients(args.file)
    d = _digits(args)
    lines = [_echo(alpha=params.alpha, m=params.m, mode=args.mode, degree=f.degree)]
    rejected = False
    if args.mode in ("sufficient", "both"):
        v = sufficient_membership(f, params)
        lines.append(f"sufficient: {v.verdict} margin={format_number(v.margin_min, d)}")
    if args.mode in ("sampled", "both"):
        v = sampled_membership(f, params, args.n_radii, args.n_angles, args.eps_count)
        line = f"sampled: {v.verdict} margin={format_number(v.margin_min, d)}"
        if v.witness is not None:
            z = v.witness[0]
            line += f" z={format_number(z.real, d)}{z.imag:+.{d}g}j"
            rejected = True
        lines.append(line)
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_REJECTED if (args.strict and rejected) else 0


def _parse_beta(text: str) -> complex:
    try:
        re_s, im_s = text.split(",")
        return complex(float(re_s), float(im_s))
    except ValueError:
        raise UsageError(f"--beta must be 're,im', got {text!r}") from None


def _as_analytic(f, name: str) -> AnalyticSeries:
    if f.b.size and (f.b != 0).any():
        raise UsageError(f"{name} must be analytic (all b columns zero) for this mode")
    return f.h


def cmd_convolve(args) -> int:
    f1, f2 = read_coefficients(args.file1), read_coefficients(args.file2)
    if args.mode == "harmonic":
        out = convolve_harmonic(f1, f2)
    elif args.mode == "tilde":
        out = convolve_tilde(f1, _as_analytic(f2, "--file2"))
    else:
        if args.beta is None:
            raise UsageError("rotation mode needs --beta re,im")
        out = convolve_rotation(f1, _as_analytic(f2, "--file2"), _parse_beta(args.beta))
    comments = [f"mode={args.mode}" + (f" beta={args.beta}" if args.beta else "")]
    _emit(format_coefficients(out, comments), args.out)
    return 0


def cmd_extremal(args) -> int:
    params = _params(args)
    if args.kind == "coanalytic":
        if args.n is None or args.n < 2:
            raise UsageError("coanalytic kind needs --n >= 2")
        f = extremal_coanalytic(args.n, params)
        comment = f"kind=coanalytic n={args.n} alpha={params.alpha!r} m={params.m!r}"
    else:
        if args.degree is None or args.degree < 1:
            raise UsageError("analytic kind needs --degree >= 1")
        f = extremal_analytic(params, args.degree)
        comment = f"kind=analytic degree={args.degree} alpha={params.alpha!r} m={params.m!r}"
    _emit(format_coefficients(f, [comment]), args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="harmclass", description="Computations for the harmonic class P0_H(alpha, M).")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def class_flags(sp):
        sp.add_argument("--alpha", type=float, required=True, help="alpha in (0, 1]")
        sp.add_argument("--m", type=float, required=True, help="M > 0")

    def precision_flag(sp):
        sp.add_argument("--full-precision", action="store_true", help="17 significant digits")

    sp = sub.add_parser("radii", help="radii of starlikeness and convexity")
    class_flags(sp)
    sp.add_argument("--tol", type=float, default=1e-10)
    sp.add_argument("--csv", action="store_true")
    precision_flag(sp)
    sp.set_defaults(func=cmd_radii)

    sp = sub.add_parser("table1", help="radii for the seven reference parameter pairs")
    sp.add_argument("--tol", type=float, default=1e-10)
    sp.add_argument("--out")
    precision_flag(sp)
    sp.set_defaults(func=cmd_table1)

    sp = sub.add_parser("curve", help="G1/G2 sampled on a radius grid (CSV)")
    sp.add_argument("--which", choices=("g1", "g2", "both"), default="both")
    class_flags(sp)
    sp.add_argument("--rmin", type=float, default=0.0)
    sp.add_argument("--rmax", type=float, default=0.95)
    sp.add_argument("--steps", type=int, default=100)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_curve)

    sp = sub.add_parser("plot", help="SVG chart of G1/G2 for one or more pairs")
    sp.add_argument("--alpha", type=float, action="append")
    sp.add_argument("--m", type=float, action="append")
    sp.add_argument("--which", choices=("g1", "g2", "both"), default="g1")
    sp.add_argument("--out", required=True)
    sp.set_defaults(func=cmd_plot)

    sp = sub.add_parser("growth", help="growth envelope (CSV r,lower,upper)")
    class_flags(sp)
    sp.add_argument("--samples", type=int, default=10)
    sp.add_argument("--rmax", type=float, default=0.9)
    sp.add_argument("--out")
    precision_flag(sp)
    sp.set_defaults(func=cmd_growth)

    sp = sub.add_parser("check", help="membership tests for a coefficient file")
    sp.add_argument("--file", required=True)
    class_flags(sp)
    sp.add_argument("--mode", choices=("sufficient", "sampled", "both"), default="both")
    sp.add_argument("--strict", action="store_true", help="exit 4 on a sampled witness")
    sp.add_argument("--n-radii", type=int, default=24)
    sp.add_argument("--n-angles", type=int, default=48)
    sp.add_argument("--eps-count", type=int, default=8)
    precision_flag(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("convolve", help="Hadamard products of coefficient files")
    sp.add_argument("--file1", required=True)
    sp.add_argument("--file2", required=True)
    sp.add_argument("--out")
    sp.add_argument("--mode", choices=("harmonic", "tilde", "rotation"), default="harmonic")
    sp.add_argument("--beta", help="unimodular beta as 're,im' (rotation mode)")
    sp.set_defaults(func=cmd_convolve)

    sp = sub.add_parser("extremal", help="coefficient file of an extremal function")
    sp.add_argument("--kind", choices=("analytic", "coanalytic"), required=True)
    sp.add_argument("--n", type=int)
    sp.add_argument("--degree", type=int)
    class_flags(sp)
    sp.add_argument("--out")
    sp.set_defaults(func=cmd_extremal)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ArgumentOutOfRange, NotUnitModulus, CoefficientFileError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BracketFailure, BudgetExceeded) as exc:
        print(f"numeric failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
