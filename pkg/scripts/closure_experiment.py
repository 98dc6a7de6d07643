"""Monte Carlo check of the closure properties on random class members.

Draws random members, forms convex combinations and (under the convex-null
condition) harmonic convolutions, and reports the smallest sampled margin seen.
"""

import argparse
from dataclasses import dataclass

import numpy as np

from harmclass.bounds import Verdict, convex_null_condition, random_member, sampled_membership
from harmclass.harmonic import convex_combination, convolve_harmonic
from harmclass.specfun import ClassParams


@dataclass
class ExperimentConfig:
    trials: int = 200
    degree: int = 16
    seed: int = 0
    n_radii: int = 24
    n_angles: int = 48


def draw_params(rng: np.random.Generator, convex_null: bool) -> ClassParams:
    if not convex_null:
        return ClassParams(rng.uniform(0.05, 1.0), rng.uniform(0.01, 3.0))
    alpha = rng.uniform(0.36, 1.0)
    m_max = alpha - 1 + 3 * (1 + alpha) / (6 * alpha + 4)
    p = ClassParams(alpha, rng.uniform(0.05, 1.0) * m_max)
    assert convex_null_condition(p)
    return p


def run(cfg: ExperimentConfig) -> dict:
    rng = np.random.default_rng(cfg.seed)
    stats = {"combination": [np.inf, 0], "convolution": [np.inf, 0]}
    for _ in range(cfg.trials):
        p = draw_params(rng, False)
        fs = [random_member(p, rng, cfg.degree) for _ in range(3)]
        f = convex_combination(fs, rng.dirichlet(np.ones(3)))
        v = sampled_membership(f, p, cfg.n_radii, cfg.n_angles)
        s = stats["combination"]
        s[0] = min(s[0], v.margin_min)
        s[1] += v.verdict is Verdict.NOT_MEMBER_WITNESS

        p = draw_params(rng, True)
        f = convolve_harmonic(random_member(p, rng, cfg.degree), random_member(p, rng, cfg.degree))
        v = sampled_membership(f, p, cfg.n_radii, cfg.n_angles)
        s = stats["convolution"]
        s[0] = min(s[0], v.margin_min)
        s[1] += v.verdict is Verdict.NOT_MEMBER_WITNESS
    return stats


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--trials", type=int, default=200)
    ap.add_argument("--degree", type=int, default=16)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    cfg = ExperimentConfig(trials=args.trials, degree=args.degree, seed=args.seed)
    for name, (lo, witnesses) in run(cfg).items():
        print(f"{name:12s} trials={cfg.trials} min_margin={lo:.6g} witnesses={witnesses}")


if __name__ == "__main__":
    main()
