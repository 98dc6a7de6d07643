"""Solve the seven reference (alpha, M) pairs and compare with the published radii."""

import argparse
import time

from harmclass.radii import TABLE1, solve_radii
from harmclass.specfun import ClassParams


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--tol", type=float, default=1e-10)
    args = ap.parse_args()

    print(f"{'alpha':>8} {'M':>8} {'r_star':>12} {'published':>10} {'r_c':>12} {'published':>10} {'max dev':>9}")
    t0 = time.perf_counter()
    worst = 0.0
    for alpha, m, r_star, r_c in TABLE1:
        res = solve_radii(ClassParams(alpha, m), tol=args.tol)
        dev = max(abs(res.r_star - r_star), abs(res.r_c - r_c))
        worst = max(worst, dev)
        print(f"{alpha:8.4g} {m:8.4g} {res.r_star:12.9f} {r_star:10.7g} {res.r_c:12.9f} {r_c:10.7g} {dev:9.1e}")
    print(f"worst deviation {worst:.2e} in {time.perf_counter() - t0:.3f}s")


if __name__ == "__main__":
    main()
