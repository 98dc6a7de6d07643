"""Write SVG plots of G1 and G2 for a few (alpha, M) families, plus the curve CSVs."""

import argparse
from pathlib import Path

from harmclass import svgplot
from harmclass.radii import curve
from harmclass.specfun import ClassParams

FAMILIES = {
    "vary_m": [(1.0, 0.5), (1.0, 0.1), (1.0, 2.0)],
    "vary_alpha": [(1.0, 0.5), (0.5, 0.5), (0.25, 0.5)],
    "table": [(1.0, 0.5), (0.5, 0.25), (1 / 3, 1 / 9), (0.75, 0.1), (0.25, 0.2)],
}


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", default="figures")
    ap.add_argument("--steps", type=int, default=200)
    args = ap.parse_args()

    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    for name, pairs in FAMILIES.items():
        params = [ClassParams(a, m) for a, m in pairs]
        for which in ("g1", "g2"):
            path = out / f"{name}_{which}.svg"
            path.write_text(svgplot.render(params, which), encoding="utf-8", newline="\n")
            print(path)
    for a, m in FAMILIES["table"]:
        rows = curve(ClassParams(a, m), 0.0, svgplot.R_MAX, args.steps)
        path = out / f"curve_a{a:.4g}_m{m:.4g}.csv"
        lines = ["r,G1,G2"] + [f"{s.r!r},{s.g1!r},{s.g2!r}" for s in rows]
        path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")
        print(path)


if __name__ == "__main__":
    main()
