"""Minimal deterministic SVG line charts of G1 / G2 against r."""

from __future__ import annotations

from dataclasses import dataclass
from xml.sax.saxutils import escape

from .radii import curve
from .specfun import ClassParams

WIDTH, HEIGHT, MARGIN = 800, 600, 60
R_MAX = 0.95
SAMPLES = 200
COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf")


@dataclass(frozen=True)
class Frame:
    """Linear map from data (r, G) to pixel coordinates."""

    x_min: float
    x_max: float
    y_min: float
    y_max: float

    def px(self, x: float) -> float:
        return MARGIN + (x - self.x_min) / (self.x_max - self.x_min) * (WIDTH - 2 * MARGIN)

    def py(self, y: float) -> float:
        return HEIGHT - MARGIN - (y - self.y_min) / (self.y_max - self.y_min) * (HEIGHT - 2 * MARGIN)

    def data_x(self, px: float) -> float:
        return self.x_min + (px - MARGIN) / (WIDTH - 2 * MARGIN) * (self.x_max - self.x_min)


def _num(x: float) -> str:
    return f"{x:.3f}"


def _label(v: float) -> str:
    return format(v, "g")


def render(pairs: list[ClassParams], which: str = "g1") -> str:
    """SVG 1.1 document with one polyline per (alpha, M) pair and selected G."""
    if not pairs:
        raise ValueError("need at least one (alpha, M) pair")
    if which not in ("g1", "g2", "both"):
        raise ValueError(f"which must be g1, g2 or both, got {which!r}")
    kinds = ("g1", "g2") if which == "both" else (which,)

    series = []
    for params in pairs:
        rows = curve(params, 0.0, R_MAX, SAMPLES)
        for kind in kinds:
            ys = [getattr(s, kind) for s in rows]
            series.append((params, kind, [s.r for s in rows], ys))

    y_lo = min(0.0, min(min(ys) for *_, ys in series))
    y_hi = max(0.0, max(max(ys) for *_, ys in series))
    pad = 0.05 * (y_hi - y_lo)
    frame = Frame(0.0, R_MAX, y_lo - pad, y_hi + pad)

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" '
        f'height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]
    x0, x1 = frame.px(frame.x_min), frame.px(frame.x_max)
    y0, y1 = frame.py(frame.y_min), frame.py(frame.y_max)
    out.append(f'<g id="axes" stroke="black" stroke-width="1">')
    out.append(f'<line x1="{_num(x0)}" y1="{_num(y0)}" x2="{_num(x1)}" y2="{_num(y0)}"/>')
    out.append(f'<line x1="{_num(x0)}" y1="{_num(y0)}" x2="{_num(x0)}" y2="{_num(y1)}"/>')
    out.append("</g>")

    out.append('<g id="ticks" font-family="sans-serif" font-size="12">')
    for i in range(10):
        x = 0.1 * i
        px = frame.px(x)
        out.append(f'<line x1="{_num(px)}" y1="{_num(y0)}" x2="{_num(px)}" y2="{_num(y0 + 5)}" stroke="black"/>')
        out.append(f'<text x="{_num(px)}" y="{_num(y0 + 20)}" text-anchor="middle">{x:.1f}</text>')
    for i in range(6):
        y = frame.y_min + (frame.y_max - frame.y_min) * i / 5
        py = frame.py(y)
        out.append(f'<line x1="{_num(x0 - 5)}" y1="{_num(py)}" x2="{_num(x0)}" y2="{_num(py)}" stroke="black"/>')
        out.append(f'<text x="{_num(x0 - 8)}" y="{_num(py + 4)}" text-anchor="end">{y:.3g}</text>')
    out.append(f'<text x="{WIDTH / 2:.0f}" y="{HEIGHT - 15}" text-anchor="middle">r</text>')
    ylab = {"g1": "G1(r)", "g2": "G2(r)", "both": "G1(r), G2(r)"}[which]
    out.append(f'<text x="15" y="{HEIGHT / 2:.0f}" text-anchor="middle" '
               f'transform="rotate(-90 15 {HEIGHT / 2:.0f})">{ylab}</text>')
    out.append("</g>")

    zy = frame.py(0.0)
    out.append(f'<line id="zero" x1="{_num(x0)}" y1="{_num(zy)}" x2="{_num(x1)}" y2="{_num(zy)}" '
               'stroke="gray" stroke-dasharray="4 3"/>')

    out.append('<g id="curves" fill="none" stroke-width="1.5">')
    for k, (params, kind, xs, ys) in enumerate(series):
        color = COLORS[(k // len(kinds)) % len(COLORS)]
        dash = ' stroke-dasharray="6 3"' if kind == "g2" and which == "both" else ""
        pts = " ".join(f"{_num(frame.px(x))},{_num(frame.py(y))}" for x, y in zip(xs, ys))
        out.append(f'<polyline class="{kind}" stroke="{color}"{dash} points="{pts}"/>')
    out.append("</g>")

    out.append('<g id="legend" font-family="sans-serif" font-size="12">')
    for k, (params, kind, _, _) in enumerate(series):
        color = COLORS[(k // len(kinds)) % len(COLORS)]
        ly = MARGIN + 10 + 18 * k
        text = f"alpha={_label(params.alpha)}, M={_label(params.m)}"
        if which == "both":
            text += f" ({kind.upper()})"
        out.append(f'<line x1="{MARGIN + 10}" y1="{ly}" x2="{MARGIN + 35}" y2="{ly}" stroke="{color}" stroke-width="2"/>')
        out.append(f'<text x="{MARGIN + 42}" y="{ly + 4}">{escape(text)}</text>')
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"
