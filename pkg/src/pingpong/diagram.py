"""SVG drawing of a configuration: domain arcs on the circle and the Gamma cycles."""

from __future__ import annotations

import math
from xml.sax.saxutils import escape

from pingpong.config import Configuration, gamma_graph
from pingpong.realize import standard_realization

PALETTE = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"]

SIZE = 480
CENTER = SIZE / 2
RADIUS = 170


def _xy(t: float, radius: float) -> tuple[float, float]:
    # counterclockwise on screen; SVG y grows downward
    angle = 2 * math.pi * t
    return CENTER + radius * math.cos(angle), CENTER - radius * math.sin(angle)


def _f(v: float) -> str:
    s = f"{v:.3f}".rstrip("0").rstrip(".")
    return "0" if s == "-0" else s


def render_svg(cfg: Configuration, layout_name: str = "standard") -> str:
    r = standard_realization(cfg, layout_name)
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">',
        '<defs>',
    ]
    for g in range(cfg.rank):
        color = PALETTE[g % len(PALETTE)]
        parts.append(
            f'<marker id="arrow{g}" viewBox="0 0 10 10" refX="9" refY="5" markerWidth="6" markerHeight="6" '
            f'orient="auto-start-reverse"><path d="M0,0 L10,5 L0,10 z" fill="{color}"/></marker>'
        )
    parts.append("</defs>")
    parts.append(f'<circle cx="{_f(CENTER)}" cy="{_f(CENTER)}" r="{RADIUS}" fill="none" stroke="#999" stroke-width="1"/>')

    for pos, (x, (lo, hi)) in enumerate(zip(cfg.word, r.arcs)):
        color = PALETTE[x.generator_index % len(PALETTE)]
        x0, y0 = _xy(float(lo), RADIUS)
        x1, y1 = _xy(float(hi), RADIUS)
        dash = ' stroke-dasharray="6 3"' if x.inverted else ""
        parts.append(
            f'<path d="M{_f(x0)},{_f(y0)} A{RADIUS},{RADIUS} 0 0 0 {_f(x1)},{_f(y1)}" fill="none" '
            f'stroke="{color}" stroke-width="7"{dash}><title>arc {pos}: D({escape(str(x))})</title></path>'
        )
        mid = float(lo + hi) / 2
        lx, ly = _xy(mid, RADIUS + 22)
        label = str(x).lower() + ("⁻¹" if x.inverted else "")
        parts.append(
            f'<text x="{_f(lx)}" y="{_f(ly)}" font-family="serif" font-size="16" text-anchor="middle" '
            f'dominant-baseline="middle" fill="{color}">{escape(label)}</text>'
        )

    bx, by = _xy(float(r.basepoint), RADIUS)
    parts.append(f'<circle cx="{_f(bx)}" cy="{_f(by)}" r="3.5" fill="black"><title>basepoint</title></circle>')

    for g in range(cfg.rank):
        color = PALETTE[g % len(PALETTE)]
        cyc = gamma_graph(cfg, g).vertices
        for i, src in enumerate(cyc):
            dst = cyc[(i + 1) % len(cyc)]
            ts = float(sum(r.arcs[src])) / 2
            td = float(sum(r.arcs[dst])) / 2
            sx, sy = _xy(ts, RADIUS - 12)
            dx, dy = _xy(td, RADIUS - 12)
            cx, cy = _xy((ts + td) / 2 if abs(ts - td) <= 0.5 else (ts + td) / 2 + 0.5, RADIUS * 0.25)
            parts.append(
                f'<path d="M{_f(sx)},{_f(sy)} Q{_f(cx)},{_f(cy)} {_f(dx)},{_f(dy)}" fill="none" stroke="{color}" '
                f'stroke-width="1.5" opacity="0.8" marker-end="url(#arrow{g})"/>'
            )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"
