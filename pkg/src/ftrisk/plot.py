"""Deterministic SVG chart of a series, its Fermat points and an optional curve."""

from __future__ import annotations

import math
from pathlib import Path
from typing import Optional, Sequence
from xml.sax.saxutils import escape

from .errors import IoError
from .geometry import Point
from .interpolant import ExponentialSum, sample
from .smoothing import Series, SmoothedSeries

WIDTH, HEIGHT = 800, 500
LEFT, RIGHT, TOP, BOTTOM = 70, 30, 40, 60
MARKER = 5.0
CURVE_DOMAIN = (1.0, 11.0)
CURVE_STEP = 0.05


def _nice_step(span: float, target: int = 6) -> float:
    raw = span / target
    mag = 10 ** math.floor(math.log10(raw))
    for m in (1, 2, 2.5, 5, 10):
        if raw <= m * mag:
            return m * mag
    return 10 * mag


def _ticks(lo: float, hi: float) -> list[float]:
    step = _nice_step(hi - lo)
    first = math.ceil(lo / step - 1e-9)
    last = math.floor(hi / step + 1e-9)
    # round away float noise so labels and positions stay byte-stable
    return [round(i * step, 10) for i in range(first, last + 1)]


def _fmt(x: float) -> str:
    s = f"{x:.2f}"
    return "0.00" if s == "-0.00" else s


def _label(x: float) -> str:
    return f"{x:g}"


def render_svg(
    series: Series,
    smoothed: SmoothedSeries,
    interpolant: Optional[ExponentialSum] = None,
    title: Optional[str] = None,
) -> str:
    curve: Sequence[Point] = ()
    if interpolant is not None:
        curve = sample(interpolant, *CURVE_DOMAIN, CURVE_STEP)

    everything = [*series.points, *(p.smoothed for p in smoothed.points), *curve]
    t_lo = min(p.t for p in everything)
    t_hi = max(p.t for p in everything)
    v_lo = min(p.v for p in everything)
    v_hi = max(p.v for p in everything)
    if t_hi == t_lo:
        t_lo, t_hi = t_lo - 1, t_hi + 1
    if v_hi == v_lo:
        v_lo, v_hi = v_lo - 1, v_hi + 1
    pad = 0.05 * (v_hi - v_lo)
    v_lo, v_hi = v_lo - pad, v_hi + pad

    plot_w = WIDTH - LEFT - RIGHT
    plot_h = HEIGHT - TOP - BOTTOM

    def sx(t):
        return LEFT + (t - t_lo) / (t_hi - t_lo) * plot_w

    def sy(v):
        return TOP + (v_hi - v) / (v_hi - v_lo) * plot_h

    out = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{WIDTH}" '
        f'height="{HEIGHT}" viewBox="0 0 {WIDTH} {HEIGHT}">',
        f'<title>{escape(title or series.label or "series")}</title>',
        f'<rect x="0" y="0" width="{WIDTH}" height="{HEIGHT}" fill="white"/>',
    ]

    # axes
    x0, y0 = _fmt(LEFT), _fmt(TOP + plot_h)
    out.append('<g class="axes" stroke="black" stroke-width="1" font-family="sans-serif" '
               'font-size="12">')
    out.append(f'<line x1="{x0}" y1="{y0}" x2="{_fmt(LEFT + plot_w)}" y2="{y0}"/>')
    out.append(f'<line x1="{x0}" y1="{_fmt(TOP)}" x2="{x0}" y2="{y0}"/>')
    for t in _ticks(t_lo, t_hi):
        x = _fmt(sx(t))
        out.append(f'<line x1="{x}" y1="{y0}" x2="{x}" y2="{_fmt(TOP + plot_h + 5)}"/>')
        out.append(f'<text x="{x}" y="{_fmt(TOP + plot_h + 20)}" text-anchor="middle" '
                   f'stroke="none">{_label(t)}</text>')
    for v in _ticks(v_lo, v_hi):
        y = _fmt(sy(v))
        out.append(f'<line x1="{_fmt(LEFT - 5)}" y1="{y}" x2="{x0}" y2="{y}"/>')
        out.append(f'<text x="{_fmt(LEFT - 8)}" y="{y}" text-anchor="end" '
                   f'dominant-baseline="middle" stroke="none">{_label(v)}</text>')
    out.append("</g>")

    if curve:
        pts = " ".join(f"{_fmt(sx(p.t))},{_fmt(sy(p.v))}" for p in curve)
        out.append(f'<polyline class="interpolant" fill="none" stroke="#1f77b4" '
                   f'stroke-width="1.5" points="{pts}"/>')

    out.append('<g class="data" fill="none" stroke="black" stroke-width="1.2">')
    for p in series.points:
        out.append(f'<circle cx="{_fmt(sx(p.t))}" cy="{_fmt(sy(p.v))}" r="{_fmt(MARKER)}"/>')
    out.append("</g>")

    out.append('<g class="fermat" stroke="#d62728" stroke-width="1.5">')
    for sp in smoothed.points:
        x, y = sx(sp.smoothed.t), sy(sp.smoothed.v)
        m = MARKER
        out.append(
            f'<path class="cross" d="M{_fmt(x - m)},{_fmt(y - m)} L{_fmt(x + m)},{_fmt(y + m)} '
            f'M{_fmt(x - m)},{_fmt(y + m)} L{_fmt(x + m)},{_fmt(y - m)}"/>'
        )
    out.append("</g>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


def emit_plot(
    series: Series,
    smoothed: SmoothedSeries,
    path,
    interpolant: Optional[ExponentialSum] = None,
) -> Path:
    path = Path(path)
    text = render_svg(series, smoothed, interpolant)
    try:
        path.write_bytes(text.encode("utf-8"))
    except OSError as exc:
        raise IoError(f"cannot write plot to {path}: {exc.strerror or exc}") from exc
    return path
