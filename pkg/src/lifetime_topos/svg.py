"""Static SVG views: barcodes of Betti curves and persistence diagrams.

Output is plain text assembled line by line, so identical inputs give
byte-identical files.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Optional
from xml.sax.saxutils import escape

from .algebra import Bounds, format_rational
from .homology import BettiCurve, PersistenceDiagram

WIDTH = 640
MARGIN = 40
PALETTE = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e")


def _num(x: float) -> str:
    return f"{x:.3f}".rstrip("0").rstrip(".")


def _header(width: float, height: float) -> list[str]:
    return [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_num(width)}" height="{_num(height)}" viewBox="0 0 {_num(width)} {_num(height)}">',
        f'<rect x="0" y="0" width="{_num(width)}" height="{_num(height)}" fill="white"/>',
    ]


def barcode_svg(curves: Iterable[BettiCurve], decimals: Optional[int] = None) -> str:
    """One horizontal bar per step, thickness growing with the rank.

    Zero-rank steps are drawn as thin grey guide lines so the time axis
    stays visible.
    """
    curves = list(curves)
    steps = [st for c in curves for st in c.steps]
    if steps:
        t0 = min(st.start for st in steps)
        t1 = max(st.end for st in steps)
    else:
        t0, t1 = Fraction(0), Fraction(1)
    span = float(t1 - t0) or 1.0
    row_h = 36
    height = 2 * MARGIN + row_h * max(1, len(curves))
    inner = WIDTH - 2 * MARGIN

    def x(t) -> float:
        return MARGIN + inner * float(t - t0) / span

    out = _header(WIDTH, height)
    for k, curve in enumerate(curves):
        y = MARGIN + row_h * k + row_h / 2
        color = PALETTE[curve.dimension % len(PALETTE)]
        out.append(
            f'<text x="4" y="{_num(y + 4)}" font-family="monospace" font-size="11">H{curve.dimension}</text>'
        )
        for st in curve.steps:
            if st.rank == 0:
                out.append(
                    f'<line x1="{_num(x(st.start))}" y1="{_num(y)}" x2="{_num(x(st.end))}" '
                    f'y2="{_num(y)}" stroke="#cccccc" stroke-width="1"/>'
                )
                continue
            h = min(row_h - 6, 4 * st.rank)
            w = max(x(st.end) - x(st.start), 1.0)
            out.append(
                f'<rect x="{_num(x(st.start))}" y="{_num(y - h / 2)}" width="{_num(w)}" '
                f'height="{_num(h)}" fill="{color}"><title>rank {st.rank} on '
                f'[{format_rational(st.start, decimals)},{format_rational(st.end, decimals)}'
                f'{"]" if st.end_included else ")"}</title></rect>'
            )
    axis_y = height - MARGIN / 2
    out.append(
        f'<line x1="{MARGIN}" y1="{_num(axis_y)}" x2="{WIDTH - MARGIN}" y2="{_num(axis_y)}" stroke="black"/>'
    )
    for t in sorted({st.start for st in steps} | {st.end for st in steps}):
        out.append(
            f'<text x="{_num(x(t))}" y="{_num(axis_y + 12)}" font-family="monospace" '
            f'font-size="9" text-anchor="middle">{escape(format_rational(t, decimals))}</text>'
        )
    out.append("</svg>")
    return "\n".join(out) + "\n"


def diagram_svg(
    diagrams: Mapping[int, PersistenceDiagram], bounds: Bounds, decimals: Optional[int] = None
) -> str:
    """The bounded square with its diagonal; one disc per point.

    Birth runs along the horizontal axis and death up the vertical axis.
    Disc radius grows with the square root of the multiplicity.
    """
    side = WIDTH - 2 * MARGIN
    e1, e2 = float(bounds.eps1), float(bounds.eps2)

    def px(b) -> float:
        return MARGIN + side * float(b) / e1

    def py(d) -> float:
        return MARGIN + side * (1 - float(d) / e2)

    out = _header(WIDTH, WIDTH)
    out.append(
        f'<rect x="{MARGIN}" y="{MARGIN}" width="{side}" height="{side}" fill="none" stroke="black"/>'
    )
    out.append(
        f'<line x1="{_num(px(0))}" y1="{_num(py(0))}" x2="{_num(px(min(e1, e2)))}" '
        f'y2="{_num(py(min(e1, e2)))}" stroke="#888888" stroke-dasharray="4 3"/>'
    )
    for dim in sorted(diagrams):
        color = PALETTE[dim % len(PALETTE)]
        for point, mult in diagrams[dim].items():
            r = 4 * mult ** 0.5
            label = f"H{dim} ({format_rational(point.x1, decimals)},{format_rational(point.x2, decimals)}) x{mult}"
            out.append(
                f'<circle cx="{_num(px(point.x1))}" cy="{_num(py(point.x2))}" r="{_num(r)}" '
                f'fill="{color}" fill-opacity="0.7"><title>{escape(label)}</title></circle>'
            )
    out.append(
        f'<text x="{WIDTH / 2}" y="{WIDTH - 10}" font-family="monospace" font-size="11" '
        f'text-anchor="middle">birth</text>'
    )
    out.append(
        f'<text x="12" y="{WIDTH / 2}" font-family="monospace" font-size="11" '
        f'transform="rotate(-90 12 {WIDTH / 2})" text-anchor="middle">death</text>'
    )
    out.append("</svg>")
    return "\n".join(out) + "\n"
