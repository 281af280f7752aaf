"""ASCII and SVG renderers for layered diagrams.

The ASCII form prints one text row per number line (vertex labels separated
by spaces) and one row per strip sketching its arcs; deterministic output
for golden-file tests.
"""

from __future__ import annotations

from .surgery import OrientedStack
from .weights import Params

CELL = 3  # characters per vertex column


def _column(params: Params, vertex: int) -> int:
    return params.pos(vertex) * CELL


def render_stack(stack: OrientedStack) -> str:
    params = stack.params
    width = (params.isize + 1) * CELL
    nlines = len(stack.lines)
    rows: list[list[str]] = []

    def blank() -> list[str]:
        return [" "] * width

    by_strip: dict[int, list] = {}
    top_arcs, bottom_arcs = [], []
    for arc in sorted(stack.arcs, key=repr):
        kind = arc[0]
        if kind == "rayup":
            top_arcs.append(arc)
        elif kind == "raydown":
            bottom_arcs.append(arc)
        elif kind == "cup":
            by_strip.setdefault(arc[1], []).append(arc)
        elif kind == "cap":
            by_strip.setdefault(arc[1] - 1, []).append(arc)
        else:
            by_strip.setdefault(arc[1], []).append(arc)

    def draw_line(r: int) -> str:
        row = blank()
        for v in params.vertices:
            row[_column(params, v)] = stack.lines[r][params.pos(v)]
        return "".join(row).rstrip()

    def draw_strip(r: int) -> str:
        row = blank()
        for arc in by_strip.get(r, []):
            kind = arc[0]
            if kind == "cup":
                a, b = _column(params, arc[2]), _column(params, arc[3])
                row[a] = "\\"
                row[b] = "/"
                for c in range(a + 1, b):
                    row[c] = "_"
            elif kind == "cap":
                a, b = _column(params, arc[2]), _column(params, arc[3])
                row[a] = "/"
                row[b] = "\\"
                for c in range(a + 1, b):
                    row[c] = "~"
            else:  # seg
                a, b = _column(params, arc[2]), _column(params, arc[3])
                if a == b:
                    row[a] = "|"
                elif a < b:
                    for c in range(a, b + 1):
                        row[c] = "\\"
                else:
                    for c in range(b, a + 1):
                        row[c] = "/"
        return "".join(row).rstrip()

    def draw_rays(arcs, char: str) -> str:
        row = blank()
        for arc in arcs:
            row[_column(params, arc[1])] = char
        return "".join(row).rstrip()

    out = []
    if top_arcs:
        out.append(draw_rays(top_arcs, "|"))
    for r in range(nlines):
        out.append(draw_line(r))
        if r < nlines - 1:
            out.append(draw_strip(r))
    if bottom_arcs:
        out.append(draw_rays(bottom_arcs, "|"))
    return "\n".join(out)


def render_svg(stack: OrientedStack) -> str:
    """A minimal static SVG picture of the stack."""
    params = stack.params
    xstep, ystep, margin = 40, 50, 20
    width = margin * 2 + params.isize * xstep + xstep
    height = margin * 2 + (len(stack.lines) - 1) * ystep

    def x(v: int) -> int:
        return margin + params.pos(v) * xstep

    def y(r: int) -> int:
        return margin + r * ystep

    parts = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" '
             f'height="{height + 2 * margin}" font-size="12">']
    for r, line in enumerate(stack.lines):
        parts.append(f'<line x1="{margin - 10}" y1="{y(r)}" x2="{width - margin + 10}" '
                     f'y2="{y(r)}" stroke="#999"/>')
        for v in params.vertices:
            parts.append(f'<text x="{x(v) - 4}" y="{y(r) - 4}">'
                         f'{line[params.pos(v)]}</text>')
    for arc in sorted(stack.arcs, key=repr):
        kind = arc[0]
        if kind == "cup":
            r, a, b = arc[1], x(arc[2]), x(arc[3])
            parts.append(f'<path d="M {a} {y(r)} A {(b - a) / 2} {ystep / 2} 0 0 0 '
                         f'{b} {y(r)}" fill="none" stroke="black"/>')
        elif kind == "cap":
            r, a, b = arc[1], x(arc[2]), x(arc[3])
            parts.append(f'<path d="M {a} {y(r)} A {(b - a) / 2} {ystep / 2} 0 0 1 '
                         f'{b} {y(r)}" fill="none" stroke="black"/>')
        elif kind == "seg":
            parts.append(f'<line x1="{x(arc[2])}" y1="{y(arc[1])}" x2="{x(arc[3])}" '
                         f'y2="{y(arc[1] + 1)}" stroke="black"/>')
        elif kind == "rayup":
            parts.append(f'<line x1="{x(arc[1])}" y1="{y(0)}" x2="{x(arc[1])}" '
                         f'y2="{y(0) - 15}" stroke="black"/>')
        else:
            r = len(stack.lines) - 1
            parts.append(f'<line x1="{x(arc[1])}" y1="{y(r)}" x2="{x(arc[1])}" '
                         f'y2="{y(r) + 15}" stroke="black"/>')
    parts.append("</svg>")
    return "\n".join(parts)
