"""Human-readable output: ASCII and SVG tiling pictures, interleaved pairs.

Renderings are axis-aligned and deterministic: the same input always
produces byte-identical text.  SVG output sticks to rect, line and text
elements.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import AsmMatrix, GridKind, VertexId
from .tiling import Domino, Tiling, asm_pair_from_tiling


class OrderMismatch(ValueError):
    """Interleaving needs matrices of consecutive orders."""


@dataclass(frozen=True)
class RenderOptions:
    format: str = "ascii"
    cell_px: int = 24
    show_vertices: bool = False

    def __post_init__(self) -> None:
        if self.format not in ("ascii", "svg"):
            raise ValueError(f"format must be 'ascii' or 'svg', got {self.format!r}")
        if self.cell_px < 4:
            raise ValueError("cell_px must be >= 4")


_VALUE_CHAR = {1: "+", 0: "0", -1: "-"}


def render_tiling(t: Tiling, opts: RenderOptions = RenderOptions()) -> str:
    if opts.format == "svg":
        return _render_svg(t, opts)
    if opts.show_vertices:
        return _render_ascii_with_vertices(t)
    return _render_ascii(t)


def _cell_char(d: Domino, cell: tuple[int, int]) -> str:
    if d.orientation == "H":
        return "<" if cell == (d.x, d.y) else ">"
    return "v" if cell == (d.x, d.y) else "^"


def _render_ascii(t: Tiling) -> str:
    n = t.order
    owner = t.cell_owner
    lines = []
    for y in range(n - 1, -n - 1, -1):
        chars = []
        for x in range(-n, n):
            d = owner.get((x, y))
            chars.append(_cell_char(d, (x, y)) if d else " ")
        lines.append("".join(chars).rstrip())
    return "\n".join(lines)


def _render_ascii_with_vertices(t: Tiling) -> str:
    """Cells on odd canvas rows/columns, lattice points on even ones, so the
    two matrix grids can be overlaid as +/0/- marks."""
    n = t.order
    owner = t.cell_owner
    size = 4 * n + 1
    canvas = [[" "] * size for _ in range(size)]
    for (x, y), d in owner.items():
        canvas[2 * (n - y) - 1][2 * (x + n) + 1] = _cell_char(d, (x, y))
    smaller, larger = asm_pair_from_tiling(t)
    for m, kind in ((larger, GridKind.LARGER), (smaller, GridKind.SMALLER)):
        for a in range(m.order):
            for b in range(m.order):
                px, py = VertexId(kind, a, b).lattice_point(n)
                canvas[2 * (n - py)][2 * (px + n)] = _VALUE_CHAR[m.entries[a][b]]
    return "\n".join("".join(row).rstrip() for row in canvas)


def _render_svg(t: Tiling, opts: RenderOptions) -> str:
    n = t.order
    c = opts.cell_px
    size = 2 * n * c
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}"'
        f' viewBox="0 0 {size} {size}">'
    ]
    fill = {"H": "#a8c8e8", "V": "#e8c8a8"}
    for d in sorted(t.dominoes, key=Domino.sort_key):
        if d.orientation == "H":
            x, y = (d.x + n) * c, (n - d.y - 1) * c
            w, h = 2 * c, c
        else:
            x, y = (d.x + n) * c, (n - d.y - 2) * c
            w, h = c, 2 * c
        parts.append(
            f'  <rect x="{x}" y="{y}" width="{w}" height="{h}"'
            f' fill="{fill[d.orientation]}" stroke="#333" stroke-width="2"/>'
        )
    if opts.show_vertices:
        smaller, larger = asm_pair_from_tiling(t)
        font = max(c * 2 // 5, 6)
        for m, kind in ((larger, GridKind.LARGER), (smaller, GridKind.SMALLER)):
            for a in range(m.order):
                for b in range(m.order):
                    px, py = VertexId(kind, a, b).lattice_point(n)
                    parts.append(
                        f'  <text x="{(px + n) * c}" y="{(n - py) * c}"'
                        f' font-size="{font}" text-anchor="middle"'
                        f' dominant-baseline="middle">{m.entries[a][b]}</text>'
                    )
    parts.append("</svg>")
    return "\n".join(parts)


def render_interleaved(smaller: AsmMatrix, larger: AsmMatrix) -> str:
    """The two matrices in one grid: larger entries on even positions,
    smaller entries on the odd positions in between, column-aligned."""
    if larger.order != smaller.order + 1:
        raise OrderMismatch(
            f"orders must be consecutive, got {smaller.order} and {larger.order}"
        )
    span = 2 * larger.order - 1
    slots = [["  "] * span for _ in range(span)]
    for a, row in enumerate(larger.entries):
        for b, e in enumerate(row):
            slots[2 * a][2 * b] = f"{e:2d}"
    for a, row in enumerate(smaller.entries):
        for b, e in enumerate(row):
            slots[2 * a + 1][2 * b + 1] = f"{e:2d}"
    return "\n".join(" ".join(row).rstrip() for row in slots)
