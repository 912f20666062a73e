"""Drawing domino tableaux: ASCII boxes and standalone SVG.

Both renderers draw each domino as one outlined 1x2 rectangle with its label
centred, suppressing the grid edge inside the domino. Output is fully
deterministic (dominoes drawn in sorted order, fixed formatting), so files
can be compared byte for byte.
"""

from __future__ import annotations

from .dominoes import DominoTableau

_CELL_W = 4  # interior characters per cell, ascii
_CELL_H = 2  # canvas rows per cell including the shared border

_SVG_CELL = 40
_SVG_STROKE = 2


def ascii_art(tableau: DominoTableau) -> str:
    rows = tableau.shape.trimmed().parts
    if not rows:
        return "(empty)"
    nrows, ncols = len(rows), rows[0]
    height = _CELL_H * nrows + 1
    width = _CELL_W * ncols + 1
    canvas = [[" "] * width for _ in range(height)]
    owner: dict[tuple[int, int], int] = {}
    for k, d in enumerate(tableau.dominoes):
        for cell in d.cells():
            owner[cell] = k

    def cell_exists(r, c):
        return 1 <= r <= nrows and 1 <= c <= rows[r - 1]

    for r in range(1, nrows + 1):
        for c in range(1, rows[r - 1] + 1):
            top, left = _CELL_H * (r - 1), _CELL_W * (c - 1)
            # horizontal edges, drawn unless shared with the same domino
            if not cell_exists(r - 1, c) or owner[(r - 1, c)] != owner[(r, c)]:
                for x in range(left + 1, left + _CELL_W):
                    canvas[top][x] = "-"
            if not cell_exists(r + 1, c) or owner[(r + 1, c)] != owner[(r, c)]:
                for x in range(left + 1, left + _CELL_W):
                    canvas[top + _CELL_H][x] = "-"
            if not cell_exists(r, c - 1) or owner[(r, c - 1)] != owner[(r, c)]:
                canvas[top + 1][left] = "|"
            if not cell_exists(r, c + 1) or owner[(r, c + 1)] != owner[(r, c)]:
                canvas[top + 1][left + _CELL_W] = "|"

    # corner joints wherever an edge meets
    for y in range(0, height, _CELL_H):
        for x in range(0, width, _CELL_W):
            near = []
            if x > 0:
                near.append(canvas[y][x - 1])
            if x + 1 < width:
                near.append(canvas[y][x + 1])
            if y > 0:
                near.append(canvas[y - 1][x])
            if y + 1 < height:
                near.append(canvas[y + 1][x])
            if "-" in near or "|" in near:
                canvas[y][x] = "+"

    for d in tableau.dominoes:
        (r1, c1), (r2, c2) = d.cells()
        if d.horizontal:
            y = _CELL_H * (r1 - 1) + 1
            x = _CELL_W * (c1 - 1) + _CELL_W  # midpoint, on the erased edge
        else:
            y = _CELL_H * (r1 - 1) + _CELL_H
            x = _CELL_W * (c1 - 1) + _CELL_W // 2
        text = str(d.label)
        start = x - len(text) // 2
        for i, ch in enumerate(text):
            canvas[y][start + i] = ch

    return "\n".join("".join(row).rstrip() for row in canvas)


def svg(tableau: DominoTableau) -> str:
    rows = tableau.shape.trimmed().parts
    nrows = len(rows)
    ncols = rows[0] if rows else 0
    w = ncols * _SVG_CELL + 2 * _SVG_STROKE
    h = nrows * _SVG_CELL + 2 * _SVG_STROKE
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" '
        f'viewBox="0 0 {w} {h}">',
        f'<g fill="none" stroke="black" stroke-width="{_SVG_STROKE}">',
    ]
    for d in tableau.dominoes:
        x = (d.col - 1) * _SVG_CELL + _SVG_STROKE
        y = (d.row - 1) * _SVG_CELL + _SVG_STROKE
        rw = 2 * _SVG_CELL if d.horizontal else _SVG_CELL
        rh = _SVG_CELL if d.horizontal else 2 * _SVG_CELL
        parts.append(f'<rect x="{x}" y="{y}" width="{rw}" height="{rh}"/>')
    parts.append("</g>")
    parts.append('<g fill="black" font-family="sans-serif" font-size="18" '
                 'text-anchor="middle" dominant-baseline="central">')
    for d in tableau.dominoes:
        x = (d.col - 1) * _SVG_CELL + _SVG_STROKE
        y = (d.row - 1) * _SVG_CELL + _SVG_STROKE
        cx = x + (_SVG_CELL if d.horizontal else _SVG_CELL // 2)
        cy = y + (_SVG_CELL // 2 if d.horizontal else _SVG_CELL)
        parts.append(f'<text x="{cx}" y="{cy}">{d.label}</text>')
    parts.append("</g>")
    parts.append("</svg>")
    return "\n".join(parts)
