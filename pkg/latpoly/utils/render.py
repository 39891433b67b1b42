"""latpoly figure rendering utility.

Polygons are laid out in rows keyed by their number b of boundary lattice
points, on a coarse unit grid with a fine `1/k` grid underneath.
"""
from dataclasses import dataclass, field
from fractions import Fraction
from math import floor
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

import svgwrite

from ._exceptions import UnparsablePolygonFile
from .extremal import Member
from .geometry import Polygon, denominator
from .iou import load_mapping, parse_polygon
from .lattice import lattice_points, lattice_stats

# Constants.
UNIT = 40
MARGIN = 1
LABEL_WIDTH = 2
FINE_STROKE = "#dddddd"
COARSE_STROKE = "#999999"
FILL = "#6fa8dc"


@dataclass(frozen=True)
class FigureEntry:

    polygon: Polygon
    label: Optional[str] = None


@dataclass
class FigureSpec:

    """Polygons to draw; `k` sets the fine grid (default: largest denominator)."""

    polygons: List[FigureEntry] = field(default_factory=list)
    k: Optional[int] = None

    @property
    def grid(self) -> int:
        if self.k is not None:
            return self.k
        return max((denominator(e.polygon) for e in self.polygons), default=1)

    def rows(self) -> List[Tuple[int, List[FigureEntry]]]:
        """Entries grouped by b, largest b first; input order within a row."""
        grouped: Dict[int, List[FigureEntry]] = {}
        for entry in self.polygons:
            grouped.setdefault(lattice_stats(entry.polygon).b, []).append(entry)
        return sorted(grouped.items(), key=lambda item: -item[0])

    @classmethod
    def from_members(
        cls, members: Sequence[Member], k: Optional[int] = None
    ) -> "FigureSpec":
        return cls([FigureEntry(p, str(f)) for f, p in members], k)


def read_figure_spec(path: Path) -> FigureSpec:
    """Read `{"k": K, "polygons": [{"vertices": ..., "label": ...}, ...]}`."""
    data = load_mapping(path)
    polygons = data.get("polygons", [])
    if not isinstance(polygons, list):
        raise UnparsablePolygonFile(path, ValueError("'polygons' must be a list"))
    entries = []
    for item in polygons:
        if not isinstance(item, dict):
            raise UnparsablePolygonFile(path, ValueError(f"{item!r} is not a polygon"))
        parsed = parse_polygon(item, path)
        entries.append(FigureEntry(parsed.polygon, parsed.label))
    k = data.get("k")
    return FigureSpec(entries, int(k) if k is not None else None)


def _bounds(polygon: Polygon) -> Tuple[int, int, int, int]:
    xs = [v.x for v in polygon.vertices]
    ys = [v.y for v in polygon.vertices]
    return floor(min(xs)), floor(min(ys)), -floor(-max(xs)), -floor(-max(ys))


def _fmt(value: Fraction) -> float:
    return round(float(value) * UNIT, 3)


@dataclass(frozen=True)
class _Cell:

    entry: FigureEntry
    b: int
    x0: int
    y0: int
    left: int
    bottom: int
    width: int
    height: int


def _layout(spec: FigureSpec) -> Tuple[List[_Cell], int, int]:
    cells: List[_Cell] = []
    top = MARGIN
    total_width = 0
    for b, entries in spec.rows():
        boxes = [_bounds(e.polygon) for e in entries]
        row_height = max(by1 - by0 for _, by0, _, by1 in boxes)
        left = LABEL_WIDTH
        for entry, (bx0, by0, bx1, by1) in zip(entries, boxes):
            cells.append(
                _Cell(
                    entry, b, bx0, by0, left, top + row_height, bx1 - bx0, by1 - by0
                )
            )
            left += bx1 - bx0 + MARGIN
        total_width = max(total_width, left)
        top += row_height + MARGIN
    return cells, max(total_width, LABEL_WIDTH), top


def render_svg(spec: FigureSpec) -> str:
    """Render `spec` as an SVG document (byte-deterministic)."""
    k = spec.grid
    cells, width, height = _layout(spec)
    dwg = svgwrite.Drawing(size=(width * UNIT, height * UNIT), profile="tiny")
    labelled_rows = set()
    for cell in cells:

        def at(x: Fraction, y: Fraction, cell: _Cell = cell) -> Tuple[float, float]:
            return (
                _fmt(x - cell.x0 + cell.left),
                _fmt(Fraction(cell.bottom) - (y - cell.y0)),
            )

        fine = dwg.add(dwg.g(stroke=FINE_STROKE, stroke_width=0.5))
        coarse = dwg.add(dwg.g(stroke=COARSE_STROKE, stroke_width=1))
        for step in range(cell.width * k + 1):
            x = cell.x0 + Fraction(step, k)
            group = coarse if step % k == 0 else fine
            group.add(dwg.line(start=at(x, cell.y0), end=at(x, cell.y0 + cell.height)))
        for step in range(cell.height * k + 1):
            y = cell.y0 + Fraction(step, k)
            group = coarse if step % k == 0 else fine
            group.add(dwg.line(start=at(cell.x0, y), end=at(cell.x0 + cell.width, y)))

        polygon = cell.entry.polygon
        dwg.add(
            dwg.polygon(
                [at(v.x, v.y) for v in polygon.vertices],
                fill=FILL,
                fill_opacity="0.5",
                stroke="black",
            )
        )
        dots = dwg.add(dwg.g(fill="black"))
        for point in lattice_points(polygon):
            dots.add(dwg.circle(center=at(point.x, point.y), r=3))
        for vertex in polygon.vertices:
            dots.add(dwg.circle(center=at(vertex.x, vertex.y), r=1.5))
        if cell.entry.label:
            dwg.add(
                dwg.text(
                    cell.entry.label,
                    insert=at(cell.x0, cell.y0 - Fraction(1, 3)),
                    font_size=8,
                )
            )
        if cell.b not in labelled_rows:
            labelled_rows.add(cell.b)
            dwg.add(
                dwg.text(
                    f"b={cell.b}",
                    insert=(
                        _fmt(Fraction(1, 4)),
                        _fmt(Fraction(cell.bottom) - Fraction(cell.height, 2)),
                    ),
                    font_size=12,
                )
            )
    return dwg.tostring()


def render_tikz(spec: FigureSpec) -> str:
    """Render `spec` as a TikZ picture with the same layout as `render_svg`."""
    k = spec.grid
    cells, _, _ = _layout(spec)
    lines = ["\\begin{tikzpicture}"]
    for cell in cells:
        shift_x = cell.left - cell.x0
        shift_y = -cell.bottom - cell.y0
        lines.append(f"\\begin{{scope}}[shift={{({shift_x},{shift_y})}}]")
        far = (cell.x0 + cell.width, cell.y0 + cell.height)
        corners = f"({cell.x0},{cell.y0}) grid ({far[0]},{far[1]})"
        lines.append(f"\\draw[step={Fraction(1, k)},gray!30,very thin] {corners};")
        lines.append(f"\\draw[step=1,gray] {corners};")
        path = " -- ".join(f"({v.x},{v.y})" for v in cell.entry.polygon.vertices)
        lines.append(f"\\filldraw[fill=blue!30] {path} -- cycle;")
        for point in lattice_points(cell.entry.polygon):
            lines.append(f"\\fill ({point.x},{point.y}) circle (1.5pt);")
        lines.append("\\end{scope}")
    lines.append("\\end{tikzpicture}")
    return "\n".join(lines) + "\n"


def figure_spec_data(spec: FigureSpec) -> Dict[str, Any]:
    """The JSON/YAML mapping read back by `read_figure_spec`."""
    data: Dict[str, Any] = {
        "polygons": [
            {
                "vertices": [[str(v.x), str(v.y)] for v in e.polygon.vertices],
                **({"label": e.label} if e.label else {}),
            }
            for e in spec.polygons
        ]
    }
    if spec.k is not None:
        data["k"] = spec.k
    return data
