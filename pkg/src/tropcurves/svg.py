"""SVG drawings of column-wise subdivisions."""
from __future__ import annotations

import xml.etree.ElementTree as ET

from .lattice import double_area
from .paths import LatticePath
from .subdivisions import ColumnwiseSubdivision

PITCH = 40
MARGIN = 20

TRIANGLE_FILL = "#f4c27a"
PARALLELOGRAM_FILL = "#9cc3e6"


def _xy(p, d: int) -> tuple[int, int]:
    # lattice origin at the bottom-left corner of the drawing
    return MARGIN + p[0] * PITCH, MARGIN + (d - p[1]) * PITCH


def _pts(points, d: int) -> str:
    return " ".join("{},{}".format(*_xy(p, d)) for p in points)


def render_subdivision(s: ColumnwiseSubdivision, path: LatticePath | None = None) -> str:
    d = s.d
    size = 2 * MARGIN + d * PITCH
    tris = s.triangles
    root = ET.Element(
        "svg",
        {
            "xmlns": "http://www.w3.org/2000/svg",
            "width": str(size),
            "height": str(size),
            "viewBox": f"0 0 {size} {size}",
            "data-degree": str(d),
            "data-triangles": str(len(tris)),
            "data-parallelograms": str(len(s.cells) - len(tris)),
            "data-triangle-double-areas": " ".join(str(double_area(t)) for t in tris),
        },
    )
    grid = ET.SubElement(root, "g", {"fill": "#888"})
    for x in range(d + 1):
        for y in range(d + 1 - x):
            cx, cy = _xy((x, y), d)
            ET.SubElement(grid, "circle", {"cx": str(cx), "cy": str(cy), "r": "2"})
    cells = ET.SubElement(root, "g", {"stroke": "#333", "stroke-width": "1.5"})
    for c in s.cells:
        ET.SubElement(
            cells,
            "polygon",
            {
                "class": c.kind.value,
                "points": _pts(c.vertices, d),
                "fill": TRIANGLE_FILL if c.is_triangle else PARALLELOGRAM_FILL,
                "data-double-area": str(double_area(c)),
            },
        )
    ET.SubElement(
        root,
        "polygon",
        {"class": "outline", "points": _pts([(0, 0), (d, 0), (0, d)], d), "fill": "none", "stroke": "black", "stroke-width": "2"},
    )
    if path is not None:
        ET.SubElement(
            root,
            "polyline",
            {"class": "path", "points": _pts(path.points, d), "fill": "none", "stroke": "#c0392b", "stroke-width": "4"},
        )
    ET.indent(root)
    return ET.tostring(root, encoding="unicode") + "\n"
