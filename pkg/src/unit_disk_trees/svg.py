# svg.py
#
# Copyright (c) 2026 Unit Disk Trees Contributors
# All rights reserved.
#
# SPDX-License-Identifier: BSD-3-Clause

import dataclasses

from unit_disk_trees.geometry import DiskLayout, GridLayout
from unit_disk_trees.graph import Graph

DEFAULT_SVG_SCALE: float = 20.0


@dataclasses.dataclass(frozen=True)
class SvgOptions:
    """
    Rendering options.

    Attributes:
        scale (float): Pixels per model unit (one disk radius).
        margin (float): Blank border in model units.
        disk_fill (str): Fill color of the disks.
        disk_opacity (float): Fill opacity, so overlaps stay visible.
        edge_stroke (str): Color of the induced straight-line edges.
        labels (bool): Write vertex ids at the disk centers.
    """

    scale: float = DEFAULT_SVG_SCALE
    margin: float = 1.5
    disk_fill: str = "#7986cb"
    disk_opacity: float = 0.45
    edge_stroke: str = "#1a237e"
    labels: bool = False


def _num(value: float) -> str:
    text = f"{value:.3f}".rstrip("0").rstrip(".")
    return "0" if text in ("", "-0") else text


def export_svg(
    g: Graph, layout: DiskLayout | GridLayout, options: SvgOptions | None = None
) -> str:
    """
    Render one unit disk per vertex plus the induced embedding as SVG 1.1.

    The output depends only on the inputs, so it can be compared byte for byte.

    Args:
        g (Graph): The graph.
        layout (DiskLayout | GridLayout): Positions for every vertex.
        options (SvgOptions | None): Rendering options.

    Returns:
        str: The SVG document.
    """
    if options is None:
        options = SvgOptions()
    disks = layout.to_disk_layout() if isinstance(layout, GridLayout) else layout
    centers = disks.centers
    s = options.scale
    if centers:
        min_x = min(p.x for p in centers.values()) - 1 - options.margin
        max_x = max(p.x for p in centers.values()) + 1 + options.margin
        min_y = min(p.y for p in centers.values()) - 1 - options.margin
        max_y = max(p.y for p in centers.values()) + 1 + options.margin
    else:
        min_x = min_y = 0.0
        max_x = max_y = 2 * options.margin
    width = (max_x - min_x) * s
    height = (max_y - min_y) * s

    def px(x: float) -> str:
        return _num((x - min_x) * s)

    def py(y: float) -> str:
        # SVG grows downwards.
        return _num((max_y - y) * s)

    svg = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{_num(width)}" height="{_num(height)}" '
        f'viewBox="0 0 {_num(width)} {_num(height)}">',
    ]
    for v in sorted(centers):
        p = centers[v]
        svg.append(
            f'<circle id="v{v}" cx="{px(p.x)}" cy="{py(p.y)}" r="{_num(s)}" '
            f'fill="{options.disk_fill}" fill-opacity="{_num(options.disk_opacity)}" '
            f'stroke="{options.disk_fill}"/>'
        )
    for u, v in g.edges():
        if u in centers and v in centers:
            p, q = centers[u], centers[v]
            svg.append(
                f'<line x1="{px(p.x)}" y1="{py(p.y)}" x2="{px(q.x)}" y2="{py(q.y)}" '
                f'stroke="{options.edge_stroke}" stroke-width="1"/>'
            )
    if options.labels:
        for v in sorted(centers):
            p = centers[v]
            svg.append(
                f'<text x="{px(p.x)}" y="{py(p.y)}" font-size="{_num(s * 0.6)}" '
                f'text-anchor="middle" dominant-baseline="central">{v}</text>'
            )
    svg.append("</svg>")
    return "\n".join(svg) + "\n"
