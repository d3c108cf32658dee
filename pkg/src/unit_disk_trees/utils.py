# utils.py
#
# Copyright (c) 2026 Unit Disk Trees Contributors
# All rights reserved.
#
# SPDX-License-Identifier: BSD-3-Clause

from collections.abc import Mapping

from unit_disk_trees.exceptions import LayoutError
from unit_disk_trees.geometry import DiskLayout, GridCoord, GridLayout, Point2


def serialize_layout(layout: DiskLayout | GridLayout) -> str:
    """Write a layout as one ``v x y`` (or ``v a b`` for grid cells) line per vertex.

    Args:
        layout (DiskLayout | GridLayout): The layout.

    Returns:
        str: Lines sorted by vertex id. Euclidean coordinates carry 12
            significant digits.
    """
    if isinstance(layout, GridLayout):
        lines = [f"{v} {c.a} {c.b}" for v, c in sorted(layout.cells.items())]
    else:
        lines = [
            f"{v} {_format_real(p.x)} {_format_real(p.y)}"
            for v, p in sorted(layout.centers.items())
        ]
    return "\n".join(lines) + "\n" if lines else ""


def _format_real(value: float) -> str:
    text = f"{value:.12g}"
    # Avoid "-0" so that mirrored layouts serialize identically.
    return "0" if text == "-0" else text


def parse_layout(text: str, *, grid: bool = False) -> DiskLayout | GridLayout:
    """
    Read a layout written by `serialize_layout`.

    Args:
        text (str): The document; ``#`` starts a comment.
        grid (bool): Read integer grid cells instead of Euclidean centers.

    Returns:
        DiskLayout | GridLayout: The layout.

    Raises:
        LayoutError: On a malformed line or a repeated vertex.
    """
    centers: dict[int, Point2] = {}
    cells: dict[int, GridCoord] = {}
    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 3:
            msg = f"line {line_number}: expected 'v x y', got {line!r}"
            raise LayoutError(msg)
        try:
            v = int(tokens[0])
            if v in centers or v in cells:
                msg = f"line {line_number}: vertex {v} placed twice"
                raise LayoutError(msg)
            if grid:
                cells[v] = GridCoord(int(tokens[1]), int(tokens[2]))
            else:
                centers[v] = Point2(float(tokens[1]), float(tokens[2]))
        except ValueError as ve:
            msg = f"line {line_number}: not a number in {line!r}"
            raise LayoutError(msg) from ve
    if grid:
        return GridLayout(cells)
    return DiskLayout(centers)


def serialize_ports(ports: Mapping[str, int]) -> str:
    """
    Write named gadget vertices as ``port <name> <vertex-id>`` lines.
    """
    return "".join(f"port {name} {v}\n" for name, v in sorted(ports.items()))


def parse_ports(text: str) -> dict[str, int]:
    """
    Read a ports sidecar written by `serialize_ports`.

    Raises:
        LayoutError: On a malformed line.
    """
    ports: dict[str, int] = {}
    for line_number, raw_line in enumerate(text.splitlines(), start=1):
        tokens = raw_line.split("#", 1)[0].split()
        if not tokens:
            continue
        if len(tokens) != 3 or tokens[0] != "port" or not tokens[2].isdigit():
            msg = f"line {line_number}: expected 'port <name> <vertex-id>'"
            raise LayoutError(msg)
        ports[tokens[1]] = int(tokens[2])
    return ports
