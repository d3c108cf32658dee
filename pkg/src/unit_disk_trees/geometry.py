# geometry.py
#
# Copyright (c) 2026 Unit Disk Trees Contributors
# All rights reserved.
#
# SPDX-License-Identifier: BSD-3-Clause

import dataclasses
import logging
import math
from collections import defaultdict
from collections.abc import Mapping, Sequence
from enum import StrEnum
from typing import NamedTuple

import numpy as np
import shapely
from scipy.spatial import cKDTree
from shapely.geometry import MultiPoint

from unit_disk_trees.exceptions import ContractViolationError, LayoutError
from unit_disk_trees.graph import Graph

logger = logging.getLogger(__name__)

SQRT3: float = math.sqrt(3.0)

CONTACT_DISTANCE: float = 2.0

DEFAULT_TOLERANCE: float = 1e-9


class Point2(NamedTuple):
    """
    A disk center in the plane; the unit of length is the disk radius.
    """

    x: float
    y: float


def polar_offset(origin: Point2, angle: float, distance: float) -> Point2:
    """
    The point at `distance` from `origin` in direction `angle` (radians).
    """
    return Point2(origin.x + distance * math.cos(angle), origin.y + distance * math.sin(angle))


class GridCoord(NamedTuple):
    """
    Axial coordinates of a triangular grid cell with edge length 2.
    """

    a: int
    b: int

    def translate(self, other: "GridCoord") -> "GridCoord":
        return GridCoord(self.a + other.a, self.b + other.b)


# Counterclockwise, starting at the cell to the right.
GRID_DIRECTIONS: tuple[GridCoord, ...] = (
    GridCoord(1, 0),
    GridCoord(0, 1),
    GridCoord(-1, 1),
    GridCoord(-1, 0),
    GridCoord(0, -1),
    GridCoord(1, -1),
)

type LatticeMap = tuple[tuple[int, int], tuple[int, int]]


def grid_to_euclid(c: GridCoord) -> Point2:
    """
    Euclidean position of a grid cell: ``(2a + b, b * sqrt(3))``.
    """
    return Point2(float(2 * c.a + c.b), c.b * SQRT3)


def grid_neighbors(c: GridCoord) -> list[GridCoord]:
    """
    The six cells touching `c`, counterclockwise from ``(a + 1, b)``.
    """
    return [c.translate(d) for d in GRID_DIRECTIONS]


def are_grid_adjacent(c1: GridCoord, c2: GridCoord) -> bool:
    return GridCoord(c2.a - c1.a, c2.b - c1.b) in GRID_DIRECTIONS


def grid_distance_squared(c1: GridCoord, c2: GridCoord) -> int:
    """
    Squared Euclidean distance between two cells divided by 4, an exact integer.
    """
    da = c2.a - c1.a
    db = c2.b - c1.b
    return da * da + da * db + db * db


def _compose(m: LatticeMap, n: LatticeMap) -> LatticeMap:
    return (
        (
            m[0][0] * n[0][0] + m[0][1] * n[1][0],
            m[0][0] * n[0][1] + m[0][1] * n[1][1],
        ),
        (
            m[1][0] * n[0][0] + m[1][1] * n[1][0],
            m[1][0] * n[0][1] + m[1][1] * n[1][1],
        ),
    )


ROTATE_60: LatticeMap = ((0, -1), (1, 1))
REFLECT_X_AXIS: LatticeMap = ((1, 1), (0, -1))
IDENTITY: LatticeMap = ((1, 0), (0, 1))


def lattice_symmetries() -> list[LatticeMap]:
    """
    The 12 linear symmetries of the grid (6 rotations, each with and without
    the reflection across the x-axis) as integer matrices on axial coordinates.
    """
    rotations = [IDENTITY]
    for _ in range(5):
        rotations.append(_compose(ROTATE_60, rotations[-1]))
    return rotations + [_compose(r, REFLECT_X_AXIS) for r in rotations]


def apply_lattice_map(m: LatticeMap, c: GridCoord) -> GridCoord:
    return GridCoord(m[0][0] * c.a + m[0][1] * c.b, m[1][0] * c.a + m[1][1] * c.b)


@dataclasses.dataclass(frozen=True)
class DiskLayout:
    """
    Unit disks in the continuous plane.

    Attributes:
        centers (Mapping[int, Point2]): Disk center per vertex id.
    """

    centers: Mapping[int, Point2]

    def __len__(self) -> int:
        return len(self.centers)

    def transformed(self, angle: float, dx: float = 0.0, dy: float = 0.0) -> "DiskLayout":
        """
        Apply a rotation about the origin followed by a translation.
        """
        cos_a = math.cos(angle)
        sin_a = math.sin(angle)
        return DiskLayout(
            {
                v: Point2(cos_a * p.x - sin_a * p.y + dx, sin_a * p.x + cos_a * p.y + dy)
                for v, p in self.centers.items()
            }
        )


@dataclasses.dataclass(frozen=True)
class GridLayout:
    """
    Unit disks centered on triangular grid cells.

    Attributes:
        cells (Mapping[int, GridCoord]): Cell per vertex id.
    """

    cells: Mapping[int, GridCoord]

    def __len__(self) -> int:
        return len(self.cells)

    def to_disk_layout(self) -> DiskLayout:
        return DiskLayout({v: grid_to_euclid(c) for v, c in self.cells.items()})

    def mapped(self, m: LatticeMap, shift: GridCoord = GridCoord(0, 0)) -> "GridLayout":
        return GridLayout(
            {v: apply_lattice_map(m, c).translate(shift) for v, c in self.cells.items()}
        )


class ViolationKind(StrEnum):
    MISSING_INTERSECTION = "missing-intersection"
    FORBIDDEN_INTERSECTION = "forbidden-intersection"
    OVERLAP = "overlap-in-contact-model"


@dataclasses.dataclass(frozen=True)
class Violation:
    u: int
    v: int
    kind: ViolationKind
    distance: float


@dataclasses.dataclass(frozen=True)
class VerifyResult:
    """
    Outcome of checking a layout against a graph.

    Attributes:
        violations (tuple[Violation, ...]): Every offending pair, sorted.
    """

    violations: tuple[Violation, ...] = ()

    @property
    def ok(self) -> bool:
        return not self.violations


def _require_total(g: Graph, keys: Mapping[int, object]) -> None:
    missing = [v for v in range(g.n) if v not in keys]
    if missing:
        msg = f"Layout has no position for vertices {missing[:10]}"
        raise LayoutError(msg)


def verify_udr(
    g: Graph, layout: DiskLayout, tolerance: float = DEFAULT_TOLERANCE
) -> VerifyResult:
    """
    Check a unit disk intersection representation with closed disks.

    An edge needs its centers within ``2 + tolerance``; a non-edge needs them
    strictly farther apart.

    Args:
        g (Graph): The graph.
        layout (DiskLayout): Centers for every vertex.
        tolerance (float): Positive slack on the contact distance.

    Returns:
        VerifyResult: All violating pairs.

    Raises:
        LayoutError: If a vertex has no center.
    """
    if tolerance <= 0:
        msg = f"Tolerance must be positive, got {tolerance}"
        raise ContractViolationError(msg)
    _require_total(g, layout.centers)
    if g.n < 2:
        return VerifyResult()
    threshold = CONTACT_DISTANCE + tolerance
    points = np.array([layout.centers[v] for v in range(g.n)], dtype=np.float64)
    tree = cKDTree(points)
    # Candidates from the tree, decided by an exact per-pair distance below.
    candidates = tree.query_pairs(r=threshold * (1 + 1e-12), output_type="ndarray")
    violations: list[Violation] = []
    close: set[tuple[int, int]] = set()
    for u, v in candidates.tolist():
        u, v = min(u, v), max(u, v)
        d = math.dist(points[u], points[v])
        if d <= threshold:
            close.add((u, v))
            if not g.has_edge(u, v):
                violations.append(Violation(u, v, ViolationKind.FORBIDDEN_INTERSECTION, d))
    for u, v in g.edges():
        if (u, v) not in close:
            d = math.dist(points[u], points[v])
            violations.append(Violation(u, v, ViolationKind.MISSING_INTERSECTION, d))
    violations.sort(key=lambda x: (x.u, x.v))
    logger.debug(f"verify_udr: {len(violations)} violations on {g.n} vertices")
    return VerifyResult(tuple(violations))


def verify_weak_udc_grid(g: Graph, layout: GridLayout) -> VerifyResult:
    """
    Check a weak unit disk contact representation on the triangular grid.

    Cells must be distinct and every edge must join touching cells. Touching
    non-adjacent disks are allowed.

    Raises:
        LayoutError: If a vertex has no cell.
    """
    _require_total(g, layout.cells)
    violations: list[Violation] = []
    by_cell: defaultdict[GridCoord, list[int]] = defaultdict(list)
    for v in range(g.n):
        by_cell[layout.cells[v]].append(v)
    for shared in by_cell.values():
        for i, u in enumerate(shared):
            for v in shared[i + 1 :]:
                violations.append(Violation(u, v, ViolationKind.OVERLAP, 0.0))
    for u, v in g.edges():
        cu, cv = layout.cells[u], layout.cells[v]
        if cu != cv and not are_grid_adjacent(cu, cv):
            d = 2.0 * math.sqrt(grid_distance_squared(cu, cv))
            violations.append(Violation(u, v, ViolationKind.MISSING_INTERSECTION, d))
    violations.sort(key=lambda x: (x.u, x.v))
    return VerifyResult(tuple(violations))


def rhombus_polygon(
    width: float, height: float, center: Point2 = Point2(0.0, 0.0)
) -> list[Point2]:
    """
    Vertices of an axis-aligned rhombus with the given diagonals.
    """
    hw, hh = width / 2, height / 2
    return [
        Point2(center.x + hw, center.y),
        Point2(center.x, center.y + hh),
        Point2(center.x - hw, center.y),
        Point2(center.x, center.y - hh),
    ]


def regular_hexagon(side: float, center: Point2 = Point2(0.0, 0.0)) -> list[Point2]:
    """
    Vertices of a regular hexagon with two horizontal sides.
    """
    return [
        Point2(
            center.x + side * math.cos(k * math.pi / 3),
            center.y + side * math.sin(k * math.pi / 3),
        )
        for k in range(6)
    ]


def hausdorff_to_union(
    polygon: Sequence[tuple[float, float]],
    layout: DiskLayout,
    step: float = 0.05,
) -> float:
    """
    Over-approximate the asymmetric Hausdorff distance from a convex polygon
    to the union of the layout's unit disks.

    The polygon is sampled on a square grid of pitch `step` (restricted to the
    polygon grown by half a cell diagonal) plus its vertices. Since the
    distance to the union is 1-Lipschitz, adding ``step * sqrt(2) / 2`` to the
    sampled maximum bounds the true supremum. A single point is measured
    exactly.

    Args:
        polygon (Sequence[tuple[float, float]]): Vertices, in order.
        layout (DiskLayout): Nonempty disk layout.
        step (float): Sampling pitch.

    Returns:
        float: The bound.

    Raises:
        LayoutError: If the layout is empty.
    """
    if not layout.centers:
        msg = "Cannot measure distance to an empty disk union"
        raise LayoutError(msg)
    if step <= 0:
        msg = f"Sampling step must be positive, got {step}"
        raise ContractViolationError(msg)
    centers = np.array(list(layout.centers.values()), dtype=np.float64)
    tree = cKDTree(centers)
    vertices = np.array(polygon, dtype=np.float64).reshape(-1, 2)
    if len(vertices) == 1:
        d, _ = tree.query(vertices[0])
        return max(0.0, float(d) - 1.0)
    correction = step * math.sqrt(2) / 2
    region = MultiPoint(vertices).convex_hull.buffer(correction)
    min_x, min_y, max_x, max_y = region.bounds
    xs = np.arange(min_x, max_x + step, step)
    ys = np.arange(min_y, max_y + step, step)
    gx, gy = np.meshgrid(xs, ys)
    gx, gy = gx.ravel(), gy.ravel()
    inside = shapely.contains_xy(region, gx, gy)
    samples = np.vstack([np.column_stack([gx[inside], gy[inside]]), vertices])
    distances, _ = tree.query(samples)
    worst = float(np.max(np.maximum(distances - 1.0, 0.0)))
    logger.debug(f"Hausdorff bound from {len(samples)} samples: {worst} + {correction}")
    return worst + correction
