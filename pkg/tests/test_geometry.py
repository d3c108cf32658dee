# test_geometry.py
#
# Copyright (c) 2026 Unit Disk Trees Contributors
# All rights reserved.
#
# SPDX-License-Identifier: BSD-3-Clause

import itertools
import math

import pytest

from unit_disk_trees.caterpillar import construct_caterpillar_udr
from unit_disk_trees.exceptions import ContractViolationError, LayoutError
from unit_disk_trees.geometry import (
    GRID_DIRECTIONS,
    SQRT3,
    DiskLayout,
    GridCoord,
    GridLayout,
    Point2,
    ViolationKind,
    apply_lattice_map,
    are_grid_adjacent,
    grid_distance_squared,
    grid_neighbors,
    grid_to_euclid,
    hausdorff_to_union,
    lattice_symmetries,
    polar_offset,
    regular_hexagon,
    rhombus_polygon,
    verify_udr,
    verify_weak_udc_grid,
)
from unit_disk_trees.graph import Graph


@pytest.mark.parametrize(
    "cell,expected",
    [
        (GridCoord(0, 0), (0.0, 0.0)),
        (GridCoord(1, 0), (2.0, 0.0)),
        (GridCoord(0, 1), (1.0, SQRT3)),
    ],
)
def test_grid_to_euclid(cell: GridCoord, expected: tuple[float, float]) -> None:
    assert grid_to_euclid(cell) == pytest.approx(expected)


def test_grid_neighbors() -> None:
    assert grid_neighbors(GridCoord(0, 0)) == [
        (1, 0),
        (0, 1),
        (-1, 1),
        (-1, 0),
        (0, -1),
        (1, -1),
    ]
    shift = GridCoord(3, -2)
    moved = grid_neighbors(shift)
    assert len(set(moved)) == 6
    assert moved == [d.translate(shift) for d in GRID_DIRECTIONS]


def test_grid_neighbors_are_counterclockwise() -> None:
    angles = [math.atan2(*reversed(grid_to_euclid(c))) % (2 * math.pi) for c in GRID_DIRECTIONS]
    assert angles == sorted(angles)


def test_lattice_minimum_distance() -> None:
    cells = [GridCoord(a, b) for a in range(-3, 4) for b in range(-3, 4)]
    for c1, c2 in itertools.combinations(cells, 2):
        d = math.dist(grid_to_euclid(c1), grid_to_euclid(c2))
        assert d >= 2 - 1e-12
        assert are_grid_adjacent(c1, c2) == (abs(d - 2) < 1e-12)
        assert d == pytest.approx(2 * math.sqrt(grid_distance_squared(c1, c2)))


def test_lattice_symmetries_preserve_distances() -> None:
    maps = lattice_symmetries()
    assert len(set(maps)) == 12
    c1, c2 = GridCoord(2, -1), GridCoord(-1, 3)
    for m in maps:
        assert grid_distance_squared(apply_lattice_map(m, c1), apply_lattice_map(m, c2)) == (
            grid_distance_squared(c1, c2)
        )


def test_polar_offset() -> None:
    p = polar_offset(Point2(1.0, 1.0), math.pi / 2, 2.0)
    assert p == pytest.approx((1.0, 3.0))


def test_verify_udr_overlap_allowed() -> None:
    g = Graph.from_edges(2, [(0, 1)])
    assert verify_udr(g, DiskLayout({0: Point2(0, 0), 1: Point2(1.9, 0)})).ok


def test_verify_udr_closed_disks_touching() -> None:
    g = Graph.from_edges(2, [])
    result = verify_udr(g, DiskLayout({0: Point2(0, 0), 1: Point2(2.0, 0)}))
    (violation,) = result.violations
    assert violation.kind is ViolationKind.FORBIDDEN_INTERSECTION
    assert violation.distance == pytest.approx(2.0)


def test_verify_udr_missing_intersection() -> None:
    g = Graph.from_edges(3, [(0, 1), (1, 2)])
    layout = DiskLayout({0: Point2(0, 0), 1: Point2(2.0, 0), 2: Point2(4.5, 0)})
    result = verify_udr(g, layout)
    assert [(x.u, x.v, x.kind) for x in result.violations] == [
        (1, 2, ViolationKind.MISSING_INTERSECTION)
    ]


def test_verify_udr_star5() -> None:
    g = Graph.from_edges(6, [(0, i) for i in range(1, 6)])
    r = 2 - 1e-3
    centers = {0: Point2(0.0, 0.0)}
    for i in range(1, 6):
        centers[i] = polar_offset(centers[0], 2 * math.pi * i / 5 + 1e-6 * i, r)
    layout = DiskLayout(centers)
    assert verify_udr(g, layout).ok
    assert verify_udr(g, layout.transformed(1.234, dx=-7.0, dy=3.5)).ok


def test_verify_udr_incomplete() -> None:
    g = Graph.from_edges(2, [(0, 1)])
    with pytest.raises(LayoutError):
        verify_udr(g, DiskLayout({0: Point2(0, 0)}))
    with pytest.raises(ContractViolationError):
        verify_udr(g, DiskLayout({0: Point2(0, 0), 1: Point2(1, 0)}), tolerance=0)


def test_verify_udr_rigid_motion(alternating_fives: Graph) -> None:
    layout = construct_caterpillar_udr(alternating_fives)
    for angle in (0.3, math.pi, 5.0):
        assert verify_udr(alternating_fives, layout.transformed(angle, 10.0, -4.0)).ok


def test_verify_weak_udc_grid(path3: Graph) -> None:
    ok = GridLayout({0: GridCoord(0, 0), 1: GridCoord(1, 0), 2: GridCoord(2, 0)})
    assert verify_weak_udc_grid(path3, ok).ok
    far = GridLayout({0: GridCoord(0, 0), 1: GridCoord(2, 0), 2: GridCoord(3, 0)})
    (violation,) = verify_weak_udc_grid(path3, far).violations
    assert (violation.u, violation.v) == (0, 1)
    assert violation.kind is ViolationKind.MISSING_INTERSECTION
    assert violation.distance == pytest.approx(4.0)


def test_grid_layout_to_disk_layout(path3: Graph) -> None:
    layout = GridLayout({0: GridCoord(0, 0), 1: GridCoord(1, 0), 2: GridCoord(1, 1)})
    disks = layout.to_disk_layout()
    assert disks.centers[2] == pytest.approx((3.0, SQRT3))
    assert verify_udr(path3, disks).ok


def test_verify_weak_udc_grid_allows_contact() -> None:
    g = Graph.from_edges(2, [])
    assert verify_weak_udc_grid(g, GridLayout({0: GridCoord(0, 0), 1: GridCoord(1, 0)})).ok


def test_verify_weak_udc_grid_overlap(path3: Graph) -> None:
    layout = GridLayout({0: GridCoord(0, 0), 1: GridCoord(1, 0), 2: GridCoord(0, 0)})
    kinds = [x.kind for x in verify_weak_udc_grid(path3, layout).violations]
    assert ViolationKind.OVERLAP in kinds


def test_verify_weak_udc_grid_symmetries(path3: Graph) -> None:
    layout = GridLayout({0: GridCoord(0, 0), 1: GridCoord(0, 1), 2: GridCoord(1, 1)})
    for m in lattice_symmetries():
        assert verify_weak_udc_grid(path3, layout.mapped(m, GridCoord(5, -3))).ok


def test_hausdorff_square_around_disk() -> None:
    layout = DiskLayout({0: Point2(0.0, 0.0)})
    square = [(-1, -1), (1, -1), (1, 1), (-1, 1)]
    step = 0.01
    value = hausdorff_to_union(square, layout, step)
    assert math.sqrt(2) - 1 <= value <= math.sqrt(2) - 1 + 2 * step


def test_hausdorff_single_points() -> None:
    layout = DiskLayout({0: Point2(0.0, 0.0)})
    assert hausdorff_to_union([(0.0, 0.0)], layout) == 0
    assert hausdorff_to_union([(3.0, 0.0)], layout) == pytest.approx(2.0)


def test_hausdorff_monotone_in_step() -> None:
    layout = DiskLayout({0: Point2(0.0, 0.0), 1: Point2(1.5, 0.0)})
    triangle = [(-2.0, 0.0), (3.0, 0.0), (0.0, 2.5)]
    coarse = hausdorff_to_union(triangle, layout, 0.2)
    fine = hausdorff_to_union(triangle, layout, 0.02)
    assert fine <= coarse


def test_hausdorff_errors() -> None:
    with pytest.raises(LayoutError):
        hausdorff_to_union([(0.0, 0.0)], DiskLayout({}))
    with pytest.raises(ContractViolationError):
        hausdorff_to_union([(0.0, 0.0)], DiskLayout({0: Point2(0, 0)}), step=0)


def test_target_polygons() -> None:
    rhombus = rhombus_polygon(10, 4, Point2(1.0, 2.0))
    assert rhombus[0] == pytest.approx((6.0, 2.0))
    assert rhombus[1] == pytest.approx((1.0, 4.0))
    hexagon = regular_hexagon(3)
    assert hexagon[0] == pytest.approx((3.0, 0.0))
    assert hexagon[1][1] == pytest.approx(hexagon[2][1])
    for p, q in itertools.pairwise(hexagon + hexagon[:1]):
        assert math.dist(p, q) == pytest.approx(3)


@pytest.mark.parametrize(
    "distance,edge,ok",
    [
        (2 - 1e-6, True, True),
        (2 + 0.5e-9, True, True),
        (2 + 2e-9, True, False),
        (2.0, False, False),
        (2 + 0.5e-9, False, False),
        (2 + 1e-6 + 1e-9, False, True),
    ],
)
def test_verify_udr_contact_threshold(distance: float, edge: bool, ok: bool) -> None:
    g = Graph.from_edges(2, [(0, 1)] if edge else [])
    layout = DiskLayout({0: Point2(0.0, 0.0), 1: Point2(distance, 0.0)})
    assert verify_udr(g, layout).ok is ok


def test_verify_udr_contact_threshold_follows_tolerance() -> None:
    g = Graph.from_edges(2, [])
    layout = DiskLayout({0: Point2(0.0, 0.0), 1: Point2(2 + 1e-6, 0.0)})
    assert verify_udr(g, layout).ok
    assert not verify_udr(g, layout, tolerance=1e-5).ok


_GRID_LAYOUTS = {
    "path": (
        Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)]),
        {0: GridCoord(0, 0), 1: GridCoord(1, 0), 2: GridCoord(1, 1), 3: GridCoord(2, 1)},
    ),
    "full_star": (
        Graph.from_edges(7, [(0, i) for i in range(1, 7)]),
        {0: GridCoord(0, 0)} | {i + 1: d for i, d in enumerate(GRID_DIRECTIONS)},
    ),
    "lobster": (
        Graph.from_edges(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]),
        {
            0: GridCoord(-1, 0),
            1: GridCoord(0, 0),
            2: GridCoord(1, 0),
            3: GridCoord(0, 1),
            4: GridCoord(-1, 2),
            5: GridCoord(1, 1),
        },
    ),
    "broken": (
        Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)]),
        {0: GridCoord(0, 0), 1: GridCoord(1, 0), 2: GridCoord(1, 0), 3: GridCoord(3, 0)},
    ),
}


@pytest.mark.parametrize("name", sorted(_GRID_LAYOUTS))
@pytest.mark.parametrize("index", range(12))
def test_verify_weak_udc_grid_lattice_invariance(name: str, index: int) -> None:
    g, cells = _GRID_LAYOUTS[name]
    layout = GridLayout(cells)
    m = lattice_symmetries()[index]
    expected = [(x.u, x.v, x.kind) for x in verify_weak_udc_grid(g, layout).violations]
    moved = verify_weak_udc_grid(g, layout.mapped(m, GridCoord(-4, 7))).violations
    assert [(x.u, x.v, x.kind) for x in moved] == expected
    assert (not expected) is (name != "broken")


@pytest.mark.parametrize(
    "angle,dx,dy",
    [
        (0.0, 0.0, 0.0),
        (0.3, 10.0, -4.0),
        (math.pi / 3, -1e3, 2e3),
        (math.pi, 0.5, 0.5),
        (5.0, 0.0, 1e4),
    ],
)
def test_verify_udr_rigid_motion_invariance(
    alternating_fives: Graph, angle: float, dx: float, dy: float
) -> None:
    layout = construct_caterpillar_udr(alternating_fives)
    assert verify_udr(alternating_fives, layout.transformed(angle, dx, dy)).ok
    g = Graph.from_edges(3, [(0, 1)])
    near_miss = DiskLayout({0: Point2(0, 0), 1: Point2(1.5, 0), 2: Point2(3.5 - 1e-6, 0)})
    moved = verify_udr(g, near_miss.transformed(angle, dx, dy))
    assert [(x.u, x.v, x.kind) for x in moved.violations] == [
        (1, 2, ViolationKind.FORBIDDEN_INTERSECTION)
    ]
