# gadgets.py
#
# Copyright (c) 2026 Unit Disk Trees Contributors
# All rights reserved.
#
# SPDX-License-Identifier: BSD-3-Clause

import dataclasses
import functools
import logging
import math
from collections.abc import Mapping, Sequence
from enum import StrEnum

import networkx as nx
import numpy as np
from scipy.spatial import cKDTree

from unit_disk_trees.caterpillar import ConstructionParams, trace_backbone
from unit_disk_trees.exceptions import GadgetParameterError, LayoutError
from unit_disk_trees.geometry import (
    SQRT3,
    DiskLayout,
    Point2,
    hausdorff_to_union,
    polar_offset,
    regular_hexagon,
    rhombus_polygon,
)
from unit_disk_trees.graph import Graph, serialize_graph
from unit_disk_trees.utils import serialize_layout, serialize_ports

logger = logging.getLogger(__name__)

# Bend at every degree 5 outer vertex of a ladder.
GADGET_BEND: float = 0.002

GADGET_PARAMS = ConstructionParams(
    epsilon=GADGET_BEND, stack_ratio=1.625, spread=1.0, mu=GADGET_BEND**2 / 64
)

# Clockwise turn of the travel direction at a connector hub. The angle
# between the two ladders on the outer side of the hub is pi plus this.
HUB_TURN: float = math.pi / 3 + 2 * GADGET_PARAMS.five_turn

RUNG_LENGTH: float = 2.0

# Minimum center distance kept between parts of a composite that are not
# meant to touch.
CLEARANCE: float = 2.5

# Segment length of the short sides of a rhombus.
RHOMBUS_SIDE: int = 3

HEXAGON_EDGE_INSET: float = 1.5

_MAX_SEGMENT = 399
_MAX_SPIRAL_STEPS = 200


class GadgetVariant(StrEnum):
    OUTERPLANAR = "outerplanar"
    TREE = "tree"


class GadgetKind(StrEnum):
    LADDER = "ladder"
    RHOMBUS = "rhombus"
    HEXAGON = "hexagon"


# Distance between consecutive turns of the hexagon spiral.
HEXAGON_PITCH: Mapping[GadgetVariant, float] = {
    GadgetVariant.OUTERPLANAR: 6.8,
    GadgetVariant.TREE: 4.8,
}


@dataclasses.dataclass(frozen=True)
class GadgetGraph:
    """
    A gadget graph together with the layout it is built to have.

    Attributes:
        graph (Graph): The gadget.
        ports (Mapping[str, int]): Named vertices: ``first_outer``,
            ``last_outer``, ``first_inner``, ``last_inner`` (ladders only) and
            ``hub_0``, ``hub_1``, ... for connector hubs.
        intended (DiskLayout): A unit disk representation of `graph`.
        heading_in (float): Direction of travel at the first outer vertex.
        heading_out (float): Direction of travel at the last outer vertex.
        faces (int): Number of bounded faces created by rungs and connectors.
        target (tuple[Point2, ...]): Polygon the layout approximates, empty
            for plain ladders and chains.
        spacing (float): Distance between consecutive outer vertices.
    """

    graph: Graph
    ports: Mapping[str, int]
    intended: DiskLayout
    heading_in: float = 0.0
    heading_out: float = 0.0
    faces: int = 0
    target: tuple[Point2, ...] = ()
    spacing: float = 2.0 - GADGET_PARAMS.mu

    def port(self, name: str) -> int:
        try:
            return self.ports[name]
        except KeyError:
            msg = f"Gadget has no port {name!r}, available: {sorted(self.ports)}"
            raise GadgetParameterError(msg) from None

    def point(self, name: str) -> Point2:
        return self.intended.centers[self.port(name)]

    @property
    def has_inner_rail(self) -> bool:
        return "first_inner" in self.ports

    @property
    def before(self) -> Point2:
        """Where a predecessor of the first outer vertex would sit."""
        return polar_offset(self.point("first_outer"), self.heading_in + math.pi, self.spacing)

    @property
    def after(self) -> Point2:
        """Where a successor of the last outer vertex would sit."""
        return polar_offset(self.point("last_outer"), self.heading_out, self.spacing)

    def points(self) -> list[Point2]:
        """Layout centers in vertex id order."""
        return [self.intended.centers[v] for v in range(self.graph.n)]

    def placed(self, start: Point2, heading: float) -> "GadgetGraph":
        """
        Move the gadget rigidly so that its first outer vertex sits at `start`
        and travel there points along `heading`.
        """
        angle = heading - self.heading_in
        rotated = self.intended.transformed(angle)
        first = rotated.centers[self.port("first_outer")]
        return dataclasses.replace(
            self,
            intended=rotated.transformed(0.0, start.x - first.x, start.y - first.y),
            heading_in=heading,
            heading_out=self.heading_out + angle,
            target=(),
        )

    def mirrored(self) -> "GadgetGraph":
        """
        Reflect the gadget in the x axis; extensions then sit right of travel.
        """
        return dataclasses.replace(
            self,
            intended=DiskLayout({v: Point2(p.x, -p.y) for v, p in self.intended.centers.items()}),
            heading_in=-self.heading_in,
            heading_out=-self.heading_out,
            target=tuple(Point2(p.x, -p.y) for p in self.target),
        )

    def hausdorff(self, step: float = 0.05) -> float:
        """
        Sampled distance from the target polygon to the union of the intended disks.

        Raises:
            GadgetParameterError: If the gadget has no target polygon.
        """
        if not self.target:
            msg = "Gadget has no target polygon"
            raise GadgetParameterError(msg)
        return hausdorff_to_union(self.target, self.intended, step)


class _Builder:
    def __init__(self, base: GadgetGraph | None = None) -> None:
        self.points: list[Point2] = base.points() if base else []
        self.edges: list[tuple[int, int]] = list(base.graph.edges()) if base else []

    def add(self, p: Point2) -> int:
        self.points.append(p)
        return len(self.points) - 1

    def link(self, u: int, v: int) -> None:
        self.edges.append((u, v))

    def absorb(self, other: GadgetGraph) -> int:
        offset = len(self.points)
        self.points.extend(other.points())
        self.edges.extend((u + offset, v + offset) for u, v in other.graph.edges())
        return offset

    def build(
        self,
        ports: Mapping[str, int],
        *,
        heading_in: float,
        heading_out: float,
        faces: int,
        spacing: float,
    ) -> GadgetGraph:
        return GadgetGraph(
            graph=Graph.from_edges(len(self.points), self.edges),
            ports=dict(ports),
            intended=DiskLayout(dict(enumerate(self.points))),
            heading_in=heading_in,
            heading_out=heading_out,
            faces=faces,
            spacing=spacing,
        )


@functools.cache
def _strip(
    k: int, inner_rail: bool, params: ConstructionParams, capped: bool = False
) -> GadgetGraph:
    if k < 2:
        msg = f"A ladder needs at least 2 rungs, got {k}"
        raise GadgetParameterError(msg)
    trace = trace_backbone([4 if i % 2 == 0 else 5 for i in range(k)], params)
    builder = _Builder()
    outer: list[int] = []
    inner: list[int] = []
    for i, frame in enumerate(trace.frames):
        v = builder.add(frame.center)
        outer.append(v)
        if i:
            builder.link(outer[i - 1], v)
        if inner_rail:
            u = builder.add(polar_offset(frame.center, frame.heading_in - math.pi / 2, RUNG_LENGTH))
            inner.append(u)
            builder.link(v, u)
            if i:
                builder.link(inner[i - 1], u)
        for slot in frame.slots:
            if slot.top:
                builder.link(v, builder.add(slot.point))
    ports = {"first_outer": outer[0], "last_outer": outer[-1]}
    if inner_rail:
        ports |= {"first_inner": inner[0], "last_inner": inner[-1]}
    if capped:
        ports["first_cap"] = builder.add(trace.before)
        builder.link(outer[0], ports["first_cap"])
        ports["last_cap"] = builder.add(trace.after)
        builder.link(outer[-1], ports["last_cap"])
    logger.debug(f"Strip of {k} with shapes {trace.shapes}, inner rail {inner_rail}")
    return builder.build(
        ports,
        heading_in=trace.heading_in,
        heading_out=trace.heading_out,
        faces=k - 1 if inner_rail else 0,
        spacing=2.0 - params.mu,
    )


def ladder(
    k: int, params: ConstructionParams = GADGET_PARAMS, *, capped: bool = True
) -> GadgetGraph:
    """
    A ladder of `k` rungs.

    Outer vertices follow the caterpillar construction for the degree pattern
    4, 5, 4, 5, ... so every degree 5 vertex bends the ladder clockwise.
    Inner vertices sit below their outer vertex at distance 2 and take the
    slot of the bottom leaf. Extension leaves fill the top slots. A capped
    ladder also gets one extension in place of the missing backbone neighbor
    at each end (ports ``first_cap`` and ``last_cap``), so the outer degrees
    alternate 4 and 5 all the way. Open ladders are what `corner_connector`
    joins; there the hub stands in for that neighbor.

    Args:
        k (int): Number of rungs, at least 2.
        params (ConstructionParams): Bend and overlap of the outer rail.
        capped (bool): Whether to add the two end extensions.

    Returns:
        GadgetGraph: The ladder, starting at the origin heading along +x.

    Raises:
        GadgetParameterError: If `k` < 2.
    """
    return _strip(k, True, params, capped)


def chain(
    k: int, params: ConstructionParams = GADGET_PARAMS, *, capped: bool = True
) -> GadgetGraph:
    """
    A ladder without its inner rail; the tree variant of `ladder`.
    """
    return _strip(k, False, params, capped)


def _leaves(g: Graph, v: int) -> list[int]:
    return [u for u in g.neighbors(v) if g.degree(u) == 1]


def _side(p: Point2, center: Point2, heading: float) -> int:
    cross = math.cos(heading) * (p.y - center.y) - math.sin(heading) * (p.x - center.x)
    return 1 if cross > 0 else -1


@dataclasses.dataclass(frozen=True)
class _Attachment:
    hub: Point2
    body: GadgetGraph
    extensions: tuple[Point2, ...]

    def points(self) -> list[Point2]:
        return [self.hub, *self.body.points(), *self.extensions]


def _attach(a: GadgetGraph, b: GadgetGraph, turn: int) -> _Attachment:
    hub = a.after
    heading = a.heading_out - turn * HUB_TURN
    body = b.placed(polar_offset(hub, heading, a.spacing), heading)
    span = math.pi + HUB_TURN
    extensions = tuple(
        polar_offset(hub, heading + turn * span * j / 4, RUNG_LENGTH) for j in range(1, 4)
    )
    return _Attachment(hub=hub, body=body, extensions=extensions)


def _hub_index(name: str) -> int:
    return int(name.removeprefix("hub_"))


def corner_connector(a: GadgetGraph, b: GadgetGraph, turn: int = 1) -> GadgetGraph:
    """
    Join two ladders (or chains) with a hub vertex that turns the direction
    of travel by `HUB_TURN` towards the inner rail.

    The hub sits where a successor of the last outer vertex of `a` would be,
    has three extension leaves spread over its outer side and is adjacent to
    the last outer vertex of `a` and the first outer vertex of `b`. For
    ladders the last inner vertex of `a` is joined to the first inner vertex
    of `b`, closing a 5-cycle. `b` is moved rigidly into place.

    Args:
        a (GadgetGraph): Gadget to extend. It has to end on an outer vertex
            with a single extension.
        b (GadgetGraph): Gadget to append.
        turn (int): 1 for a clockwise turn, -1 for a counterclockwise one.
            The extensions of both gadgets must lie on the side turned away
            from, so -1 applies to mirrored gadgets.

    Returns:
        GadgetGraph: The composite; `a` keeps its vertex ids, the hub comes
            next, then `b` and the hub extensions.

    Raises:
        GadgetParameterError: On missing ports, mixed variants, a bad
            `turn` or an end of `a` that cannot take a hub.
    """
    if turn not in (1, -1):
        msg = f"turn must be 1 or -1, got {turn}"
        raise GadgetParameterError(msg)
    last, first = a.port("last_outer"), b.port("first_outer")
    if "last_cap" in a.ports or "first_cap" in b.ports:
        msg = "Capped gadgets cannot be connected, build them with capped=False"
        raise GadgetParameterError(msg)
    if a.has_inner_rail != b.has_inner_rail:
        msg = "Cannot connect a ladder to a chain"
        raise GadgetParameterError(msg)
    end_leaves = _leaves(a.graph, last)
    if len(end_leaves) != 1:
        msg = f"Last outer vertex of a has {len(end_leaves)} extensions, a hub needs exactly 1"
        raise GadgetParameterError(msg)
    for g, v, heading in ((a, last, a.heading_out), (b, first, b.heading_in)):
        center = g.intended.centers[v]
        for leaf in _leaves(g.graph, v):
            if _side(g.intended.centers[leaf], center, heading) != turn:
                side = "left" if turn > 0 else "right"
                msg = f"Extensions must lie {side} of travel for turn={turn}"
                raise GadgetParameterError(msg)

    attachment = _attach(a, b, turn)
    builder = _Builder(a)
    hub = builder.add(attachment.hub)
    offset = builder.absorb(attachment.body)
    builder.link(hub, last)
    builder.link(hub, offset + first)
    if a.has_inner_rail:
        builder.link(a.port("last_inner"), offset + b.port("first_inner"))
    for p in attachment.extensions:
        builder.link(hub, builder.add(p))

    hubs = sorted((n for n in a.ports if n.startswith("hub_")), key=_hub_index)
    hub_ids = [a.ports[n] for n in hubs] + [hub]
    hubs = sorted((n for n in b.ports if n.startswith("hub_")), key=_hub_index)
    hub_ids += [b.ports[n] + offset for n in hubs]
    ports = {n: a.ports[n] for n in ("first_outer", "first_inner") if n in a.ports}
    ports |= {n: b.ports[n] + offset for n in ("last_outer", "last_inner") if n in b.ports}
    ports |= {f"hub_{i}": v for i, v in enumerate(hub_ids)}
    return builder.build(
        ports,
        heading_in=a.heading_in,
        heading_out=attachment.body.heading_out,
        faces=a.faces + b.faces + (1 if a.has_inner_rail else 0),
        spacing=a.spacing,
    )


def _too_close(tree: cKDTree | None, points: Sequence[Point2], clearance: float) -> bool:
    if tree is None or not points:
        return False
    distances, _ = tree.query(np.array(points, dtype=np.float64))
    return bool(np.min(distances) < clearance)


def _kd(points: Sequence[Point2]) -> cKDTree | None:
    return cKDTree(np.array(points, dtype=np.float64)) if points else None


def _variant(variant: GadgetVariant | str) -> GadgetVariant:
    try:
        return GadgetVariant(variant)
    except ValueError:
        msg = f"Unknown gadget variant {variant!r}"
        raise GadgetParameterError(msg) from None


def _stabilized(
    gadget: GadgetGraph, anchor: int, towards: Point2, limit: int, params: ConstructionParams
) -> tuple[GadgetGraph, int]:
    """
    Grow a path from the free rung slot of `anchor` towards `towards` while
    it keeps `CLEARANCE` from everything but its own predecessor.
    """
    centers = gadget.intended.centers
    g = gadget.graph
    previous = next(u for u in g.neighbors(anchor) if g.degree(u) > 1 and u < anchor)
    heading_in = math.atan2(
        centers[anchor].y - centers[previous].y, centers[anchor].x - centers[previous].x
    )
    p = polar_offset(centers[anchor], heading_in - math.pi / 2, RUNG_LENGTH)
    direction = math.atan2(towards.y - p.y, towards.x - p.x)
    tree = cKDTree(np.array(gadget.points(), dtype=np.float64))
    builder = _Builder(gadget)
    last = anchor
    grown = 0
    while grown < limit:
        if any(i != last for i in tree.query_ball_point(p, CLEARANCE)):
            break
        v = builder.add(p)
        builder.link(last, v)
        last = v
        grown += 1
        p = polar_offset(p, direction, 2.0 - params.mu)
    stabilized = builder.build(
        gadget.ports,
        heading_in=gadget.heading_in,
        heading_out=gadget.heading_out,
        faces=gadget.faces,
        spacing=gadget.spacing,
    )
    return stabilized, grown


def rhombus_approx(
    k: int,
    variant: GadgetVariant | str = GadgetVariant.OUTERPLANAR,
    params: ConstructionParams = GADGET_PARAMS,
) -> GadgetGraph:
    """
    Approximate a rhombus of width ``2k + 6`` and height ``6 * sqrt(3) + 2``.

    A long top ladder is followed by three connectors with two short ladders
    in between, turning the travel direction around, and a bottom ladder
    running back below the top one. The bottom ladder is shortened until it
    keeps `CLEARANCE` from the top ladder. In the tree variant, chains replace
    the ladders and an extra path grows from the middle of the second short
    chain into the channel between the long chains.

    Args:
        k (int): Size parameter, at least 2.
        variant (GadgetVariant | str): Outerplanar or tree.
        params (ConstructionParams): Bend and overlap of the rails.

    Returns:
        GadgetGraph: With `target` set to the rhombus, centered on the bounding
            box of the layout.

    Raises:
        GadgetParameterError: If `k` < 2 or the variant is unknown.
    """
    if k < 2:
        msg = f"Rhombus size must be at least 2, got {k}"
        raise GadgetParameterError(msg)
    variant = _variant(variant)
    inner_rail = variant is GadgetVariant.OUTERPLANAR
    top_length = k + 3 if (k + 3) % 2 else k + 4
    top = _strip(top_length, inner_rail, params)
    side = _strip(RHOMBUS_SIDE, inner_rail, params)
    gadget = corner_connector(top, side)
    offset = gadget.graph.n + 1
    gadget = corner_connector(gadget, side)
    first = side.port("first_outer")
    last_outer = side.port("last_outer")
    middle = next(u for u in side.graph.neighbors(first) if side.graph.has_edge(u, last_outer))

    top_tree = _kd(top.points())
    for bottom_length in range(top_length, 2, -2):
        candidate = _attach(gadget, _strip(bottom_length, inner_rail, params), 1)
        if not _too_close(top_tree, candidate.points(), CLEARANCE):
            break
    else:
        msg = f"No bottom ladder fits below a top ladder of {top_length}"
        raise LayoutError(msg)
    gadget = corner_connector(gadget, _strip(bottom_length, inner_rail, params))
    logger.debug(f"Rhombus {k}: top {top_length}, bottom {bottom_length}")

    if variant is GadgetVariant.TREE:
        start, end = gadget.point("first_outer"), gadget.point("last_outer")
        towards = Point2((start.x + end.x) / 2, (start.y + end.y) / 2)
        gadget, grown = _stabilized(gadget, offset + middle, towards, top_length, params)
        logger.debug(f"Rhombus {k}: stabilizing path of {grown}")

    xs = [p.x for p in gadget.points()]
    ys = [p.y for p in gadget.points()]
    center = Point2((min(xs) + max(xs)) / 2, (min(ys) + max(ys)) / 2)
    target = rhombus_polygon(2 * k + 6, 6 * SQRT3 + 2, center)
    return dataclasses.replace(gadget, target=tuple(target))


def hexagon_approx(
    k: int,
    variant: GadgetVariant | str = GadgetVariant.OUTERPLANAR,
    params: ConstructionParams = GADGET_PARAMS,
) -> GadgetGraph:
    """
    Approximate the regular hexagon of side ``2k - 1`` centered at the origin.

    Ladders (or chains) joined by connectors spiral clockwise inwards from
    the top left corner, instead of filling the hexagon with parallel rows.
    Each segment aims at the next corner of a hexagon shrunk by
    `HEXAGON_PITCH` per turn. Segment lengths are odd, chosen to end
    closest to that corner while keeping `CLEARANCE` from everything
    laid before the previous segment and leaving room for one more
    connector. The spiral stops once no segment fits.

    Args:
        k (int): Size parameter with ``k % 6 == 4``.
        variant (GadgetVariant | str): Outerplanar or tree.
        params (ConstructionParams): Bend and overlap of the rails.

    Returns:
        GadgetGraph: With `target` set to the hexagon.

    Raises:
        GadgetParameterError: If `k` is not 4 modulo 6 or the variant is unknown.
    """
    if k < 4 or k % 6 != 4:
        msg = f"Hexagon size must be 4 modulo 6, got {k}"
        raise GadgetParameterError(msg)
    variant = _variant(variant)
    inner_rail = variant is GadgetVariant.OUTERPLANAR
    side = 2 * k - 1
    apothem = side * SQRT3 / 2
    pitch = HEXAGON_PITCH[variant]
    origin = Point2(0.0, 0.0)

    def inset(t: int) -> float:
        return HEXAGON_EDGE_INSET + (t // 6) * pitch

    def corner(t: int) -> Point2:
        radius = (apothem - inset(t)) * 2 / SQRT3
        return polar_offset(origin, math.radians(120 - 60 * (t % 6)), radius)

    start = corner(0)
    gadget: GadgetGraph | None = None
    guard = 0
    segments: list[int] = []
    t = 1
    for _ in range(_MAX_SPIRAL_STEPS):
        if inset(t) > apothem - 1:
            break
        goal = corner(t)
        points = gadget.points() if gadget else []
        settled = _kd(points[:guard])
        laid = _kd(points)
        best: int | None = None
        best_distance = previous = math.inf
        for m in range(3, _MAX_SEGMENT, 2):
            piece = _strip(m, inner_rail, params)
            if gadget is None:
                body = piece.placed(start, 0.0)
                new_points = body.points()
            else:
                attachment = _attach(gadget, piece, 1)
                body = attachment.body
                new_points = attachment.points()
            distance = math.dist(body.after, goal)
            if distance > previous + 1e-9:
                break
            previous = distance
            if _too_close(settled, [*new_points, body.after], CLEARANCE):
                break
            lookahead = _attach(body, _strip(RHOMBUS_SIDE, inner_rail, params), 1)
            if _too_close(laid, lookahead.points(), CLEARANCE):
                continue
            if distance < best_distance:
                best, best_distance = m, distance
        if best is None:
            break
        piece = _strip(best, inner_rail, params)
        guard = gadget.graph.n if gadget else 0
        gadget = corner_connector(gadget, piece) if gadget else piece.placed(start, 0.0)
        segments.append(best)
        t += 1
    if gadget is None:
        msg = f"No segment fits into a hexagon of side {side}"
        raise LayoutError(msg)
    logger.debug(f"Hexagon {k} ({variant}) segments {segments}")
    return dataclasses.replace(gadget, target=tuple(regular_hexagon(side)))


def build_gadget(
    kind: GadgetKind | str,
    k: int,
    variant: GadgetVariant | str = GadgetVariant.OUTERPLANAR,
) -> GadgetGraph:
    """
    Dispatch to the generator for `kind`; ladders of the tree variant are chains.
    """
    try:
        kind = GadgetKind(kind)
    except ValueError:
        msg = f"Unknown gadget kind {kind!r}"
        raise GadgetParameterError(msg) from None
    variant = _variant(variant)
    match kind:
        case GadgetKind.LADDER:
            return ladder(k) if variant is GadgetVariant.OUTERPLANAR else chain(k)
        case GadgetKind.RHOMBUS:
            return rhombus_approx(k, variant)
        case GadgetKind.HEXAGON:
            return hexagon_approx(k, variant)


def cycle_rank(g: Graph) -> int:
    """
    Dimension of the cycle space: ``|E| - |V| + components``.
    """
    return g.edge_count - g.n + nx.number_connected_components(g.to_networkx())


def write_gadget(gadget: GadgetGraph) -> tuple[str, str, str]:
    """
    Render a gadget as edge list, ports sidecar and intended layout documents.
    """
    return (
        serialize_graph(gadget.graph),
        serialize_ports(gadget.ports),
        serialize_layout(gadget.intended),
    )
