# caterpillar.py
#
# Copyright (c) 2026 Unit Disk Trees Contributors
# All rights reserved.
#
# SPDX-License-Identifier: BSD-3-Clause

import dataclasses
import logging
import math
from collections.abc import Sequence
from enum import StrEnum

from unit_disk_trees.exceptions import ContractViolationError, LayoutError
from unit_disk_trees.geometry import (
    DEFAULT_TOLERANCE,
    DiskLayout,
    Point2,
    polar_offset,
    verify_udr,
)
from unit_disk_trees.graph import Graph, TreeClass, TreeKind, classify_tree

logger = logging.getLogger(__name__)

# Distance of a leaf that does not have to be stacked onto its parent. A far
# leaf of the previous vertex drifted forward by up to 25 degrees still clears
# it.
NEAR_LEAF_RADIUS: float = 0.15

# Largest bend used at a degree 5 vertex, in radians.
MAX_BEND: float = 0.05

# Angle the far leaves of one side may drift forward over a chain of degree 5
# vertices at distance two.
BEND_BUDGET: float = math.radians(24.0)

# Forward rotation of a far leaf that follows a far leaf on the same side,
# as a multiple of the bend.
FAN_FACTOR: float = 0.1

# Gap between the two far leaves of a degree 5 vertex beyond 60 degrees, as a
# multiple of the bend, used by `ConstructionParams.default_for`.
DEFAULT_SPREAD: float = 0.1

# Stacked leaf shift as a multiple of the bend. The far leaves next to it
# leave room for just under twice the bend.
DEFAULT_STACK_RATIO: float = 1.8

# A forced chain of k degree 5 vertices drifts the far leaves of the other
# side forward by this many bends per degree 5 vertex: its own turn plus two
# fans.
_BUDGET_SHARE: float = 2 + DEFAULT_SPREAD + 2 * FAN_FACTOR

_RIGHT = math.pi / 2
_SIXTY = math.pi / 3


class UdrAnswer(StrEnum):
    YES = "yes"
    NO = "no"


class UdrReason(StrEnum):
    DEGREE_AT_LEAST_6 = "degree-at-least-6"
    ADJACENT_DEGREE_5 = "adjacent-degree-5-backbone-pair"


@dataclasses.dataclass(frozen=True)
class UdrDecision:
    """
    Answer to "does this caterpillar have a unit disk representation".

    Attributes:
        answer (UdrAnswer): Yes or no.
        witness (DiskLayout | None): A verified layout, only on yes and only
            when a construction was requested.
        reason (UdrReason | None): Why the answer is no.
        vertices (tuple[int, ...]): The vertices the reason is about.
    """

    answer: UdrAnswer
    witness: DiskLayout | None = None
    reason: UdrReason | None = None
    vertices: tuple[int, ...] = ()

    @property
    def is_yes(self) -> bool:
        return self.answer is UdrAnswer.YES

    def describe(self) -> str:
        """
        One line summary, e.g. ``no: adjacent-degree-5-backbone-pair (u=3, v=4)``.
        """
        if self.is_yes:
            return "yes"
        if self.reason is UdrReason.ADJACENT_DEGREE_5:
            u, v = self.vertices
            return f"no: {self.reason} (u={u}, v={v})"
        return f"no: {self.reason} (v={self.vertices[0]})"


@dataclasses.dataclass(frozen=True)
class ConstructionParams:
    """
    Numeric knobs of the caterpillar construction.

    Attributes:
        epsilon (float): Bend unit in radians. The outer angular gaps next to
            a degree 5 vertex exceed 60 degrees by it.
        stack_ratio (float): Shift of a leaf stacked almost onto its parent,
            as a multiple of `epsilon`. Below 2, the room the neighboring far
            leaves leave.
        spread (float): Excess of the gap between the two far leaves of a
            degree 5 vertex over 60 degrees, as a multiple of `epsilon`. A
            degree 5 vertex turns the backbone by ``(2 + spread) * epsilon``.
        mu (float): Backbone overlap; consecutive backbone centers are
            ``2 - mu`` apart.
    """

    epsilon: float
    stack_ratio: float = DEFAULT_STACK_RATIO
    spread: float = 1.0
    mu: float = 0.0

    def __post_init__(self) -> None:
        if not self.epsilon > 0:
            msg = f"epsilon must be positive, got {self.epsilon}"
            raise ContractViolationError(msg)
        if not 0 < self.stack_ratio < 2:
            msg = f"stack_ratio must lie in (0, 2), got {self.stack_ratio}"
            raise ContractViolationError(msg)
        if not self.spread > 0:
            msg = f"spread must be positive, got {self.spread}"
            raise ContractViolationError(msg)
        if not 0 <= self.mu < self.epsilon:
            msg = f"mu must lie in [0, epsilon), got {self.mu}"
            raise ContractViolationError(msg)

    @property
    def stack_shift(self) -> float:
        return self.stack_ratio * self.epsilon

    @property
    def five_turn(self) -> float:
        """Clockwise turn of the backbone at a top degree 5 vertex."""
        return (2 + self.spread) * self.epsilon

    @classmethod
    def default_for(cls, g: Graph) -> "ConstructionParams":
        """
        Parameters for a caterpillar, sized by its longest chain of degree 5
        backbone vertices at distance two.

        A stacked leaf clears the backbone neighbors of its parent by about
        ``stack_ratio**2 / 4 * epsilon**2``, so the bend is as large as the
        forward drift of the far leaves in that chain allows. A chain of 2000
        degree 5 vertices still keeps about 6e-9.
        """
        tc = classify_tree(g)
        degrees = [g.degree(v) for v in tc.backbone] if tc.has_backbone else []
        chain = longest_forced_chain(degrees)
        epsilon = min(MAX_BEND, BEND_BUDGET / (_BUDGET_SHARE * (chain + 1)))
        return cls(
            epsilon=epsilon,
            stack_ratio=DEFAULT_STACK_RATIO,
            spread=DEFAULT_SPREAD,
            mu=epsilon * epsilon / 64,
        )


def _require_caterpillar(g: Graph) -> TreeClass:
    tc = classify_tree(g)
    if tc.kind is not TreeKind.CATERPILLAR:
        msg = f"Expected a caterpillar, got {tc.kind}"
        raise ContractViolationError(msg)
    return tc


def recognize_caterpillar(g: Graph) -> UdrDecision:
    """
    Decide whether a caterpillar admits a unit disk intersection representation.

    It does unless some vertex has degree six or more, or two consecutive
    backbone vertices both have degree five.

    Args:
        g (Graph): A caterpillar.

    Returns:
        UdrDecision: The answer, without a witness. A no names the lowest
            offending vertex (or the first offending backbone pair).

    Raises:
        ContractViolationError: If `g` is not a caterpillar.
    """
    tc = _require_caterpillar(g)
    for v in range(g.n):
        if g.degree(v) >= 6:
            return UdrDecision(
                answer=UdrAnswer.NO, reason=UdrReason.DEGREE_AT_LEAST_6, vertices=(v,)
            )
    for u, v in zip(tc.backbone, tc.backbone[1:]):
        if g.degree(u) == 5 and g.degree(v) == 5:
            return UdrDecision(
                answer=UdrAnswer.NO, reason=UdrReason.ADJACENT_DEGREE_5, vertices=(u, v)
            )
    return UdrDecision(answer=UdrAnswer.YES)


def longest_forced_chain(degrees: Sequence[int]) -> int:
    """
    Length of the longest run of degree 5 entries that are exactly two
    positions apart from their predecessor in the run.
    """
    best = current = 0
    last = -10
    for i, d in enumerate(degrees):
        if d == 5:
            current = current + 1 if i - last == 2 else 1
            last = i
            best = max(best, current)
    return best


class _Shape(StrEnum):
    # Degree at most 4: one far leaf on the named side, one near leaf opposite.
    TOP_FAR = "T"
    BOTTOM_FAR = "B"
    # Degree 5: two far leaves on the named side, the backbone bends away.
    TOP_FIVE = "U"
    BOTTOM_FIVE = "D"


def _plan_shapes(degrees: Sequence[int]) -> list[_Shape]:
    """
    Pick a shape per backbone vertex.

    A top five needs bottom-far neighbors and a bottom five top-far ones.
    Between two fives the far sides alternate, so the parity of their gap
    fixes whether they bend to the same side. Gaps of four or more may repeat
    one shape to steer the backbone back towards its start direction.
    """
    n = len(degrees)
    fives = [i for i, d in enumerate(degrees) if d == 5]
    repeat = [False] * n
    sides: list[int] = []
    drift = 0
    for j, i in enumerate(fives):
        if j == 0:
            side = 1
        else:
            gap = i - fives[j - 1]
            natural = sides[-1] if gap % 2 == 0 else -sides[-1]
            if gap <= 3:
                side = natural
            else:
                side = -1 if drift > 0 else 1 if drift < 0 else natural
                if side != natural:
                    repeat[fives[j - 1] + 2] = True
        sides.append(side)
        drift += side

    shapes: list[_Shape | None] = [None] * n
    for i, side in zip(fives, sides):
        shapes[i] = _Shape.TOP_FIVE if side > 0 else _Shape.BOTTOM_FIVE

    def flip(s: _Shape) -> _Shape:
        return _Shape.BOTTOM_FAR if s is _Shape.TOP_FAR else _Shape.TOP_FAR

    def beside(side: int) -> _Shape:
        return _Shape.BOTTOM_FAR if side > 0 else _Shape.TOP_FAR

    current = beside(sides[0]) if fives else _Shape.TOP_FAR
    for i in range((fives[0] if fives else n) - 1, -1, -1):
        shapes[i] = current
        current = flip(current)
    for j, start in enumerate(fives):
        end = fives[j + 1] if j + 1 < len(fives) else n
        current = beside(sides[j])
        for i in range(start + 1, end):
            if i > start + 1 and not repeat[i]:
                current = flip(current)
            shapes[i] = current
    return [s for s in shapes if s is not None]


def _is_five(shapes: Sequence[_Shape], i: int) -> bool:
    return 0 <= i < len(shapes) and shapes[i] in (_Shape.TOP_FIVE, _Shape.BOTTOM_FIVE)


@dataclasses.dataclass(frozen=True)
class LeafSlot:
    """
    A position for one leaf of a backbone vertex.

    Attributes:
        point (Point2): Center of the leaf disk.
        top (bool): Whether the slot lies left of the direction of travel.
    """

    point: Point2
    top: bool


@dataclasses.dataclass(frozen=True)
class BackboneFrame:
    """
    One traced backbone vertex.

    Attributes:
        center (Point2): Center of the backbone disk.
        heading_in (float): Direction from the previous backbone vertex.
        heading_out (float): Direction towards the next backbone vertex.
        slots (tuple[LeafSlot, ...]): Leaf positions in the order leaves fill them.
    """

    center: Point2
    heading_in: float
    heading_out: float
    slots: tuple[LeafSlot, ...]


@dataclasses.dataclass(frozen=True)
class BackboneTrace:
    """
    The traced backbone plus the virtual vertices just before and after it.
    """

    frames: tuple[BackboneFrame, ...]
    before: Point2
    after: Point2
    shapes: str

    @property
    def heading_in(self) -> float:
        return self.frames[0].heading_in

    @property
    def heading_out(self) -> float:
        return self.frames[-1].heading_out


def _leaf_slots(
    shape: _Shape,
    heading: float,
    last_top: float | None,
    last_bottom: float | None,
    near: float,
    p: ConstructionParams,
) -> tuple[list[tuple[float, float, bool]], float | None, float | None, float]:
    """
    Leaf positions as ``(angle, distance, top)`` triples around one backbone vertex.

    Returns the slots, the angles of the far top and far bottom leaves (None
    when the side has no far leaf) and the heading towards the next vertex.
    Far leaves on the same side as a far leaf of the previous vertex are
    turned forward by a fraction of the bend.
    """
    fan = FAN_FACTOR * p.epsilon
    top: float | None = None
    bottom: float | None = None
    match shape:
        case _Shape.TOP_FAR:
            top = heading + _RIGHT
            if last_top is not None:
                top = min(top, last_top - fan)
            return [(top, 2.0, True), (heading - _RIGHT, near, False)], top, None, heading
        case _Shape.BOTTOM_FAR:
            bottom = heading - _RIGHT
            if last_bottom is not None:
                bottom = max(bottom, last_bottom + fan)
            return [(bottom, 2.0, False), (heading + _RIGHT, near, True)], None, bottom, heading
        case _Shape.TOP_FIVE:
            first = heading + 2 * _SIXTY - p.epsilon
            second = first - _SIXTY - p.spread * p.epsilon
            bottom = heading - _RIGHT
            if last_bottom is not None:
                bottom = max(bottom, last_bottom + fan)
            slots = [(first, 2.0, True), (second, 2.0, True), (bottom, 2.0, False)]
            return slots, second, bottom, second - _SIXTY - p.epsilon
        case _Shape.BOTTOM_FIVE:
            first = heading - 2 * _SIXTY + p.epsilon
            second = first + _SIXTY + p.spread * p.epsilon
            top = heading + _RIGHT
            if last_top is not None:
                top = min(top, last_top - fan)
            slots = [(first, 2.0, False), (second, 2.0, False), (top, 2.0, True)]
            return slots, top, second, second + _SIXTY + p.epsilon


def trace_backbone(
    degrees: Sequence[int],
    params: ConstructionParams,
    start: Point2 = Point2(0.0, 0.0),
    heading: float = 0.0,
) -> BackboneTrace:
    """
    Place the backbone of a caterpillar with the given backbone degrees.

    Degrees count the virtual neighbors before the first and after the last
    vertex, so an inner vertex of a path has degree two here as well as at
    the ends.

    Args:
        degrees (Sequence[int]): Degree of every backbone vertex, each at most 5
            and no two consecutive fives.
        params (ConstructionParams): Bend and overlap.
        start (Point2): Center of the first backbone vertex.
        heading (float): Initial direction of travel in radians.

    Returns:
        BackboneTrace: Frames in backbone order.
    """
    if not degrees:
        msg = "Cannot trace an empty backbone"
        raise ContractViolationError(msg)
    shapes = _plan_shapes(degrees)
    step = 2.0 - params.mu
    before = polar_offset(start, heading + math.pi, step)
    center = start
    last_top: float | None = None
    last_bottom: float | None = None
    frames: list[BackboneFrame] = []
    for i, shape in enumerate(shapes):
        if i:
            center = polar_offset(center, heading, step)
        stacked = _is_five(shapes, i - 1) or _is_five(shapes, i + 1)
        near = params.stack_shift if stacked else NEAR_LEAF_RADIUS
        heading_in = heading
        slots, last_top, last_bottom, heading = _leaf_slots(
            shape, heading_in, last_top, last_bottom, near, params
        )
        frames.append(
            BackboneFrame(
                center=center,
                heading_in=heading_in,
                heading_out=heading,
                slots=tuple(LeafSlot(polar_offset(center, a, r), top) for a, r, top in slots),
            )
        )
    return BackboneTrace(
        frames=tuple(frames),
        before=before,
        after=polar_offset(center, heading, step),
        shapes="".join(shapes),
    )


def construct_caterpillar_udr(
    g: Graph, params: ConstructionParams | None = None
) -> DiskLayout:
    """
    Build a unit disk representation of a caterpillar that has one.

    The backbone is extended by one leaf at each end, so every backbone vertex
    has at most three leaves. Runs of vertices of degree at most four
    alternate a far leaf (tangent, perpendicular to the backbone) with a near
    leaf on the other side. A degree 5 vertex puts two far leaves on one side
    and bends the backbone away from them by `ConstructionParams.five_turn`; its
    backbone neighbors then carry their near leaf stacked almost onto their
    own center. Missing leaves simply leave their slot empty.

    Args:
        g (Graph): A caterpillar accepted by `recognize_caterpillar`.
        params (ConstructionParams | None): Defaults to
            `ConstructionParams.default_for`.

    Returns:
        DiskLayout: Centers for every vertex; the backbone is x-monotone.

    Raises:
        ContractViolationError: If `g` is not a caterpillar or has no UDR.
    """
    decision = recognize_caterpillar(g)
    if not decision.is_yes:
        msg = f"Caterpillar has no unit disk representation: {decision.describe()}"
        raise ContractViolationError(msg)
    if g.n == 1:
        return DiskLayout({0: Point2(0.0, 0.0)})
    if params is None:
        params = ConstructionParams.default_for(g)
    tc = classify_tree(g)
    backbone = tc.backbone
    leaves = {b: sorted(c.vertex for c in tc.descendants[b]) for b in backbone}
    head = leaves[backbone[0]].pop(0)
    tail = leaves[backbone[-1]].pop(0) if leaves[backbone[-1]] else None
    trace = trace_backbone([g.degree(b) for b in backbone], params)
    logger.debug(f"Caterpillar shapes {trace.shapes} with epsilon={params.epsilon}")

    centers: dict[int, Point2] = {head: trace.before}
    for b, frame in zip(backbone, trace.frames):
        centers[b] = frame.center
        for leaf, slot in zip(leaves[b], frame.slots):
            centers[leaf] = slot.point
    if tail is not None:
        centers[tail] = trace.after
    return DiskLayout(centers)


def recognize_and_construct(
    g: Graph,
    params: ConstructionParams | None = None,
    tolerance: float = DEFAULT_TOLERANCE,
) -> UdrDecision:
    """
    Recognize a caterpillar and, on yes, attach a verified witness.

    Raises:
        ContractViolationError: If `g` is not a caterpillar.
        LayoutError: If the constructed layout fails verification, which only
            happens when `params` leave too little clearance for `tolerance`.
    """
    decision = recognize_caterpillar(g)
    if not decision.is_yes:
        logger.info(f"No unit disk representation: {decision.describe()}")
        return decision
    layout = construct_caterpillar_udr(g, params)
    result = verify_udr(g, layout, tolerance)
    if not result.ok:
        first = result.violations[0]
        msg = (
            f"Constructed layout has {len(result.violations)} violations, "
            f"first {first.kind} between {first.u} and {first.v}"
        )
        logger.error(msg)
        raise LayoutError(msg)
    return dataclasses.replace(decision, witness=layout)
