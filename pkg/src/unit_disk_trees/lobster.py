# lobster.py
#
# Copyright (c) 2026 Unit Disk Trees Contributors
# All rights reserved.
#
# SPDX-License-Identifier: BSD-3-Clause

import dataclasses
import functools
import itertools
import logging
from collections import deque
from collections.abc import Callable, Iterable, Iterator, Sequence
from enum import StrEnum

from unit_disk_trees.exceptions import ContractViolationError, EnumerationBoundsError
from unit_disk_trees.geometry import (
    GRID_DIRECTIONS,
    REFLECT_X_AXIS,
    GridCoord,
    GridLayout,
    apply_lattice_map,
    grid_to_euclid,
)
from unit_disk_trees.graph import Child, Graph, TreeClass

logger = logging.getLogger(__name__)

WINDOW_RADIUS: int = 4

DEFAULT_BOUND: int = 12

DEFAULT_SEARCH_BUDGET: int = 2_000_000

ORIGIN = GridCoord(0, 0)

# Steps that strictly increase the Euclidean x coordinate, in witness order.
FORWARD_DIRECTIONS: tuple[GridCoord, ...] = (
    GridCoord(1, 0),
    GridCoord(1, -1),
    GridCoord(0, 1),
)


class PlacementMode(StrEnum):
    """
    Where the next backbone vertex may go relative to the current one.
    """

    FORWARD3 = "forward3"
    ALL6 = "all6"


def reflect(c: GridCoord) -> GridCoord:
    """
    Mirror a head-relative cell across the horizontal axis through the head.
    """
    return apply_lattice_map(REFLECT_X_AXIS, c)


def hex_distance(c: GridCoord) -> int:
    """
    Number of grid steps between `c` and the origin.
    """
    return max(abs(c.a), abs(c.b), abs(c.a + c.b))


@dataclasses.dataclass(frozen=True)
class DescendantSpec:
    """
    Descendant shape of one backbone vertex.

    Attributes:
        degrees (tuple[int, ...]): Degree of every non-backbone neighbor,
            sorted in descending order. A child of degree ``k`` carries
            ``k - 1`` grandchildren.
    """

    degrees: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if any(d < 1 for d in self.degrees):
            msg = f"Child degrees must be positive, got {self.degrees}"
            raise ContractViolationError(msg)
        if list(self.degrees) != sorted(self.degrees, reverse=True):
            object.__setattr__(self, "degrees", tuple(sorted(self.degrees, reverse=True)))

    @property
    def grandchild_counts(self) -> tuple[int, ...]:
        return tuple(d - 1 for d in self.degrees)

    def __len__(self) -> int:
        return len(self.degrees)

    def __str__(self) -> str:
        return "[" + ",".join(str(d) for d in self.degrees) + "]"


def _ordered_children(children: Sequence[Child]) -> list[Child]:
    # Same order as DescendantSpec.degrees; ties broken by vertex id.
    return sorted(children, key=lambda c: (-c.degree, c.vertex))


def gamma_of(g: Graph, tc: TreeClass, v: int) -> DescendantSpec:
    """
    Sorted child degrees of a backbone vertex.

    Args:
        g (Graph): The tree.
        tc (TreeClass): Its classification; must carry a backbone.
        v (int): A backbone vertex.

    Returns:
        DescendantSpec: Degrees of the non-backbone neighbors of `v`.

    Raises:
        ContractViolationError: If `tc` has no backbone or `v` is not on it.
    """
    if not tc.has_backbone:
        msg = f"Descendants are only defined for caterpillars and lobsters, not {tc.kind}"
        raise ContractViolationError(msg)
    tc.index_of(v)
    return DescendantSpec(tuple(sorted((c.degree for c in tc.descendants[v]), reverse=True)))


@functools.cache
def window_cells(radius: int = WINDOW_RADIUS) -> tuple[GridCoord, ...]:
    """
    Head-relative cells whose Euclidean x offset and b offset are both at most
    `radius` in absolute value, in a fixed order that defines the signature
    bitmask.
    """
    return tuple(
        GridCoord(a, b)
        for b in range(-radius, radius + 1)
        for a in range(-2 * radius, 2 * radius + 1)
        if abs(2 * a + b) <= radius
    )


@functools.cache
def _window_index(radius: int) -> dict[GridCoord, int]:
    return {c: i for i, c in enumerate(window_cells(radius))}


def in_window(c: GridCoord, radius: int) -> bool:
    return abs(c.b) <= radius and abs(2 * c.a + c.b) <= radius


@dataclasses.dataclass(frozen=True)
class DpSignature:
    """
    Occupied grid cells around the current backbone vertex (the head).

    Attributes:
        occupied (frozenset[GridCoord]): Head-relative occupied cells inside
            the window; always contains the head cell itself.
        incoming (GridCoord | None): The step that led to the head, or None
            for the first backbone vertex.
        radius (int): Window radius.
    """

    occupied: frozenset[GridCoord]
    incoming: GridCoord | None = None
    radius: int = WINDOW_RADIUS

    @classmethod
    def initial(cls, radius: int = WINDOW_RADIUS) -> "DpSignature":
        return cls(occupied=frozenset({ORIGIN}), incoming=None, radius=radius)

    @functools.cached_property
    def mask(self) -> int:
        index = _window_index(self.radius)
        return sum(1 << index[c] for c in self.occupied)

    @functools.cached_property
    def mirror_mask(self) -> int:
        index = _window_index(self.radius)
        return sum(1 << index[reflect(c)] for c in self.occupied)

    def bitmask(self) -> int:
        return self.mask

    def dominates(self, other: "DpSignature") -> bool:
        """
        Whether every continuation that fits around `other` also fits around
        this signature, possibly mirrored. The incoming step plays no part in
        later placements.
        """
        return self.mask & ~other.mask == 0 or self.mirror_mask & ~other.mask == 0

    def sort_key(self) -> tuple[int, int]:
        incoming = -1 if self.incoming is None else GRID_DIRECTIONS.index(self.incoming)
        return self.bitmask(), incoming

    def reflected(self) -> "DpSignature":
        return DpSignature(
            occupied=frozenset(reflect(c) for c in self.occupied),
            incoming=None if self.incoming is None else reflect(self.incoming),
            radius=self.radius,
        )

    def canonical(self) -> tuple["DpSignature", bool]:
        """
        The smaller of the signature and its mirror image, and whether the
        mirror image was taken.
        """
        mirror = self.reflected()
        if mirror.sort_key() < self.sort_key():
            return mirror, True
        return self, False

    @property
    def is_symmetric(self) -> bool:
        return self.reflected() == self

    def is_free(self, c: GridCoord) -> bool:
        return c not in self.occupied


@dataclasses.dataclass(frozen=True)
class Placement:
    """
    One way to place the descendants of the head and the next backbone vertex.

    Attributes:
        step (GridCoord | None): Direction of the next backbone vertex, or None
            when the head is the last backbone vertex.
        children (tuple[GridCoord, ...]): Head-relative cell per child, in
            DescendantSpec order.
        grandchildren (tuple[tuple[GridCoord, ...], ...]): Head-relative cells
            of the grandchildren of every child.
    """

    step: GridCoord | None
    children: tuple[GridCoord, ...] = ()
    grandchildren: tuple[tuple[GridCoord, ...], ...] = ()

    def cells(self) -> frozenset[GridCoord]:
        cells = set(self.children)
        for group in self.grandchildren:
            cells.update(group)
        if self.step is not None:
            cells.add(self.step)
        return frozenset(cells)

    def reflected(self) -> "Placement":
        return Placement(
            step=None if self.step is None else reflect(self.step),
            children=tuple(reflect(c) for c in self.children),
            grandchildren=tuple(tuple(reflect(c) for c in g) for g in self.grandchildren),
        )


def _neighbors(c: GridCoord) -> Iterator[GridCoord]:
    for d in GRID_DIRECTIONS:
        yield c.translate(d)


def _assign_descendants(
    counts: tuple[int, ...],
    used: set[GridCoord],
    is_free: Callable[[GridCoord], bool],
) -> Iterator[tuple[tuple[GridCoord, ...], tuple[tuple[GridCoord, ...], ...]]]:
    """
    Yield every placement of children (around the origin) and their
    grandchildren. Children with equal grandchild counts are placed in
    increasing neighbor order so that interchangeable children are not
    enumerated twice.
    """
    children: list[GridCoord] = []
    groups: list[tuple[GridCoord, ...]] = []

    def place(k: int, min_slot: int) -> Iterator[
        tuple[tuple[GridCoord, ...], tuple[tuple[GridCoord, ...], ...]]
    ]:
        if k == len(counts):
            yield tuple(children), tuple(groups)
            return
        for slot, d in enumerate(GRID_DIRECTIONS):
            if slot < min_slot:
                continue
            cell = ORIGIN.translate(d)
            if cell in used or not is_free(cell):
                continue
            used.add(cell)
            children.append(cell)
            room = [c for c in _neighbors(cell) if c not in used and is_free(c)]
            next_min = slot + 1 if k + 1 < len(counts) and counts[k + 1] == counts[k] else 0
            for group in itertools.combinations(room, counts[k]):
                used.update(group)
                groups.append(group)
                yield from place(k + 1, next_min)
                groups.pop()
                used.difference_update(group)
            children.pop()
            used.discard(cell)

    yield from place(0, 0)


def iter_placements(
    sig: DpSignature,
    gamma: DescendantSpec,
    mode: PlacementMode = PlacementMode.FORWARD3,
    *,
    last: bool = False,
) -> Iterator[Placement]:
    """
    Generate the ways to place the head's descendants together with the next
    backbone vertex.

    Placements with a mirror-invariant step are deduplicated under the mirror
    image when the signature itself is mirror-symmetric.

    Args:
        sig (DpSignature): Canonical occupancy around the head.
        gamma (DescendantSpec): Descendants of the head.
        mode (PlacementMode): Three forward steps or all six directions.
        last (bool): The head is the last backbone vertex; no step is placed.

    Returns:
        Iterator[Placement]: In deterministic order; empty when nothing fits.
    """
    if last:
        steps: Sequence[GridCoord | None] = (None,)
    elif mode == PlacementMode.FORWARD3:
        steps = FORWARD_DIRECTIONS
    else:
        steps = GRID_DIRECTIONS
    symmetric = sig.is_symmetric
    counts = gamma.grandchild_counts
    for step in steps:
        if step is not None and not sig.is_free(step):
            continue
        if sum(d != step and sig.is_free(d) for d in GRID_DIRECTIONS) < len(counts):
            continue
        used: set[GridCoord] = {ORIGIN} if step is None else {ORIGIN, step}
        seen: set[frozenset[GridCoord]] = set()
        dedupe = symmetric and (step is None or reflect(step) == step)
        for children, groups in _assign_descendants(counts, used, sig.is_free):
            placement = Placement(step=step, children=children, grandchildren=groups)
            cells = placement.cells()
            if cells in seen:
                continue
            seen.add(cells)
            if dedupe:
                seen.add(frozenset(reflect(c) for c in cells))
            yield placement


def enumerate_placements(
    sig: DpSignature,
    gamma: DescendantSpec,
    mode: PlacementMode = PlacementMode.FORWARD3,
    *,
    last: bool = False,
) -> list[Placement]:
    """
    All placements of `iter_placements` as a list, memoized per signature,
    shape and mode.
    """
    return list(_cached_placements(sig, gamma, mode, last))


@functools.lru_cache(maxsize=1 << 16)
def _cached_placements(
    sig: DpSignature, gamma: DescendantSpec, mode: PlacementMode, last: bool
) -> tuple[Placement, ...]:
    return tuple(iter_placements(sig, gamma, mode, last=last))


def advance(sig: DpSignature, placement: Placement) -> tuple[DpSignature, bool]:
    """
    Signature of the next backbone vertex after applying `placement`.

    Returns:
        tuple[DpSignature, bool]: The canonical signature and whether it was
            mirrored to become canonical.

    Raises:
        ContractViolationError: If the placement has no step.
    """
    if placement.step is None:
        msg = "Cannot advance past the last backbone vertex"
        raise ContractViolationError(msg)
    step = placement.step
    moved = (
        GridCoord(c.a - step.a, c.b - step.b)
        for c in itertools.chain(sig.occupied, placement.cells())
    )
    occupied = frozenset(c for c in moved if in_window(c, sig.radius))
    return DpSignature(occupied=occupied, incoming=step, radius=sig.radius).canonical()


type Transition = tuple[DpSignature, Placement, bool]


@functools.lru_cache(maxsize=1 << 16)
def transitions(sig: DpSignature, gamma: DescendantSpec) -> tuple[Transition, ...]:
    """
    Forward successors of a signature for one head shape, one per distinct
    successor signature.

    Returns:
        tuple[Transition, ...]: Successor signature, the first placement that
            reaches it and whether it was mirrored, in placement order.
    """
    found: dict[DpSignature, Transition] = {}
    for placement in _cached_placements(sig, gamma, PlacementMode.FORWARD3, False):
        nxt, mirrored = advance(sig, placement)
        found.setdefault(nxt, (nxt, placement, mirrored))
    return tuple(found.values())


def prune_dominated(signatures: Iterable[DpSignature]) -> list[DpSignature]:
    """
    Keep the signatures that no other kept signature dominates.

    Lighter signatures are considered first, so among equal occupancies the
    first one seen survives.

    Returns:
        list[DpSignature]: Survivors in input order.
    """
    candidates = list(signatures)
    order = sorted(range(len(candidates)), key=lambda i: (candidates[i].mask.bit_count(), i))
    kept: list[int] = []
    for i in order:
        sig = candidates[i]
        if not any(candidates[j].dominates(sig) for j in kept):
            kept.append(i)
    kept.sort()
    return [candidates[i] for i in kept]


@dataclasses.dataclass(frozen=True)
class DpResult:
    """
    Outcome of the dynamic program.

    Attributes:
        feasible (bool): A strictly x-monotone weak contact representation on
            the grid exists.
        layout (GridLayout | None): A witness when feasible.
        max_frontier (int): Largest number of distinct signatures kept for any
            backbone vertex.
    """

    feasible: bool
    layout: GridLayout | None = None
    max_frontier: int = 0


def _require_backbone(tc: TreeClass) -> None:
    if not tc.has_backbone:
        msg = f"Expected a caterpillar or lobster, got {tc.kind}"
        raise ContractViolationError(msg)


def dp_recognize(
    g: Graph, tc: TreeClass, window_radius: int = WINDOW_RADIUS, *, prune: bool = True
) -> DpResult:
    """
    Decide whether a lobster admits a strictly x-monotone weak unit disk
    contact representation on the triangular grid.

    Every backbone vertex keeps the canonical signatures reachable by some
    placement of everything before it, minus those another kept signature
    dominates. Placements and successors are memoized per signature and
    shape, and the pruned frontier is bounded by a constant, so the run is
    linear in the backbone length.

    Args:
        g (Graph): The tree.
        tc (TreeClass): Its classification.
        window_radius (int): Signature window half-width.
        prune (bool): Drop dominated signatures from every frontier.

    Returns:
        DpResult: The decision, a witness and the largest frontier.

    Raises:
        ContractViolationError: If `tc` is not a caterpillar or lobster.
    """
    _require_backbone(tc)
    backbone = tc.backbone
    if g.max_degree > len(GRID_DIRECTIONS):
        logger.debug(f"Degree {g.max_degree} exceeds the grid degree")
        return DpResult(feasible=False)
    specs = [gamma_of(g, tc, v) for v in backbone]

    frontier: list[DpSignature] = [DpSignature.initial(window_radius)]
    # Per backbone index: next signature -> (previous signature, placement, mirrored).
    traces: list[dict[DpSignature, tuple[DpSignature, Placement, bool]]] = []
    max_frontier = 1
    for i, gamma in enumerate(specs[:-1]):
        following: dict[DpSignature, tuple[DpSignature, Placement, bool]] = {}
        for sig in frontier:
            for nxt, placement, mirrored in transitions(sig, gamma):
                if nxt not in following:
                    following[nxt] = (sig, placement, mirrored)
        if not following:
            logger.debug(f"No placement survives backbone index {i}")
            return DpResult(feasible=False, max_frontier=max_frontier)
        frontier = prune_dominated(following) if prune else list(following)
        traces.append({sig: following[sig] for sig in frontier})
        max_frontier = max(max_frontier, len(frontier))

    finish = next(
        (
            (sig, placements[0])
            for sig in frontier
            if (placements := _cached_placements(sig, specs[-1], PlacementMode.FORWARD3, True))
        ),
        None,
    )
    if finish is None:
        return DpResult(feasible=False, max_frontier=max_frontier)
    logger.debug(f"Lobster accepted, largest frontier {max_frontier}")
    layout = _replay(g, tc, specs, traces, finish)
    return DpResult(feasible=True, layout=layout, max_frontier=max_frontier)


def _replay(
    g: Graph,
    tc: TreeClass,
    specs: Sequence[DescendantSpec],
    traces: Sequence[dict[DpSignature, tuple[DpSignature, Placement, bool]]],
    finish: tuple[DpSignature, Placement],
) -> GridLayout:
    """
    Walk the trace back from the accepting signature and replay the chosen
    placements with absolute coordinates.
    """
    sig, final = finish
    chosen: list[tuple[Placement, bool]] = [(final, False)]
    for trace in reversed(traces):
        sig, placement, mirrored = trace[sig]
        chosen.append((placement, mirrored))
    chosen.reverse()

    cells: dict[int, GridCoord] = {}
    head = ORIGIN
    mirror = False

    def absolute(c: GridCoord) -> GridCoord:
        return head.translate(reflect(c) if mirror else c)

    for v, (placement, mirrored) in zip(tc.backbone, chosen, strict=True):
        cells[v] = head
        children = _ordered_children(tc.descendants[v])
        for child, cell, group in zip(
            children, placement.children, placement.grandchildren, strict=True
        ):
            cells[child.vertex] = absolute(cell)
            for w, gcell in zip(child.grandchildren, group, strict=True):
                cells[w] = absolute(gcell)
        if placement.step is not None:
            head = absolute(placement.step)
            mirror = mirror != mirrored
    return GridLayout(cells)


def is_straight(layout: GridLayout, backbone: Sequence[int]) -> bool:
    """
    Check that consecutive backbone cells strictly increase in Euclidean x.
    """
    xs = [grid_to_euclid(layout.cells[v]).x for v in backbone]
    return all(a < b for a, b in itertools.pairwise(xs))


@dataclasses.dataclass(frozen=True)
class EnumerationResult:
    """
    Outcome of the exhaustive grid search.

    Attributes:
        feasible (bool): Some weak contact representation exists.
        count (int): Number of representations up to the 12 grid symmetries.
        witnesses (tuple[GridLayout, ...]): The first representations found,
            with the first backbone vertex on the origin.
    """

    feasible: bool
    count: int
    witnesses: tuple[GridLayout, ...] = ()


@dataclasses.dataclass
class _Item:
    parent: int
    vertices: tuple[int, ...]
    leaves: bool


class _GridSearch:
    """
    Backtracking over grid placements of a whole tree, rooted at the first
    backbone vertex. Leaves sharing a parent are placed together as a set.
    """

    def __init__(self, g: Graph, root: int, first: int | None, bound: int, budget: int):
        self.g = g
        self.root = root
        self.bound = bound
        self.budget = budget
        self.nodes = 0
        self.items = self._plan(first)
        self.cells: dict[int, GridCoord] = {root: ORIGIN}
        self.used: set[GridCoord] = {ORIGIN}
        self.labelled = 0
        self.on_axis = 0
        self.witnesses: list[GridLayout] = []
        self.stop_at_first = False
        self._done = False

    def _plan(self, first: int | None) -> list[_Item]:
        g = self.g
        parent = {self.root: -1}
        order = [self.root]
        queue = deque([self.root])
        while queue:
            u = queue.popleft()
            neighbors = sorted(g.neighbors(u), key=lambda w: (w != first, w))
            for w in neighbors:
                if w not in parent:
                    parent[w] = u
                    order.append(w)
                    queue.append(w)
        items: list[_Item] = []
        grouped: dict[int, _Item] = {}
        for v in order[1:]:
            if g.degree(v) == 1:
                if parent[v] in grouped:
                    grouped[parent[v]].vertices += (v,)
                    continue
                item = _Item(parent=parent[v], vertices=(v,), leaves=True)
                grouped[parent[v]] = item
            else:
                item = _Item(parent=parent[v], vertices=(v,), leaves=False)
            items.append(item)
        return items

    def _tick(self) -> None:
        self.nodes += 1
        if self.nodes > self.budget:
            msg = f"Search exceeded its budget of {self.budget} nodes"
            raise EnumerationBoundsError(msg)

    def _free_around(self, c: GridCoord) -> list[GridCoord]:
        return [
            n
            for n in _neighbors(c)
            if n not in self.used and hex_distance(n) <= self.bound
        ]

    def _has_room(self, v: int) -> bool:
        # Neighbors still to place must fit into the free cells around v.
        pending = sum(1 for w in self.g.neighbors(v) if w not in self.cells)
        return pending <= len(self._free_around(self.cells[v]))

    def run(self, stop_at_first: bool) -> None:
        self.stop_at_first = stop_at_first
        if self._has_room(self.root):
            self._place(0, 1)

    def _place(self, k: int, multiplicity: int) -> None:
        if self._done:
            return
        self._tick()
        if k == len(self.items):
            self.labelled += multiplicity
            if all(c.b == 0 for c in self.cells.values()):
                self.on_axis += multiplicity
            if len(self.witnesses) < 16:
                self.witnesses.append(GridLayout(dict(self.cells)))
            if self.stop_at_first:
                self._done = True
            return
        item = self.items[k]
        room = self._free_around(self.cells[item.parent])
        pinned = k == 0
        if item.leaves:
            size = len(item.vertices)
            # Labelled layouts per cell set; the first leaf is fixed when pinned.
            factor = _factorial(size - 1) if pinned else _factorial(size)
            for group in itertools.combinations(room, size):
                if pinned and GridCoord(1, 0) not in group:
                    continue
                ordered = sorted(group, key=lambda c: (c != GridCoord(1, 0), c))
                for v, c in zip(item.vertices, ordered, strict=True):
                    self.cells[v] = c
                self.used.update(group)
                self._place(k + 1, multiplicity * factor)
                self.used.difference_update(group)
                for v in item.vertices:
                    del self.cells[v]
                if self._done:
                    return
            return
        (v,) = item.vertices
        for c in room:
            if pinned and c != GridCoord(1, 0):
                continue
            self.cells[v] = c
            self.used.add(c)
            if self._has_room(v) and self._has_room(item.parent):
                self._place(k + 1, multiplicity)
            self.used.discard(c)
            del self.cells[v]
            if self._done:
                return


def _factorial(k: int) -> int:
    result = 1
    for i in range(2, k + 1):
        result *= i
    return result


def _depth(g: Graph, root: int) -> int:
    seen = {root: 0}
    queue = deque([root])
    while queue:
        u = queue.popleft()
        for w in g.neighbors(u):
            if w not in seen:
                seen[w] = seen[u] + 1
                queue.append(w)
    return max(seen.values())


def _prepare_search(
    g: Graph, tc: TreeClass, bound: int, budget: int
) -> _GridSearch | None:
    _require_backbone(tc)
    if bound < 1:
        msg = f"Region half-width must be positive, got {bound}"
        raise ContractViolationError(msg)
    root = tc.backbone[0]
    depth = _depth(g, root)
    if depth > bound:
        msg = (
            f"Tree reaches {depth} steps from its first backbone vertex, "
            f"beyond the region half-width {bound}"
        )
        raise EnumerationBoundsError(msg)
    if g.max_degree > len(GRID_DIRECTIONS):
        return None
    first = tc.backbone[1] if len(tc.backbone) > 1 else None
    return _GridSearch(g, root, first, bound, budget)


def brute_force_enumerate(
    g: Graph,
    tc: TreeClass,
    bound: int = DEFAULT_BOUND,
    *,
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> EnumerationResult:
    """
    Enumerate every weak unit disk contact representation on the grid.

    The first backbone vertex is pinned to the origin and the next vertex in
    search order to the cell ``(1, 0)``, which removes the six rotations. The
    remaining mirror image across the x-axis is quotiented out by counting
    layouts on the axis once and all others twice.

    Args:
        g (Graph): The tree.
        tc (TreeClass): Its classification.
        bound (int): Half-width of the hexagonal search region, in grid steps.
        budget (int): Maximal number of search nodes.

    Returns:
        EnumerationResult: Feasibility, count and up to 16 witnesses.

    Raises:
        EnumerationBoundsError: If the tree does not fit into the region or
            the search needs more than `budget` nodes.
    """
    search = _prepare_search(g, tc, bound, budget)
    if search is None:
        return EnumerationResult(feasible=False, count=0)
    if g.n == 1:
        witness = GridLayout({tc.backbone[0]: ORIGIN})
        return EnumerationResult(feasible=True, count=1, witnesses=(witness,))
    search.run(stop_at_first=False)
    count = (search.labelled + search.on_axis) // 2
    logger.debug(
        f"Enumerated {search.labelled} pinned layouts in {search.nodes} nodes, "
        f"{count} up to symmetry"
    )
    return EnumerationResult(
        feasible=count > 0, count=count, witnesses=tuple(search.witnesses)
    )


def brute_force_feasible(
    g: Graph,
    tc: TreeClass,
    bound: int = DEFAULT_BOUND,
    *,
    budget: int = DEFAULT_SEARCH_BUDGET,
) -> GridLayout | None:
    """
    Find one weak unit disk contact representation on the grid, or None.

    Same search as `brute_force_enumerate`, stopping at the first layout.
    """
    search = _prepare_search(g, tc, bound, budget)
    if search is None:
        return None
    if g.n == 1:
        return GridLayout({tc.backbone[0]: ORIGIN})
    search.run(stop_at_first=True)
    return search.witnesses[0] if search.witnesses else None
