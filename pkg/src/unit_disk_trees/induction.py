# induction.py
#
# Copyright (c) 2026 Unit Disk Trees Contributors
# All rights reserved.
#
# SPDX-License-Identifier: BSD-3-Clause

import dataclasses
import functools
import hashlib
import itertools
import json
import logging
from collections.abc import Callable, Iterator, Sequence
from concurrent.futures import ProcessPoolExecutor

from unit_disk_trees.exceptions import ContractViolationError
from unit_disk_trees.lobster import (
    FORWARD_DIRECTIONS,
    WINDOW_RADIUS,
    DescendantSpec,
    DpSignature,
    PlacementMode,
    advance,
    iter_placements,
)

logger = logging.getLogger(__name__)

# Backbone vertices placed before the head, at most, when exploring reachable states.
DEFAULT_DEPTH: int = 1

# Up to five children of degree at most six: 462 shapes.
DEFAULT_MAX_CHILDREN: int = 5

DEFAULT_MAX_GRANDCHILDREN: int = 5

type Prefix = tuple[DescendantSpec, ...]
type Frontier = tuple[DpSignature, ...]


def descendant_specs(
    max_children: int = DEFAULT_MAX_CHILDREN,
    max_grandchildren: int = DEFAULT_MAX_GRANDCHILDREN,
) -> list[DescendantSpec]:
    """
    Every descendant shape with at most `max_children` children of at most
    `max_grandchildren` grandchildren each, lightest first.
    """
    if max_children < 0 or max_grandchildren < 0:
        msg = "Descendant bounds must be nonnegative"
        raise ContractViolationError(msg)
    specs: list[DescendantSpec] = []

    def extend(prefix: list[int], largest: int) -> None:
        specs.append(DescendantSpec(tuple(d + 1 for d in prefix)))
        if len(prefix) == max_children:
            return
        for g in range(largest, -1, -1):
            prefix.append(g)
            extend(prefix, g)
            prefix.pop()

    extend([], max_grandchildren)
    specs.sort(key=lambda s: (len(s), s.degrees))
    return specs


def state_radius(depth: int) -> int:
    """
    Window radius that keeps every cell of a prefix of `depth` backbone
    vertices in view of the head and of a vertex one step away.
    """
    return max(WINDOW_RADIUS, 2 * depth + 4)


def _state_dict(state: DpSignature) -> dict[str, object]:
    return {
        "occupied": [[c.a, c.b] for c in sorted(state.occupied)],
        "incoming": None if state.incoming is None else [state.incoming.a, state.incoming.b],
    }


@dataclasses.dataclass(frozen=True)
class InductionCase:
    """
    One induction step: append a backbone vertex after a head in a fixed
    reachable state.

    Attributes:
        case_id (str): Stable hash of the canonical state and both shapes.
        prefix (Prefix): Shapes of the vertices before the head, for the first
            prefix found to reach the state.
        state (DpSignature): Canonical occupancy around the head.
        head (DescendantSpec): Shape of the head.
        appended (DescendantSpec): Shape of the appended last vertex.
        realizable_all6 (bool): The head's descendants and the appended vertex
            fit with a step in any of the six directions.
        realizable_forward3 (bool): They fit with one of the three forward steps.
    """

    case_id: str
    prefix: Prefix
    state: DpSignature
    head: DescendantSpec
    appended: DescendantSpec
    realizable_all6: bool
    realizable_forward3: bool

    @property
    def is_counterexample(self) -> bool:
        return self.realizable_all6 and not self.realizable_forward3

    def to_dict(self) -> dict[str, object]:
        return {
            "case_id": self.case_id,
            "prefix": [str(s) for s in self.prefix],
            "state": _state_dict(self.state),
            "head": str(self.head),
            "appended": str(self.appended),
            "realizable_all6": self.realizable_all6,
            "realizable_forward3": self.realizable_forward3,
        }


@dataclasses.dataclass(frozen=True)
class PrefixFailure:
    """
    A prefix, head and appended shape that fit after some step from one of
    the prefix's reachable states but after a forward step from none of them.
    """

    prefix: Prefix
    head: DescendantSpec
    appended: DescendantSpec

    def to_dict(self) -> dict[str, object]:
        return {
            "prefix": [str(s) for s in self.prefix],
            "head": str(self.head),
            "appended": str(self.appended),
        }


@dataclasses.dataclass(frozen=True)
class Report:
    """
    Outcome of the induction step enumeration.

    Attributes:
        depth (int): Largest prefix length explored.
        max_children (int): Bound on children per backbone vertex.
        max_grandchildren (int): Bound on grandchildren per child.
        window_radius (int): Radius of the head states.
        total (int): Number of (state, head, appended) cases.
        realizable_all6 (int): Cases realizable with any step.
        realizable_forward3 (int): Cases realizable with a forward step.
        states (int): Distinct reachable head states.
        frontiers (int): Distinct sets of head states reached by some prefix.
        blocked_forward (int): Head states whose three forward cells are all
            occupied.
        counterexamples (tuple[InductionCase, ...]): Cases realizable with any
            step but not with a forward one, sorted by case id.
        unresolved (tuple[PrefixFailure, ...]): Counterexamples that no other
            state of the same prefix repairs.
        cases (tuple[InductionCase, ...]): Every case sorted by case id, when
            requested.
    """

    depth: int
    max_children: int
    max_grandchildren: int
    window_radius: int
    total: int
    realizable_all6: int
    realizable_forward3: int
    states: int
    frontiers: int
    blocked_forward: int
    counterexamples: tuple[InductionCase, ...]
    unresolved: tuple[PrefixFailure, ...]
    cases: tuple[InductionCase, ...] = ()

    def to_json(self) -> str:
        data: dict[str, object] = {
            "depth": self.depth,
            "max_children": self.max_children,
            "max_grandchildren": self.max_grandchildren,
            "window_radius": self.window_radius,
            "total_cases": self.total,
            "realizable_all6": self.realizable_all6,
            "realizable_forward3": self.realizable_forward3,
            "states": self.states,
            "frontiers": self.frontiers,
            "blocked_forward": self.blocked_forward,
            "counterexamples": [c.to_dict() for c in self.counterexamples],
            "unresolved": [f.to_dict() for f in self.unresolved],
        }
        if self.cases:
            data["cases"] = [c.to_dict() for c in self.cases]
        return json.dumps(data, indent=2)

    def to_text(self) -> str:
        lines = [
            f"depth: {self.depth}",
            f"bounds: {self.max_children} children, {self.max_grandchildren} grandchildren",
            f"reachable states: {self.states} ({self.blocked_forward} with forward cells blocked)",
            f"frontiers: {self.frontiers}",
            f"cases: {self.total}",
            f"realizable (6 directions): {self.realizable_all6}",
            f"realizable (3 forward directions): {self.realizable_forward3}",
            f"counterexamples: {len(self.counterexamples)}",
        ]
        for case in self.counterexamples:
            prefix = " ".join(str(s) for s in case.prefix) or "-"
            lines.append(
                f"  {case.case_id} prefix {prefix} head {case.head} appended {case.appended}"
            )
        lines.append(f"unresolved for every state of the prefix: {len(self.unresolved)}")
        for failure in self.unresolved:
            prefix = " ".join(str(s) for s in failure.prefix) or "-"
            lines.append(f"  prefix {prefix} head {failure.head} appended {failure.appended}")
        return "\n".join(lines) + "\n"


def case_id(state: DpSignature, head: DescendantSpec, appended: DescendantSpec) -> str:
    mask, incoming = state.sort_key()
    text = f"{state.radius}:{mask}:{incoming}|{head}|{appended}"
    return hashlib.sha256(text.encode()).hexdigest()[:16]


@functools.lru_cache(maxsize=1 << 16)
def _fit_mask(sig: DpSignature, gammas: tuple[DescendantSpec, ...]) -> int:
    # Bit i is set when gammas[i] fits around `sig` as the last backbone vertex.
    return sum(
        1 << i
        for i, gamma in enumerate(gammas)
        if next(iter_placements(sig, gamma, last=True), None) is not None
    )


@dataclasses.dataclass(frozen=True)
class StateEvaluation:
    """
    Realizability of every (head, appended) pair from one head state.

    Attributes:
        forward (tuple[int, ...]): Per head shape, a bitmask over the appended
            shapes that fit after a forward step.
        all6 (tuple[int, ...]): The same after a step in any direction.
        successors (tuple[Frontier, ...]): Per head shape, the states of the
            next vertex after a forward step; empty unless expanded.
    """

    forward: tuple[int, ...]
    all6: tuple[int, ...]
    successors: tuple[Frontier, ...] = ()


def evaluate_state(
    state: DpSignature, gammas: tuple[DescendantSpec, ...], expand: bool = False
) -> StateEvaluation:
    """
    Place every head shape around `state` with every step, then check which
    appended shapes fit around the next vertex.

    Args:
        state (DpSignature): Head state.
        gammas (tuple[DescendantSpec, ...]): Shapes for both the head and the
            appended vertex.
        expand (bool): Also collect the forward successor states.

    Returns:
        StateEvaluation: Bitmasks indexed like `gammas`.
    """
    forward: list[int] = []
    all6: list[int] = []
    successors: list[Frontier] = []
    for head in gammas:
        found: dict[DpSignature, bool] = {}
        for placement in iter_placements(state, head, PlacementMode.ALL6):
            nxt = advance(state, placement)[0]
            found[nxt] = found.get(nxt, False) or placement.step in FORWARD_DIRECTIONS
        ahead = [s for s, is_forward in found.items() if is_forward]
        fits = 0
        for s in ahead:
            fits |= _fit_mask(s, gammas)
        forward.append(fits)
        for s, is_forward in found.items():
            if not is_forward:
                fits |= _fit_mask(s, gammas)
        all6.append(fits)
        if expand:
            successors.append(tuple(sorted(ahead, key=DpSignature.sort_key)))
    return StateEvaluation(tuple(forward), tuple(all6), tuple(successors))


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _run_states(
    states: Sequence[DpSignature],
    gammas: tuple[DescendantSpec, ...],
    expand: bool,
    jobs: int,
) -> Iterator[StateEvaluation]:
    args = (states, itertools.repeat(gammas), itertools.repeat(expand))
    if jobs <= 1 or len(states) <= 1:
        yield from map(evaluate_state, *args)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(evaluate_state, *args, chunksize=8)


def induction_case_report(
    depth: int = DEFAULT_DEPTH,
    *,
    max_children: int = DEFAULT_MAX_CHILDREN,
    max_grandchildren: int = DEFAULT_MAX_GRANDCHILDREN,
    jobs: int = 1,
    keep_cases: bool = False,
    on_state: Callable[[int, int], None] | None = None,
) -> Report:
    """
    Enumerate the induction step of the x-monotonicity argument.

    Head states are canonical signatures explored from the empty grid with
    strictly x-monotone steps over every prefix of up to `depth` backbone
    vertices drawn from `descendant_specs`. Each reachable state is checked on
    its own: for every head shape and every shape of an appended last vertex,
    the case is realizable in six directions if the head's descendants, a step
    in any direction and the appended vertex's descendants all fit, and
    realizable in three if the step can be forward. A case realizable in six
    but not in three is a counterexample. A counterexample is unresolved when
    no state reached by the same prefix realizes the pair with a forward step.

    Args:
        depth (int): Longest prefix placed before the head.
        max_children (int): Children per backbone vertex.
        max_grandchildren (int): Grandchildren per child.
        jobs (int): Worker processes; the report does not depend on it.
        keep_cases (bool): Keep every case in the report, not only the
            counterexamples.
        on_state (Callable[[int, int], None] | None): Called with the number
            of evaluated and known head states after each one.

    Returns:
        Report: Counts, counterexamples and unresolved prefixes.

    Raises:
        ContractViolationError: On a negative depth or bound.
    """
    if depth < 0:
        msg = f"Depth must be nonnegative, got {depth}"
        raise ContractViolationError(msg)
    gammas = tuple(descendant_specs(max_children, max_grandchildren))
    radius = state_radius(depth)
    logger.info(f"Induction over {len(gammas)} shapes, depth {depth}, radius {radius}")

    evaluations: dict[DpSignature, StateEvaluation] = {}
    first_prefix: dict[DpSignature, Prefix] = {}
    initial: Frontier = (DpSignature.initial(radius),)
    seen: set[Frontier] = {initial}
    level: list[tuple[Prefix, Frontier]] = [((), initial)]
    unresolved: list[PrefixFailure] = []
    for length in range(depth + 1):
        expand = length < depth
        fresh: list[DpSignature] = []
        for prefix, frontier in level:
            for state in frontier:
                if state not in first_prefix:
                    first_prefix[state] = prefix
                    fresh.append(state)
        logger.debug(f"Prefix length {length}: {len(fresh)} new head states")
        for state, evaluation in zip(fresh, _run_states(fresh, gammas, expand, jobs), strict=True):
            evaluations[state] = evaluation
            if on_state is not None:
                on_state(len(evaluations), len(first_prefix))

        following: list[tuple[Prefix, Frontier]] = []
        for prefix, frontier in level:
            for h, head in enumerate(gammas):
                forward = all6 = 0
                for state in frontier:
                    forward |= evaluations[state].forward[h]
                    all6 |= evaluations[state].all6[h]
                unresolved.extend(
                    PrefixFailure(prefix, head, gammas[a]) for a in _bits(all6 & ~forward)
                )
                if not expand:
                    continue
                ahead: dict[DpSignature, None] = {}
                for state in frontier:
                    ahead.update(dict.fromkeys(evaluations[state].successors[h]))
                nxt = tuple(sorted(ahead, key=DpSignature.sort_key))
                if nxt and nxt not in seen:
                    seen.add(nxt)
                    following.append(((*prefix, head), nxt))
        level = following

    counterexamples: list[InductionCase] = []
    cases: list[InductionCase] = []
    for state, evaluation in evaluations.items():
        for h, head in enumerate(gammas):
            forward, all6 = evaluation.forward[h], evaluation.all6[h]
            if keep_cases:
                picked: Iterator[int] = iter(range(len(gammas)))
            else:
                picked = _bits(all6 & ~forward)
            for a in picked:
                case = InductionCase(
                    case_id=case_id(state, head, gammas[a]),
                    prefix=first_prefix[state],
                    state=state,
                    head=head,
                    appended=gammas[a],
                    realizable_all6=bool(all6 >> a & 1),
                    realizable_forward3=bool(forward >> a & 1),
                )
                if case.is_counterexample:
                    counterexamples.append(case)
                if keep_cases:
                    cases.append(case)

    blocked = sum(1 for s in evaluations if not any(s.is_free(d) for d in FORWARD_DIRECTIONS))
    counterexamples.sort(key=lambda c: c.case_id)
    cases.sort(key=lambda c: c.case_id)
    if counterexamples:
        logger.warning(
            f"{len(counterexamples)} counterexamples, {len(unresolved)} unresolved by the prefix"
        )
    return Report(
        depth=depth,
        max_children=max_children,
        max_grandchildren=max_grandchildren,
        window_radius=radius,
        total=len(evaluations) * len(gammas) ** 2,
        realizable_all6=sum(m.bit_count() for e in evaluations.values() for m in e.all6),
        realizable_forward3=sum(m.bit_count() for e in evaluations.values() for m in e.forward),
        states=len(evaluations),
        frontiers=len(seen),
        blocked_forward=blocked,
        counterexamples=tuple(counterexamples),
        unresolved=tuple(unresolved),
        cases=tuple(cases),
    )
