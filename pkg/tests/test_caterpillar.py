# test_caterpillar.py
#
# Copyright (c) 2026 Unit Disk Trees Contributors
# All rights reserved.
#
# SPDX-License-Identifier: BSD-3-Clause

import math

import factory
import pytest

from tests.factories.trees import CaterpillarFactory, build_caterpillar
from unit_disk_trees.caterpillar import (
    ConstructionParams,
    UdrAnswer,
    UdrReason,
    _plan_shapes,
    construct_caterpillar_udr,
    longest_forced_chain,
    recognize_and_construct,
    recognize_caterpillar,
)
from unit_disk_trees.exceptions import ContractViolationError, LayoutError
from unit_disk_trees.geometry import verify_udr
from unit_disk_trees.graph import Graph, classify_tree


def _assert_verifies(g: Graph) -> None:
    layout = construct_caterpillar_udr(g)
    assert len(layout) == g.n
    result = verify_udr(g, layout)
    assert result.ok, result.violations[:3]


@pytest.mark.parametrize(
    "degrees",
    [[2], [3], [4], [5], [4, 4], [4, 4, 4, 4, 4], [2, 3, 4, 3, 2], [5, 4, 5]],
)
def test_recognize_yes(degrees: list[int]) -> None:
    decision = recognize_caterpillar(build_caterpillar(degrees))
    assert decision.answer is UdrAnswer.YES
    assert decision.witness is None
    assert decision.describe() == "yes"


def test_recognize_adjacent_fives(load_graph) -> None:
    decision = recognize_caterpillar(load_graph("caterpillar_adjacent_fives.txt"))
    assert decision.answer is UdrAnswer.NO
    assert decision.reason is UdrReason.ADJACENT_DEGREE_5
    assert decision.vertices == (1, 2)
    assert decision.describe() == "no: adjacent-degree-5-backbone-pair (u=1, v=2)"


def test_recognize_degree_six(star6: Graph) -> None:
    decision = recognize_caterpillar(star6)
    assert not decision.is_yes
    assert decision.reason is UdrReason.DEGREE_AT_LEAST_6
    assert decision.vertices == (0,)


def test_recognize_rejects_non_caterpillar(load_graph) -> None:
    with pytest.raises(ContractViolationError):
        recognize_caterpillar(load_graph("binary_tree_depth3.txt"))


def test_construct_rejects_no_instance(star6: Graph) -> None:
    with pytest.raises(ContractViolationError):
        construct_caterpillar_udr(star6)


@pytest.mark.parametrize(
    "params_kwargs",
    [
        {"epsilon": 0.0},
        {"epsilon": 0.01, "stack_ratio": 2.0},
        {"epsilon": 0.01, "stack_ratio": 0.0},
        {"epsilon": 0.01, "spread": 0.0},
        {"epsilon": 0.01, "mu": 0.01},
        {"epsilon": 0.01, "mu": -0.001},
    ],
)
def test_params_validation(params_kwargs: dict[str, float]) -> None:
    with pytest.raises(ContractViolationError):
        ConstructionParams(**params_kwargs)


def test_default_params_depend_on_forced_chain() -> None:
    plain = ConstructionParams.default_for(build_caterpillar([4, 4, 4, 4]))
    assert plain.epsilon == pytest.approx(0.05)
    short = ConstructionParams.default_for(build_caterpillar([5, 4, 5, 4]))
    assert short.epsilon == pytest.approx(0.05)
    chained = ConstructionParams.default_for(build_caterpillar([5, 4] * 4 + [4]))
    assert chained.epsilon == pytest.approx(math.radians(24) / (2.3 * 5))
    assert chained.mu == pytest.approx(chained.epsilon**2 / 64)
    assert chained.stack_shift == pytest.approx(1.8 * chained.epsilon)
    assert chained.five_turn == pytest.approx(2.1 * chained.epsilon)


@pytest.mark.parametrize(
    "degrees,expected",
    [
        ([], 0),
        ([4, 4], 0),
        ([5], 1),
        ([5, 4, 5, 4, 5], 3),
        ([5, 4, 4, 5], 1),
        ([5, 4, 5, 4, 4, 5, 4, 5], 2),
    ],
)
def test_longest_forced_chain(degrees: list[int], expected: int) -> None:
    assert longest_forced_chain(degrees) == expected


@pytest.mark.parametrize(
    "degrees,expected",
    [
        ([4, 4, 4, 4], "BTBT"),
        ([5, 4, 5], "UBU"),
        ([5, 4, 4, 5], "UBTD"),
        ([4, 5, 4], "BUB"),
    ],
)
def test_plan_shapes(degrees: list[int], expected: str) -> None:
    assert "".join(_plan_shapes(degrees)) == expected


def test_single_vertex() -> None:
    layout = construct_caterpillar_udr(Graph.from_edges(1, []))
    assert layout.centers == {0: (0.0, 0.0)}


def test_path3_is_collinear(path3: Graph) -> None:
    params = ConstructionParams(epsilon=0.05, mu=0.001)
    layout = construct_caterpillar_udr(path3, params)
    ys = [layout.centers[v].y for v in range(3)]
    assert ys == pytest.approx([0.0, 0.0, 0.0])
    assert layout.centers[1].x - layout.centers[0].x == pytest.approx(2 - 0.001)
    assert layout.centers[2].x - layout.centers[1].x == pytest.approx(2 - 0.001)
    assert verify_udr(path3, layout).ok


@pytest.mark.parametrize("degrees", [[1], [2], [5], [4, 5], [5, 4, 5, 4, 5, 4, 5]])
def test_small_shapes_verify(degrees: list[int]) -> None:
    _assert_verifies(build_caterpillar(degrees))


def test_full_degree4_backbone_is_x_monotone(full_degree4_caterpillar: Graph) -> None:
    g = full_degree4_caterpillar
    layout = construct_caterpillar_udr(g)
    assert verify_udr(g, layout).ok
    backbone = classify_tree(g).backbone
    xs = [layout.centers[v].x for v in backbone]
    assert all(a < b for a, b in zip(xs, xs[1:]))


def test_leaves_after_degree_five_clear_it(alternating_fives: Graph) -> None:
    g = alternating_fives
    layout = construct_caterpillar_udr(g)
    assert verify_udr(g, layout).ok
    tc = classify_tree(g)
    for u, x in zip(tc.backbone, tc.backbone[1:]):
        if g.degree(u) != 5:
            continue
        for child in tc.descendants[x]:
            assert math.dist(layout.centers[u], layout.centers[child.vertex]) > 2
        for child in tc.descendants[u]:
            for other in tc.descendants[x]:
                assert math.dist(layout.centers[child.vertex], layout.centers[other.vertex]) > 2


def test_fixture_caterpillar_verifies(load_graph) -> None:
    _assert_verifies(load_graph("caterpillar_5454.txt"))


def test_random_caterpillars_verify() -> None:
    for g in CaterpillarFactory.build_batch(25, length=12):
        _assert_verifies(g)


def test_random_caterpillars_without_fives_verify() -> None:
    for g in CaterpillarFactory.build_batch(10, length=20, with_fives=False):
        _assert_verifies(g)


@pytest.mark.slow
def test_long_caterpillars_verify() -> None:
    for g in CaterpillarFactory.build_batch(5, length=2000):
        _assert_verifies(g)
    _assert_verifies(build_caterpillar([5, 4] * 200 + [4]))


@pytest.mark.slow
def test_long_forced_chain_keeps_stacked_leaves_apart() -> None:
    g = build_caterpillar([5, 4] * 2900 + [4])
    assert g.n > 20_000
    decision = recognize_and_construct(g)
    assert decision.is_yes
    assert verify_udr(g, decision.witness).ok


def _naive_scan(g: Graph) -> bool:
    degree = [0] * g.n
    edges = list(g.edges())
    for u, v in edges:
        degree[u] += 1
        degree[v] += 1
    return max(degree) <= 5 and not any(degree[u] == degree[v] == 5 for u, v in edges)


@pytest.mark.slow
def test_recognition_matches_naive_scan_on_random_caterpillars() -> None:
    rng = factory.random.randgen
    answers = set()
    for _ in range(1000):
        length = rng.randint(1, 40) if rng.random() < 0.7 else rng.randint(41, 2400)
        g = CaterpillarFactory(length=length, adjacent_fives=rng.random() < 0.3)
        assert g.n <= 10_000
        decision = recognize_and_construct(g)
        assert decision.is_yes == _naive_scan(g), decision.describe()
        if decision.is_yes:
            result = verify_udr(g, decision.witness)
            assert result.ok, result.violations[:3]
        answers.add(decision.answer)
    assert answers == {UdrAnswer.YES, UdrAnswer.NO}


def test_recognize_and_construct_attaches_witness(alternating_fives: Graph) -> None:
    decision = recognize_and_construct(alternating_fives)
    assert decision.is_yes
    assert decision.witness is not None
    assert verify_udr(alternating_fives, decision.witness).ok


def test_recognize_and_construct_no_has_no_witness(load_graph) -> None:
    decision = recognize_and_construct(load_graph("caterpillar_adjacent_fives.txt"))
    assert decision.answer is UdrAnswer.NO
    assert decision.witness is None


def test_recognize_and_construct_reports_bad_params() -> None:
    g = build_caterpillar([4, 4, 4])
    with pytest.raises(LayoutError):
        recognize_and_construct(g, ConstructionParams(epsilon=1.9, mu=1.8))
