# test_induction.py
#
# Copyright (c) 2026 Unit Disk Trees Contributors
# All rights reserved.
#
# SPDX-License-Identifier: BSD-3-Clause

import json

import pytest

from unit_disk_trees.exceptions import ContractViolationError
from unit_disk_trees.geometry import GridCoord
from unit_disk_trees.induction import (
    descendant_specs,
    evaluate_state,
    induction_case_report,
    state_radius,
)
from unit_disk_trees.lobster import ORIGIN, DescendantSpec, DpSignature

EMPTY = DescendantSpec(())

# Reached from the first vertex by a step up after placing two children with
# one leaf each; the cells behind the head leave one forward step free.
CROWDED_CELLS = frozenset(
    GridCoord(a, b) for a, b in [(-2, 0), (-1, -1), (0, -1), (0, 0), (1, -1), (1, 0)]
)


def test_descendant_specs() -> None:
    specs = descendant_specs(2, 1)
    assert [s.degrees for s in specs] == [(), (1,), (2,), (1, 1), (2, 1), (2, 2)]
    assert len(descendant_specs(3, 3)) == 35
    assert len(descendant_specs()) == 462
    assert max(max(s.degrees, default=0) for s in descendant_specs()) == 6
    with pytest.raises(ContractViolationError):
        descendant_specs(-1, 2)


def test_state_radius() -> None:
    assert [state_radius(d) for d in range(4)] == [4, 6, 8, 10]


def test_first_vertex_report() -> None:
    report = induction_case_report(0, max_children=2, max_grandchildren=1, keep_cases=True)
    assert report.total == 36
    assert report.frontiers == 1
    assert report.states == 1
    assert report.realizable_all6 == report.realizable_forward3 == 36
    assert report.counterexamples == ()
    assert report.unresolved == ()
    trivial = [c for c in report.cases if c.head == EMPTY and c.appended == EMPTY]
    assert len(trivial) == 1
    assert trivial[0].realizable_all6 and trivial[0].realizable_forward3
    assert trivial[0].state == DpSignature.initial()


def test_case_ids_are_stable_and_sorted() -> None:
    first = induction_case_report(0, max_children=1, max_grandchildren=1, keep_cases=True)
    second = induction_case_report(0, max_children=1, max_grandchildren=1, keep_cases=True)
    ids = [c.case_id for c in first.cases]
    assert len(ids) == first.total
    assert ids == sorted(ids)
    assert len(set(ids)) == len(ids)
    assert ids == [c.case_id for c in second.cases]


def test_cases_are_per_state() -> None:
    report = induction_case_report(1, max_children=1, max_grandchildren=1, keep_cases=True)
    assert report.states > 1
    assert report.total == report.states * 3**2
    assert len(report.cases) == report.total
    assert len({c.state for c in report.cases}) == report.states
    assert report.realizable_forward3 == sum(c.realizable_forward3 for c in report.cases)
    assert {c.case_id for c in report.counterexamples} <= {c.case_id for c in report.cases}


def test_report_does_not_depend_on_jobs() -> None:
    serial = induction_case_report(1, max_children=1, max_grandchildren=1)
    parallel = induction_case_report(1, max_children=1, max_grandchildren=1, jobs=2)
    assert serial.frontiers > 1
    assert serial.to_json() == parallel.to_json()


def test_progress_callback(mocker) -> None:
    progress = mocker.stub(name="on_state")
    report = induction_case_report(1, max_children=1, max_grandchildren=0, on_state=progress)
    calls = [c.args for c in progress.call_args_list]
    assert calls[0] == (1, 1)
    assert [done for done, _ in calls] == list(range(1, len(calls) + 1))
    assert progress.call_count == report.states
    assert calls[-1] == (report.states, report.states)


def test_blocked_forward_cells_are_a_counterexample() -> None:
    blocked = DpSignature(
        occupied=frozenset({ORIGIN, GridCoord(1, 0), GridCoord(1, -1), GridCoord(0, 1)}),
        incoming=GridCoord(1, 0),
    )
    evaluation = evaluate_state(blocked, (EMPTY,), expand=True)
    assert evaluation.forward == (0,)
    assert evaluation.all6 == (1,)
    assert evaluation.successors == ((),)


def test_state_realizable_only_with_a_backward_step() -> None:
    state = DpSignature(occupied=CROWDED_CELLS, incoming=GridCoord(0, 1))
    heavy = DescendantSpec((3, 3))
    evaluation = evaluate_state(state, (heavy, EMPTY))
    assert not evaluation.forward[0] >> 1 & 1
    assert evaluation.all6[0] >> 1 & 1
    assert evaluation.forward[1] >> 1 & 1
    assert evaluation.successors == ()


@pytest.mark.slow
def test_report_lists_each_state_counterexample() -> None:
    report = induction_case_report(1, max_children=2, max_grandchildren=2)
    state = DpSignature(occupied=CROWDED_CELLS, incoming=GridCoord(0, 1), radius=6).canonical()[0]
    matches = [
        c
        for c in report.counterexamples
        if c.state == state and c.head == DescendantSpec((3, 3)) and c.appended == EMPTY
    ]
    assert len(matches) == 1
    assert matches[0].prefix == (DescendantSpec((2, 2)),)
    assert report.total == report.states * len(descendant_specs(2, 2)) ** 2
    assert report.realizable_all6 - report.realizable_forward3 == len(report.counterexamples)
    assert all(c.is_counterexample for c in report.counterexamples)


def test_rendering() -> None:
    report = induction_case_report(0, max_children=1, max_grandchildren=0)
    text = report.to_text()
    assert "counterexamples: 0" in text
    assert "unresolved for every state of the prefix: 0" in text
    assert f"cases: {report.total}" in text
    data = json.loads(report.to_json())
    assert data["total_cases"] == report.total
    assert data["window_radius"] == 4
    assert data["counterexamples"] == []
    assert data["unresolved"] == []
    assert "cases" not in data


def test_rendering_every_case() -> None:
    report = induction_case_report(0, max_children=1, max_grandchildren=0, keep_cases=True)
    data = json.loads(report.to_json())
    assert len(data["cases"]) == report.total
    assert data["cases"][0]["state"] == {"occupied": [[0, 0]], "incoming": None}


def test_negative_depth() -> None:
    with pytest.raises(ContractViolationError):
        induction_case_report(-1)
