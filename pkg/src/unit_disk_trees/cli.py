# cli.py
#
# Copyright (c) 2026 Unit Disk Trees Contributors
# All rights reserved.
#
# SPDX-License-Identifier: BSD-3-Clause

import dataclasses
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from enum import IntEnum, StrEnum
from pathlib import Path
from typing import Annotated, NoReturn

import typer
from rich.console import Console
from rich.logging import RichHandler
from rich.progress import Progress

from unit_disk_trees import __version__
from unit_disk_trees.caterpillar import (
    ConstructionParams,
    recognize_and_construct,
    recognize_caterpillar,
)
from unit_disk_trees.exceptions import (
    ContractViolationError,
    EnumerationBoundsError,
    GadgetParameterError,
    GraphParseError,
    LayoutError,
)
from unit_disk_trees.gadgets import GadgetKind, GadgetVariant, build_gadget, write_gadget
from unit_disk_trees.geometry import (
    DEFAULT_TOLERANCE,
    DiskLayout,
    GridLayout,
    VerifyResult,
    verify_udr,
    verify_weak_udc_grid,
)
from unit_disk_trees.graph import Graph, classify_tree, parse_graph
from unit_disk_trees.induction import (
    DEFAULT_DEPTH,
    DEFAULT_MAX_CHILDREN,
    DEFAULT_MAX_GRANDCHILDREN,
    induction_case_report,
)
from unit_disk_trees.lobster import (
    DEFAULT_BOUND,
    WINDOW_RADIUS,
    brute_force_enumerate,
    dp_recognize,
)
from unit_disk_trees.svg import DEFAULT_SVG_SCALE, SvgOptions, export_svg
from unit_disk_trees.utils import parse_layout, serialize_layout

logger = logging.getLogger(__name__)

console = Console()
err_console = Console(stderr=True)

app = typer.Typer(
    help="Unit disk representations of caterpillars and lobsters.",
    no_args_is_help=True,
    add_completion=False,
)


class ExitCode(IntEnum):
    OK = 0
    NO = 1
    ERROR = 2


class VerifyModel(StrEnum):
    UDR = "udr"
    WUDC_GRID = "wudc-grid"


JsonOption = Annotated[bool, typer.Option("--json", help="Machine-readable output.")]
OutputOption = Annotated[
    Path | None,
    typer.Option("--output", "-o", help="Write the result here instead of stdout."),
]
SvgOption = Annotated[
    Path | None, typer.Option("--svg", help="Also render the layout as SVG.")
]
JobsOption = Annotated[
    int, typer.Option("--jobs", "-j", min=1, help="Worker processes.")
]


def _out(text: str) -> None:
    console.print(text, markup=False, highlight=False, soft_wrap=True, end="")


def _emit(data: dict[str, object], as_json: bool, text: str) -> None:
    if as_json:
        _out(json.dumps(data, indent=2) + "\n")
    else:
        _out(text if text.endswith("\n") else text + "\n")


def _fail(msg: str) -> NoReturn:
    err_console.print(f"[bold red]error:[/bold red] {msg}", highlight=False)
    raise typer.Exit(ExitCode.ERROR)


def _read_text(path: Path) -> str:
    try:
        return path.read_text()
    except OSError as oe:
        _fail(f"cannot read {path}: {oe.strerror or oe}")


def _write_text(path: Path, text: str) -> None:
    try:
        path.write_text(text)
    except OSError as oe:
        _fail(f"cannot write {path}: {oe.strerror or oe}")
    logger.info(f"Wrote {path}")


def _read_graph(path: Path) -> Graph:
    try:
        return parse_graph(_read_text(path))
    except GraphParseError as ge:
        _fail(f"{path}: {ge}")


def _read_layout(path: Path, grid: bool) -> DiskLayout | GridLayout:
    try:
        return parse_layout(_read_text(path), grid=grid)
    except LayoutError as le:
        _fail(f"{path}: {le}")


def _write_svg(g: Graph, layout: DiskLayout | GridLayout, svg: Path | None) -> None:
    if svg is not None:
        _write_text(svg, export_svg(g, layout))


def _violation_lines(result: VerifyResult) -> list[dict[str, object]]:
    return [
        {"u": x.u, "v": x.v, "kind": str(x.kind), "distance": x.distance}
        for x in result.violations
    ]


def _version_callback(value: bool) -> None:
    if value:
        _out(f"udtrees {__version__}\n")
        raise typer.Exit()


@app.callback()
def main(
    verbose: Annotated[
        bool, typer.Option("--verbose", "-v", help="Log progress at debug level.")
    ] = False,
    version: Annotated[
        bool,
        typer.Option(
            "--version", callback=_version_callback, is_eager=True, help="Show the version."
        ),
    ] = False,
) -> None:
    """
    Recognize, construct and verify unit disk representations of trees.
    """
    package_logger = logging.getLogger("unit_disk_trees")
    package_logger.handlers.clear()
    package_logger.addHandler(RichHandler(console=err_console, show_path=False))
    package_logger.setLevel(logging.DEBUG if verbose else logging.WARNING)
    package_logger.propagate = False


@app.command()
def classify(graph: Path, as_json: JsonOption = False) -> None:
    """
    Print the tree class and backbone of a graph.
    """
    g = _read_graph(graph)
    tc = classify_tree(g)
    backbone = " ".join(str(v) for v in tc.backbone) or "-"
    _emit(
        {"kind": str(tc.kind), "n": g.n, "backbone": list(tc.backbone)},
        as_json,
        f"{tc.kind}\nbackbone: {backbone}",
    )


@app.command("recognize-caterpillar")
def recognize_caterpillar_command(graph: Path, as_json: JsonOption = False) -> None:
    """
    Decide whether a caterpillar has a unit disk representation.
    """
    g = _read_graph(graph)
    try:
        decision = recognize_caterpillar(g)
    except ContractViolationError as ce:
        _fail(f"{graph}: {ce}")
    _emit(
        {
            "answer": str(decision.answer),
            "reason": None if decision.reason is None else str(decision.reason),
            "vertices": list(decision.vertices),
        },
        as_json,
        decision.describe(),
    )
    if not decision.is_yes:
        raise typer.Exit(ExitCode.NO)


@app.command("construct-caterpillar")
def construct_caterpillar_command(
    graph: Path,
    output: OutputOption = None,
    svg: SvgOption = None,
    epsilon: Annotated[
        float | None,
        typer.Option(help="Bend per degree 5 vertex; sized from the graph by default."),
    ] = None,
    tolerance: Annotated[float, typer.Option(help="Verification tolerance.")] = DEFAULT_TOLERANCE,
    as_json: JsonOption = False,
) -> None:
    """
    Build and verify a unit disk representation of a caterpillar.

    The layout goes to --output, or to stdout when no file is given.
    """
    g = _read_graph(graph)
    try:
        params = None
        if epsilon is not None:
            params = dataclasses.replace(
                ConstructionParams.default_for(g), epsilon=epsilon, mu=epsilon * epsilon / 64
            )
        decision = recognize_and_construct(g, params, tolerance)
    except (ContractViolationError, LayoutError) as e:
        _fail(f"{graph}: {e}")
    if decision.witness is None:
        _emit(
            {
                "answer": str(decision.answer),
                "reason": None if decision.reason is None else str(decision.reason),
                "vertices": list(decision.vertices),
                "layout": None,
            },
            as_json,
            decision.describe(),
        )
        raise typer.Exit(ExitCode.NO)
    text = serialize_layout(decision.witness)
    _write_svg(g, decision.witness, svg)
    if output is not None:
        _write_text(output, text)
        _emit({"answer": "yes", "layout": str(output)}, as_json, f"yes: layout written to {output}")
    elif as_json:
        _emit({"answer": "yes", "layout": text}, as_json, text)
    else:
        _out(text)


@app.command("recognize-lobster")
def recognize_lobster_command(
    graph: Path,
    output: OutputOption = None,
    svg: SvgOption = None,
    window_radius: Annotated[
        int, typer.Option(min=1, help="Radius of the occupancy window kept per state.")
    ] = WINDOW_RADIUS,
    as_json: JsonOption = False,
) -> None:
    """
    Decide whether a lobster has a strictly x-monotone weak contact
    representation on the triangular grid, printing a witness on yes.
    """
    g = _read_graph(graph)
    try:
        result = dp_recognize(g, classify_tree(g), window_radius)
    except ContractViolationError as ce:
        _fail(f"{graph}: {ce}")
    if result.layout is None:
        _emit(
            {"feasible": False, "max_frontier": result.max_frontier, "layout": None},
            as_json,
            "no",
        )
        raise typer.Exit(ExitCode.NO)
    text = serialize_layout(result.layout)
    _write_svg(g, result.layout, svg)
    if output is not None:
        _write_text(output, text)
    shown = str(output) if output is not None else text
    _emit(
        {"feasible": True, "max_frontier": result.max_frontier, "layout": shown},
        as_json,
        f"yes (max frontier {result.max_frontier})\n" + ("" if output is not None else text),
    )


def _enumerate_file(name: str, text: str, bound: int) -> dict[str, object]:
    try:
        g = parse_graph(text)
        result = brute_force_enumerate(g, classify_tree(g), bound)
    except (GraphParseError, ContractViolationError, EnumerationBoundsError) as e:
        return {"path": name, "error": str(e)}
    return {"path": name, "feasible": result.feasible, "count": result.count}


@app.command("enumerate")
def enumerate_command(
    paths: Annotated[list[Path], typer.Argument(help="Edge list files.")],
    bound: Annotated[
        int, typer.Option(min=1, help="Half-width of the search region in grid steps.")
    ] = DEFAULT_BOUND,
    jobs: JobsOption = 1,
    as_json: JsonOption = False,
) -> None:
    """
    Count weak contact representations on the grid by exhaustive search.

    Counts are up to the symmetries of the grid. Exits 1 if some tree has
    none and 2 if some file could not be searched.
    """
    texts = [_read_text(p) for p in paths]
    names = [str(p) for p in paths]
    bounds = [bound] * len(paths)
    if jobs > 1 and len(paths) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_enumerate_file, names, texts, bounds))
    else:
        rows = list(map(_enumerate_file, names, texts, bounds))
    lines = []
    for row in rows:
        if "error" in row:
            err_console.print(
                f"[bold red]error:[/bold red] {row['path']}: {row['error']}",
                highlight=False,
            )
            lines.append(f"{row['path']}: error")
        else:
            answer = "yes" if row["feasible"] else "no"
            lines.append(f"{row['path']}: {answer} ({row['count']} up to symmetry)")
    _emit({"results": rows}, as_json, "\n".join(lines))
    if any("error" in row for row in rows):
        raise typer.Exit(ExitCode.ERROR)
    if not all(row["feasible"] for row in rows):
        raise typer.Exit(ExitCode.NO)


@app.command("induction-report")
def induction_report_command(
    depth: Annotated[
        int, typer.Option(min=0, help="Backbone vertices placed before the head.")
    ] = DEFAULT_DEPTH,
    max_children: Annotated[int, typer.Option(min=0)] = DEFAULT_MAX_CHILDREN,
    max_grandchildren: Annotated[int, typer.Option(min=0)] = DEFAULT_MAX_GRANDCHILDREN,
    all_cases: Annotated[
        bool, typer.Option("--all-cases", help="List every case, not only counterexamples.")
    ] = False,
    jobs: JobsOption = 1,
    output: OutputOption = None,
    as_json: JsonOption = False,
) -> None:
    """
    Check, for every reachable head state, that an appended backbone vertex
    that fits after some step also fits after a forward step. Exits 1 if a
    counterexample turns up.
    """
    with Progress(console=err_console, transient=True) as progress:
        task = progress.add_task("Evaluating head states", total=None)

        def advance(done: int, known: int) -> None:
            progress.update(task, completed=done, total=known)

        report = induction_case_report(
            depth,
            max_children=max_children,
            max_grandchildren=max_grandchildren,
            jobs=jobs,
            keep_cases=all_cases,
            on_state=advance,
        )
    text = report.to_json() + "\n" if as_json else report.to_text()
    if output is not None:
        _write_text(output, text)
    else:
        _out(text)
    if report.counterexamples:
        raise typer.Exit(ExitCode.NO)


@app.command()
def gadget(
    kind: Annotated[GadgetKind, typer.Option(help="Gadget family.")],
    k: Annotated[int, typer.Option("--k", help="Size parameter.")],
    variant: Annotated[GadgetVariant, typer.Option()] = GadgetVariant.OUTERPLANAR,
    output: Annotated[
        Path, typer.Option("--output", "-o", help="Directory for the generated files.")
    ] = Path("."),
    name: Annotated[
        str | None, typer.Option(help="File stem; defaults to kind-k-variant.")
    ] = None,
    svg: Annotated[bool, typer.Option("--svg", help="Also write stem.svg.")] = False,
    as_json: JsonOption = False,
) -> None:
    """
    Generate a hardness gadget as edge list, ports sidecar and intended layout.
    """
    try:
        generated = build_gadget(kind, k, variant)
    except (GadgetParameterError, LayoutError) as e:
        _fail(str(e))
    stem = name or f"{kind}-{k}-{variant}"
    edges_text, ports_text, layout_text = write_gadget(generated)
    files = [output / f"{stem}.txt", output / f"{stem}.ports", output / f"{stem}.layout"]
    for path, text in zip(files, (edges_text, ports_text, layout_text)):
        _write_text(path, text)
    if svg:
        files.append(output / f"{stem}.svg")
        _write_text(files[-1], export_svg(generated.graph, generated.intended))
    distance = generated.hausdorff() if generated.target else None
    lines = [
        f"vertices: {generated.graph.n}",
        f"edges: {generated.graph.edge_count}",
        f"faces: {generated.faces}",
    ]
    if distance is not None:
        lines.append(f"hausdorff: {distance:.4f}")
    lines.extend(f"wrote {path}" for path in files)
    _emit(
        {
            "kind": str(kind),
            "k": k,
            "variant": str(variant),
            "vertices": generated.graph.n,
            "edges": generated.graph.edge_count,
            "faces": generated.faces,
            "hausdorff": distance,
            "files": [str(p) for p in files],
        },
        as_json,
        "\n".join(lines),
    )


@app.command()
def verify(
    graph: Path,
    layout: Path,
    model: Annotated[VerifyModel, typer.Option(help="Representation model.")] = VerifyModel.UDR,
    tolerance: Annotated[float, typer.Option(help="Distance tolerance.")] = DEFAULT_TOLERANCE,
    as_json: JsonOption = False,
) -> None:
    """
    Check a layout against a graph. Exits 1 and lists the violating pairs if
    the layout does not represent the graph.
    """
    g = _read_graph(graph)
    grid = model is VerifyModel.WUDC_GRID
    positions = _read_layout(layout, grid)
    try:
        if isinstance(positions, GridLayout):
            result = verify_weak_udc_grid(g, positions)
        else:
            result = verify_udr(g, positions, tolerance)
    except (ContractViolationError, LayoutError) as e:
        _fail(f"{layout}: {e}")
    lines = ["ok"] if result.ok else [f"violations: {len(result.violations)}"]
    lines.extend(
        f"{x.u} {x.v} {x.kind} {x.distance:.12g}" for x in result.violations
    )
    _emit(
        {"ok": result.ok, "model": str(model), "violations": _violation_lines(result)},
        as_json,
        "\n".join(lines),
    )
    if not result.ok:
        raise typer.Exit(ExitCode.NO)


@app.command("export-svg")
def export_svg_command(
    graph: Path,
    layout: Path,
    grid: Annotated[bool, typer.Option("--grid", help="The layout holds grid cells.")] = False,
    scale: Annotated[float, typer.Option(min=0.1, help="Pixels per unit.")] = DEFAULT_SVG_SCALE,
    labels: Annotated[bool, typer.Option("--labels", help="Draw vertex ids.")] = False,
    output: OutputOption = None,
) -> None:
    """
    Draw a layout as SVG with one disk per vertex and the induced edges.
    Vertices without a position are left out.
    """
    g = _read_graph(graph)
    positions = _read_layout(layout, grid)
    document = export_svg(g, positions, SvgOptions(scale=scale, labels=labels))
    if output is not None:
        _write_text(output, document)
    else:
        _out(document)
