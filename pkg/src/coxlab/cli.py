"""Command-line front end.

    coxlab build      construct a complex and write it as JSON
    coxlab present    emit a presentation from a complex file
    coxlab verify     run a named verification suite
    coxlab enumerate  count cosets of a presented group

Human-readable summaries go to stdout; --json switches to a canonical
machine-readable report (sorted keys, no timestamps).  Exit codes:
0 success or inconclusive, 1 verification failure, 2 usage or input
error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import cosets, fixtures, presentation, verify
from .complexes import (build_torus_triangulation, complex_from_json,
                        dual_graph, hexagon_links, load_paper_labeling,
                        spanning_data)

USAGE_ERROR = 2


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except _InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


class _InputError(Exception):
    pass


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="coxlab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="construct a torus triangulation complex")
    grid = p.add_argument_group("grid")
    grid.add_argument("--rows", type=int)
    grid.add_argument("--cols", type=int)
    p.add_argument("--paper-fixture", action="store_true",
                   help="use the published 3 x 3 labeling instead of a generated grid")
    p.add_argument("--out", help="write the complex JSON here")
    p.add_argument("--json", action="store_true", dest="as_json")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("present", help="emit a presentation from a complex")
    p.add_argument("--complex", required=True, dest="complex_file")
    p.add_argument("--variant", choices=presentation.VARIANTS, default="quotient")
    p.add_argument("--out", help="write the presentation JSON here")
    p.add_argument("--fixtures-out", help="also export the bundled fixtures into this directory")
    p.add_argument("--json", action="store_true", dest="as_json")
    p.set_defaults(func=cmd_present)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--complex", required=True, dest="complex_file")
    p.add_argument("--suite", choices=verify.SUITES, default="all")
    p.add_argument("--json", action="store_true", dest="as_json")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("enumerate", help="enumerate cosets of a presented group")
    p.add_argument("--presentation", required=True, dest="presentation_file")
    p.add_argument("--subgroup", default="",
                   help="subgroup generator words: letters comma-separated, words space-separated")
    p.add_argument("--capacity", type=int, default=cosets.DEFAULT_CAPACITY)
    p.add_argument("--table-out", help="dump the standardized coset table here")
    p.add_argument("--json", action="store_true", dest="as_json")
    p.set_defaults(func=cmd_enumerate)
    return parser


def _emit(data: dict, as_json: bool, lines) -> None:
    if as_json:
        print(json.dumps(data, sort_keys=True, indent=1))
    else:
        for line in lines:
            print(line)


def _write_json(path: str, data: dict) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        json.dump(data, handle, sort_keys=True, indent=1)
        handle.write("\n")


def _load_complex(path: str):
    try:
        with open(path, encoding="utf-8") as handle:
            data = json.load(handle)
        return complex_from_json(data)
    except FileNotFoundError as exc:
        raise _InputError(f"cannot read complex file: {exc}") from exc
    except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
        raise _InputError(f"invalid complex file {path}: {exc}") from exc


def cmd_build(args) -> int:
    if args.paper_fixture:
        if args.rows or args.cols:
            raise _InputError("--paper-fixture excludes --rows/--cols")
        x0 = load_paper_labeling()
    else:
        if args.rows is None or args.cols is None:
            raise _InputError("either --paper-fixture or both --rows and --cols are required")
        try:
            x0 = build_torus_triangulation(args.rows, args.cols)
        except ValueError as exc:
            raise _InputError(str(exc)) from exc
    graph = dual_graph(x0)
    span = spanning_data(graph, "canonical")
    info = {
        "command": "build",
        "rows": x0.rows,
        "cols": x0.cols,
        "points": len(x0.points),
        "lines": len(x0.lines),
        "planes": len(x0.planes),
        "euler_characteristic": len(x0.points) - len(x0.lines) + len(x0.planes),
        "dual_regular_degree": 3,
        "dual_connected": graph.is_connected(),
        "cycle_rank": graph.cycle_rank(),
        "tree_edges": len(span.tree_edges),
    }
    if args.out:
        _write_json(args.out, x0.to_json())
        info["out"] = args.out
    _emit(info, args.as_json, [
        f"{x0.rows} x {x0.cols} torus triangulation: "
        f"{info['points']} points, {info['lines']} lines, {info['planes']} planes",
        f"dual graph: 3-regular, connected={info['dual_connected']}, "
        f"cycle rank {info['cycle_rank']}, spanning tree {info['tree_edges']} edges",
    ] + ([f"wrote {args.out}"] if args.out else []))
    return 0


def cmd_present(args) -> int:
    x0 = _load_complex(args.complex_file)
    graph = dual_graph(x0)
    links = hexagon_links(x0)
    pres = presentation.generate(graph, links, args.variant)
    info = {"command": "present", "variant": args.variant, **pres.counts()}
    if args.out:
        _write_json(args.out, pres.to_json())
        info["out"] = args.out
    if args.fixtures_out:
        info["fixtures"] = fixtures.export_all(args.fixtures_out)
    counts = pres.counts()
    _emit(info, args.as_json, [
        f"{args.variant} presentation on {pres.generator_count} generators: "
        + ", ".join(f"{counts[k]} {k}" for k in ("squares", "commutations", "braids", "forks", "cycles"))
        + f" ({counts['total']} relators)",
    ] + ([f"wrote {args.out}"] if args.out else [])
      + ([f"exported fixtures to {args.fixtures_out}"] if args.fixtures_out else []))
    return 0


def cmd_verify(args) -> int:
    x0 = _load_complex(args.complex_file)
    try:
        report = verify.run_suite(x0, args.suite)
    except ValueError as exc:
        raise _InputError(str(exc)) from exc
    if args.as_json:
        print(json.dumps(report.to_json(), sort_keys=True, indent=1))
    else:
        for e in report.entries:
            print(f"{e.status.upper():4} {e.name}: {e.detail} [{e.value}]")
        summary = report.summary()
        print(f"summary: {summary['pass']} pass, {summary['fail']} fail, "
              f"{summary['inconclusive']} inconclusive")
    return report.exit_code()


def _parse_subgroup(text: str) -> list[tuple[int, ...]]:
    words = []
    for chunk in text.split():
        try:
            words.append(tuple(int(x) for x in chunk.split(",") if x))
        except ValueError as exc:
            raise _InputError(f"bad subgroup word {chunk!r}: {exc}") from exc
    return words


def cmd_enumerate(args) -> int:
    try:
        with open(args.presentation_file, encoding="utf-8") as handle:
            ngens, relators = presentation.presentation_from_json(json.load(handle))
    except FileNotFoundError as exc:
        raise _InputError(f"cannot read presentation file: {exc}") from exc
    except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
        raise _InputError(f"invalid presentation file {args.presentation_file}: {exc}") from exc
    subgroup = _parse_subgroup(args.subgroup)
    if args.capacity < 1:
        raise _InputError("capacity must be positive")
    result = cosets.enumerate_cosets(ngens, relators, subgroup, args.capacity)
    status = "finite" if result.status == "finite" else "inconclusive"
    info = {
        "command": "enumerate",
        "status": status,
        "index": result.index,
        "table_size": result.allocated,
        "capacity": args.capacity,
    }
    if args.table_out and result.table is not None:
        _write_json(args.table_out, {"index": result.index, "table": result.table})
        info["table_out"] = args.table_out
    _emit(info, args.as_json, [
        f"index {result.index} (allocated {result.allocated} cosets)"
        if status == "finite" else
        f"inconclusive: capacity {args.capacity} exceeded "
        f"(allocated {result.allocated} cosets); the group may be infinite",
    ])
    return 0
