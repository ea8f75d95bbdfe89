"""Command-line front end.

Exit status: 0 on success, 1 when the complex lacks a required property
(not even, not strongly connected), 2 for unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections.abc import Sequence

from . import generators
from .complex import (ComplexError, DomainError, NotEvenError, TwoComplex, degrees,
                      first_odd_edge, is_even, is_strongly_connected, parse_complex,
                      serialize_complex)
from .cover import (DEFAULT_CENSUS_LIMIT, CensusLimitError, InvalidAssignmentError,
                    build_cover, canonical_assignment, census, classify,
                    classify_components, components, euler_characteristic,
                    is_orientable)
from .gf2 import circlet_decomposition, is_circlet, kernel_dimension
from .serialize import (SCHEMA_VERSION, parse_assignment, parse_surface,
                        report_classification, serialize_surface)
from .splice import euler_cover


class InputError(Exception):
    pass


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None


def _load(path: str) -> TwoComplex:
    try:
        return parse_complex(_read(path))
    except ComplexError as exc:
        raise InputError(f"{path}: {exc}") from None


def _emit(args, record: dict, lines: list[str]) -> None:
    if args.json:
        print(json.dumps(record, ensure_ascii=False, indent=2))
    else:
        print("\n".join(lines))


def _table(record: dict, keys: Sequence[str]) -> list[str]:
    width = max(len(k) for k in keys)
    return [f"{k.ljust(width)}  {record[k]}" for k in keys]


def cmd_check(args) -> int:
    K = _load(args.file)
    odd = first_odd_edge(K)
    even = odd is None
    strong = bool(K.faces) and is_strongly_connected(K)
    record = {
        "schema": SCHEMA_VERSION,
        "vertices": K.counts[0], "edges": K.counts[1], "faces": K.counts[2],
        "degree_profile": {str(d): n for d, n in degrees(K).profile().items()},
        "even": even,
        "strongly_connected": strong,
        "circlet": even and is_circlet(K),
        "kernel_dim": kernel_dimension(K),
        "odd_edge": None if even else {"edge": odd[0], "degree": odd[1]},
    }
    lines = _table({k.replace("_", "-"): v for k, v in record.items()},
                   ["vertices", "edges", "faces", "degree-profile", "even",
                    "strongly-connected", "circlet", "kernel-dim"])
    if not even:
        lines.append(f"edge {odd[0]} has degree {odd[1]}")
    _emit(args, record, lines)
    if not even:
        print(f"error: {NotEvenError(*odd)}", file=sys.stderr)
        return 1
    if not strong:
        print("error: complex is not strongly connected", file=sys.stderr)
        return 1
    return 0


def cmd_decompose(args) -> int:
    K = _load(args.file)
    parts = [p.ids for p in circlet_decomposition(K)]
    record = {"schema": SCHEMA_VERSION, "parts": parts, "circlet": len(parts) == 1,
              "kernel_dim": kernel_dimension(K)}
    lines = [f"circlet: {record['circlet']}", f"kernel-dim: {record['kernel_dim']}"]
    lines += [f"part {k}: {len(p)} faces: {' '.join(p)}" for k, p in enumerate(parts)]
    _emit(args, record, lines)
    return 0


def _write_surface(path: str | None, cover) -> None:
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(serialize_surface(cover.surface))


def _report_lines(record: dict) -> list[str]:
    lines = _table(record, ["name", "chi", "orientable", "components", "p", "q", "r"])
    for s in record["splices"]:
        lines.append(f"splice at {s['edge']}: {s['pair1']} x {s['pair2']} "
                     f"-> {s['components']} components, chi {s['chi']}")
    return lines


def cmd_cover(args) -> int:
    K = _load(args.file)
    if args.assignment:
        try:
            A = parse_assignment(_read(args.assignment))
        except ComplexError as exc:
            raise InputError(f"{args.assignment}: {exc}") from None
    else:
        parts = [p.ids for p in circlet_decomposition(K)] if args.respect_decomposition else None
        A = canonical_assignment(K, parts)
    try:
        cover = build_cover(K, A)
    except InvalidAssignmentError as exc:
        raise InputError(f"invalid assignment: {exc}") from None
    _write_surface(args.emit_surface, cover)
    record = report_classification(cover)
    _emit(args, record, _report_lines(record))
    return 0


def cmd_euler_cover(args) -> int:
    K = _load(args.file)

    def trace(step):
        print(json.dumps({"edge": step.edge, "pair1": list(step.pair1),
                          "pair2": list(step.pair2), "components": step.components,
                          "chi": step.euler_characteristic}))

    cover = euler_cover(K, trace if args.trace else None)
    _write_surface(args.emit_surface, cover)
    record = report_classification(cover)
    _emit(args, record, _report_lines(record))
    return 0


def cmd_census(args) -> int:
    K = _load(args.file)
    limit = args.limit
    if limit is None:
        limit = int(os.environ.get("CIRCLET_LIMIT", DEFAULT_CENSUS_LIMIT))
    result = census(K, limit=limit, jobs=args.jobs)
    hist = sorted(result.histogram.items(), key=lambda kv: (kv[0][0], kv[0][1]))
    record = {
        "schema": SCHEMA_VERSION,
        "total": result.total,
        "p_min": result.p_min,
        "p_max": result.p_max,
        "surface_names": sorted(result.surface_names()),
        "histogram": [{"components": k, "surfaces": list(names), "count": n}
                      for (k, names), n in hist],
        "records": [{"index": r.index, "choice": list(r.choice), "p": r.p,
                     "chi": r.euler_characteristic, "components": r.components,
                     "surfaces": list(r.surfaces)} for r in result.records],
    }
    lines = [f"{result.total} assignments, p in [{result.p_min}, {result.p_max}]"]
    width = max(len(" + ".join(names)) for (_, names), _ in hist)
    lines += [f"  {' + '.join(names).ljust(width)}  {n}" for (_, names), n in hist]
    _emit(args, record, lines)
    return 0


def cmd_classify(args) -> int:
    try:
        M = parse_surface(_read(args.file))
    except ComplexError as exc:
        raise InputError(f"{args.file}: {exc}") from None
    kind = classify(M)
    record = {
        "schema": SCHEMA_VERSION, "p": M.p, "q": M.q, "r": M.r,
        "chi": euler_characteristic(M), "orientable": kind.orientable,
        "name": kind.name, "label": kind.label, "components": len(components(M)),
        "per_component": [{"name": t.name, "chi": t.euler_characteristic, "orientable": o}
                          for t, o in zip(classify_components(M), is_orientable(M))],
    }
    _emit(args, record, _table(record, ["name", "chi", "orientable", "components", "p", "q", "r"]))
    return 0


_GENERATORS = {
    "simplex": generators.simplex_skeleton,
    "hypercube": generators.hypercube_skeleton,
    "crosspoly": generators.cross_polytope_skeleton,
    "figure2": generators.figure2_complex,
    "pinched-sphere": generators.pinched_sphere,
    "two-tetra": generators.two_tetra_shared_edge,
    "tetrahedron": generators.tetrahedron,
    "cube": generators.cube,
    "octahedron": generators.octahedron,
}
_SIZED = {"simplex", "hypercube", "crosspoly", "simplex-decomposition"}


def cmd_gen(args) -> int:
    if args.kind in _SIZED and args.n is None:
        raise InputError(f"gen {args.kind} needs a size argument")
    if args.kind not in _SIZED and args.n is not None:
        raise InputError(f"gen {args.kind} takes no size argument")
    try:
        if args.kind == "simplex-decomposition":
            parts = generators.simplex_sphere_decomposition(args.n)
            print(json.dumps({"schema": SCHEMA_VERSION, "parts": [p.ids for p in parts]},
                             indent=2))
            return 0
        make = _GENERATORS[args.kind]
        K = make(args.n) if args.kind in _SIZED else make()
    except ValueError as exc:
        raise InputError(str(exc)) from None
    sys.stdout.write(serialize_complex(K))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="circlet", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, file_arg=True):
        p = sub.add_parser(name, help=help_)
        if file_arg:
            p.add_argument("file", nargs="?", default="-", help="input file ('-' for stdin)")
        p.add_argument("--json", action="store_true", help="emit JSON")
        p.set_defaults(func=func)
        return p

    add("check", cmd_check, "report evenness, strong connectivity and circlet status")
    add("decompose", cmd_decompose, "split an even complex into circlets")
    p = add("cover", cmd_cover, "build and classify one Euler-type cover")
    p.add_argument("--assignment", help="file of 'match <edge> <f> <g> ...' lines")
    p.add_argument("--respect-decomposition", action="store_true",
                   help="match faces only within their circlet")
    p.add_argument("--emit-surface", metavar="PATH", help="write the surface to PATH")
    p = add("euler-cover", cmd_euler_cover, "build a connected Euler cover")
    p.add_argument("--trace", action="store_true", help="print each splice as a JSON line")
    p.add_argument("--emit-surface", metavar="PATH", help="write the surface to PATH")
    p = add("census", cmd_census, "classify the covers of every gluing assignment")
    p.add_argument("--limit", type=int, default=None,
                   help=f"refuse above this many assignments (default {DEFAULT_CENSUS_LIMIT:,}, "
                        "or $CIRCLET_LIMIT)")
    p.add_argument("--jobs", type=int, default=1, help="worker processes")
    add("classify", cmd_classify, "classify a serialized surface")
    p = add("gen", cmd_gen, "print a generated complex", file_arg=False)
    p.add_argument("kind", choices=sorted(list(_GENERATORS) + ["simplex-decomposition"]))
    p.add_argument("n", nargs="?", type=int)
    return parser


def run_cli(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DomainError, CensusLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
