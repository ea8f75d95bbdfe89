"""Text formats for surfaces and gluing assignments, and cover reports."""

from __future__ import annotations

import re
from collections.abc import Mapping, Sequence

from .complex import ParseError, check_id, InvalidComplexError
from .cover import (CombinatorialSurface, CoverMap, GluingAssignment, Pair, classify,
                    components, euler_characteristic, normalize_matching, verify_cover)

SCHEMA_VERSION = 1


def _tokens(line: str) -> list[tuple[str, int]]:
    return [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]


def _walk_text(walk) -> str:
    return " ".join(("+" if fwd else "-") + e for e, fwd in walk)


def serialize_surface(M: CombinatorialSurface) -> str:
    """Face walks then gluings, sorted by id, under a p/q/r/chi header.

    ::

        # surface p=6 q=12 r=8 chi=2
        face <id> = <±label> ...
        pair <edge id> <face> <index> <face> <index>
    """
    lines = [f"# surface p={M.p} q={M.q} r={M.r} chi={euler_characteristic(M)}"]
    lines += [f"face {f} = {_walk_text(M.faces[f])}" for f in sorted(M.faces)]
    for sid in sorted(M.edges):
        (f, i), (g, j) = M.edges[sid]
        lines.append(f"pair {sid} {f} {i} {g} {j}")
    return "\n".join(lines) + "\n"


def parse_surface(text: str) -> CombinatorialSurface:
    faces: dict[str, tuple[tuple[str, bool], ...]] = {}
    edges: dict[str, tuple[tuple[str, int], tuple[str, int]]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = _tokens(raw.split("#", 1)[0])
        if not toks:
            continue
        kind, col = toks[0]
        try:
            if kind == "face":
                if len(toks) < 6 or toks[2][0] != "=":
                    raise ParseError("expected 'face <id> = <±label> ...' with 3+ labels", lineno, col)
                f = check_id(toks[1][0])
                if f in faces:
                    raise ParseError(f"duplicate face id {f!r}", lineno, toks[1][1])
                walk = []
                for tok, tcol in toks[3:]:
                    if tok[0] not in "+-" or len(tok) < 2:
                        raise ParseError(f"bad label {tok!r}", lineno, tcol)
                    walk.append((check_id(tok[1:]), tok[0] == "+"))
                faces[f] = tuple(walk)
            elif kind == "pair":
                if len(toks) != 6:
                    raise ParseError("expected 'pair <id> <face> <index> <face> <index>'", lineno, col)
                sid = check_id(toks[1][0])
                if sid in edges:
                    raise ParseError(f"duplicate edge id {sid!r}", lineno, toks[1][1])
                try:
                    a = (toks[2][0], int(toks[3][0]))
                    b = (toks[4][0], int(toks[5][0]))
                except ValueError:
                    raise ParseError("positions must be integers", lineno, toks[3][1]) from None
                edges[sid] = (a, b)
            else:
                raise ParseError(f"unknown record type {kind!r}", lineno, col)
        except InvalidComplexError as exc:
            raise ParseError(str(exc), lineno, col) from None
    try:
        return CombinatorialSurface(faces, edges)
    except ValueError as exc:
        raise ParseError(f"not a closed surface: {exc}") from None


def serialize_assignment(A: Mapping[str, Sequence[Pair]]) -> str:
    """One ``match <edge> <f> <g> [<f> <g> ...]`` line per edge."""
    lines = []
    for e in sorted(A):
        flat = " ".join(f"{f} {g}" for f, g in normalize_matching(A[e]))
        lines.append(f"match {e} {flat}")
    return "\n".join(lines) + "\n"


def parse_assignment(text: str) -> GluingAssignment:
    A: GluingAssignment = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        toks = _tokens(raw.split("#", 1)[0])
        if not toks:
            continue
        kind, col = toks[0]
        if kind != "match":
            raise ParseError(f"unknown record type {kind!r}", lineno, col)
        if len(toks) < 4 or (len(toks) - 2) % 2:
            raise ParseError("expected 'match <edge> <face> <face> ...' with an even face count",
                             lineno, col)
        e, ecol = toks[1]
        if e in A:
            raise ParseError(f"edge {e} matched twice", lineno, ecol)
        ids = [t for t, _ in toks[2:]]
        A[e] = normalize_matching(zip(ids[::2], ids[1::2]))
    return A


def report_classification(c: CoverMap) -> dict:
    """Summary record of a verified cover."""
    check = verify_cover(c)
    if not check.ok:
        raise ValueError(f"refusing to report an invalid cover: {check.violation}")
    M = c.surface
    kind = classify(M)
    return {
        "schema": SCHEMA_VERSION,
        "p": M.p,
        "q": M.q,
        "r": M.r,
        "chi": euler_characteristic(M),
        "orientable": kind.orientable,
        "name": kind.name,
        "label": kind.label,
        "components": len(components(M)),
        "splices": [
            {"edge": s.edge, "pair1": list(s.pair1), "pair2": list(s.pair2),
             "components": s.components, "chi": s.euler_characteristic}
            for s in c.splices
        ],
    }
