"""Polygonal 2-complexes: data model, text format, degrees and connectivity.

A face is stored as a closed walk of ``(edge_id, forward)`` steps, where
``forward`` means the edge is traversed from its stored tail to its head.
Vertex lists would be ambiguous once parallel edges appear.
"""

from __future__ import annotations

import re
from collections import Counter
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass
from functools import cached_property

from networkx.utils import UnionFind

Step = tuple[str, bool]
Walk = tuple[Step, ...]

_ID_RE = re.compile(r"^[^\s#=]+$")


class ComplexError(ValueError):
    """Base class for malformed complexes and input documents."""


class InvalidComplexError(ComplexError):
    """A constructed complex violates one of the cell invariants."""


class ParseError(ComplexError):
    """Syntax or validation failure while reading a complex document."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


class DomainError(ValueError):
    """The complex is well formed but lacks a required property."""


class NotEvenError(DomainError):
    def __init__(self, edge: str, degree: int):
        self.edge = edge
        self.degree = degree
        super().__init__(f"complex is not even: edge {edge} has degree {degree}")


class NotStronglyConnectedError(DomainError):
    pass


def check_id(ident: str) -> str:
    if not isinstance(ident, str) or not _ID_RE.match(ident):
        raise InvalidComplexError(f"bad id {ident!r}: ids are non-empty, whitespace-free, "
                                  "and contain no '#' or '='")
    return ident


class TwoComplex:
    """An immutable combinatorial 2-complex.

    Parameters
    ----------
    vertices : iterable of str
    edges : mapping edge id -> (tail, head)
    faces : mapping face id -> sequence of (edge id, forward) steps

    All ids are kept verbatim; every ordering derived from them is
    lexicographic.
    """

    def __init__(
        self,
        vertices: Iterable[str],
        edges: Mapping[str, tuple[str, str]],
        faces: Mapping[str, Sequence[Step]],
    ):
        vertex_list = list(vertices)
        if len(set(vertex_list)) != len(vertex_list):
            dup = next(v for v, n in Counter(vertex_list).items() if n > 1)
            raise InvalidComplexError(f"duplicate vertex id {dup!r}")
        self._vertices = tuple(sorted(check_id(v) for v in vertex_list))
        vset = set(self._vertices)

        self._edges: dict[str, tuple[str, str]] = {}
        for e in sorted(edges):
            tail, head = edges[e]
            check_id(e)
            for v in (tail, head):
                if v not in vset:
                    raise InvalidComplexError(f"edge {e} references unknown vertex {v!r}")
            if tail == head:
                raise InvalidComplexError(f"edge {e} is a loop at {tail}")
            self._edges[e] = (tail, head)

        self._faces: dict[str, Walk] = {}
        for f in sorted(faces):
            check_id(f)
            walk = tuple((e, bool(fwd)) for e, fwd in faces[f])
            self._check_face(f, walk)
            self._faces[f] = walk

    def _check_face(self, f: str, walk: Walk) -> None:
        if len(walk) < 3:
            raise InvalidComplexError(f"face {f} has {len(walk)} edges; at least 3 are required")
        seen_edges = set()
        for e, _ in walk:
            if e not in self._edges:
                raise InvalidComplexError(f"face {f} references unknown edge {e!r}")
            if e in seen_edges:
                raise InvalidComplexError(f"face {f} uses edge {e} twice")
            seen_edges.add(e)
        ends = [self.step_ends(s) for s in walk]
        for i, (_, head) in enumerate(ends):
            nxt_tail = ends[(i + 1) % len(ends)][0]
            if head != nxt_tail:
                raise InvalidComplexError(
                    f"face {f} does not close: step {i} ends at {head} but step "
                    f"{(i + 1) % len(ends)} starts at {nxt_tail}")
        tails = [t for t, _ in ends]
        if len(set(tails)) != len(tails):
            dup = next(v for v, n in Counter(tails).items() if n > 1)
            raise InvalidComplexError(f"face {f} visits vertex {dup} twice")

    # -- accessors -------------------------------------------------------

    @property
    def vertices(self) -> tuple[str, ...]:
        return self._vertices

    @property
    def edges(self) -> Mapping[str, tuple[str, str]]:
        return self._edges

    @property
    def faces(self) -> Mapping[str, Walk]:
        return self._faces

    @property
    def counts(self) -> tuple[int, int, int]:
        """(#vertices, #edges, #faces)."""
        return len(self._vertices), len(self._edges), len(self._faces)

    def step_ends(self, step: Step) -> tuple[str, str]:
        e, forward = step
        tail, head = self._edges[e]
        return (tail, head) if forward else (head, tail)

    def face_vertices(self, f: str) -> tuple[str, ...]:
        """Vertices of face ``f``; entry ``i`` is the tail of step ``i``."""
        return tuple(self.step_ends(s)[0] for s in self._faces[f])

    @cached_property
    def edge_faces(self) -> dict[str, tuple[str, ...]]:
        """Sorted ids of the faces containing each edge."""
        inc: dict[str, list[str]] = {e: [] for e in self._edges}
        for f, walk in self._faces.items():
            for e, _ in walk:
                inc[e].append(f)
        return {e: tuple(sorted(fs)) for e, fs in inc.items()}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TwoComplex):
            return NotImplemented
        return (self._vertices == other._vertices and self._edges == other._edges
                and self._faces == other._faces)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        v, e, f = self.counts
        return f"TwoComplex(V={v}, E={e}, F={f})"


@dataclass(frozen=True)
class DegreeReport:
    edge_degrees: dict[str, int]
    vertex_degrees: dict[str, int]

    def profile(self) -> dict[int, int]:
        """Histogram ``{edge degree: number of edges}``."""
        return dict(sorted(Counter(self.edge_degrees.values()).items()))


def degrees(K: TwoComplex) -> DegreeReport:
    edge_deg = {e: len(fs) for e, fs in K.edge_faces.items()}
    vert_deg = {v: 0 for v in K.vertices}
    for tail, head in K.edges.values():
        vert_deg[tail] += 1
        vert_deg[head] += 1
    return DegreeReport(edge_deg, vert_deg)


def first_odd_edge(K: TwoComplex) -> tuple[str, int] | None:
    """The smallest edge whose degree is zero or odd, with that degree."""
    for e, fs in K.edge_faces.items():
        if not fs or len(fs) % 2:
            return e, len(fs)
    return None


def is_even(K: TwoComplex) -> bool:
    """True iff every edge lies on a positive, even number of faces."""
    return first_odd_edge(K) is None


def require_even(K: TwoComplex) -> None:
    bad = first_odd_edge(K)
    if bad is not None:
        raise NotEvenError(*bad)


def _component_count(nodes: Iterable, links: Iterable[tuple]) -> int:
    uf = UnionFind(nodes)
    for a, b in links:
        uf.union(a, b)
    return sum(1 for _ in uf.to_sets())


def is_connected(K: TwoComplex) -> bool:
    """Connectivity of the vertex/edge/face incidence graph."""
    nodes = ([("v", v) for v in K.vertices] + [("e", e) for e in K.edges]
             + [("f", f) for f in K.faces])
    if not nodes:
        raise ComplexError("connectivity of the empty complex is undefined")
    links = [(("e", e), ("v", v)) for e, ends in K.edges.items() for v in ends]
    links += [(("f", f), ("e", e)) for f, walk in K.faces.items() for e, _ in walk]
    return _component_count(nodes, links) == 1


def is_strongly_connected(K: TwoComplex) -> bool:
    """True iff K minus its vertex set is connected.

    Open edges and open faces glue only along edge interiors, so this is
    connectivity of the edge/face incidence graph, with every edge on some
    face, on top of ordinary connectivity.
    """
    if not K.faces:
        raise ComplexError("strong connectivity needs at least one face")
    if any(not fs for fs in K.edge_faces.values()):
        return False
    if not is_connected(K):
        return False
    nodes = [("e", e) for e in K.edges] + [("f", f) for f in K.faces]
    links = [(("f", f), ("e", e)) for f, walk in K.faces.items() for e, _ in walk]
    return _component_count(nodes, links) == 1


def subcomplex(K: TwoComplex, faces: Iterable[str]) -> TwoComplex:
    """The complex spanned by ``faces`` and exactly the cells on them."""
    keep = sorted(set(faces))
    if not keep:
        raise ComplexError("subcomplex needs at least one face")
    unknown = [f for f in keep if f not in K.faces]
    if unknown:
        raise ComplexError(f"unknown face id {unknown[0]!r}")
    edges = {e: K.edges[e] for f in keep for e, _ in K.faces[f]}
    verts = {v for ends in edges.values() for v in ends}
    return TwoComplex(verts, edges, {f: K.faces[f] for f in keep})


def relabel(K: TwoComplex, vertex_map: Mapping[str, str] | None = None,
            edge_map: Mapping[str, str] | None = None,
            face_map: Mapping[str, str] | None = None) -> TwoComplex:
    """Rename cells; unmapped ids are kept and vertices may be merged."""
    vm = lambda v: vertex_map.get(v, v) if vertex_map else v  # noqa: E731
    em = lambda e: edge_map.get(e, e) if edge_map else e  # noqa: E731
    fm = lambda f: face_map.get(f, f) if face_map else f  # noqa: E731
    return TwoComplex(
        sorted({vm(v) for v in K.vertices}),
        {em(e): (vm(t), vm(h)) for e, (t, h) in K.edges.items()},
        {fm(f): [(em(e), d) for e, d in walk] for f, walk in K.faces.items()},
    )


# -- text format ---------------------------------------------------------

def _tokens(line: str) -> list[tuple[str, int]]:
    """Split on whitespace, keeping 1-based columns."""
    return [(m.group(), m.start() + 1) for m in re.finditer(r"\S+", line)]


def parse_complex(text: str) -> TwoComplex:
    """Read the line-oriented complex format.

    ::

        vertex <id>
        edge <id> <tail> <head>
        face <id> = <+edge|-edge> ...

    ``#`` starts a comment.  Errors carry the offending line and column.
    """
    vertices: list[str] = []
    edges: dict[str, tuple[str, str]] = {}
    faces: dict[str, list[Step]] = {}
    origin: dict[tuple[str, str], tuple[int, int]] = {}

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = _tokens(line)
        if not toks:
            continue
        kind, col = toks[0]
        try:
            if kind == "vertex":
                if len(toks) != 2:
                    raise ParseError("expected 'vertex <id>'", lineno, col)
                v, vcol = toks[1]
                check_id(v)
                if ("v", v) in origin:
                    raise ParseError(f"duplicate vertex id {v!r}", lineno, vcol)
                origin[("v", v)] = (lineno, vcol)
                vertices.append(v)
            elif kind == "edge":
                if len(toks) != 4:
                    raise ParseError("expected 'edge <id> <tail> <head>'", lineno, col)
                (e, ecol), (t, tcol), (h, hcol) = toks[1:]
                check_id(e)
                if ("e", e) in origin:
                    raise ParseError(f"duplicate edge id {e!r}", lineno, ecol)
                for v, vcol in ((t, tcol), (h, hcol)):
                    if ("v", v) not in origin:
                        raise ParseError(f"unknown vertex {v!r}", lineno, vcol)
                if t == h:
                    raise ParseError(f"edge {e} is a loop", lineno, ecol)
                origin[("e", e)] = (lineno, ecol)
                edges[e] = (t, h)
            elif kind == "face":
                if len(toks) < 3 or toks[2][0] != "=":
                    raise ParseError("expected 'face <id> = <±edge> ...'", lineno, col)
                f, fcol = toks[1]
                check_id(f)
                if ("f", f) in origin:
                    raise ParseError(f"duplicate face id {f!r}", lineno, fcol)
                walk: list[Step] = []
                for tok, tcol in toks[3:]:
                    if tok[0] not in "+-" or len(tok) < 2:
                        raise ParseError(f"edge reference {tok!r} must start with '+' or '-'",
                                         lineno, tcol)
                    if tok[1:] not in edges:
                        raise ParseError(f"unknown edge {tok[1:]!r}", lineno, tcol)
                    walk.append((tok[1:], tok[0] == "+"))
                origin[("f", f)] = (lineno, fcol)
                faces[f] = walk
            else:
                raise ParseError(f"unknown record type {kind!r}", lineno, col)
        except InvalidComplexError as exc:
            raise ParseError(str(exc), lineno, col) from None

    try:
        return TwoComplex(vertices, edges, faces)
    except InvalidComplexError as exc:
        msg = str(exc)
        m = re.match(r"face (\S+) ", msg)
        if m and ("f", m.group(1)) in origin:
            raise ParseError(msg, *origin[("f", m.group(1))]) from None
        raise ParseError(msg) from None


def serialize_complex(K: TwoComplex) -> str:
    """Canonical text form; ``parse_complex`` inverts it exactly."""
    v, e, f = K.counts
    lines = [f"# 2-complex V={v} E={e} F={f}"]
    lines += [f"vertex {x}" for x in K.vertices]
    lines += [f"edge {x} {t} {h}" for x, (t, h) in K.edges.items()]
    for x, walk in K.faces.items():
        steps = " ".join(("+" if fwd else "-") + e for e, fwd in walk)
        lines.append(f"face {x} = {steps}")
    return "\n".join(lines) + "\n"
