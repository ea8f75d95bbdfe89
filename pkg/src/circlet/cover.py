"""Euler covers: gluing assignments, quotient surfaces, classification, census.

A surface is built from one copy of every face of an even complex.  At each
edge the incident faces are paired off; paired copies are glued along that
edge, endpoint to matching endpoint.  Vertices of the result are the orbits
of face corners under these gluings.
"""

from __future__ import annotations

import os
from collections import Counter, deque
from collections.abc import Iterable, Mapping, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from math import prod

from networkx.utils import UnionFind

from .complex import ComplexError, TwoComplex, Walk, degrees, require_even

Pair = tuple[str, str]
Matching = tuple[Pair, ...]
GluingAssignment = dict[str, Matching]
Position = tuple[str, int]  # (face id, step index)

DEFAULT_CENSUS_LIMIT = 1_000_000


class InvalidAssignmentError(ComplexError):
    pass


class CensusLimitError(ValueError):
    def __init__(self, count: int, limit: int):
        self.count = count
        self.limit = limit
        super().__init__(f"{count} gluing assignments exceed the limit of {limit}")


# -- matchings -----------------------------------------------------------

def enumerate_matchings(faces: Sequence[str]) -> list[Matching]:
    """All perfect matchings of ``faces``.

    The first face is paired with each later face in turn and the rest is
    matched recursively, so there are ``(n - 1)!!`` results.
    """
    items = list(faces)
    if not items or len(items) % 2:
        raise ValueError(f"need a positive even number of faces, got {len(items)}")

    def rec(rest: list[str]) -> list[list[Pair]]:
        if not rest:
            return [[]]
        first, others = rest[0], rest[1:]
        out = []
        for i, partner in enumerate(others):
            for tail in rec(others[:i] + others[i + 1:]):
                out.append([(first, partner)] + tail)
        return out

    return [tuple(m) for m in rec(items)]


def double_factorial(n: int) -> int:
    return prod(range(n, 0, -2)) if n > 0 else 1


def normalize_matching(pairs: Iterable[Iterable[str]]) -> Matching:
    return tuple(sorted(tuple(sorted(p)) for p in pairs))  # type: ignore[misc]


def assignment_count(K: TwoComplex) -> int:
    """Number of gluing assignments: product of (deg - 1)!! over edges."""
    require_even(K)
    return prod(double_factorial(d - 1) for d in degrees(K).edge_degrees.values())


def check_assignment(K: TwoComplex, A: Mapping[str, Iterable[Iterable[str]]]) -> GluingAssignment:
    """Validate ``A`` against ``K`` and return it in normalized form."""
    out: GluingAssignment = {}
    for e in A:
        if e not in K.edges:
            raise InvalidAssignmentError(f"assignment names unknown edge {e!r}")
    for e, incident in K.edge_faces.items():
        if e not in A:
            raise InvalidAssignmentError(f"edge {e} has no matching")
        pairs = [tuple(p) for p in A[e]]
        covered: list[str] = []
        for p in pairs:
            if len(p) != 2 or p[0] == p[1]:
                raise InvalidAssignmentError(f"edge {e}: {p!r} is not a pair of distinct faces")
            covered.extend(p)
        for f in covered:
            if f not in incident:
                raise InvalidAssignmentError(f"edge {e}: face {f} does not contain the edge")
        if sorted(covered) != list(incident):
            missing = sorted(set(incident) - set(covered))
            if missing:
                raise InvalidAssignmentError(f"edge {e}: face {missing[0]} is not covered")
            dup = next(f for f, n in Counter(covered).items() if n > 1)
            raise InvalidAssignmentError(f"edge {e}: face {dup} is covered twice")
        out[e] = normalize_matching(pairs)
    return out


def canonical_assignment(K: TwoComplex,
                         decomposition: Iterable[Iterable[str]] | None = None) -> GluingAssignment:
    """First enumerated matching at every edge.

    With a decomposition, faces are only matched inside their own part.
    """
    require_even(K)
    part_of: dict[str, int] = {}
    if decomposition is not None:
        for k, part in enumerate(decomposition):
            for f in part:
                if f in part_of:
                    raise InvalidAssignmentError(f"face {f} appears in two parts")
                part_of[f] = k
        if set(part_of) != set(K.faces):
            raise InvalidAssignmentError("decomposition does not cover every face")
    A: GluingAssignment = {}
    for e, incident in K.edge_faces.items():
        groups: dict[int, list[str]] = {}
        for f in incident:
            groups.setdefault(part_of.get(f, 0), []).append(f)
        pairs: list[Pair] = []
        for k, fs in sorted(groups.items()):
            if len(fs) % 2:
                raise InvalidAssignmentError(
                    f"part {k} meets edge {e} in {len(fs)} faces; parts must be even")
            pairs.extend(enumerate_matchings(fs)[0])
        A[e] = normalize_matching(pairs)
    return A


# -- surfaces ------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class CombinatorialSurface:
    """Face polygons plus a pairing of their edge positions.

    ``faces`` maps a face id to its closed walk of base-complex edge labels;
    ``edges`` maps each surface edge id to the two positions it glues.
    """

    faces: Mapping[str, Walk]
    edges: Mapping[str, tuple[Position, Position]]

    def __post_init__(self):
        problem = self.defect()
        if problem:
            raise ValueError(problem)

    def defect(self) -> str | None:
        """First structural problem, or None for a valid closed surface."""
        hits: Counter[Position] = Counter()
        for sid, (a, b) in self.edges.items():
            for f, i in (a, b):
                if f not in self.faces or not 0 <= i < len(self.faces[f]):
                    return f"surface edge {sid} names missing position {(f, i)}"
            if a == b:
                return f"surface edge {sid} glues a position to itself"
            if self.faces[a[0]][a[1]][0] != self.faces[b[0]][b[1]][0]:
                return f"surface edge {sid} joins different edge labels"
            hits[a] += 1
            hits[b] += 1
        for f, walk in self.faces.items():
            for i in range(len(walk)):
                if hits[(f, i)] != 1:
                    return f"position {(f, i)} is glued {hits[(f, i)]} times"
        link_degree: Counter[Position] = Counter()
        for x, y in self._links():
            link_degree[x] += 1
            link_degree[y] += 1
        for c in self.corners:
            if link_degree[c] != 2:
                return f"corner {c} has link degree {link_degree[c]}"
        return None

    @cached_property
    def corners(self) -> list[Position]:
        """Corner ``(f, i)`` sits at the start of step ``i`` of face ``f``."""
        return [(f, i) for f, walk in self.faces.items() for i in range(len(walk))]

    def _links(self) -> list[tuple[Position, Position]]:
        links = []
        for (f, i), (g, j) in self.edges.values():
            nf, ng = len(self.faces[f]), len(self.faces[g])
            start_f, end_f = (f, i), (f, (i + 1) % nf)
            start_g, end_g = (g, j), (g, (j + 1) % ng)
            if self.faces[f][i][1] == self.faces[g][j][1]:
                links += [(start_f, start_g), (end_f, end_g)]
            else:
                links += [(start_f, end_g), (end_f, start_g)]
        return links

    @cached_property
    def vertex_orbits(self) -> list[tuple[Position, ...]]:
        """Corner classes, each sorted, listed by smallest corner."""
        uf = UnionFind(self.corners)
        for x, y in self._links():
            uf.union(x, y)
        return sorted(tuple(sorted(s)) for s in uf.to_sets())

    @cached_property
    def vertex_of(self) -> dict[Position, str]:
        return {c: f"v{k}" for k, orbit in enumerate(self.vertex_orbits) for c in orbit}

    @property
    def p(self) -> int:
        return len(self.vertex_orbits)

    @property
    def q(self) -> int:
        return len(self.edges)

    @property
    def r(self) -> int:
        return len(self.faces)


def build_cover(K: TwoComplex, A: Mapping[str, Iterable[Iterable[str]]]) -> CoverMap:
    """Glue one copy of every face of ``K`` according to ``A``."""
    require_even(K)
    A = check_assignment(K, A)
    pos = {(f, e): i for f, walk in K.faces.items() for i, (e, _) in enumerate(walk)}
    edges: dict[str, tuple[Position, Position]] = {}
    edge_map: dict[str, str] = {}
    for e, matching in A.items():
        for k, (f, g) in enumerate(matching):
            sid = f"{e}:{k}"
            edges[sid] = ((f, pos[(f, e)]), (g, pos[(g, e)]))
            edge_map[sid] = e
    M = CombinatorialSurface(dict(K.faces), edges)
    vertex_map = {}
    for orbit in M.vertex_orbits:
        f, i = orbit[0]
        vertex_map[M.vertex_of[orbit[0]]] = K.face_vertices(f)[i]
    return CoverMap(K, M, {f: f for f in K.faces}, edge_map, vertex_map)


def components(M: CombinatorialSurface) -> list[list[str]]:
    """Face sets of the connected pieces of ``M``, ordered by smallest face."""
    uf = UnionFind(M.faces)
    for (f, _), (g, _) in M.edges.values():
        uf.union(f, g)
    return sorted(sorted(s) for s in uf.to_sets())


def euler_characteristic(M: CombinatorialSurface) -> int:
    return M.p - M.q + M.r


def _component_counts(M: CombinatorialSurface, comp: Sequence[str]) -> tuple[int, int, int]:
    faces = set(comp)
    p = sum(1 for orbit in M.vertex_orbits if orbit[0][0] in faces)
    q = sum(1 for (a, _) in M.edges.values() if a[0] in faces)
    return p, q, len(faces)


def is_orientable(M: CombinatorialSurface) -> list[bool]:
    """Orientability of each component (in ``components`` order).

    Faces may be flipped; every glued edge must end up traversed in opposite
    directions by its two faces.  Constraints propagate breadth-first.
    """
    adj: dict[str, list[tuple[str, int]]] = {f: [] for f in M.faces}
    for (f, i), (g, j) in M.edges.values():
        same = int(M.faces[f][i][1] == M.faces[g][j][1])
        adj[f].append((g, same))
        adj[g].append((f, same))
    result = []
    for comp in components(M):
        flip = {comp[0]: 0}
        queue = deque([comp[0]])
        ok = True
        while queue and ok:
            f = queue.popleft()
            for g, same in adj[f]:
                want = flip[f] ^ same
                if g not in flip:
                    flip[g] = want
                    queue.append(g)
                elif flip[g] != want:
                    ok = False
                    break
        result.append(ok)
    return result


# -- classification ------------------------------------------------------

_SUB = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")
_ORIENTABLE_NAMES = {1: "torus", 2: "double torus", 3: "triple torus"}
_NUMBER_WORDS = {3: "three", 4: "four", 5: "five", 6: "six", 7: "seven", 8: "eight"}


@dataclass(frozen=True)
class SurfaceType:
    connected: bool
    euler_characteristic: int
    orientable: bool
    name: str
    parts: tuple[SurfaceType, ...] = field(default=(), compare=False, repr=False)

    @property
    def genus(self) -> int | None:
        if not (self.connected and self.orientable):
            return None
        return (2 - self.euler_characteristic) // 2

    @property
    def crosscaps(self) -> int | None:
        if not self.connected or self.orientable:
            return None
        return 2 - self.euler_characteristic

    @property
    def label(self) -> str:
        """Short symbol: ``S_g`` or ``N_k``; ``+``-joined when disconnected."""
        if not self.connected:
            return " + ".join(p.label for p in self.parts)
        if self.orientable:
            return "S" + str(self.genus).translate(_SUB)
        return "N" + str(self.crosscaps).translate(_SUB)


def surface_type(chi: int, orientable: bool) -> SurfaceType:
    """Closed connected surface with Euler characteristic ``chi``."""
    if orientable:
        if chi > 2 or chi % 2:
            raise ValueError(f"no orientable closed surface has Euler characteristic {chi}")
        g = (2 - chi) // 2
        sub = str(g).translate(_SUB)
        if g == 0:
            name = "sphere"
        elif g in _ORIENTABLE_NAMES:
            name = f"{_ORIENTABLE_NAMES[g]} (S{sub})"
        else:
            name = f"genus-{g} orientable surface (S{sub})"
    else:
        if chi > 1:
            raise ValueError(f"no non-orientable closed surface has Euler characteristic {chi}")
        k = 2 - chi
        sub = str(k).translate(_SUB)
        if k == 1:
            name = f"projective plane (N{sub})"
        elif k == 2:
            name = f"Klein bottle (N{sub})"
        else:
            name = f"sphere with {_NUMBER_WORDS.get(k, str(k))} cross-caps (N{sub})"
    return SurfaceType(True, chi, orientable, name)


def classify_components(M: CombinatorialSurface) -> list[SurfaceType]:
    out = []
    for comp, orient in zip(components(M), is_orientable(M)):
        p, q, r = _component_counts(M, comp)
        out.append(surface_type(p - q + r, orient))
    return out


def classify(M: CombinatorialSurface) -> SurfaceType:
    """Homeomorphism type of ``M``.

    A disconnected surface gets a combined record whose name joins the
    component names in sorted order.
    """
    parts = classify_components(M)
    if len(parts) == 1:
        return parts[0]
    names = sorted(p.name for p in parts)
    return SurfaceType(False, sum(p.euler_characteristic for p in parts),
                       all(p.orientable for p in parts), " + ".join(names),
                       tuple(sorted(parts, key=lambda p: p.name)))


# -- cover maps ----------------------------------------------------------

@dataclass(frozen=True)
class SpliceStep:
    edge: str
    pair1: Pair
    pair2: Pair
    components: int
    euler_characteristic: int


@dataclass(frozen=True, eq=False)
class CoverMap:
    base: TwoComplex
    surface: CombinatorialSurface
    face_map: Mapping[str, str]
    edge_map: Mapping[str, str]
    vertex_map: Mapping[str, str]
    splices: tuple[SpliceStep, ...] = ()

    def assignment(self) -> GluingAssignment:
        A: dict[str, list[Pair]] = {e: [] for e in self.base.edges}
        for sid, ((f, _), (g, _)) in self.surface.edges.items():
            A[self.edge_map[sid]].append((f, g))
        return {e: normalize_matching(ps) for e, ps in A.items()}


@dataclass(frozen=True)
class CoverReport:
    ok: bool
    violation: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def verify_cover(c: CoverMap) -> CoverReport:
    """Check that ``c`` is a cellular map covering every base face once."""
    K, M = c.base, c.surface

    def fail(msg: str) -> CoverReport:
        return CoverReport(False, msg)

    try:
        problem = M.defect()
    except (KeyError, IndexError, TypeError) as exc:
        return fail(f"surface is malformed: {exc!r}")
    if problem:
        return fail(problem)

    if set(c.face_map) != set(M.faces):
        return fail("face map domain differs from the surface faces")
    images = Counter(c.face_map.values())
    for f in K.faces:
        if images[f] > 1:
            return fail(f"face {f} is covered twice")
    for f in K.faces:
        if images[f] == 0:
            return fail(f"face {f} is not covered")
    for g, f in c.face_map.items():
        if f not in K.faces:
            return fail(f"surface face {g} maps to unknown face {f}")
        if tuple(M.faces[g]) != tuple(K.faces[f]):
            return fail(f"surface face {g} does not follow the boundary of face {f}")

    if set(c.edge_map) != set(M.edges):
        return fail("edge map domain differs from the surface edges")
    preimages = Counter(c.edge_map.values())
    for sid, ((g, i), _) in M.edges.items():
        e = c.edge_map[sid]
        if e != K.faces[c.face_map[g]][i][0]:
            return fail(f"surface edge {sid} maps to {e}, not the edge it glues")
    for e, fs in K.edge_faces.items():
        if 2 * preimages[e] != len(fs):
            return fail(f"edge {e} of degree {len(fs)} has {preimages[e]} preimages")

    if set(c.vertex_map) != {M.vertex_of[o[0]] for o in M.vertex_orbits}:
        return fail("vertex map domain differs from the surface vertices")
    for orbit in M.vertex_orbits:
        v = c.vertex_map[M.vertex_of[orbit[0]]]
        for g, i in orbit:
            if K.face_vertices(c.face_map[g])[i] != v:
                return fail(f"corner {(g, i)} lies over a different vertex than {v}")
    return CoverReport(True)


# -- census --------------------------------------------------------------

def _edge_choices(K: TwoComplex) -> list[tuple[str, list[Matching]]]:
    return [(e, enumerate_matchings(fs)) for e, fs in K.edge_faces.items()]


def assignment_at(choices: Sequence[tuple[str, Sequence[Matching]]], index: int) -> GluingAssignment:
    """Decode a mixed-radix index; the last edge varies fastest."""
    A: GluingAssignment = {}
    for e, ms in reversed(choices):
        index, digit = divmod(index, len(ms))
        A[e] = ms[digit]
    return dict(sorted(A.items()))


@dataclass(frozen=True)
class CensusRecord:
    index: int
    p: int
    euler_characteristic: int
    components: int
    surfaces: tuple[str, ...]
    choice: tuple[int, ...]

    @property
    def outcome(self) -> tuple[int, tuple[str, ...]]:
        return self.components, self.surfaces


@dataclass
class Census:
    total: int
    histogram: Counter
    p_min: int
    p_max: int
    records: list[CensusRecord]

    def surface_names(self) -> set[str]:
        return {name for _, names in self.histogram for name in names}


def _census_range(K: TwoComplex, start: int, stop: int) -> list[CensusRecord]:
    choices = _edge_choices(K)
    nontrivial = [k for k, (_, ms) in enumerate(choices) if len(ms) > 1]
    out = []
    for index in range(start, stop):
        A = assignment_at(choices, index)
        M = build_cover(K, A).surface
        kinds = classify_components(M)
        digits = tuple(choices[k][1].index(A[choices[k][0]]) for k in nontrivial)
        out.append(CensusRecord(index, M.p, euler_characteristic(M), len(kinds),
                                tuple(sorted(t.name for t in kinds)), digits))
    return out


def census(K: TwoComplex, limit: int | None = None, jobs: int = 1) -> Census:
    """Build and classify the cover for every gluing assignment of ``K``.

    Work is split into contiguous index blocks when ``jobs > 1``; records are
    merged in index order, so the result does not depend on scheduling.
    """
    if limit is None:
        limit = int(os.environ.get("CIRCLET_LIMIT", DEFAULT_CENSUS_LIMIT))
    total = assignment_count(K)
    if total > limit:
        raise CensusLimitError(total, limit)
    if jobs <= 1 or total < 2 * jobs:
        records = _census_range(K, 0, total)
    else:
        step = -(-total // jobs)
        bounds = [(s, min(s + step, total)) for s in range(0, total, step)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            chunks = pool.map(_census_range, [K] * len(bounds), *zip(*bounds))
            records = [r for chunk in chunks for r in chunk]
    hist = Counter(r.outcome for r in records)
    return Census(total, hist, min(r.p for r in records), max(r.p for r in records), records)
