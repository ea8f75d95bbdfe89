"""Constructors for standard even complexes and the simplex sphere recipe."""

from __future__ import annotations

from itertools import combinations
from math import comb

from .complex import TwoComplex
from .gf2 import FaceSubset


def simplex_skeleton(n: int) -> TwoComplex:
    """2-skeleton of the n-simplex on vertices ``"1"`` .. ``str(n + 1)``."""
    if n < 2:
        raise ValueError(f"simplex dimension must be at least 2, got {n}")
    verts = range(1, n + 2)
    edges = {f"e{i}_{j}": (str(i), str(j)) for i, j in combinations(verts, 2)}
    faces = {
        f"t{i}_{j}_{k}": [(f"e{i}_{j}", True), (f"e{j}_{k}", True), (f"e{i}_{k}", False)]
        for i, j, k in combinations(verts, 3)
    }
    return TwoComplex([str(v) for v in verts], edges, faces)


def simplex_face_id(i: int, j: int, k: int) -> str:
    i, j, k = sorted((i, j, k))
    return f"t{i}_{j}_{k}"


def simplex_sphere_decomposition(n: int) -> list[FaceSubset]:
    """Split the 2-skeleton of an odd simplex into octahedra and tetrahedra.

    Vertices pair up as ``{2i-1, 2i}``.  Each triple of pairs carries an
    octahedron (one vertex from each pair, 8 triangles); each couple of pairs
    spans a tetrahedron boundary (4 triangles).  Octahedra come first.
    """
    if n < 3 or n % 2 == 0:
        raise ValueError(f"sphere decomposition needs odd n >= 3, got {n}")
    m = (n + 1) // 2
    order = tuple(simplex_skeleton(n).faces)
    pair = lambda i: (2 * i - 1, 2 * i)  # noqa: E731
    parts = []
    for i, j, k in combinations(range(1, m + 1), 3):
        ids = [simplex_face_id(a, b, c) for a in pair(i) for b in pair(j) for c in pair(k)]
        parts.append(FaceSubset.from_ids(ids, order))
    for i, j in combinations(range(1, m + 1), 2):
        quad = pair(i) + pair(j)
        parts.append(FaceSubset.from_ids([simplex_face_id(*t) for t in combinations(quad, 3)], order))
    assert 8 * comb(m, 3) + 4 * comb(m, 2) == comb(n + 1, 3)
    return parts


def hypercube_skeleton(n: int) -> TwoComplex:
    """Squares of the n-cube.  Cells are bit strings with ``*`` at free coordinates."""
    if n < 2:
        raise ValueError(f"hypercube dimension must be at least 2, got {n}")

    def with_(bits: list[str], **at: str) -> str:
        out = list(bits)
        for pos, ch in at.items():
            out[int(pos[1:])] = ch
        return "".join(out)

    verts = [format(x, f"0{n}b") for x in range(2 ** n)]
    edges = {}
    for v in verts:
        for a in range(n):
            if v[a] == "0":
                edges[v[:a] + "*" + v[a + 1:]] = (v, v[:a] + "1" + v[a + 1:])
    faces = {}
    for a, b in combinations(range(n), 2):
        for rest in range(2 ** (n - 2)):
            bits = list(format(rest, f"0{n - 2}b")) if n > 2 else []
            base = bits[:a] + ["*"] + bits[a:]
            base = base[:b] + ["*"] + base[b:]
            fid = "".join(base)
            faces[fid] = [
                (with_(base, **{f"p{b}": "0"}), True),   # a: 0 -> 1 at b = 0
                (with_(base, **{f"p{a}": "1"}), True),   # b: 0 -> 1 at a = 1
                (with_(base, **{f"p{b}": "1"}), False),  # a: 1 -> 0 at b = 1
                (with_(base, **{f"p{a}": "0"}), False),  # b: 1 -> 0 at a = 0
            ]
    return TwoComplex(verts, edges, faces)


def cross_polytope_skeleton(n: int) -> TwoComplex:
    """2-skeleton of the n-dimensional cross-polytope on ``+1, -1, ..., +n, -n``."""
    if n < 3:
        raise ValueError(f"cross-polytope dimension must be at least 3, got {n}")
    verts = [f"{s}{i}" for i in range(1, n + 1) for s in "+-"]  # canonical order
    antipodal = lambda u, v: u[1:] == v[1:]  # noqa: E731
    edges = {u + v: (u, v) for u, v in combinations(verts, 2) if not antipodal(u, v)}
    faces = {
        u + v + w: [(u + v, True), (v + w, True), (u + w, False)]
        for u, v, w in combinations(verts, 3)
        if not (antipodal(u, v) or antipodal(v, w) or antipodal(u, w))
    }
    return TwoComplex(verts, edges, faces)


def tetrahedron() -> TwoComplex:
    return simplex_skeleton(3)


def cube() -> TwoComplex:
    return hypercube_skeleton(3)


def octahedron() -> TwoComplex:
    return cross_polytope_skeleton(3)


def platonic_circlets() -> dict[str, TwoComplex]:
    return {"tetrahedron": tetrahedron(), "cube": cube(), "octahedron": octahedron()}


def pinched_sphere() -> TwoComplex:
    """Octahedron with the poles ``+3`` and ``-3`` merged into vertex ``p``."""
    octa = octahedron()
    merge = lambda v: "p" if v in ("+3", "-3") else v  # noqa: E731
    edges = {e: (merge(t), merge(h)) for e, (t, h) in octa.edges.items()}
    verts = sorted({merge(v) for v in octa.vertices})
    return TwoComplex(verts, edges, dict(octa.faces))


def two_tetra_shared_edge() -> TwoComplex:
    """Tetrahedra on {1,2,3,4} and {1,2,5,6}, glued along edge ``e1_2`` only."""
    first = simplex_skeleton(3)
    rename = {"3": "5", "4": "6"}
    edges = dict(first.edges)
    faces = {f"A{f}": walk for f, walk in first.faces.items()}
    for e, (t, h) in first.edges.items():
        if e == "e1_2":
            continue
        t2, h2 = rename.get(t, t), rename.get(h, h)
        edges[f"e{t2}_{h2}"] = (t2, h2)
    for f, walk in first.faces.items():
        new = []
        for e, d in walk:
            t, h = first.edges[e]
            new.append((e if e == "e1_2" else f"e{rename.get(t, t)}_{rename.get(h, h)}", d))
        faces[f"B{f}"] = new
    return TwoComplex(["1", "2", "3", "4", "5", "6"], edges, faces)


# -- the Klein-bottle-like complex with four degree-4 edges ---------------

CIRCUMFERENCE = 4
LENGTH = 10
HOLE = (1, 4)  # (row, column), 0-based: row 2, column 5 of the shaft
HUB = ("1", "2", "3", "4")
HUB_EDGES = {("1", "2"): "a", ("2", "3"): "b", ("3", "4"): "c", ("4", "1"): "d"}

# Each boundary 4-cycle is sent onto the hub cycle 1-2-3-4 by a dihedral
# map (shift, reflect): cycle position k -> HUB[(shift +/- k) % 4].
DEFAULT_GLUING = {"right": (0, True), "hole": (0, False)}


def _dihedral(shift: int, reflect: bool, k: int) -> str:
    return HUB[(shift - k if reflect else shift + k) % 4]


def figure2_complex(right: tuple[int, int] | None = None,
                    hole: tuple[int, int] | None = None) -> TwoComplex:
    """A 4 x 10 square-grid tube with one square cut out as an isolated face.

    The left rim, the right rim, the hole boundary and the boundary of the
    isolated square are four 4-cycles; all four are identified with the hub
    cycle ``a b c d`` on vertices 1-4, giving 36 vertices, 76 edges and 40
    square faces with exactly four edges of degree 4.

    ``right`` and ``hole`` override the dihedral maps used for the right rim
    and the hole boundary (the left rim and isolated square use the identity).
    """
    right = DEFAULT_GLUING["right"] if right is None else right
    hole = DEFAULT_GLUING["hole"] if hole is None else hole
    C, L = CIRCUMFERENCE, LENGTH
    hr, hc = HOLE

    ident: dict[tuple, str] = {}
    for j in range(C):
        ident[("g", j, 0)] = _dihedral(0, False, j)
        ident[("g", j, L)] = _dihedral(*right, j)
    hole_cycle = [(hr, hc), ((hr + 1) % C, hc), ((hr + 1) % C, hc + 1), (hr, hc + 1)]
    for k, (j, x) in enumerate(hole_cycle):
        ident[("g", j, x)] = _dihedral(*hole, k)
    for k in range(4):
        ident[("s", k)] = HUB[k]

    def vname(node: tuple) -> str:
        if node in ident:
            return ident[node]
        return f"v{node[1]}_{node[2]}"

    raw_edges: dict[str, tuple[tuple, tuple]] = {}
    for x in range(L + 1):
        for j in range(C):
            raw_edges[f"r{j}_{x}"] = (("g", j, x), ("g", (j + 1) % C, x))
    for x in range(L):
        for j in range(C):
            raw_edges[f"l{j}_{x}"] = (("g", j, x), ("g", j, x + 1))
    for k in range(4):
        raw_edges[f"s{k}"] = (("s", k), ("s", (k + 1) % 4))

    edges: dict[str, tuple[str, str]] = {}
    edge_name: dict[str, tuple[str, bool]] = {}  # raw edge -> (edge id, same direction)
    for raw, (u, w) in raw_edges.items():
        t, h = vname(u), vname(w)
        if u in ident and w in ident:
            if (t, h) in HUB_EDGES:
                edge_name[raw] = (HUB_EDGES[(t, h)], True)
            elif (h, t) in HUB_EDGES:
                edge_name[raw] = (HUB_EDGES[(h, t)], False)
            else:
                raise AssertionError(f"edge {raw} does not land on the hub cycle")
            continue
        edges[raw] = (t, h)
        edge_name[raw] = (raw, True)
    for (t, h), e in HUB_EDGES.items():
        edges[e] = (t, h)

    def step(raw: str, forward: bool) -> tuple[str, bool]:
        e, same = edge_name[raw]
        return e, forward == same

    faces: dict[str, list[tuple[str, bool]]] = {}
    for x in range(L):
        for j in range(C):
            if (j, x) == HOLE:
                continue
            faces[f"q{j}_{x}"] = [
                step(f"r{j}_{x}", True),
                step(f"l{(j + 1) % C}_{x}", True),
                step(f"r{j}_{x + 1}", False),
                step(f"l{j}_{x}", False),
            ]
    faces["square"] = [step(f"s{k}", True) for k in range(4)]

    verts = sorted({vname(n) for pair in raw_edges.values() for n in pair})
    return TwoComplex(verts, edges, faces)
