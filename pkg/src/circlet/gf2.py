"""Face sets as GF(2) vectors: boundary matrix, kernel, circlets.

Vectors are Python ints used as bitsets.  Bit ``j`` stands for the
``j``-th face in lexicographic id order.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

from .complex import TwoComplex, is_even, require_even, subcomplex


@dataclass(frozen=True)
class FaceSubset:
    """A set of faces, stored as a bitmask over ``order``."""

    bits: int
    order: tuple[str, ...]

    @classmethod
    def from_ids(cls, ids: Iterable[str], order: Sequence[str]) -> FaceSubset:
        index = {f: j for j, f in enumerate(order)}
        bits = 0
        for f in ids:
            try:
                bits |= 1 << index[f]
            except KeyError:
                raise ValueError(f"unknown face id {f!r}") from None
        return cls(bits, tuple(order))

    @property
    def ids(self) -> list[str]:
        return [f for j, f in enumerate(self.order) if self.bits >> j & 1]

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __iter__(self):
        return iter(self.ids)

    def complement(self) -> FaceSubset:
        return FaceSubset(((1 << len(self.order)) - 1) & ~self.bits, self.order)


@dataclass(frozen=True)
class GF2Matrix:
    """Edge-by-face incidence matrix mod 2; one int row per edge."""

    rows: tuple[int, ...]
    edges: tuple[str, ...]
    faces: tuple[str, ...]

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.faces)

    def column_weight(self, j: int) -> int:
        return sum(r >> j & 1 for r in self.rows)

    def to_array(self):
        import numpy as np

        out = np.zeros(self.shape, dtype=np.uint8)
        for i, r in enumerate(self.rows):
            for j in range(len(self.faces)):
                out[i, j] = r >> j & 1
        return out


def boundary_matrix(K: TwoComplex) -> GF2Matrix:
    faces = tuple(K.faces)
    col = {f: j for j, f in enumerate(faces)}
    rows = []
    for e, fs in K.edge_faces.items():
        r = 0
        for f in fs:
            r |= 1 << col[f]
        rows.append(r)
    return GF2Matrix(tuple(rows), tuple(K.edges), faces)


def _low(x: int) -> int:
    return (x & -x).bit_length() - 1


def rref(vectors: Iterable[int]) -> list[int]:
    """Reduced echelon basis of the span, pivot = lowest set bit, sorted by pivot."""
    basis: list[int] = []
    for v in vectors:
        for b in basis:
            if v >> _low(b) & 1:
                v ^= b
        if v:
            p = _low(v)
            basis = [b ^ v if b >> p & 1 else b for b in basis]
            basis.append(v)
    return sorted(basis, key=_low)


def kernel_vectors(rows: Sequence[int], ncols: int) -> list[int]:
    """Basis (as ints) of ``{x : popcount(r & x) even for every row r}``."""
    # Row-reduce with pivots on the lowest bit; free columns then index the kernel.
    pivots: dict[int, int] = {}
    for r in rref(rows):
        pivots[_low(r)] = r
    kernel = []
    for j in range(ncols):
        if j in pivots:
            continue
        x = 1 << j
        for p, r in pivots.items():
            if r >> j & 1:
                x |= 1 << p
        kernel.append(x)
    return rref(kernel)


def kernel_basis(M: GF2Matrix) -> list[FaceSubset]:
    """Canonical basis of the even face sets of ``M``.

    The basis is in reduced echelon form (pivot = lowest face index, each
    pivot absent from the other vectors), so it is unique for the subspace.
    """
    return [FaceSubset(x, M.faces) for x in kernel_vectors(M.rows, len(M.faces))]


def kernel_dimension(K: TwoComplex) -> int:
    M = boundary_matrix(K)
    return len(kernel_vectors(M.rows, len(M.faces)))


def is_circlet(K: TwoComplex) -> bool:
    """Even, and the only even face sets are the empty set and all faces."""
    return is_even(K) and kernel_dimension(K) == 1


def circlet_decomposition(K: TwoComplex) -> list[FaceSubset]:
    """Partition the faces of an even complex into circlets.

    A part whose kernel is one-dimensional is emitted as is.  Otherwise it
    is split along its first echelon basis vector (every basis vector is a
    proper subset once the dimension is at least two), recursing on that
    vector's support before its complement.
    """
    require_even(K)
    order = tuple(K.faces)
    out: list[FaceSubset] = []

    def split(ids: list[str]) -> None:
        part = subcomplex(K, ids)
        basis = kernel_basis(boundary_matrix(part))
        if len(basis) == 1:
            out.append(FaceSubset.from_ids(ids, order))
            return
        chosen = next(b for b in basis if 0 < len(b) < len(ids))
        support = chosen.ids
        rest = sorted(set(ids) - set(support))
        split(support)
        split(rest)

    split(list(order))
    return out


def is_partition_into_circlets(K: TwoComplex, parts: Iterable[Iterable[str]]) -> bool:
    seen: list[str] = []
    for part in parts:
        ids = list(part)
        if not ids or not is_circlet(subcomplex(K, ids)):
            return False
        seen.extend(ids)
    return sorted(seen) == sorted(K.faces)
