"""Merging disconnected covers into one Euler cover by partner swaps."""

from __future__ import annotations

from collections.abc import Callable, Iterable, Mapping, Sequence
from typing import NamedTuple

from .complex import NotStronglyConnectedError, TwoComplex, is_strongly_connected, require_even
from .cover import (CoverMap, GluingAssignment, Pair, SpliceStep, build_cover,
                    canonical_assignment, components, euler_characteristic,
                    normalize_matching, verify_cover)
from .gf2 import circlet_decomposition


class SingleComponentError(ValueError):
    """The cover is already connected; there is nothing to splice."""


class SpliceSite(NamedTuple):
    edge: str
    pair1: Pair
    pair2: Pair


def find_splice_edge(K: TwoComplex, A: Mapping[str, Sequence[Pair]],
                     comps: Iterable[Iterable[str]]) -> SpliceSite:
    """Smallest edge carrying two matched pairs from different components."""
    comp_of = {f: k for k, comp in enumerate(comps) for f in comp}
    if len(set(comp_of.values())) < 2:
        raise SingleComponentError("cover has a single component")
    for e in sorted(A):
        pairs = sorted(tuple(sorted(p)) for p in A[e])
        for i, p1 in enumerate(pairs):
            for p2 in pairs[i + 1:]:
                if comp_of[p1[0]] != comp_of[p2[0]]:
                    return SpliceSite(e, p1, p2)
    # strong connectivity guarantees a shared edge between components
    raise AssertionError("no edge is shared by two components; complex is not strongly connected")


def splice(A: Mapping[str, Sequence[Pair]], e: str, p1: Pair, p2: Pair) -> GluingAssignment:
    """Swap partners at ``e``: {f1,g1}, {f2,g2} become {f1,f2}, {g1,g2}."""
    if e not in A:
        raise KeyError(f"unknown edge {e!r}")
    current = normalize_matching(A[e])
    n1, n2 = tuple(sorted(p1)), tuple(sorted(p2))
    for p in (n1, n2):
        if p not in current:
            raise ValueError(f"pair {p} is not matched at edge {e}")
    if n1 == n2:
        raise ValueError("splice needs two distinct pairs")
    (f1, g1), (f2, g2) = p1, p2
    rest = [p for p in current if p not in (n1, n2)]
    out = {k: normalize_matching(v) for k, v in A.items()}
    out[e] = normalize_matching(rest + [(f1, f2), (g1, g2)])
    return out


def euler_cover(K: TwoComplex, trace: Callable[[SpliceStep], None] | None = None) -> CoverMap:
    """A connected Euler cover of a strongly connected even complex.

    Covers the circlets of a decomposition separately, then joins the pieces
    one splice at a time until a single surface remains.
    """
    require_even(K)
    if not is_strongly_connected(K):
        raise NotStronglyConnectedError("complex is not strongly connected")
    parts = [p.ids for p in circlet_decomposition(K)]
    A = canonical_assignment(K, parts)
    cover = build_cover(K, A)
    comps = components(cover.surface)
    steps: list[SpliceStep] = []
    while len(comps) > 1:
        site = find_splice_edge(K, A, comps)
        A = splice(A, *site)
        cover = build_cover(K, A)
        comps = components(cover.surface)
        step = SpliceStep(site.edge, site.pair1, site.pair2, len(comps),
                          euler_characteristic(cover.surface))
        steps.append(step)
        if trace is not None:
            trace(step)
    result = CoverMap(cover.base, cover.surface, cover.face_map, cover.edge_map,
                      cover.vertex_map, tuple(steps))
    report = verify_cover(result)
    if not report.ok:
        raise AssertionError(f"constructed cover failed verification: {report.violation}")
    return result
