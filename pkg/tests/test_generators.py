from math import comb

import pytest

from circlet import generators as gen
from circlet.complex import degrees, is_even, is_strongly_connected, subcomplex
from circlet.cover import assignment_count, build_cover, canonical_assignment, classify
from circlet.gf2 import circlet_decomposition, is_circlet, kernel_dimension


@pytest.mark.parametrize("n", [2, 3, 4, 5, 6, 7])
def test_simplex_counts(n):
    K = gen.simplex_skeleton(n)
    assert K.counts == (n + 1, comb(n + 1, 2), comb(n + 1, 3))
    assert set(degrees(K).edge_degrees.values()) == {n - 1}
    assert is_even(K) == (n % 2 == 1)


def test_simplex3_is_tetrahedron_sphere():
    K = gen.simplex_skeleton(3)
    assert is_circlet(K)
    assert classify(build_cover(K, canonical_assignment(K)).surface).name == "sphere"


@pytest.mark.parametrize("n", [3, 5, 7, 9])
def test_sphere_decomposition(n):
    K = gen.simplex_skeleton(n)
    m = (n + 1) // 2
    parts = gen.simplex_sphere_decomposition(n)
    sizes = [len(p) for p in parts]
    assert sizes == [8] * comb(m, 3) + [4] * comb(m, 2)
    assert sorted(f for p in parts for f in p.ids) == sorted(K.faces)
    for p in parts:
        part = subcomplex(K, p.ids)
        assert is_circlet(part)
        M = build_cover(part, canonical_assignment(part)).surface
        assert classify(M).name == "sphere"


def test_sphere_decomposition_rejects_even_n():
    with pytest.raises(ValueError):
        gen.simplex_sphere_decomposition(4)


def test_hypercube():
    assert gen.hypercube_skeleton(3).counts == (8, 12, 6)
    K5 = gen.hypercube_skeleton(5)
    assert K5.counts == (2 ** 5, 5 * 2 ** 4, comb(5, 2) * 2 ** 3)
    assert set(degrees(K5).edge_degrees.values()) == {4}
    assert not is_even(gen.hypercube_skeleton(4))
    assert is_circlet(gen.cube())
    with pytest.raises(ValueError):
        gen.hypercube_skeleton(1)


def test_cross_polytope():
    assert gen.cross_polytope_skeleton(3).counts == (6, 12, 8)
    K4 = gen.cross_polytope_skeleton(4)
    assert K4.counts == (8, 24, 32)
    assert set(degrees(K4).edge_degrees.values()) == {4}
    assert set(degrees(gen.cross_polytope_skeleton(5)).edge_degrees.values()) == {6}
    with pytest.raises(ValueError):
        gen.cross_polytope_skeleton(2)


def test_pinched_sphere():
    K = gen.pinched_sphere()
    assert K.counts == (5, 12, 8)
    assert set(degrees(K).edge_degrees.values()) == {2}
    assert is_circlet(K)


def test_two_tetra():
    K = gen.two_tetra_shared_edge()
    assert K.counts == (6, 11, 8)
    assert degrees(K).profile() == {2: 10, 4: 1}
    assert is_even(K) and is_strongly_connected(K)
    assert not is_circlet(K) and kernel_dimension(K) == 2
    assert sorted(len(p) for p in circlet_decomposition(K)) == [4, 4]


def test_figure2():
    K = gen.figure2_complex()
    assert K.counts == (36, 76, 40)
    assert degrees(K).profile() == {2: 72, 4: 4}
    hub = {e for e, d in degrees(K).edge_degrees.items() if d == 4}
    assert hub == {"a", "b", "c", "d"}
    assert sorted(K.edges[e] for e in hub) == [("1", "2"), ("2", "3"), ("3", "4"), ("4", "1")]
    assert all(len(w) == 4 for w in K.faces.values())
    assert is_circlet(K)
    assert assignment_count(K) == 81


def test_platonic():
    expected = {"tetrahedron": (4, 6, 4), "cube": (8, 12, 6), "octahedron": (6, 12, 8)}
    for name, K in gen.platonic_circlets().items():
        assert K.counts == expected[name]
        assert is_circlet(K)
        assert classify(build_cover(K, canonical_assignment(K)).surface).name == "sphere"
