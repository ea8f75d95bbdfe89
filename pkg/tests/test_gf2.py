import pytest
from hypothesis import given, settings, strategies as st

from circlet import generators as gen
from circlet.complex import NotEvenError, is_even, subcomplex
from circlet.gf2 import (FaceSubset, boundary_matrix, circlet_decomposition, is_circlet,
                         is_partition_into_circlets, kernel_basis, kernel_dimension,
                         kernel_vectors)
from conftest import EVEN_INSTANCES, SMALL_EVEN
from oracles import brute_is_circlet, even_subset_masks


def test_boundary_matrix_shapes(tetra, d5, fig2):
    for K, shape, weight in ((tetra, (6, 4), 3), (d5, (15, 20), 3), (fig2, (76, 40), 4)):
        M = boundary_matrix(K)
        assert M.shape == shape
        assert {M.column_weight(j) for j in range(shape[1])} == {weight}


def test_kernel_examples(octa, two_tetra, d5):
    basis = kernel_basis(boundary_matrix(octa))
    assert len(basis) == 1 and len(basis[0]) == 8
    # dimensions frozen from exhaustive enumeration: 2**2 and 2**10 even subsets
    assert kernel_dimension(two_tetra) == 2
    assert kernel_dimension(d5) == 10


def test_d5_kernel_matches_exhaustive_count(d5):
    assert len(even_subset_masks(d5)) == 2 ** kernel_dimension(d5)


@pytest.mark.parametrize("name", sorted(SMALL_EVEN))
def test_kernel_spans_exactly_the_even_subsets(name):
    K = SMALL_EVEN[name]()
    basis = [b.bits for b in kernel_basis(boundary_matrix(K))]
    span = {0}
    for b in basis:
        span |= {x ^ b for x in span}
    assert span == set(even_subset_masks(K))
    assert is_circlet(K) == brute_is_circlet(K)


def test_basis_is_reduced_echelon(d5):
    basis = [b.bits for b in kernel_basis(boundary_matrix(d5))]
    pivots = [(b & -b).bit_length() - 1 for b in basis]
    assert pivots == sorted(pivots)
    for b, p in zip(basis, pivots):
        assert all(not (o >> p & 1) for o in basis if o != b)


def test_kernel_is_canonical_under_row_order():
    rows = [0b1100, 0b0110, 0b0011]
    assert kernel_vectors(rows, 4) == kernel_vectors(rows[::-1], 4) == [0b1111]


def test_is_circlet_examples(fig2, d5, two_tetra):
    assert is_circlet(fig2)
    assert not is_circlet(d5)
    assert not is_circlet(two_tetra)
    assert not is_circlet(gen.simplex_skeleton(4))


@pytest.mark.parametrize("name", sorted(EVEN_INSTANCES))
def test_even_iff_all_ones_in_kernel(name):
    K = EVEN_INSTANCES[name]()
    M = boundary_matrix(K)
    ones = (1 << len(M.faces)) - 1
    assert all(bin(r & ones).count("1") % 2 == 0 for r in M.rows) == is_even(K)


def test_decomposition_examples(octa, two_tetra, d5):
    assert [p.ids for p in circlet_decomposition(octa)] == [sorted(octa.faces)]
    parts = circlet_decomposition(two_tetra)
    assert sorted(len(p) for p in parts) == [4, 4]
    for p in parts:
        assert subcomplex(two_tetra, p.ids).counts == (4, 6, 4)
    parts = circlet_decomposition(d5)
    assert len(parts) >= 4
    assert is_partition_into_circlets(d5, [p.ids for p in parts])


def test_decomposition_rejects_odd(d5):
    with pytest.raises(NotEvenError):
        circlet_decomposition(gen.simplex_skeleton(4))


@pytest.mark.parametrize("name", sorted(EVEN_INSTANCES))
def test_decomposition_parts_are_connected_circlets(name):
    from circlet.complex import is_connected

    K = EVEN_INSTANCES[name]()
    parts = circlet_decomposition(K)
    assert is_partition_into_circlets(K, [p.ids for p in parts])
    for p in parts:
        part = subcomplex(K, p.ids)
        assert is_even(part) and is_connected(part)
    assert circlet_decomposition(K) == parts  # deterministic


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(sorted(EVEN_INSTANCES)), st.data())
def test_kernel_closure_and_complement(name, data):
    K = EVEN_INSTANCES[name]()
    basis = kernel_basis(boundary_matrix(K))
    picks = data.draw(st.lists(st.booleans(), min_size=len(basis), max_size=len(basis)))
    x = 0
    for b, take in zip(basis, picks):
        if take:
            x ^= b.bits
    M = boundary_matrix(K)
    assert all(bin(r & x).count("1") % 2 == 0 for r in M.rows)
    comp = FaceSubset(x, M.faces).complement().bits
    assert all(bin(r & comp).count("1") % 2 == 0 for r in M.rows)
