from math import factorial

import pytest

from sombor.canon import canonical_code
from sombor.enumeration import enumerate_trees, enumerate_unicyclic
from sombor.graph import GraphClass, classify, cycle_graph, path_graph, star_graph
from sombor.oracles import (
    automorphism_count,
    edge_set_unicyclic_codes,
    free_tree_count,
    labeled_tree_count,
    labeled_unicyclic_count,
    leaf_growth_tree_codes,
    orbit_sum,
    prufer_decode,
    prufer_sequences,
    prufer_tree_codes,
    prufer_tree_codes_fast,
    tree_plus_edge_unicyclic_codes,
)


def test_prufer_decode_known():
    assert prufer_decode((), 2).edges == ((0, 1),)
    assert prufer_decode((3, 3, 3), 5).edges == ((0, 3), (1, 3), (2, 3), (3, 4))


def test_unreduced_prufer_is_cayley():
    seqs = list(prufer_sequences(6, degree_ordered=False))
    assert len(seqs) == labeled_tree_count(6) == 6 ** 4
    assert len({prufer_decode(s, 6) for s in seqs}) == 6 ** 4


def test_reduced_prufer_matches_unreduced():
    for n in range(2, 8):
        assert prufer_tree_codes(n) == prufer_tree_codes(n, degree_ordered=False)


def test_fast_prufer_matches_graph_decoding():
    for n in range(1, 10):
        assert prufer_tree_codes_fast(n) == prufer_tree_codes(n)


def test_fast_prufer_against_enumerator():
    assert prufer_tree_codes_fast(10) == {canonical_code(t) for t in enumerate_trees(10)}


def test_leaf_growth_matches_prufer():
    for n in range(1, 10):
        assert leaf_growth_tree_codes(n) == prufer_tree_codes(n)


def test_free_tree_formula():
    assert [free_tree_count(n) for n in range(1, 17)] == [
        1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159, 7741, 19320
    ]


def test_labeled_unicyclic_counts():
    assert [labeled_unicyclic_count(n) for n in range(3, 9)] == [1, 15, 222, 3660, 68295, 1436568]


def test_automorphism_counts():
    assert automorphism_count(star_graph(6)) == factorial(5)
    assert automorphism_count(path_graph(5)) == 2
    assert automorphism_count(path_graph(1)) == 1
    assert automorphism_count(cycle_graph(7)) == 14


@pytest.mark.parametrize("n", range(1, 13))
def test_tree_orbit_identity(n):
    assert orbit_sum(enumerate_trees(n)) == labeled_tree_count(n)


@pytest.mark.parametrize("n", range(3, 13))
def test_unicyclic_orbit_identity(n):
    assert orbit_sum(enumerate_unicyclic(n)) == labeled_unicyclic_count(n)


def test_edge_set_oracle_small():
    assert len(edge_set_unicyclic_codes(5)) == 5
    codes = edge_set_unicyclic_codes(7)
    assert codes == {canonical_code(g) for g in enumerate_unicyclic(7)}


def test_tree_plus_edge_oracle():
    for n in range(4, 10):
        codes = tree_plus_edge_unicyclic_codes(enumerate_trees(n))
        assert codes == {canonical_code(g) for g in enumerate_unicyclic(n)}
