import math
import random

import pytest

from sombor.enumeration import enumerate_trees
from sombor.extremal import construct_T_D, construct_T_nD
from sombor.graph import Graph, cycle_graph, disjoint_union, path_graph, star_graph
from sombor.index import (
    FIRST_ZAGREB,
    SOMBOR,
    degree_pair_multiset,
    edge_contributions,
    edge_weight_sombor,
    exact_to_float,
    get_descriptor,
    index_value,
    sombor,
    sombor_exact,
    split_square,
)


@pytest.mark.parametrize("a, b, expected", [(1, 1, 1.4142135624), (2, 2, 2.8284271247), (3, 2, 3.6055512755)])
def test_edge_weight(a, b, expected):
    assert edge_weight_sombor(a, b) == pytest.approx(expected, abs=1e-10)


@pytest.mark.parametrize("a, b", [(0, 1), (2, -1)])
def test_edge_weight_rejects_nonpositive(a, b):
    with pytest.raises(ValueError):
        edge_weight_sombor(a, b)


def test_weights_symmetric_and_monotone():
    for d in (SOMBOR, FIRST_ZAGREB):
        for a in range(1, 65):
            for b in range(1, 65):
                assert d.weight(a, b) == d.weight(b, a)
                if a < 64:
                    assert d.weight(a + 1, b) > d.weight(a, b)


def test_index_examples():
    assert sombor(cycle_graph(3)) == pytest.approx(3 * math.sqrt(8), abs=1e-12)
    assert sombor(star_graph(4)) == pytest.approx(3 * math.sqrt(10), abs=1e-12)
    assert sombor(construct_T_D(7, 3)) == pytest.approx(17.524857758891336, abs=1e-12)
    assert sombor(Graph(3)) == 0.0


def test_edge_contributions():
    assert edge_contributions(path_graph(3)) == [((0, 1), math.sqrt(5)), ((1, 2), math.sqrt(5))]
    assert [w for _, w in edge_contributions(cycle_graph(4))] == [math.sqrt(8)] * 4
    t = construct_T_nD(9, 5)
    ws = sorted(round(w * w) for _, w in edge_contributions(t))
    assert ws == [5, 5, 5, 26, 26, 29, 29, 29]


def test_contributions_sum():
    for g in enumerate_trees(10):
        total = sum(w for _, w in edge_contributions(g))
        assert abs(total - index_value(g)) <= 1e-12 * g.m


def test_additivity_and_relabeling():
    rng = random.Random(2)
    trees = list(enumerate_trees(8))
    for _ in range(50):
        a, b = rng.choice(trees), rng.choice(trees)
        assert abs(sombor(disjoint_union(a, b)) - sombor(a) - sombor(b)) < 1e-12
        perm = list(range(a.n))
        rng.shuffle(perm)
        assert abs(sombor(a.relabel(perm)) - sombor(a)) < 1e-12


def test_tree_lower_bound():
    assert sombor(path_graph(2)) == math.sqrt(2)
    for n in range(3, 11):
        for t in enumerate_trees(n):
            assert sombor(t) > (n - 1) * math.sqrt(2)


def test_first_zagreb_cross_check():
    for t in enumerate_trees(9):
        assert index_value(t, FIRST_ZAGREB) == sum(d * d for d in t.degrees)


def test_descriptor_lookup():
    assert get_descriptor("sombor") is SOMBOR
    with pytest.raises(ValueError):
        get_descriptor("nope")


def test_split_square():
    assert split_square(8) == (2, 2)
    assert split_square(50) == (5, 2)
    assert split_square(13) == (1, 13)
    assert split_square(36) == (6, 1)


def test_exact_form():
    t = construct_T_D(7, 3)
    assert sombor_exact(t) == ((5, 3), (13, 3))
    assert exact_to_float(sombor_exact(t)) == pytest.approx(sombor(t), abs=1e-12)
    assert degree_pair_multiset(t) == {(2, 3): 3, (1, 2): 3}


def test_exact_equality_matches_multiset_values():
    groups: dict = {}
    for t in enumerate_trees(11):
        groups.setdefault(sombor_exact(t), []).append(sombor(t))
    for vals in groups.values():
        assert max(vals) - min(vals) < 1e-9
    reps = sorted(v[0] for v in groups.values())
    assert min(b - a for a, b in zip(reps, reps[1:])) > 1e-7
