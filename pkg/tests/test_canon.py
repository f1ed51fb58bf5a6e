import itertools
import random

import networkx as nx

from sombor.canon import canonical_code, canonical_form, canonical_labeling, is_isomorphic
from sombor.enumeration import enumerate_trees, enumerate_unicyclic
from sombor.extremal import construct_T_D
from sombor.graph import Graph, path_graph, star_graph


def _shuffle(g: Graph, rng: random.Random) -> Graph:
    perm = list(range(g.n))
    rng.shuffle(perm)
    return g.relabel(perm)


def test_path_vs_star():
    assert canonical_code(path_graph(4)) == canonical_code(path_graph(4).relabel([2, 0, 3, 1]))
    assert canonical_code(path_graph(4)) != canonical_code(star_graph(4))


def test_all_relabelings_of_t73():
    t = construct_T_D(7, 3)
    codes = {canonical_code(t.relabel(p)) for p in itertools.permutations(range(7))}
    assert len(codes) == 1


def test_random_relabelings_stable():
    rng = random.Random(3)
    graphs = [g for n in (6, 8, 10) for g in list(enumerate_trees(n))[:10]]
    graphs += [g for n in (6, 9) for g in list(enumerate_unicyclic(n))[:10]]
    graphs.append(nx_to_graph(nx.petersen_graph()))
    for g in graphs:
        code = canonical_code(g)
        for _ in range(1000 if g.n <= 10 else 50):
            assert canonical_code(_shuffle(g, rng)) == code


def nx_to_graph(h: nx.Graph) -> Graph:
    h = nx.convert_node_labels_to_integers(h)
    return Graph(h.number_of_nodes(), h.edges())


def test_canonical_form_is_relabeling():
    rng = random.Random(5)
    g = _shuffle(construct_T_D(11, 4), rng)
    perm = canonical_labeling(g)
    assert sorted(perm) == list(range(g.n))
    assert canonical_form(g) == g.relabel(perm)


def test_agrees_with_networkx_on_random_pairs():
    rng = random.Random(9)
    for _ in range(300):
        n = rng.randint(1, 9)
        p = rng.choice([0.2, 0.4, 0.6])
        a = Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p])
        b = _shuffle(a, rng) if rng.random() < 0.5 else Graph(
            n, [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
        )
        ha, hb = nx.Graph(), nx.Graph()
        ha.add_nodes_from(range(n))
        hb.add_nodes_from(range(n))
        ha.add_edges_from(a.edges)
        hb.add_edges_from(b.edges)
        assert is_isomorphic(a, b) == nx.is_isomorphic(ha, hb)


def test_regular_graphs():
    rng = random.Random(1)
    for h in (nx.petersen_graph(), nx.hypercube_graph(4), nx.complete_graph(12),
              nx.circulant_graph(13, [1, 5])):
        g = nx_to_graph(h)
        assert canonical_code(_shuffle(g, rng)) == canonical_code(g)
    c = nx_to_graph(nx.circulant_graph(12, [1, 3]))
    d = nx_to_graph(nx.circulant_graph(12, [1, 5]))
    assert is_isomorphic(c, d) == nx.is_isomorphic(nx.circulant_graph(12, [1, 3]),
                                                   nx.circulant_graph(12, [1, 5]))


def test_large_star_is_fast():
    assert canonical_code(star_graph(64)) == canonical_code(star_graph(64).relabel(
        list(range(63, -1, -1))))
