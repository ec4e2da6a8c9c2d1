import itertools
import random

import networkx as nx
import pytest

from invcayley.cayley import Graph, build_cayley_graph, build_zn_graph
from invcayley.config import Caps
from invcayley.errors import CapExceeded
from invcayley.invariants import planarity_test
from invcayley.planarity import lr_is_planar
from invcayley.polyring import PolyRing


def adj_from_edges(nv, edges):
    out = [[] for _ in range(nv)]
    for u, v in edges:
        out[u].append(v)
        out[v].append(u)
    return out


def complete(k):
    return adj_from_edges(k, list(itertools.combinations(range(k), 2)))


def complete_bipartite(a, b):
    return adj_from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def test_small_complete_graphs():
    assert lr_is_planar(complete(4))
    assert not lr_is_planar(complete(5))
    assert not lr_is_planar(complete(6))


def test_bipartite_obstructions():
    assert lr_is_planar(complete_bipartite(2, 3))
    assert not lr_is_planar(complete_bipartite(3, 3))
    assert not lr_is_planar(complete_bipartite(3, 4))


def hypercube_adj(dim):
    g = nx.hypercube_graph(dim)
    relabel = {v: i for i, v in enumerate(g.nodes())}
    return adj_from_edges(2**dim, [(relabel[u], relabel[v]) for u, v in g.edges()])


def test_named_graphs():
    petersen = nx.petersen_graph()
    assert not lr_is_planar(adj_from_edges(10, petersen.edges()))
    assert lr_is_planar(hypercube_adj(3))
    assert not lr_is_planar(hypercube_adj(4))


def test_disconnected_and_trees():
    assert lr_is_planar(adj_from_edges(6, [(0, 1), (2, 3), (4, 5)]))
    assert lr_is_planar(adj_from_edges(7, [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]))
    assert lr_is_planar([[] for _ in range(5)])


def test_k5_minus_edge_planar():
    edges = [e for e in itertools.combinations(range(5), 2) if e != (0, 1)]
    assert lr_is_planar(adj_from_edges(5, edges))


@pytest.mark.parametrize("seed", range(30))
def test_random_graphs_against_networkx(seed):
    rng = random.Random(seed)
    nv = rng.randint(5, 24)
    p = rng.uniform(0.1, 0.5)
    edges = [
        (u, v) for u, v in itertools.combinations(range(nv), 2) if rng.random() < p
    ]
    g = nx.Graph()
    g.add_nodes_from(range(nv))
    g.add_edges_from(edges)
    expected, _ = nx.check_planarity(g)
    assert lr_is_planar(adj_from_edges(nv, edges)) == expected


def test_cayley_windows():
    assert planarity_test(build_cayley_graph(PolyRing(7, 2))).planar
    assert planarity_test(build_cayley_graph(PolyRing(2, 4))).planar
    assert not planarity_test(build_zn_graph(12)).planar
    res = planarity_test(build_cayley_graph(PolyRing(4, 1)))
    assert not res.planar


def test_prefilters_run_before_cap():
    """Cheap certificates must not be blocked by the left-right edge cap."""
    caps = Caps(planarity_edges=5)
    ring = PolyRing(9, 1)  # 81 vertices, 81 edges, all degrees 2
    res = planarity_test(build_cayley_graph(ring), caps=caps)
    assert res.planar and res.method == "max-degree<=2"
    dense = build_zn_graph(12)  # 24 edges > bipartite Euler bound 20
    res = planarity_test(dense, caps=caps)
    assert not res.planar and res.method == "bipartite-edge-bound"


def test_cap_only_gates_the_search():
    # K5 minus an edge: 9 edges, exactly the Euler bound, so no prefilter decides
    edges = [e for e in itertools.combinations(range(5), 2) if e != (0, 1)]
    g = Graph.from_edges(5, edges)
    with pytest.raises(CapExceeded):
        planarity_test(g, caps=Caps(planarity_edges=5))
    assert planarity_test(g).planar


def test_ladder_hits_lr_path():
    """A long ladder: planar, degree 3, below Euler bounds, so LR must decide."""
    rails = 40
    edges = []
    for i in range(rails - 1):
        edges.append((i, i + 1))
        edges.append((rails + i, rails + i + 1))
    for i in range(rails):
        edges.append((i, rails + i))
    g = Graph.from_edges(2 * rails, edges)
    res = planarity_test(g)
    assert res.planar and res.method == "left-right"
