import pytest
from hypothesis import given, settings

from oracles import covers, dominates, subsets, tau
from strategies import graphs

from optdsr.graph import (
    Graph,
    InvalidVertexError,
    closed_neighborhood,
    closed_neighborhood_set,
    complement,
    degeneracy,
    is_dominating,
    is_minimal,
    is_vertex_cover,
    min_vertex_cover,
    private_neighbors,
)

P3 = Graph.from_edges(3, [(0, 1), (1, 2)])
C4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
K2 = Graph.from_edges(2, [(0, 1)])
STAR3 = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])


def complete(n):
    return Graph.from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def test_graph_normalises_edges():
    g = Graph.from_edges(3, [(1, 0), (0, 1), (2, 1)])
    assert g.edges == {(0, 1), (1, 2)}
    assert g.adj[1] == {0, 2}


@pytest.mark.parametrize("edges", [[(0, 0)], [(0, 3)], [(-1, 1)]])
def test_graph_rejects_bad_edges(edges):
    with pytest.raises(ValueError):
        Graph.from_edges(3, edges)


def test_closed_neighborhood_examples():
    assert closed_neighborhood(P3, 1) == {0, 1, 2}
    assert closed_neighborhood(Graph(1), 0) == {0}
    assert all(closed_neighborhood(complete(4), v) == {0, 1, 2, 3} for v in range(4))
    with pytest.raises(InvalidVertexError):
        closed_neighborhood(P3, 3)


def test_closed_neighborhood_set_examples():
    assert closed_neighborhood_set(C4, set()) == frozenset()
    assert closed_neighborhood_set(STAR3, {0}) == STAR3.vertices
    assert closed_neighborhood_set(C4, {0}) == {3, 0, 1}


def test_is_dominating_examples():
    assert is_dominating(P3, {1})
    assert not is_dominating(C4, {0})
    assert is_dominating(C4, C4.vertices)


def test_private_neighbors_examples():
    assert private_neighbors(P3, {1}, 1) == {0, 1, 2}
    assert private_neighbors(K2, {0, 1}, 0) == frozenset()
    # star c;l1,l2 with D={c,l1}: l1 is dominated by c and itself, c by both
    star2 = Graph.from_edges(3, [(0, 1), (0, 2)])
    assert private_neighbors(star2, {0, 1}, 1) == frozenset()
    with pytest.raises(ValueError):
        private_neighbors(P3, {1}, 0)


def test_is_minimal_examples():
    assert is_minimal(P3, {1})
    assert not is_minimal(K2, {0, 1})
    assert is_minimal(C4, {0, 1})
    with pytest.raises(ValueError):
        is_minimal(C4, {0})


@pytest.mark.parametrize("g,d", [(path(2), 1), (path(6), 1), (cycle(5), 2), (complete(5), 4), (Graph(3), 0)])
def test_degeneracy_examples(g, d):
    got, order = degeneracy(g)
    assert got == d
    assert sorted(order) == list(range(g.n))


def test_min_vertex_cover_examples():
    assert min_vertex_cover(STAR3) == {0}
    assert len(min_vertex_cover(C4)) == 2
    assert len(min_vertex_cover(path(5))) == 2


def test_is_vertex_cover_examples():
    assert is_vertex_cover(Graph(3), set())
    assert not is_vertex_cover(K2, set())
    assert is_vertex_cover(C4, {0, 2})


@settings(max_examples=200, deadline=None)
@given(graphs(max_n=7))
def test_dominating_iff_neighbourhood_is_everything(g):
    for s in subsets(g.n):
        assert is_dominating(g, s) == (closed_neighborhood_set(g, s) == g.vertices)
        assert is_dominating(g, s) == dominates(g, s)


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=7))
def test_no_private_neighbour_means_removable(g):
    for d in subsets(g.n):
        if not dominates(g, d):
            continue
        for v in d:
            if not private_neighbors(g, d, v):
                assert is_dominating(g, d - {v})


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=8))
def test_min_vertex_cover_is_minimum(g):
    x = min_vertex_cover(g)
    assert covers(g, x)
    assert len(x) == tau(g)


@settings(max_examples=300, deadline=None)
@given(graphs(max_n=8))
def test_degeneracy_at_most_vertex_cover_number(g):
    d, order = degeneracy(g)
    assert d <= len(min_vertex_cover(g))
    # every vertex has at most d neighbours later in the ordering
    pos = {v: i for i, v in enumerate(order)}
    assert all(sum(pos[u] > pos[v] for u in g.adj[v]) <= d for v in range(g.n))


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=7))
def test_complement_is_involution(g):
    assert complement(complement(g)) == g
