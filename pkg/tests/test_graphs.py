import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import brute_kappa, graph_from_mask
from lexiconn import (
    INFINITY,
    ExtendedNat,
    Graph,
    complete_graph,
    connected_components,
    cycle_graph,
    disjoint_union,
    empty_graph,
    is_complete,
    is_connected,
    isolated_vertices,
    min_degree,
    path_graph,
    star_graph,
    vertex_connectivity,
    vertex_connectivity_oracle,
    vertex_set,
)


def graphs(max_n=7, min_n=1):
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.builds(graph_from_mask, st.just(n), st.integers(0, 2 ** (n * (n - 1) // 2) - 1))
    )


class TestExtendedNat:
    def test_total_order(self):
        assert ExtendedNat(2) < ExtendedNat(3)
        assert not ExtendedNat(3) < ExtendedNat(3)
        assert ExtendedNat(3) < INFINITY
        assert not INFINITY < INFINITY
        assert INFINITY <= INFINITY
        assert ExtendedNat(5) > 4
        assert 4 < INFINITY

    def test_int_equality(self):
        assert ExtendedNat(3) == 3
        assert 3 == ExtendedNat(3)
        assert ExtendedNat(3) != 4
        assert INFINITY != 3

    def test_bools_are_not_numbers(self):
        assert ExtendedNat(1) != True  # noqa: E712
        with pytest.raises(TypeError):
            ExtendedNat(True)

    def test_validation(self):
        with pytest.raises(ValueError):
            ExtendedNat(-1)
        with pytest.raises(TypeError):
            ExtendedNat(1.5)

    def test_value_access(self):
        assert ExtendedNat(7).value == 7
        assert not INFINITY.is_finite
        with pytest.raises(ValueError):
            INFINITY.value

    def test_json_round_trip(self):
        assert ExtendedNat(4).to_json() == 4
        assert INFINITY.to_json() == "infinity"
        assert ExtendedNat.from_json(4) == ExtendedNat(4)
        assert ExtendedNat.from_json("infinity") == INFINITY
        with pytest.raises(ValueError):
            ExtendedNat.from_json("nope")

    def test_str(self):
        assert str(ExtendedNat(4)) == "4"
        assert str(INFINITY) == "infinity"


class TestGraph:
    def test_rejects_bad_edges(self):
        with pytest.raises(ValueError):
            Graph(3, [(0, 3)])
        with pytest.raises(ValueError):
            Graph(3, [(1, 1)])
        with pytest.raises(ValueError):
            Graph(-1)

    def test_duplicate_edges_collapse(self):
        g = Graph(3, [(0, 1), (1, 0), (0, 1)])
        assert g.num_edges == 1

    @given(graphs())
    def test_adjacency_invariants(self, g):
        for v in range(g.n):
            assert v not in g.adj[v]
            for w in g.adj[v]:
                assert 0 <= w < g.n
                assert v in g.adj[w]

    def test_equality_and_hash(self):
        assert path_graph(3) == Graph(3, [(1, 2), (0, 1)])
        assert hash(path_graph(3)) == hash(Graph(3, [(1, 2), (0, 1)]))
        assert path_graph(3) != cycle_graph(3)

    def test_edges_sorted(self):
        assert cycle_graph(3).edges() == [(0, 1), (0, 2), (1, 2)]


def test_vertex_set_normalizes():
    assert vertex_set([3, 1, 1, 2]) == (1, 2, 3)
    assert vertex_set([], n=5) == ()
    with pytest.raises(ValueError):
        vertex_set([5], n=5)
    with pytest.raises(TypeError):
        vertex_set([True])


def test_isolated_vertices_examples():
    assert isolated_vertices(disjoint_union(complete_graph(2), empty_graph(1))) == (2,)
    assert isolated_vertices(cycle_graph(4)) == ()
    assert isolated_vertices(empty_graph(3)) == (0, 1, 2)


def test_min_degree_examples():
    assert min_degree(cycle_graph(4)) == 2
    assert min_degree(star_graph(3)) == 1
    assert min_degree(complete_graph(4)) == 3
    with pytest.raises(ValueError):
        min_degree(empty_graph(0))


def test_components_and_classification():
    p3 = path_graph(3)
    assert is_connected(p3) and not is_complete(p3)
    k4 = complete_graph(4)
    assert is_connected(k4) and is_complete(k4)
    assert connected_components(disjoint_union(complete_graph(2), empty_graph(1))) == [(0, 1), (2,)]
    with pytest.raises(ValueError):
        connected_components(empty_graph(0))
    with pytest.raises(ValueError):
        is_complete(empty_graph(0))


@given(graphs())
def test_isolated_iff_min_degree_zero(g):
    assert (isolated_vertices(g) == ()) == (min_degree(g) >= 1)


class TestVertexConnectivity:
    def test_disconnected_is_zero(self):
        assert vertex_connectivity(disjoint_union(complete_graph(2), empty_graph(1))) == 0

    def test_complete_convention(self):
        assert vertex_connectivity(complete_graph(4)) == 3
        assert vertex_connectivity(complete_graph(1)) == 0

    def test_bowtie_is_one(self):
        from lexiconn import bowtie_graph

        g = bowtie_graph()
        assert vertex_connectivity(g) == 1
        assert vertex_connectivity_oracle(g) == 1

    def test_cycle(self):
        assert vertex_connectivity(cycle_graph(4)) == 2
        assert vertex_connectivity_oracle(cycle_graph(4)) == 2

    def test_empty_graph_rejected(self):
        with pytest.raises(ValueError):
            vertex_connectivity(empty_graph(0))

    @given(graphs())
    def test_at_most_min_degree(self, g):
        assert vertex_connectivity(g) <= min_degree(g)

    @given(graphs())
    def test_zero_iff_disconnected_or_trivial(self, g):
        assert (vertex_connectivity(g) == 0) == (g.n == 1 or not is_connected(g))

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=7))
    def test_matches_enumeration_oracle(self, g):
        assert vertex_connectivity(g) == vertex_connectivity_oracle(g)

    @settings(max_examples=40, deadline=None)
    @given(graphs(max_n=6))
    def test_matches_independent_brute_force(self, g):
        assert vertex_connectivity(g) == brute_kappa(g)
