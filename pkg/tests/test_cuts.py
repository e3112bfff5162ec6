import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import brute_is_cut, brute_is_super, brute_k1, brute_kappa, graph_from_mask
from lexiconn import (
    INFINITY,
    CutCertificate,
    ExtendedNat,
    bowtie_graph,
    complete_graph,
    cut_certificate,
    cycle_graph,
    disjoint_union,
    empty_graph,
    enumerate_min_vertex_cuts,
    find_non_isolating_min_cut,
    is_connected,
    is_k1_vertex_cut,
    is_super_connected,
    is_vertex_cut,
    k1_connectivity,
    least_isolating_cut,
    minimum_k1_cut,
    path_graph,
    scan_cuts,
    select_optimal_min_cut,
    star_graph,
    vertex_connectivity,
    vertex_connectivity_oracle,
)


def graphs(max_n=7, min_n=1):
    return st.integers(min_n, max_n).flatmap(
        lambda n: st.builds(graph_from_mask, st.just(n), st.integers(0, 2 ** (n * (n - 1) // 2) - 1))
    )


def connected_graphs(max_n=7, min_n=2):
    return graphs(max_n=max_n, min_n=min_n).filter(is_connected)


class TestIsVertexCut:
    def test_opposite_cycle_vertices(self):
        assert is_vertex_cut(cycle_graph(4), (0, 2))

    def test_reduction_to_single_vertex_counts(self):
        assert is_vertex_cut(complete_graph(4), (0, 1, 2))

    def test_path_endpoint_is_no_cut(self):
        assert not is_vertex_cut(path_graph(3), (0,))

    def test_removing_everything_is_no_cut(self):
        assert not is_vertex_cut(path_graph(3), (0, 1, 2))

    def test_empty_cut_on_trivial_graph(self):
        assert is_vertex_cut(complete_graph(1), ())

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            is_vertex_cut(path_graph(3), (3,))


class TestIsK1VertexCut:
    def test_path_middle(self):
        assert is_k1_vertex_cut(path_graph(6), (2,))

    def test_isolating_cut_rejected(self):
        assert not is_k1_vertex_cut(path_graph(4), (1,))

    def test_all_isolated_rejected(self):
        assert not is_k1_vertex_cut(cycle_graph(4), (0, 2))

    @given(connected_graphs(), st.data())
    def test_implies_vertex_cut(self, g, data):
        cut = data.draw(st.sets(st.integers(0, g.n - 1), max_size=g.n))
        if is_k1_vertex_cut(g, cut):
            assert is_vertex_cut(g, cut)


class TestVertexConnectivityOracle:
    def test_disconnected(self):
        assert vertex_connectivity_oracle(disjoint_union(complete_graph(2), empty_graph(1))) == 0

    def test_cycle5(self):
        assert vertex_connectivity_oracle(cycle_graph(5)) == 2

    def test_complete_convention(self):
        assert vertex_connectivity_oracle(complete_graph(3)) == 2

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=6))
    def test_matches_independent_brute_force(self, g):
        assert vertex_connectivity_oracle(g) == brute_kappa(g)


class TestK1Connectivity:
    @pytest.mark.parametrize("leaves", [2, 3, 4])
    def test_stars_have_none(self, leaves):
        assert k1_connectivity(star_graph(leaves)) == INFINITY

    def test_path6(self):
        assert k1_connectivity(path_graph(6)) == ExtendedNat(1)
        assert minimum_k1_cut(path_graph(6)) == (2,)

    def test_cycle6(self):
        assert k1_connectivity(cycle_graph(6)) == ExtendedNat(2)

    def test_cycle5_has_none(self):
        assert k1_connectivity(cycle_graph(5)) == INFINITY

    def test_disconnected_without_isolated_is_zero(self):
        g = disjoint_union(complete_graph(2), complete_graph(2))
        assert k1_connectivity(g) == ExtendedNat(0)
        assert minimum_k1_cut(g) == ()

    def test_disconnected_with_isolated(self):
        g = disjoint_union(complete_graph(2), empty_graph(1))
        assert k1_connectivity(g) == INFINITY

    @given(connected_graphs())
    def test_at_least_connectivity(self, g):
        assert k1_connectivity(g) >= vertex_connectivity_oracle(g)

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=7))
    def test_matches_independent_brute_force(self, g):
        expected = brute_k1(g)
        got = k1_connectivity(g)
        if expected is None:
            assert got == INFINITY
        else:
            assert got == ExtendedNat(expected)

    @settings(max_examples=40, deadline=None)
    @given(graphs(max_n=7))
    def test_infinite_iff_no_small_subset_works(self, g):
        from itertools import combinations

        exists = any(
            is_k1_vertex_cut(g, combo)
            for size in range(max(g.n - 3, 0))
            for combo in combinations(range(g.n), size)
        )
        assert k1_connectivity(g).is_finite == exists


class TestEnumerateMinCuts:
    def test_cycle4(self):
        assert [c.cut for c in enumerate_min_vertex_cuts(cycle_graph(4))] == [(0, 2), (1, 3)]

    def test_bowtie_hub(self):
        certs = enumerate_min_vertex_cuts(bowtie_graph())
        assert [c.cut for c in certs] == [(1,)]
        assert certs[0].isolated_after == ()
        assert certs[0].disconnects and not certs[0].reduces_to_trivial

    def test_path3_middle(self):
        assert [c.cut for c in enumerate_min_vertex_cuts(path_graph(3))] == [(1,)]

    def test_degenerate_inputs_rejected(self):
        with pytest.raises(ValueError):
            enumerate_min_vertex_cuts(complete_graph(3))
        with pytest.raises(ValueError):
            enumerate_min_vertex_cuts(disjoint_union(complete_graph(2), empty_graph(1)))

    @settings(max_examples=40, deadline=None)
    @given(connected_graphs(max_n=6))
    def test_certificates_check_out(self, g):
        from lexiconn import is_complete

        if is_complete(g):
            return
        kappa = vertex_connectivity_oracle(g)
        certs = enumerate_min_vertex_cuts(g)
        assert certs, "a connected non-complete graph has minimum cuts"
        for cert in certs:
            assert len(cert.cut) == kappa
            assert cert.is_minimum
            assert brute_is_cut(g, cert.cut)
            fresh = cut_certificate(g, cert.cut, kappa=kappa)
            assert fresh == cert


class TestSuperConnected:
    def test_cycle4(self):
        assert is_super_connected(cycle_graph(4))

    def test_cycle6(self):
        assert not is_super_connected(cycle_graph(6))

    def test_bowtie(self):
        assert not is_super_connected(bowtie_graph())

    def test_conventions(self):
        assert is_super_connected(complete_graph(4))
        assert is_super_connected(complete_graph(1))
        assert not is_super_connected(disjoint_union(complete_graph(2), empty_graph(1)))

    def test_refuting_cut_for_cycle6(self):
        cut = find_non_isolating_min_cut(cycle_graph(6))
        assert cut == (0, 3)

    @settings(max_examples=60, deadline=None)
    @given(graphs(max_n=6))
    def test_matches_independent_brute_force(self, g):
        assert is_super_connected(g) == brute_is_super(g)

    @settings(max_examples=40, deadline=None)
    @given(connected_graphs(max_n=6))
    def test_equivalent_to_certificate_enumeration(self, g):
        from lexiconn import is_complete

        if is_complete(g):
            return
        certs = enumerate_min_vertex_cuts(g)
        assert is_super_connected(g) == all(
            cert.isolated_after != () or cert.reduces_to_trivial for cert in certs
        )


class TestSelectOptimalMinCut:
    def test_bowtie(self):
        cert, count = select_optimal_min_cut(bowtie_graph())
        assert cert.cut == (1,) and count == 0

    def test_star(self):
        cert, count = select_optimal_min_cut(star_graph(3))
        assert cert.cut == (0,) and count == 3

    def test_cycle5_tie_break(self):
        cert, count = select_optimal_min_cut(cycle_graph(5))
        assert cert.cut == (0, 2) and count == 1

    def test_degenerate_inputs_rejected(self):
        with pytest.raises(ValueError):
            select_optimal_min_cut(complete_graph(2))

    @settings(max_examples=40, deadline=None)
    @given(connected_graphs(max_n=6))
    def test_count_is_minimum_over_enumeration(self, g):
        from lexiconn import is_complete

        if is_complete(g):
            return
        _, count = select_optimal_min_cut(g)
        assert count == min(len(c.isolated_after) for c in enumerate_min_vertex_cuts(g))


class TestLeastIsolatingCut:
    def test_star_allows_bigger_cuts(self):
        cut, count = least_isolating_cut(star_graph(3))
        assert count == 1 and cut == (0, 1, 2)

    def test_bowtie_stops_at_zero(self):
        assert least_isolating_cut(bowtie_graph()) == ((1,), 0)

    @settings(max_examples=30, deadline=None)
    @given(connected_graphs(max_n=6))
    def test_never_worse_than_minimum_cuts(self, g):
        from lexiconn import is_complete

        if is_complete(g):
            return
        _, over_min = select_optimal_min_cut(g)
        _, over_all = least_isolating_cut(g)
        assert over_all <= over_min


class TestCertificates:
    def test_json_round_trip(self):
        cert = cut_certificate(cycle_graph(4), (0, 2))
        assert CutCertificate.from_json(cert.to_json()) == cert
        assert cert.to_json() == {
            "cut": [0, 2],
            "disconnects": True,
            "reduces_to_trivial": False,
            "isolated_after": [1, 3],
            "is_minimum": True,
        }

    def test_non_cut_certificate(self):
        cert = cut_certificate(path_graph(3), (0,))
        assert not cert.disconnects and not cert.reduces_to_trivial and not cert.is_minimum

    @settings(max_examples=40, deadline=None)
    @given(graphs(max_n=6))
    def test_scan_is_coherent(self, g):
        scan = scan_cuts(g)
        assert scan.kappa == vertex_connectivity_oracle(g)
        assert scan.k1 == k1_connectivity(g)
        assert len(scan.kappa_cut) == scan.kappa
        assert is_vertex_cut(g, scan.kappa_cut)
        assert brute_is_cut(g, scan.kappa_cut)
        if scan.k1.is_finite:
            assert scan.k1_cut is not None
            assert is_k1_vertex_cut(g, scan.k1_cut)
            assert len(scan.k1_cut) == scan.k1
        else:
            assert scan.k1_cut is None

    @settings(max_examples=40, deadline=None)
    @given(graphs(max_n=7))
    def test_maxflow_agrees_with_oracle(self, g):
        assert vertex_connectivity(g) == vertex_connectivity_oracle(g)
