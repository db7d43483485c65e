import random

import pytest
from hypothesis import given, strategies as st

from treeforge.graph_core import (
    GraphError,
    Multigraph,
    add_path,
    are_isomorphic,
    biconnected_components,
    bridges,
    canonical_form,
    complete_graph,
    contract_edge,
    cycle_graph,
    delete_edge,
    is_simple,
    is_two_edge_connected,
    path_graph,
)

from oracles import brute_isomorphic, brute_tau, random_connected_multigraph


def doubled_edge():
    return Multigraph.from_edges(2, [(0, 1, 2)])


class TestConstruction:
    def test_from_edges_accumulates(self):
        g = Multigraph.from_edges(3, [(0, 1), (1, 0), (1, 2)])
        assert g.multiplicity(0, 1) == 2
        assert g.edge_count == 3

    def test_rejects_loops(self):
        with pytest.raises(GraphError):
            Multigraph.from_edges(2, [(1, 1)])

    def test_rejects_out_of_range(self):
        with pytest.raises(GraphError):
            Multigraph.from_edges(2, [(0, 2)])


class TestDeleteEdge:
    def test_triangle_becomes_path(self):
        g = delete_edge(cycle_graph(3), 0, 1)
        assert g.vertex_count == 3 and g.edge_count == 2
        assert are_isomorphic(g, path_graph(3))

    def test_doubled_edge_decrements(self):
        g = delete_edge(doubled_edge(), 0, 1)
        assert g.edges == ((0, 1, 1),)

    def test_c4_tau_drops_to_one(self):
        g = delete_edge(cycle_graph(4), 0, 1)
        assert brute_tau(cycle_graph(4)) == 4
        assert brute_tau(g) == 1

    def test_absent_edge(self):
        with pytest.raises(GraphError, match="not present"):
            delete_edge(cycle_graph(4), 0, 2)


class TestContractEdge:
    def test_triangle_gives_doubled_edge(self):
        g = contract_edge(cycle_graph(3), 0, 1)
        assert g.vertex_count == 2
        assert g.edges == ((0, 1, 2),)

    def test_c4_gives_triangle(self):
        assert are_isomorphic(contract_edge(cycle_graph(4), 0, 1), cycle_graph(3))

    def test_doubled_edge_drops_loop(self):
        g = contract_edge(doubled_edge(), 0, 1)
        assert g.vertex_count == 1 and g.edges == ()

    def test_merged_vertex_takes_min_slot(self):
        # path 0-1-2: contracting (1,2) keeps 0-1
        g = contract_edge(path_graph(3), 1, 2)
        assert g.edges == ((0, 1, 1),)

    def test_absent_edge(self):
        with pytest.raises(GraphError, match="not present"):
            contract_edge(path_graph(3), 0, 2)


class TestAddPath:
    def test_parallel_edge(self):
        g = add_path(cycle_graph(3), 0, 1, 1)
        assert g.multiplicity(0, 1) == 2
        assert brute_tau(g) == 5  # tau(C3) + tau(2-cycle after contraction)

    def test_theta_122(self):
        g = add_path(cycle_graph(3), 0, 1, 2)
        assert g.vertex_count == 4 and g.edge_count == 5
        assert brute_tau(g) == 8

    def test_closed_path_makes_cycle(self):
        g = add_path(Multigraph(1, ()), 0, 0, 3)
        assert are_isomorphic(g, cycle_graph(3))

    def test_loop_forbidden(self):
        with pytest.raises(GraphError, match="loop"):
            add_path(cycle_graph(3), 1, 1, 1)

    def test_counts(self):
        g = cycle_graph(5)
        h = add_path(g, 0, 2, 4)
        assert h.vertex_count == g.vertex_count + 3
        assert h.edge_count == g.edge_count + 4


class TestCanonicalForm:
    def test_relabelled_c4_equal(self):
        a = cycle_graph(4)
        b = Multigraph.from_edges(4, [(0, 2), (2, 1), (1, 3), (3, 0)])
        assert canonical_form(a) == canonical_form(b)

    def test_c4_vs_p4_distinct(self):
        assert canonical_form(cycle_graph(4)) != canonical_form(path_graph(4))

    def test_theta_122_is_k4_minus_edge(self):
        theta = add_path(cycle_graph(3), 0, 1, 2)
        k4e = delete_edge(complete_graph(4), 2, 3)
        assert canonical_form(theta) == canonical_form(k4e)

    def test_random_relabeling_invariance(self, rng):
        for _ in range(300):
            g = random_connected_multigraph(rng, max_vertices=7)
            perm = list(range(g.vertex_count))
            rng.shuffle(perm)
            assert canonical_form(g) == canonical_form(g.relabeled(perm))

    def test_matches_brute_isomorphism(self, rng):
        # equal keys iff isomorphic, exercised on pairs of small graphs
        pool = [random_connected_multigraph(rng, max_vertices=5) for _ in range(60)]
        for i in range(0, len(pool) - 1, 2):
            g, h = pool[i], pool[i + 1]
            assert (canonical_form(g) == canonical_form(h)) == brute_isomorphic(g, h)

    def test_complete_graph_symmetry(self):
        # worst case for the individualization search
        g = complete_graph(7)
        perm = [3, 5, 0, 6, 1, 2, 4]
        assert canonical_form(g) == canonical_form(g.relabeled(perm))

    def test_colors_distinguish(self):
        g = cycle_graph(4)
        assert canonical_form(g, [0, 0, 1, 1]) != canonical_form(g, [0, 1, 0, 1])


class TestTwoEdgeConnectivity:
    def test_cycle(self):
        assert is_two_edge_connected(cycle_graph(5))

    def test_bridge(self):
        two_triangles = Multigraph.from_edges(
            6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3), (0, 3)]
        )
        assert not is_two_edge_connected(two_triangles)
        assert bridges(two_triangles) == [(0, 3)]

    def test_cut_vertex_without_bridge(self):
        bowtie = Multigraph.from_edges(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
        assert is_two_edge_connected(bowtie)

    def test_parallel_pair_is_not_a_bridge(self):
        assert is_two_edge_connected(doubled_edge())

    def test_disconnected_errors(self):
        with pytest.raises(GraphError, match="not connected"):
            is_two_edge_connected(Multigraph(2, ()))


class TestBlocks:
    def test_bowtie_splits(self):
        bowtie = Multigraph.from_edges(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)])
        blocks = biconnected_components(bowtie)
        assert len(blocks) == 2
        assert all(are_isomorphic(b, cycle_graph(3)) for b in blocks)

    def test_biconnected_is_single_block(self):
        blocks = biconnected_components(complete_graph(4))
        assert len(blocks) == 1 and are_isomorphic(blocks[0], complete_graph(4))


@given(st.data())
def test_operation_count_invariants(data):
    rng = random.Random(data.draw(st.integers(0, 2**32 - 1)))
    g = random_connected_multigraph(rng, max_vertices=6)
    u, v, _ = g.edges[rng.randrange(len(g.edges))]
    assert delete_edge(g, u, v).vertex_count == g.vertex_count
    contracted = contract_edge(g, u, v)
    assert contracted.vertex_count == g.vertex_count - 1
    # all copies of the contracted pair vanish
    assert contracted.edge_count == g.edge_count - g.multiplicity(u, v)


@given(
    st.integers(0, 2**32 - 1),
    st.integers(1, 4),
)
def test_add_path_count_invariants(seed, k):
    rng = random.Random(seed)
    g = random_connected_multigraph(rng, max_vertices=6)
    u = rng.randrange(g.vertex_count)
    v = rng.randrange(g.vertex_count)
    if k == 1 and u == v:
        return
    h = add_path(g, u, v, k)
    assert h.vertex_count == g.vertex_count + k - 1
    assert h.edge_count == g.edge_count + k


def test_simplicity_certificate():
    from treeforge.graph_core import certify_simple

    assert certify_simple(cycle_graph(3)).is_simple
    assert not certify_simple(doubled_edge()).is_simple
    assert is_simple(complete_graph(4))
