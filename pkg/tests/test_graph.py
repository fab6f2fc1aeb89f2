import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catroute import (
    DisconnectedGraphError,
    Graph,
    ParseError,
    ValidationError,
    bfs_distances,
    bfs_spanning_tree,
    choose_root,
    diameter,
    eccentricity,
    is_connected,
    is_path,
    is_tree,
    parse_edge_list,
    serialize_edge_list,
)
from catroute.generators import GeneratorSpec, generate

from conftest import complete_graph, cycle_graph, path_graph, star_graph


class TestGraphType:
    def test_adjacency_is_sorted_and_symmetric(self):
        g = Graph(4, [(2, 0), (0, 1), (3, 1)])
        assert g.adjacency == ((1, 2), (0, 3), (0,), (1,))
        for u in range(g.n):
            for v in g.adjacency[u]:
                assert u in g.adjacency[v]

    def test_duplicate_edges_collapse(self):
        g = Graph(2, [(0, 1), (1, 0), (0, 1)])
        assert g.num_edges == 1

    def test_self_loop_rejected(self):
        with pytest.raises(ValidationError):
            Graph(2, [(0, 0)])

    def test_out_of_range_edge_rejected(self):
        with pytest.raises(ValidationError):
            Graph(2, [(0, 5)])


class TestParseEdgeList:
    def test_smallest_path(self):
        g = parse_edge_list("0 1\n1 2")
        assert g.n == 3
        assert list(g.edges()) == [(0, 1), (1, 2)]

    def test_duplicates_and_reversals_collapse(self):
        g = parse_edge_list("0 1\n0 1\n1 0")
        assert g.n == 2
        assert g.num_edges == 1

    def test_self_loop_is_an_error(self):
        with pytest.raises(ValidationError):
            parse_edge_list("0 0")

    def test_header_declares_vertex_count(self):
        g = parse_edge_list("n 5\n0 1\n")
        assert g.n == 5
        assert g.num_edges == 1

    def test_comments_and_blank_lines_ignored(self):
        g = parse_edge_list("# a comment\n\n0 1\n# another\n1 2\n")
        assert g.n == 3

    def test_malformed_token_reports_line(self):
        with pytest.raises(ParseError) as err:
            parse_edge_list("0 1\n0 x\n")
        assert err.value.line == 2

    def test_wrong_arity_reports_line(self):
        with pytest.raises(ParseError):
            parse_edge_list("0 1 2\n")

    def test_negative_id_is_a_parse_error(self):
        with pytest.raises(ParseError):
            parse_edge_list("-1 0\n")

    def test_header_must_come_first(self):
        with pytest.raises(ParseError):
            parse_edge_list("0 1\nn 4\n")

    def test_id_beyond_declared_count(self):
        with pytest.raises(ValidationError):
            parse_edge_list("n 2\n0 5\n")

    def test_empty_input_gives_empty_graph(self):
        assert parse_edge_list("").n == 0

    def test_roundtrip_is_identity_on_canonical_form(self):
        g = Graph(6, [(4, 1), (0, 3), (3, 4)])
        text = serialize_edge_list(g)
        again = parse_edge_list(text)
        assert again == g
        assert serialize_edge_list(again) == text


class TestBfsDistances:
    def test_line_graph(self):
        assert bfs_distances(path_graph(3), 0) == [0, 1, 2]

    def test_cycle_symmetry(self):
        assert bfs_distances(cycle_graph(4), 0) == [0, 1, 2, 1]

    def test_unreachable_vertex_is_none(self):
        g = Graph(3, [(0, 1)])
        assert bfs_distances(g, 0) == [0, 1, None]

    def test_source_out_of_range(self):
        with pytest.raises(ValidationError):
            bfs_distances(path_graph(2), 5)


class TestDiameter:
    def test_path(self):
        assert diameter(path_graph(3)) == 2

    def test_cycle(self):
        assert diameter(cycle_graph(4)) == 2

    def test_clique(self):
        assert diameter(complete_graph(4)) == 1

    def test_single_vertex(self):
        assert diameter(Graph(1)) == 0

    def test_disconnected_graph_names_unreachable_pair(self):
        g = Graph(3, [(0, 1)])
        with pytest.raises(DisconnectedGraphError) as err:
            diameter(g)
        u, v = err.value.unreachable_pair
        assert bfs_distances(g, u)[v] is None

    def test_empty_graph(self):
        with pytest.raises(ValidationError):
            diameter(Graph(0))


class TestChooseRoot:
    def test_path_center(self):
        assert choose_root(path_graph(3)) == 1

    def test_cycle_ties_break_to_smallest_id(self):
        assert choose_root(cycle_graph(4), max_degree=2) == 0

    def test_star_constraint_skips_the_center(self):
        g = star_graph(5)
        # Oracle: eccentricities by BFS, restricted to degree <= 2.
        eligible = [v for v in range(g.n) if g.degree(v) <= 2]
        best = min(eligible, key=lambda v: (eccentricity(g, v), v))
        assert best == 1
        assert choose_root(g, max_degree=2) == 1

    def test_unsatisfiable_constraint(self):
        with pytest.raises(ValidationError):
            choose_root(complete_graph(5), max_degree=2)

    def test_disconnected_input(self):
        with pytest.raises(DisconnectedGraphError):
            choose_root(Graph(3, [(0, 1)]))


class TestBfsSpanningTree:
    def test_four_cycle_parent_tie_breaks(self):
        tree = bfs_spanning_tree(cycle_graph(4), 0)
        assert set(tree.graph.edges()) == {(0, 1), (0, 3), (1, 2)}

    def test_tree_input_is_its_own_spanning_tree(self):
        g = Graph(5, [(0, 1), (1, 2), (1, 3), (3, 4)])
        tree = bfs_spanning_tree(g, 2)
        assert set(tree.graph.edges()) == set(g.edges())

    def test_clique_becomes_a_star(self):
        tree = bfs_spanning_tree(complete_graph(4), 0)
        assert set(tree.graph.edges()) == {(0, 1), (0, 2), (0, 3)}
        assert diameter(tree.graph) == 2

    def test_depth_and_height_bookkeeping(self):
        tree = bfs_spanning_tree(cycle_graph(4), 0)
        assert tree.depth == (0, 1, 2, 1)
        assert tree.height == (2, 1, 0, 0)
        assert tree.children == ((1, 3), (2,), (), ())

    def test_disconnected_input(self):
        with pytest.raises(DisconnectedGraphError):
            bfs_spanning_tree(Graph(3, [(0, 1)]), 0)


class TestShapePredicates:
    def test_is_path(self):
        assert is_path(path_graph(2))
        assert is_path(path_graph(7))
        assert not is_path(Graph(1))
        assert not is_path(cycle_graph(4))
        assert not is_path(star_graph(4))
        assert not is_path(Graph(4, [(0, 1), (2, 3)]))

    def test_is_tree(self):
        assert is_tree(Graph(1))
        assert is_tree(star_graph(5))
        assert not is_tree(cycle_graph(4))
        assert not is_tree(Graph(4, [(0, 1), (2, 3)]))

    def test_is_connected(self):
        assert is_connected(Graph(0))
        assert is_connected(Graph(1))
        assert not is_connected(Graph(2))


def _graphs():
    specs = st.sampled_from(["gnp-connected", "random-tree", "cycle", "grid", "star"])
    return st.builds(
        lambda family, n, seed: generate(
            GeneratorSpec(
                family,
                max(n, 3),
                seed=seed,
                params={"p": 0.15} if family == "gnp-connected" else {},
            )
        ),
        specs,
        st.integers(min_value=3, max_value=40),
        st.integers(min_value=0, max_value=10_000),
    )


@settings(max_examples=40, deadline=None)
@given(_graphs(), st.integers(min_value=0, max_value=10_000))
def test_spanning_tree_depth_matches_bfs_distance(g, pick):
    root = pick % g.n
    tree = bfs_spanning_tree(g, root)
    assert list(tree.depth) == bfs_distances(g, root)


@settings(max_examples=40, deadline=None)
@given(_graphs(), st.integers(min_value=0, max_value=10_000))
def test_spanning_tree_diameter_at_most_twice_graph_diameter(g, pick):
    tree = bfs_spanning_tree(g, pick % g.n)
    assert diameter(tree.graph) <= 2 * diameter(g)


@settings(max_examples=40, deadline=None)
@given(_graphs())
def test_serialize_parse_roundtrip(g):
    assert parse_edge_list(serialize_edge_list(g)) == g


@settings(max_examples=25, deadline=None)
@given(_graphs())
def test_chosen_root_has_minimum_eccentricity(g):
    root = choose_root(g)
    eccentricities = [eccentricity(g, v) for v in range(g.n)]
    assert eccentricities[root] == min(eccentricities)
    assert root == min(v for v in range(g.n) if eccentricities[v] == eccentricities[root])
