import numpy as np
import pytest

from netosc import Graph, ValidationError, build_matrices, load_edge_list, path_graph


class TestLoadEdgeList:
    def test_single_edge(self):
        g = load_edge_list("0 1 1.0")
        assert g.n == 2
        assert g.edges == ((0, 1, 1.0),)
        assert not g.directed

    def test_two_edges(self):
        g = load_edge_list("0 1 1.0\n1 2 2.5")
        assert g.n == 3
        assert len(g.edges) == 2

    def test_comments_and_blank_lines_ignored(self):
        g = load_edge_list("# header\n\n0 1 1.0\n   \n# tail\n1 2 2.0\n")
        assert g.n == 3
        assert len(g.edges) == 2

    def test_self_loop_rejected(self):
        with pytest.raises(ValidationError, match="self-loop"):
            load_edge_list("0 0 1.0")

    def test_malformed_line_reports_line_number(self):
        with pytest.raises(ValidationError, match="line 2"):
            load_edge_list("0 1 1.0\n0 1\n")

    def test_unparseable_weight_reports_line_number(self):
        with pytest.raises(ValidationError, match="line 1"):
            load_edge_list("0 1 heavy")

    def test_non_positive_weight_rejected(self):
        with pytest.raises(ValidationError, match="positive"):
            load_edge_list("0 1 0.0")
        with pytest.raises(ValidationError, match="positive"):
            load_edge_list("0 1 -2")

    def test_duplicate_edge_rejected(self):
        with pytest.raises(ValidationError, match="duplicate"):
            load_edge_list("0 1 1.0\n0 1 2.0")

    def test_reversed_duplicate_rejected_when_undirected(self):
        with pytest.raises(ValidationError, match="duplicate"):
            load_edge_list("0 1 1.0\n1 0 2.0", directed=False)

    def test_reversed_pair_allowed_when_directed(self):
        g = load_edge_list("0 1 1.0\n1 0 2.0", directed=True)
        assert g.directed
        assert len(g.edges) == 2

    def test_negative_index_rejected(self):
        with pytest.raises(ValidationError, match="negative"):
            load_edge_list("-1 1 1.0")

    def test_empty_document_rejected(self):
        with pytest.raises(ValidationError, match="no edges"):
            load_edge_list("# nothing here\n")


class TestPathGraph:
    def test_three_nodes(self):
        g = path_graph(3, 1.0)
        assert g.n == 3
        assert g.edges == ((0, 1, 1.0), (1, 2, 1.0))

    def test_forty_nodes_unit_weight(self):
        g = path_graph(40, 1.0)
        assert g.n == 40
        assert len(g.edges) == 39
        assert all(w == 1.0 for _, _, w in g.edges)

    def test_too_small_rejected(self):
        with pytest.raises(ValidationError):
            path_graph(1, 1.0)

    def test_bad_weight_rejected(self):
        with pytest.raises(ValidationError):
            path_graph(3, 0.0)


class TestBuildMatrices:
    def test_path3_laplacian(self):
        m = build_matrices(path_graph(3, 1.0))
        expected = np.array([[1.0, -1.0, 0.0], [-1.0, 2.0, -1.0], [0.0, -1.0, 1.0]])
        np.testing.assert_array_equal(m.laplacian, expected)

    def test_path2_unit_degrees_make_h_equal_l(self):
        m = build_matrices(path_graph(2, 1.0))
        np.testing.assert_array_equal(m.degree, np.eye(2))
        np.testing.assert_array_equal(m.semi_normalized, m.laplacian)
        np.testing.assert_array_equal(m.laplacian, [[1.0, -1.0], [-1.0, 1.0]])

    def test_path3_semi_normalized_row(self):
        # oracle: evaluate D^{-1/2} L by hand, row 1 has degree 2
        m = build_matrices(path_graph(3, 1.0))
        expected = np.array([-1.0, 2.0, -1.0]) / np.sqrt(2.0)
        np.testing.assert_allclose(m.semi_normalized[1], expected, atol=1e-15)

    def test_row_sums_vanish(self, rng):
        from conftest import random_connected_graph

        for n in (2, 5, 9):
            m = build_matrices(random_connected_graph(rng, n))
            scale = np.max(np.abs(m.laplacian))
            assert np.max(np.abs(m.laplacian.sum(axis=1))) <= 1e-12 * scale

    def test_semi_normalized_pattern_matches_laplacian(self, rng):
        from conftest import random_connected_graph

        for n in (3, 6, 8):
            m = build_matrices(random_connected_graph(rng, n))
            assert np.array_equal(m.semi_normalized != 0, m.laplacian != 0)

    def test_undirected_symmetry_is_exact(self, rng):
        from conftest import random_connected_graph

        m = build_matrices(random_connected_graph(rng, 7))
        assert np.array_equal(m.laplacian, m.laplacian.T)
        assert np.array_equal(m.adjacency, m.adjacency.T)
        assert np.array_equal(m.normalized, m.normalized.T)

    def test_deterministic_rebuild(self):
        g = path_graph(5, 1.5)
        m1, m2 = build_matrices(g), build_matrices(g)
        for name in ("adjacency", "degree", "laplacian", "semi_normalized", "normalized"):
            assert np.array_equal(getattr(m1, name), getattr(m2, name))

    def test_isolated_node_named_in_error(self):
        g = Graph(n=3, edges=((0, 1, 1.0),))
        with pytest.raises(ValidationError, match="node 2"):
            build_matrices(g)

    def test_directed_degree_sums_outgoing_weights(self):
        g = Graph(n=2, edges=((0, 1, 2.0), (1, 0, 3.0)), directed=True)
        m = build_matrices(g)
        np.testing.assert_array_equal(np.diag(m.degree), [2.0, 3.0])
        np.testing.assert_array_equal(m.laplacian, [[2.0, -2.0], [-3.0, 3.0]])
        np.testing.assert_allclose(
            m.semi_normalized,
            [[2 / np.sqrt(2), -2 / np.sqrt(2)], [-3 / np.sqrt(3), 3 / np.sqrt(3)]],
        )

    def test_directed_sink_is_isolated(self):
        g = Graph(n=2, edges=((0, 1, 2.0),), directed=True)
        with pytest.raises(ValidationError, match="node 1"):
            build_matrices(g)

    def test_normalized_laplacian_definition(self, rng):
        from conftest import random_connected_graph

        m = build_matrices(random_connected_graph(rng, 6))
        expected = m.inv_sqrt_degree @ m.laplacian @ m.inv_sqrt_degree
        np.testing.assert_allclose(m.normalized, expected, atol=1e-15)


class TestGraphInvariants:
    def test_constructor_rejects_bad_edges(self):
        with pytest.raises(ValidationError):
            Graph(n=2, edges=((0, 0, 1.0),))
        with pytest.raises(ValidationError):
            Graph(n=2, edges=((0, 3, 1.0),))
        with pytest.raises(ValidationError):
            Graph(n=2, edges=((0, 1, -1.0),))
        with pytest.raises(ValidationError):
            Graph(n=2, edges=((0, 1, 1.0), (1, 0, 1.0)))

    def test_fingerprint_ignores_edge_order(self):
        g1 = Graph(n=3, edges=((0, 1, 1.0), (1, 2, 2.0)))
        g2 = Graph(n=3, edges=((1, 2, 2.0), (0, 1, 1.0)))
        assert g1.fingerprint() == g2.fingerprint()

    def test_fingerprint_distinguishes_weights_and_direction(self):
        g1 = Graph(n=2, edges=((0, 1, 1.0),))
        g2 = Graph(n=2, edges=((0, 1, 2.0),))
        g3 = Graph(n=2, edges=((0, 1, 1.0),), directed=True)
        assert len({g1.fingerprint(), g2.fingerprint(), g3.fingerprint()}) == 3
