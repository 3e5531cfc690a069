import numpy as np
import pytest

from nullforest import (
    CycleError,
    DuplicateEdgeError,
    Forest,
    InvalidRootError,
    ParseError,
    SelfLoopError,
    components,
    format_forest,
    parse_forest,
    root_at,
)


class TestParse:
    def test_path_on_three(self):
        f = parse_forest("p forest 3 2\ne 0 1\ne 1 2\n")
        assert f.n == 3
        assert f.edges == [(0, 1), (1, 2)]

    def test_two_isolated_vertices(self):
        f = parse_forest("p forest 2 0\n")
        assert f.n == 2
        assert f.m == 0

    def test_triangle_is_rejected(self):
        text = "p forest 3 3\ne 0 1\ne 1 2\ne 0 2\n"
        with pytest.raises(CycleError):
            parse_forest(text)

    def test_comments_and_blank_lines_ignored(self):
        text = "c a comment\n\np forest 2 1\nc another\ne 0 1\n\n"
        assert parse_forest(text).edges == [(0, 1)]

    def test_accepts_bytes_and_normalizes_order(self):
        f = parse_forest(b"p forest 3 2\ne 2 1\ne 1 0\n")
        assert f.edges == [(0, 1), (1, 2)]

    def test_missing_header(self):
        with pytest.raises(ParseError):
            parse_forest("e 0 1\n")

    def test_malformed_edge_line(self):
        with pytest.raises(ParseError):
            parse_forest("p forest 2 1\ne 0\n")

    def test_out_of_range_id(self):
        with pytest.raises(ParseError):
            parse_forest("p forest 2 1\ne 0 5\n")

    def test_edge_count_mismatch(self):
        with pytest.raises(ParseError):
            parse_forest("p forest 3 2\ne 0 1\n")

    def test_self_loop(self):
        with pytest.raises(SelfLoopError):
            parse_forest("p forest 2 1\ne 1 1\n")

    def test_duplicate_edge(self):
        with pytest.raises(DuplicateEdgeError):
            parse_forest("p forest 2 2\ne 0 1\ne 1 0\n")

    def test_format_round_trip(self, small_corpus):
        for name, f in small_corpus:
            assert parse_forest(format_forest(f)) == f, name


class TestForest:
    def test_adjacency_sorted(self):
        f = Forest(4, [(2, 0), (0, 3), (0, 1)])
        assert f.adjacency == [[1, 2, 3], [0], [0], [0]]
        assert f.neighbors(0).tolist() == [1, 2, 3]

    def test_degree_sum_is_twice_edges(self, small_corpus):
        for name, f in small_corpus:
            assert sum(len(a) for a in f.adjacency) == 2 * f.m, name

    def test_component_edge_counts(self, small_corpus):
        for name, f in small_corpus:
            edge_set = set(f.edges)
            for comp in components(f):
                inside = [e for e in edge_set if e[0] in set(comp)]
                assert len(inside) == len(comp) - 1, name

    def test_empty_forest(self):
        f = Forest(0, [])
        assert components(f) == []
        assert f.edges == []

    def test_immutable_arrays(self):
        f = Forest(2, [(0, 1)])
        with pytest.raises(ValueError):
            f.edge_array[0, 0] = 5


class TestComponents:
    def test_edgeless(self):
        assert components(Forest(3, [])) == [[0], [1], [2]]

    def test_single_path(self):
        assert components(Forest(3, [(0, 1), (1, 2)])) == [[0, 1, 2]]

    def test_mixed(self):
        f = Forest(5, [(0, 1), (3, 4)])
        assert components(f) == [[0, 1], [2], [3, 4]]


class TestRootAt:
    def test_path_rooted_at_end(self):
        f = Forest(3, [(0, 1), (1, 2)])
        rf = root_at(f, [0])
        assert rf.parent_of(0) is None
        assert rf.parent_of(1) == 0
        assert rf.parent_of(2) == 1

    def test_star_rooted_at_leaf(self):
        f = Forest(4, [(0, 1), (0, 2), (0, 3)])
        rf = root_at(f, [1])
        assert rf.children_of(1) == [0]
        assert rf.children_of(0) == [2, 3]

    def test_single_vertex(self):
        rf = root_at(Forest(1, []), [0])
        assert rf.parent_of(0) is None
        assert rf.postorder.tolist() == [0]

    def test_wrong_component_rejected(self):
        f = Forest(4, [(0, 1), (2, 3)])
        with pytest.raises(InvalidRootError):
            root_at(f, [0, 1])

    def test_wrong_count_rejected(self):
        f = Forest(4, [(0, 1), (2, 3)])
        with pytest.raises(InvalidRootError):
            root_at(f, [0])

    def test_parent_links_reconstruct_edges(self, small_corpus):
        for name, f in small_corpus:
            roots = [comp[0] for comp in components(f)]
            rf = root_at(f, roots)
            rebuilt = sorted(
                (min(v, p), max(v, p))
                for v, p in enumerate(rf.parent.tolist()) if p >= 0)
            assert rebuilt == f.edges, name

    def test_postorder_children_before_parents(self, small_corpus):
        for name, f in small_corpus:
            roots = [comp[0] for comp in components(f)]
            rf = root_at(f, roots)
            pos = np.empty(f.n, dtype=int)
            pos[rf.postorder] = np.arange(f.n)
            for v, p in enumerate(rf.parent.tolist()):
                if p >= 0:
                    assert pos[v] < pos[p], name
