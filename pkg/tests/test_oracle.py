from fractions import Fraction

import pytest

from nullforest import (
    Forest,
    NotInSupportError,
    NullBasis,
    SizeLimitError,
    SparseVector,
    adjacency_matrix,
    generate,
    GenSpec,
    min_weight,
    null_dimension,
    sparsest_total_oracle,
    support_oracle,
    verify_basis,
)


def path(n):
    return Forest(n, [(i, i + 1) for i in range(n - 1)])


def star(n):
    return Forest(n, [(0, i) for i in range(1, n)])


class TestAdjacencyMatrix:
    def test_path_three(self):
        a = adjacency_matrix(path(3))
        assert a.entries == (
            (Fraction(0), Fraction(1), Fraction(0)),
            (Fraction(1), Fraction(0), Fraction(1)),
            (Fraction(0), Fraction(1), Fraction(0)),
        )

    def test_single_vertex(self):
        a = adjacency_matrix(Forest(1, []))
        assert a.entries == ((Fraction(0),),)

    def test_edgeless(self):
        a = adjacency_matrix(Forest(2, []))
        assert all(x == 0 for row in a.entries for x in row)


class TestNullDimension:
    @pytest.mark.parametrize("f,dim", [
        (path(3), 1),
        (path(4), 0),
        (star(5), 3),
    ])
    def test_known(self, f, dim):
        assert null_dimension(adjacency_matrix(f)) == dim


class TestSupportOracle:
    def test_star(self):
        assert support_oracle(star(4)) == [1, 2, 3]

    def test_path_three(self):
        assert support_oracle(path(3)) == [0, 2]

    def test_perfect_path(self):
        assert support_oracle(path(4)) == []

    def test_size_limit(self):
        with pytest.raises(SizeLimitError):
            support_oracle(path(5), limit=4)


class TestMinWeight:
    # expected values frozen from the subset enumeration itself
    @pytest.mark.parametrize("f,x,w", [
        (path(3), 0, 2),
        (path(5), 2, 3),
        (star(4), 1, 2),
    ])
    def test_known(self, f, x, w):
        assert min_weight(f, x) == w

    def test_not_in_support(self):
        with pytest.raises(NotInSupportError):
            min_weight(path(3), 1)

    def test_size_limit(self):
        with pytest.raises(SizeLimitError):
            min_weight(path(13), 0)


class TestSparsestTotal:
    @pytest.mark.parametrize("f,total", [
        (star(4), 4),
        (path(5), 3),
        (path(4), 0),
    ])
    def test_known(self, f, total):
        assert sparsest_total_oracle(f) == total

    def test_edgeless_uses_unit_vectors(self):
        assert sparsest_total_oracle(Forest(3, [])) == 3

    def test_size_limit(self):
        with pytest.raises(SizeLimitError):
            sparsest_total_oracle(path(13))


class TestVerifyBasis:
    def test_valid_basis_passes(self):
        f = path(3)
        b = NullBasis(3, [(0, SparseVector([0, 2], [1, -1]))])
        report = verify_basis(f, b)
        assert report.ok
        assert [c.passed for c in report.checks] == [True] * 4

    def test_null_membership_failure(self):
        f = path(3)
        b = NullBasis(3, [(0, SparseVector([0, 2], [1, 1]))])
        report = verify_basis(f, b)
        by_name = {c.name: c for c in report.checks}
        assert not by_name["null_membership"].passed
        assert "vertex 1" in by_name["null_membership"].detail
        assert by_name["entries"].passed

    def test_count_failure_on_empty_basis(self):
        report = verify_basis(path(3), NullBasis(3, []))
        by_name = {c.name: c for c in report.checks}
        assert not by_name["vector_count"].passed
        assert "expected 1" in by_name["vector_count"].detail

    def test_dependent_vectors_flagged(self):
        f = Forest(4, [])
        vec = SparseVector([0, 1], [1, -1])
        report = verify_basis(f, NullBasis(4, [(0, vec), (1, vec)]))
        by_name = {c.name: c for c in report.checks}
        assert not by_name["independent"].passed

    def test_out_of_range_entry_flagged(self):
        report = verify_basis(path(3), NullBasis(3, [(0, SparseVector([5], [1]))]))
        assert not report.checks[0].passed

    def test_report_lines_format(self):
        report = verify_basis(path(3), NullBasis(3, []))
        lines = report.lines()
        assert lines[0] == "entries: PASS"
        assert any(line.startswith("vector_count: FAIL") for line in lines)


def test_oracles_agree_with_each_other(small_corpus):
    # dimension drop count from the support oracle equals the null dimension
    for name, f in small_corpus[:40]:
        a = adjacency_matrix(f)
        dim = null_dimension(a)
        supp = support_oracle(f)
        if dim == 0:
            assert supp == [], name
        else:
            assert len(supp) >= dim, name


def test_generated_families_have_expected_oracle_values():
    assert sparsest_total_oracle(generate(GenSpec("star", 10))) == 16
    assert null_dimension(adjacency_matrix(generate(GenSpec("path", 9)))) == 1
