import pytest

from hilbert_errors import InvalidInputError, UnsupportedGroupError
from partition_core import Partition, EMPTY_PARTITION, enumerate_partitions_up_to
from symfunc import gl_dimension
from branching import (
    GroupId, GroupKind, BranchTerm, DepthConvention, trivial_multiplicity, branch_to_sp,
    branch_to_o, branch, trivial_multiplicity_via_branching, modify_sp_label,
    sp_dimension, so_dimension, o_dimension, branching_dimension
)
from conftest import group

P = Partition.of


class TestGroupId:
    def test_parse(self):
        assert GroupId.parse("SP", 4) == GroupId(GroupKind.SP, 4)
        assert str(GroupId.parse("so", 3)) == "SO(3)"
        assert GroupId.parse("sp", 4).rank == 2

    @pytest.mark.parametrize("kind, n", [("sp", 3), ("gl", 2), ("o", 0)])
    def test_rejects(self, kind, n):
        with pytest.raises(InvalidInputError):
            GroupId.parse(kind, n)

    def test_connectedness(self):
        assert not group("o", 3).is_connected
        assert group("so", 3).is_connected


class TestTrivialMultiplicity:
    @pytest.mark.parametrize("partition, kind, n, expected", [
        (P(2, 2), "sp", 4, 1),
        (P(2), "sp", 2, 0),
        (P(4, 2), "o", 3, 1),
        (P(3, 1, 1), "so", 3, 1),
        (P(3, 1, 1), "o", 3, 0),
        (P(1, 1), "so", 2, 1),
        (P(1, 1), "o", 2, 0),
        (EMPTY_PARTITION, "o", 5, 1),
    ])
    def test_examples(self, partition, kind, n, expected):
        assert trivial_multiplicity(partition, group(kind, n)) == expected

    def test_rejects_long_partition(self):
        with pytest.raises(InvalidInputError):
            trivial_multiplicity(P(1, 1, 1), group("so", 2))


class TestBranchToSp:
    def test_determinant_of_sp2(self):
        assert branch_to_sp(P(1, 1), 1) == [BranchTerm(EMPTY_PARTITION, 1)]

    def test_symmetric_square(self):
        assert branch_to_sp(P(2), 1) == [BranchTerm(P(2), 1)]

    def test_trivial(self):
        assert branch_to_sp(EMPTY_PARTITION, 2) == [BranchTerm(EMPTY_PARTITION, 1)]

    def test_third_exterior_power(self):
        assert branch_to_sp(P(1, 1, 1), 2) == [BranchTerm(P(1), 1)]

    def test_modification_cancels(self):
        assert branch_to_sp(P(1, 1, 1, 1), 2) == [BranchTerm(EMPTY_PARTITION, 1)]

    def test_modification_sign(self):
        sigma, sign = modify_sp_label(P(1, 1, 1, 1), 2)
        assert sigma == P(1, 1)
        assert sign == -1

    def test_zero_length_hook_drops_label(self):
        assert modify_sp_label(P(1, 1), 1) is None

    def test_dimension_conservation(self):
        for k in (1, 2):
            sp = GroupId(GroupKind.SP, 2 * k)
            for partition in enumerate_partitions_up_to(5, 2 * k):
                terms = branch_to_sp(partition, k)
                assert all(term.multiplicity > 0 for term in terms), partition
                assert all(term.mu.length() <= k for term in terms)
                assert branching_dimension(terms, sp) == gl_dimension(partition, 2 * k), partition


class TestBranchToO:
    def test_symmetric_square(self):
        assert branch_to_o(P(2), 3) == [BranchTerm(EMPTY_PARTITION, 1), BranchTerm(P(2), 1)]

    def test_trivial(self):
        assert branch_to_o(EMPTY_PARTITION, 4) == [BranchTerm(EMPTY_PARTITION, 1)]

    def test_top_exterior_power(self):
        assert branch_to_o(P(1, 1, 1), 3) == [BranchTerm(EMPTY_PARTITION, 1, 1)]
        assert branch_to_o(P(1, 1, 1), 3, so_view=True) == [BranchTerm(EMPTY_PARTITION, 1)]

    def test_associate_labels_absorb_determinant(self):
        assert branch_to_o(P(2, 2), 2) == [BranchTerm(EMPTY_PARTITION, 1)]

    def test_so_dimension_conservation(self):
        for n in (2, 3, 4):
            so = GroupId(GroupKind.SO, n)
            for partition in enumerate_partitions_up_to(5, n):
                terms = branch(partition, so)
                assert all(term.multiplicity > 0 for term in terms), partition
                assert branching_dimension(terms, so) == gl_dimension(partition, n), partition


class TestTrivialViaBranching:
    @pytest.mark.parametrize("partition, kind, n, expected", [
        (P(2, 2), "sp", 4, 1),
        (P(2, 1), "sp", 2, 0),
        (P(3, 3, 3), "so", 3, 1),
    ])
    def test_examples(self, partition, kind, n, expected):
        assert trivial_multiplicity_via_branching(partition, group(kind, n)) == expected

    def test_orthogonal_group_rejected(self):
        with pytest.raises(UnsupportedGroupError, match="use predicate path"):
            trivial_multiplicity_via_branching(P(2), group("o", 3))

    @pytest.mark.parametrize("kind, n", [("sp", 2), ("sp", 4), ("so", 2), ("so", 3), ("so", 4)])
    def test_agrees_with_predicates(self, kind, n):
        g = group(kind, n)
        for partition in enumerate_partitions_up_to(6, n):
            assert trivial_multiplicity_via_branching(partition, g) == trivial_multiplicity(partition, g), partition

    def test_column_count_convention_breaks_cancellation(self):
        assert branch_to_sp(P(1, 1, 1, 1), 2, DepthConvention.ARM) == [BranchTerm(EMPTY_PARTITION, 1)]
        assert branch_to_sp(P(1, 1, 1, 1), 2, DepthConvention.COLUMNS) == [
            BranchTerm(EMPTY_PARTITION, 1), BranchTerm(P(1, 1), 2)
        ]


class TestDimensions:
    @pytest.mark.parametrize("mu, k, expected", [(P(1), 2, 4), (P(1, 1), 2, 5), (P(2), 2, 10), (P(), 3, 1)])
    def test_sp(self, mu, k, expected):
        assert sp_dimension(mu, k) == expected

    @pytest.mark.parametrize("mu, n, expected", [
        (P(1), 3, 3), (P(2), 3, 5), (P(1), 4, 4), (P(1, 1), 4, 3), (P(1), 5, 5), (P(1, 1), 5, 10), (P(3), 2, 1)
    ])
    def test_so(self, mu, n, expected):
        assert so_dimension(mu, n) == expected

    @pytest.mark.parametrize("mu, n, expected", [(P(1, 1), 4, 6), (P(3), 2, 2), (P(2), 3, 5)])
    def test_o(self, mu, n, expected):
        assert o_dimension(mu, n) == expected

    def test_rejects_inadmissible(self):
        with pytest.raises(InvalidInputError):
            sp_dimension(P(1, 1, 1), 2)
