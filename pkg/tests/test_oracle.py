import pytest

from hilbert_errors import InternalInconsistencyError, UnsupportedGroupError
from partition_core import Partition, enumerate_partitions
from symfunc import SymPoly, schur_polynomial, lr_coefficient
from branching import DepthConvention
from hilbert_engine import ModuleSpec, HilbertEngine
from oracle import (
    restrict_weights, positive_roots, weyl_group_order, weyl_ct_trivial_multiplicity,
    hilbert_series_weyl, branching_from_weyl, pin_depth_convention, verify_depth_convention,
    lr_bruteforce
)
from conftest import group, random_spec


P = Partition.of


class TestTorusRestriction:
    def test_standard_module(self):
        assert restrict_weights(SymPoly.variables(2), group("sp", 2)).poly == SymPoly(1, {(1,): 1, (-1,): 1})
        assert restrict_weights(SymPoly.variables(3), group("so", 3)).poly == SymPoly(1, {(1,): 1, (-1,): 1, (0,): 1})

    def test_restricted_schur_is_weyl_invariant(self):
        for kind, n in (("sp", 4), ("so", 4), ("so", 5)):
            for partition in (P(2, 1), P(3), P(1, 1, 1)):
                assert restrict_weights(schur_polynomial(partition, n), group(kind, n)).is_weyl_invariant()

    def test_rejects_orthogonal(self):
        with pytest.raises(UnsupportedGroupError):
            restrict_weights(SymPoly.variables(3), group("o", 3))

    def test_rejects_wrong_variable_count(self):
        with pytest.raises(UnsupportedGroupError):
            restrict_weights(SymPoly.variables(3), group("sp", 4))


class TestRootData:
    @pytest.mark.parametrize("kind, n, order, positive", [
        ("sp", 2, 2, 1),
        ("sp", 4, 8, 4),
        ("so", 2, 1, 0),
        ("so", 3, 2, 1),
        ("so", 4, 4, 2),
        ("so", 5, 8, 4),
        ("so", 6, 24, 6),
    ])
    def test_weyl_group_and_positive_roots(self, kind, n, order, positive):
        g = group(kind, n)
        assert weyl_group_order(g) == order
        assert len(positive_roots(g)) == positive


class TestConstantTerm:
    def test_invariant_in_exterior_square(self):
        chi = restrict_weights(schur_polynomial(P(1, 1), 2), group("sp", 2))
        assert weyl_ct_trivial_multiplicity(chi) == 1

    def test_no_invariant_in_standard(self):
        for kind, n in (("sp", 2), ("so", 3), ("so", 4)):
            assert weyl_ct_trivial_multiplicity(restrict_weights(SymPoly.variables(n), group(kind, n))) == 0

    def test_agrees_with_predicates(self):
        from branching import trivial_multiplicity
        for kind, n in (("sp", 4), ("so", 3), ("so", 4)):
            g = group(kind, n)
            for size in range(7):
                for partition in enumerate_partitions(size, n):
                    chi = restrict_weights(schur_polynomial(partition, n), g)
                    assert weyl_ct_trivial_multiplicity(chi) == trivial_multiplicity(partition, g), (partition, g)


class TestWeylSeries:
    def test_adjoint_of_sp4(self):
        spec = ModuleSpec.from_pairs(4, [((2,), 1)])
        assert hilbert_series_weyl(spec, group("sp", 4), 6) == [1, 0, 1, 0, 2, 0, 2]

    def test_symmetric_matrices_under_so3(self):
        spec = ModuleSpec.from_pairs(3, [((2,), 1)])
        assert hilbert_series_weyl(spec, group("so", 3), 6) == [1, 1, 2, 3, 4, 5, 7]

    def test_rejects_orthogonal(self):
        with pytest.raises(UnsupportedGroupError):
            hilbert_series_weyl(ModuleSpec.from_pairs(2, [((1,), 1)]), group("o", 2), 2)

    @pytest.mark.parametrize("kind, n", [("sp", 2), ("sp", 4), ("so", 2), ("so", 3), ("so", 4), ("so", 5)])
    def test_matches_engine(self, rng, kind, n):
        g = group(kind, n)
        for _ in range(3):
            engine = HilbertEngine(random_spec(rng, n), 6)
            assert hilbert_series_weyl(engine.spec, g, 6, engine.characters()) == engine.series(g)


class TestBranchingOracle:
    def test_exterior_square_of_sp4(self):
        assert branching_from_weyl(P(1, 1), group("sp", 4)) == {(1, 1): 1, (0, 0): 1}

    def test_arm_convention_is_pinned(self):
        fitting = pin_depth_convention(max_size=4, max_n=4)
        assert DepthConvention.ARM in fitting
        assert DepthConvention.COLUMNS not in fitting

    def test_verify_rejects_column_count(self):
        with pytest.raises(InternalInconsistencyError):
            verify_depth_convention(DepthConvention.COLUMNS, max_size=4, max_n=4)


class TestBruteForceLR:
    def test_examples(self):
        assert lr_bruteforce(P(3, 2, 1), P(2, 1), P(2, 1)) == 2
        assert lr_bruteforce(P(3, 1), P(2), P(1, 1)) == 1
        assert lr_bruteforce(P(2, 2), P(2), P(1)) == 0

    def test_matches_tableau_count(self):
        for total in range(1, 8):
            for size in range(total + 1):
                for mu in enumerate_partitions(size, size):
                    for nu in enumerate_partitions(total - size, total - size):
                        for lam in enumerate_partitions(total, total):
                            assert lr_bruteforce(lam, mu, nu) == lr_coefficient(lam, mu, nu), (lam, mu, nu)
