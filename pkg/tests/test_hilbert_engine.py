import pytest

from hilbert_errors import InvalidInputError
from partition_core import Partition, EMPTY_PARTITION
from symfunc import SymPoly, schur_polynomial
from hilbert_engine import (
    ModuleSpec, TruncatedSeries, HilbertEngine, module_character, symmetric_algebra_characters,
    multiplicity_table, hilbert_series_invariants, hilbert_series_via_substitution,
    multiplicity_series_terms, parse_module_spec
)
from rational_series import golden_entries
from conftest import group, random_spec

P = Partition.of


def spec_of(n, *pairs):
    return ModuleSpec.from_pairs(n, pairs)


class TestModuleSpec:
    def test_merges_and_sorts(self):
        spec = spec_of(3, ((1, 1), 1), ((1,), 1), ((1, 1), 1))
        assert spec.components == ((P(1), 1), (P(1, 1), 2))
        assert spec.format() == "[1]+2*[1,1]"

    def test_dimension(self):
        assert spec_of(4, ((1,), 1), ((1, 1), 1)).dimension() == 10

    def test_rejects_long_weight(self):
        with pytest.raises(InvalidInputError):
            spec_of(2, ((1, 1, 1), 1))

    def test_rejects_nonpositive_multiplicity(self):
        with pytest.raises(InvalidInputError):
            spec_of(2, ((1,), 0))

    def test_empty(self):
        assert ModuleSpec.empty(3).is_empty()
        assert ModuleSpec.empty(3).format() == ""


class TestTruncatedSeries:
    def test_padding_and_truncation(self):
        assert TruncatedSeries([1, 2], 3) == [1, 2, 0, 0]
        assert TruncatedSeries([1, 2, 3, 4], 1) == [1, 2]

    def test_geometric_division(self):
        assert TruncatedSeries.one(8).divide_one_minus_power(4) == [1, 0, 0, 0, 1, 0, 0, 0, 1]
        assert TruncatedSeries.one(4).divide_one_minus_power(1, 2) == [1, 2, 3, 4, 5]

    def test_division_inverts_multiplication(self):
        series = TruncatedSeries([3, -1, 4, 1, 5, 9], 5)
        assert series.divide_one_minus_power(2, 3).multiply_polynomial([1, 0, -3, 0, 3, 0, -1]) == series

    def test_product_uses_common_bound(self):
        product = TruncatedSeries([1, 1], 1) * TruncatedSeries([1, 1, 1], 2)
        assert product.maxdeg == 1
        assert product == [1, 2]

    def test_exact_big_integers(self):
        series = TruncatedSeries([10 ** 30], 3).divide_one_minus_power(1)
        assert series[3] == 10 ** 30

    def test_comparisons(self):
        a = TruncatedSeries([1, 0, 2, 0], 3)
        b = TruncatedSeries([1, 0, 2, 1, 7], 4)
        assert a.first_difference(b) == 3
        assert a.agrees_with(b.truncate(2))
        assert a.dominated_by(b)

    def test_rejects_negative_bound(self):
        with pytest.raises(InvalidInputError):
            TruncatedSeries([], -1)


class TestCharacters:
    def test_module_character(self):
        assert module_character(spec_of(2, ((2,), 1))) == SymPoly(2, {(2, 0): 1, (1, 1): 1, (0, 2): 1})
        assert module_character(spec_of(2, ((1, 1), 1))) == SymPoly.monomial((1, 1))
        assert module_character(spec_of(2, ((1,), 1), ((1, 1), 1))) == SymPoly(2, {(1, 0): 1, (0, 1): 1, (1, 1): 1})

    def test_symmetric_square_of_symmetric_square(self):
        characters = symmetric_algebra_characters(spec_of(2, ((2,), 1)), 2)
        assert characters[0] == 1
        assert characters[2] == schur_polynomial(P(4), 2) + schur_polynomial(P(2, 2), 2)

    def test_symmetric_power_of_standard(self):
        characters = symmetric_algebra_characters(spec_of(2, ((1,), 1)), 3)
        assert characters[3] == schur_polynomial(P(3), 2)


class TestMultiplicityTable:
    def test_symmetric_square(self):
        table = multiplicity_table(spec_of(2, ((2,), 1)), 2)
        assert table.rows[0].coeffs == {EMPTY_PARTITION: 1}
        assert table.rows[1].coeffs == {P(2): 1}
        assert table.rows[2].coeffs == {P(4): 1, P(2, 2): 1}

    def test_exterior_square(self):
        table = multiplicity_table(spec_of(4, ((1, 1), 1)), 2)
        assert table.rows[2].coeffs == {P(2, 2): 1, P(1, 1, 1, 1): 1}

    def test_threaded_expansion_matches(self):
        spec = spec_of(3, ((2,), 1), ((1,), 1))
        sequential = multiplicity_table(spec, 5)
        threaded = multiplicity_table(spec, 5, workers=3)
        assert list(sequential.terms()) == list(threaded.terms())


class TestHilbertSeries:
    @pytest.mark.parametrize("pairs, kind, n, maxdeg, expected", [
        ([((2,), 1)], "sp", 4, 8, [1, 0, 1, 0, 2, 0, 2, 0, 3]),
        ([((2,), 1)], "o", 2, 4, [1, 1, 2, 2, 3]),
        ([((3,), 1)], "sp", 2, 8, [1, 0, 0, 0, 1, 0, 0, 0, 1]),
        ([((1, 1), 1)], "so", 2, 3, [1, 1, 1, 1]),
        ([((4,), 1)], "so", 2, 3, [1, 1, 3, 5]),
    ])
    def test_examples(self, pairs, kind, n, maxdeg, expected):
        spec = ModuleSpec.from_pairs(n, pairs)
        assert hilbert_series_invariants(spec, group(kind, n), maxdeg) == expected

    def test_zero_module(self):
        assert hilbert_series_invariants(ModuleSpec.empty(2), group("sp", 2), 3) == [1, 0, 0, 0]

    def test_group_must_match_rank(self):
        with pytest.raises(InvalidInputError):
            hilbert_series_invariants(spec_of(2, ((1,), 1)), group("so", 3), 2)

    def test_orthogonal_invariants_inside_special_orthogonal(self, rng):
        for n in (2, 3):
            for _ in range(4):
                engine = HilbertEngine(random_spec(rng, n), 5)
                assert engine.series(group("o", n)).dominated_by(engine.series(group("so", n)))

    def test_engine_statistics(self):
        engine = HilbertEngine(spec_of(2, ((2,), 1)), 4)
        engine.series(group("sp", 2))
        stats = engine.get_statistics()
        assert stats['schur_components'] > 0
        assert stats['character_terms'] > 0


class TestSubstitution:
    def test_symplectic(self):
        series = hilbert_series_via_substitution(spec_of(2, ((2,), 1)), group("sp", 2), 6)
        assert series == [1, 0, 1, 0, 1, 0, 1]

    def test_special_orthogonal(self):
        series = hilbert_series_via_substitution(spec_of(2, ((1, 1), 1)), group("so", 2), 3)
        assert series == [1, 1, 1, 1]

    def test_degree_zero(self):
        for kind, n in (("sp", 2), ("o", 3), ("so", 3)):
            assert hilbert_series_via_substitution(spec_of(n, ((2, 1), 1)), group(kind, n), 0) == [1]

    def test_v_coordinates(self):
        table = multiplicity_table(spec_of(2, ((2,), 1)), 2)
        terms = multiplicity_series_terms(table, "v")
        assert terms[((4, 0), 2)] == 1
        assert terms[((0, 2), 2)] == 1

    @pytest.mark.parametrize("kind, n", [("sp", 2), ("sp", 4), ("o", 2), ("o", 3), ("so", 2), ("so", 3), ("so", 4)])
    def test_matches_predicate_filter(self, rng, kind, n):
        g = group(kind, n)
        for _ in range(4):
            engine = HilbertEngine(random_spec(rng, n), 8)
            assert engine.series_via_substitution(g) == engine.series(g)

    @pytest.mark.parametrize("entry", [e for e in golden_entries() if e.group.n <= 4], ids=lambda e: e.key)
    def test_matches_predicate_filter_on_catalog(self, entry):
        engine = HilbertEngine(parse_module_spec(entry.spec_text, entry.group.n), min(entry.maxdeg, 8))
        assert engine.series_via_substitution(entry.group) == engine.series(entry.group)
