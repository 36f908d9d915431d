import pytest

from hilbert_errors import InvalidInputError
from partition_core import Partition
from exterior_invariants import (
    HilbertPolynomial, ExteriorKind, exterior_decomposition, exterior_invariant_poly,
    closed_form_exterior, exterior_generator_product, exterior_total_dimension,
    known_generator_degrees, generator_product_for
)
from conftest import group

SYM2, ALT2 = ExteriorKind.SYM2, ExteriorKind.ALT2
P = Partition.of


def poly(*coeffs):
    return HilbertPolynomial.from_list(coeffs)


def all_groups(max_n):
    for n in range(1, max_n + 1):
        for kind in ("o", "so"):
            yield group(kind, n)
        if n % 2 == 0:
            yield group("sp", n)


class TestHilbertPolynomial:
    def test_trims_trailing_zeros(self):
        assert poly(1, 0, 2, 0, 0).coeffs == (1, 0, 2)

    def test_str(self):
        assert str(poly(1, 1, 0, 2)) == "1 + t + 2*t^3"

    def test_lowest_positive_degree(self):
        assert poly(1, 0, 0, 1).lowest_positive_degree() == 3
        assert poly(1).lowest_positive_degree() is None


class TestGeneratorProduct:
    def test_examples(self):
        assert exterior_generator_product([3]) == poly(1, 0, 0, 1)
        assert exterior_generator_product([3, 7]).coeffs == (1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1)
        assert exterior_generator_product([]) == poly(1)

    def test_rejects_zero_degree(self):
        with pytest.raises(InvalidInputError):
            exterior_generator_product([0])


class TestDecomposition:
    def test_examples(self):
        assert exterior_decomposition(SYM2, 2, 3) == [P(3, 3)]
        assert exterior_decomposition(ALT2, 2, 1) == [P(1, 1)]
        for n in (1, 3, 5):
            assert exterior_decomposition(SYM2, n, 1) == [P(2)]

    def test_labels_have_twice_the_degree(self):
        for kind in (SYM2, ALT2):
            for degree in range(kind.degree_bound(4) + 1):
                for label in exterior_decomposition(kind, 4, degree):
                    assert label.size() == 2 * degree

    def test_degree_out_of_range(self):
        with pytest.raises(InvalidInputError):
            exterior_decomposition(SYM2, 2, 4)
        with pytest.raises(InvalidInputError):
            exterior_decomposition(ALT2, 3, -1)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_total_dimension(self, n):
        assert exterior_total_dimension(SYM2, n) == 2 ** (n * (n + 1) // 2)
        assert exterior_total_dimension(ALT2, n) == 2 ** (n * (n - 1) // 2)


class TestInvariantPolynomials:
    def test_filter_examples(self):
        assert exterior_invariant_poly(SYM2, group("sp", 2)) == poly(1, 0, 0, 1)
        assert exterior_invariant_poly(ALT2, group("so", 2)) == poly(1, 1)
        assert exterior_invariant_poly(ALT2, group("sp", 2)) == poly(1, 1)
        assert exterior_invariant_poly(SYM2, group("o", 2)) == poly(1, 1)
        assert exterior_invariant_poly(SYM2, group("so", 2)) == poly(1, 1, 1, 1)

    def test_closed_form_examples(self):
        assert closed_form_exterior(SYM2, group("sp", 2)) == poly(1, 0, 0, 1)
        assert closed_form_exterior(ALT2, group("o", 5)) == exterior_generator_product([3, 7])
        assert closed_form_exterior(ALT2, group("sp", 4)) == poly(1, 1, 0, 0, 0, 1, 1)

    @pytest.mark.parametrize("kind", [SYM2, ALT2])
    def test_filter_matches_closed_form(self, kind):
        for g in all_groups(8):
            assert exterior_invariant_poly(kind, g) == closed_form_exterior(kind, g), str(g)

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_symplectic_sym2_equals_odd_orthogonal_alt2(self, k):
        assert closed_form_exterior(SYM2, group("sp", 2 * k)) == closed_form_exterior(ALT2, group("o", 2 * k + 1))

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_symplectic_alt2_equals_odd_orthogonal_sym2(self, k):
        expected = closed_form_exterior(ALT2, group("sp", 2 * k))
        assert closed_form_exterior(SYM2, group("o", 2 * k - 1)) == expected
        assert closed_form_exterior(SYM2, group("so", 2 * k - 1)) == expected

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_odd_orthogonal_equals_special_orthogonal(self, k):
        n = 2 * k + 1
        for kind in (SYM2, ALT2):
            assert closed_form_exterior(kind, group("o", n)) == closed_form_exterior(kind, group("so", n))

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_symplectic_sym2_is_free_exterior(self, k):
        degrees = [4 * j - 1 for j in range(1, k + 1)]
        assert known_generator_degrees(SYM2, group("sp", 2 * k)) == degrees
        assert closed_form_exterior(SYM2, group("sp", 2 * k)) == exterior_generator_product(degrees)

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_even_special_orthogonal_alt2_is_free_exterior(self, k):
        degrees = [4 * j - 1 for j in range(1, k)] + [2 * k - 1]
        assert closed_form_exterior(ALT2, group("so", 2 * k)) == exterior_generator_product(degrees)

    def test_known_generator_products_agree(self):
        for kind in (SYM2, ALT2):
            for g in all_groups(8):
                product = generator_product_for(kind, g)
                if product is not None:
                    assert product == closed_form_exterior(kind, g), str(g)

    def test_no_free_structure_for_symplectic_alt2(self):
        assert known_generator_degrees(ALT2, group("sp", 4)) is None
        assert generator_product_for(SYM2, group("o", 3)) is None

    @pytest.mark.parametrize("n", [2, 4, 6])
    def test_lowest_degrees(self, n):
        sym2_sp = closed_form_exterior(SYM2, group("sp", n))
        assert sym2_sp.lowest_positive_degree() == 3
        assert sym2_sp[3] == 1
        assert closed_form_exterior(SYM2, group("o", n)).lowest_positive_degree() == 1
        assert closed_form_exterior(SYM2, group("so", n)).lowest_positive_degree() == 1
        assert closed_form_exterior(ALT2, group("sp", n)).lowest_positive_degree() == 1

    def test_constant_term_is_one(self):
        for kind in (SYM2, ALT2):
            for g in all_groups(6):
                assert closed_form_exterior(kind, g)[0] == 1
