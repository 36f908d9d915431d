import json

import pytest

from hilbert_errors import InvalidInputError
from rational_series import (
    RationalForm, expand_rational, make_key, golden_entries, golden_forms, golden_entry
)
from conftest import group

SO3_CUBICS = [1, 0, 2, 0, 7, 0, 17, 3, 38, 13, 78, 36, 151, 86, 271]


class TestRationalForm:
    def test_single_factor(self):
        assert expand_rational(RationalForm((1,), ((4, 1),)), 8) == [1, 0, 0, 0, 1, 0, 0, 0, 1]

    def test_numerator_only(self):
        assert expand_rational(RationalForm((1, 2, 3)), 4) == [1, 2, 3, 0, 0]
        assert expand_rational(RationalForm((1, 2, 3)), 1) == [1, 2]

    def test_from_factors_multiplies_numerator(self):
        form = RationalForm.from_factors([[1, 1], [1, -1]], [[2, 1]])
        assert form.numerator == (1, 0, -1)
        assert expand_rational(form, 5) == [1, 0, 0, 0, 0, 0]

    def test_binary_quartics_under_so2(self):
        form = RationalForm.from_factors([[1, 0, 0, 1]], [[1, 1], [2, 2], [3, 1]])
        assert expand_rational(form, 3) == [1, 1, 3, 5]

    @pytest.mark.parametrize("numerator, factors", [
        ((), ()),
        ((1,), ((0, 1),)),
        ((1,), ((2, 0),)),
    ])
    def test_rejects_invalid(self, numerator, factors):
        with pytest.raises(InvalidInputError):
            RationalForm(numerator, factors)


class TestGoldenCatalog:
    def test_keys(self):
        assert make_key("cubics", group("sp", 2)) == "cubics/sp/2"
        forms = golden_forms()
        for key in ("sym_square/sp/2", "alt_square/so/4", "std_alt_square/o/3", "cubics/so/2", "quartics/sp/2", "cubics/o/3", "cubics/so/3"):
            assert key in forms

    def test_entry_fields(self):
        entry = golden_entry("quartics/so/2")
        assert entry.group == group("so", 2)
        assert entry.spec_text == "S4(V)"
        assert "1, 1, 3, 5" in entry.note
        assert expand_rational(entry.form, 3) == [1, 1, 3, 5]

    def test_unknown_key(self):
        with pytest.raises(InvalidInputError):
            golden_entry("9.9/sp/2")

    def test_ternary_cubics(self):
        so3 = expand_rational(golden_entry("cubics/so/3").form, 14)
        o3 = expand_rational(golden_entry("cubics/o/3").form, 14)
        assert so3 == SO3_CUBICS
        assert o3 == [c if d % 2 == 0 else 0 for d, c in enumerate(SO3_CUBICS)]

    def test_every_expansion_is_nonnegative(self):
        for entry in golden_entries():
            assert expand_rational(entry.form, entry.maxdeg).is_nonnegative(), entry.key

    def test_degree_bounds(self):
        for entry in golden_entries():
            if entry.name == "cubics" and entry.group.n == 3:
                assert entry.maxdeg == 14, entry.key
            elif entry.group.n == 2:
                assert entry.maxdeg == 16, entry.key
            elif entry.group.n <= 4:
                assert entry.maxdeg >= 12, entry.key

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            golden_entries(tmp_path / "absent.json")

    def test_malformed_file(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        with pytest.raises(InvalidInputError):
            golden_entries(path)

    def test_duplicate_keys(self, tmp_path):
        raw = {"name": "x", "group": "sp", "n": 2, "spec": "S2(V)", "maxdeg": 4, "denominator": [[2, 1]]}
        path = tmp_path / "dup.json"
        path.write_text(json.dumps({"version": 1, "entries": [raw, raw]}))
        with pytest.raises(InvalidInputError):
            golden_entries(path)

    def test_custom_catalog(self, tmp_path):
        raw = {"name": "adjoint", "group": "sp", "n": 2, "spec": "S2(V)", "maxdeg": 6,
               "denominator": [[2, 1]], "source": "1/(1-t^2)"}
        path = tmp_path / "custom.json"
        path.write_text(json.dumps({"version": 1, "entries": [raw]}))
        entries = golden_entries(path)
        assert [entry.key for entry in entries] == ["adjoint/sp/2"]
        assert entries[0].note is None
