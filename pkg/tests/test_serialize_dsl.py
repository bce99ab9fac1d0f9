import random

import pytest

from conftest import random_element
from qlform.dsl import parse_form_dsl, print_dsl
from qlform.errors import ParseError
from qlform.forms import extend_scalars, form, quasi_pfister
from qlform.serialize import (
    canonical_json,
    content_hash,
    field_from_dict,
    field_to_dict,
    form_from_dict,
    form_to_dict,
)
from qlform.splitting import function_field
from qlform.towers import make_base_field


class TestDsl:
    def test_reference_input(self):
        spec = parse_form_dsl("field F2(t1,t2); p = <1, t1, t2>; q = <<t1, t2>>;")
        assert spec.field.base_vars == ("t1", "t2")
        assert spec.p.dim == 3
        assert spec.q == quasi_pfister(spec.field, [spec.field.gen("t1"), spec.field.gen("t2")]).expanded

    def test_rational_entries(self):
        spec = parse_form_dsl("field F2(t1,t2); p = <1, t1/t2>;")
        assert spec.p.coeffs[1] == spec.field.parse("t1/t2")

    def test_print_parse_identity(self):
        spec = parse_form_dsl("field F2(t1,t2); p = <1, t1, t2>; q = <<t1, t2>>;")
        text = print_dsl(spec)
        again = parse_form_dsl(text)
        assert again.field == spec.field and again.p == spec.p and again.q == spec.q
        assert print_dsl(again) == text

    def test_comments_and_whitespace(self):
        spec = parse_form_dsl("# header\nfield F2(t1) ;\n p = <1+t1> # tail\n;")
        assert spec.p.dim == 1

    def test_empty_pfister(self):
        spec = parse_form_dsl("field F2(t1); p = <<>>;")
        assert spec.p.dim == 1 and spec.p.coeffs[0].is_one

    @pytest.mark.parametrize(
        "text,fragment",
        [
            ("p = <1>;", "field must be declared"),
            ("field F2(t1); field F2(t2);", "duplicate field"),
            ("field F2(t1); p = <1>; p = <t1>;", "duplicate form"),
            ("field F3(t1); p = <1>;", "unknown base field"),
            ("field F2(t1); r = <1>;", "unknown statement"),
            ("field F2(t1); p = <t2>;", "unknown variable"),
            ("field F2(t1); p = <1", "expected"),
        ],
    )
    def test_errors(self, text, fragment):
        with pytest.raises(ParseError) as err:
            parse_form_dsl(text)
        assert fragment in str(err.value)

    def test_error_position(self):
        with pytest.raises(ParseError) as err:
            parse_form_dsl("field F2(t1);\np = <1, %>;")
        assert err.value.line == 2 and err.value.col == 9


class TestFieldDescriptor:
    def test_base_roundtrip(self):
        F = make_base_field(["t1", "t2"])
        assert field_from_dict(field_to_dict(F)) == F

    def test_tower_roundtrip(self):
        F = make_base_field(["t1", "t2"])
        p = form(F, [F.one(), F.gen("t1"), F.gen("t2")])
        K = function_field(p).result_field
        K2 = K.adjoin_sqrt(K.add(K.root(1), K.gen("t2")))
        obj = field_to_dict(K2)
        assert field_from_dict(obj) == K2

    def test_unknown_keys_rejected(self):
        F = make_base_field(["t1"])
        obj = field_to_dict(F)
        obj["extra"] = 1
        with pytest.raises(ParseError):
            field_from_dict(obj)

    def test_replacement_index_validated(self):
        F = make_base_field(["t1", "t2"])
        K = F.adjoin_sqrt(F.add(F.gen("t1"), F.gen("t2")))
        obj = field_to_dict(K)
        obj["levels"][0]["replaced_index"] = 1
        with pytest.raises(ParseError):
            field_from_dict(obj)


class TestFormDescriptor:
    def test_roundtrip_over_tower(self):
        F = make_base_field(["t1", "t2"])
        p = form(F, [F.one(), F.gen("t1"), F.gen("t2")])
        K = function_field(p).result_field
        rng = random.Random(21)
        q = form(K, [random_element(rng, K) for _ in range(3)])
        assert form_from_dict(form_to_dict(q)) == q

    def test_unknown_keys_rejected(self):
        F = make_base_field(["t1"])
        obj = form_to_dict(form(F, [F.one()]))
        obj["name"] = "q"
        with pytest.raises(ParseError):
            form_from_dict(obj)

    def test_extension_coefficients_survive(self):
        F = make_base_field(["t1", "t2"])
        q = form(F, [F.one(), F.gen("t1")])
        K = function_field(form(F, [F.one(), F.gen("t1"), F.gen("t2")])).result_field
        ext = extend_scalars(q, K)
        assert form_from_dict(form_to_dict(ext)) == ext

    def test_content_hash_stable(self):
        F = make_base_field(["t1"])
        obj = form_to_dict(form(F, [F.one()]))
        assert content_hash(obj) == content_hash(form_to_dict(form(F, [F.one()])))
        assert canonical_json({"b": 1, "a": 2}) == '{"a":2,"b":1}'
