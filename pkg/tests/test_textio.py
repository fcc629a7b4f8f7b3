from __future__ import annotations

import json

import pytest
from hypothesis import given, settings, strategies as st

from leonard.affine import AffineMap
from leonard.errors import DocumentError
from leonard.field import QQ, PrimeField
from leonard.parray import arrays_equal
from leonard.textio import (array_to_json, format_document, format_documents, format_map, parse_document,
                            parse_documents, parse_map, typedata_to_json)
from leonard.typefit import fit
from corpus import corpus

PA_A_TEXT = """# self-dual reference array
name: PA-A
field: Q
d: 3
theta: -3/2 -1/2 1/2 3/2
theta_star: -3/2 -1/2 1/2 3/2
varphi: -3/2 -2 -3/2
phi: 3/2 2 3/2
"""


def test_parse_reference(pa_a):
    doc = parse_document(PA_A_TEXT)
    assert doc.name == "PA-A" and arrays_equal(doc.array, pa_a)


def test_canonical_text_is_a_fixed_point(pa_a):
    text = format_document(pa_a, "PA-A")
    assert text == PA_A_TEXT.split("\n", 1)[1]
    assert format_document(parse_document(text).array, "PA-A") == text


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(corpus()))
def test_roundtrip_over_all_fields(entry):
    text = format_document(entry.pa, "x")
    back = parse_document(text).array
    assert back.field == entry.pa.field and arrays_equal(back, entry.pa)
    assert format_document(back, "x") == text
    js = json.dumps(array_to_json(entry.pa))
    assert arrays_equal(parse_document(js).array, entry.pa)


def test_multiple_documents(pa_a, pa_b):
    text = format_documents([parse_document(PA_A_TEXT), parse_document(format_document(pa_b))])
    docs = parse_documents(text)
    assert len(docs) == 2 and arrays_equal(docs[1].array, pa_b)


def test_default_field_applies_without_field_line():
    text = "d: 1\ntheta: 0 1\ntheta_star: 0 1\nvarphi: 1\nphi: 2\n"
    assert parse_document(text).array.field is QQ
    assert parse_document(text, PrimeField(5)).array.field == PrimeField(5)


@pytest.mark.parametrize("text,line,column", [
    ("d: 3\ntheta: -3//2 0 1 2\ntheta_star: 0 1 2 3\nvarphi: 1 1 1\nphi: 1 1 1\n", 2, 8),
    ("d: 3\ncolour: red\n", 2, 1),
    ("d: 3\nd: 4\n", 2, 1),
    ("d: 3\ntheta 1 2\n", 2, 1),
    ("field: GF(9)\nd: 1\ntheta: 0 1\ntheta_star: 0 1\nvarphi: 1\nphi: 2\n", 1, 8),
])
def test_errors_carry_position(text, line, column):
    with pytest.raises(DocumentError) as info:
        parse_documents(text)
    assert (info.value.line, info.value.column) == (line, column)
    assert str(info.value).startswith(f"line {line}, column {column}: ")


def test_missing_key_and_bad_lengths():
    with pytest.raises(DocumentError, match="missing key 'phi'"):
        parse_document("d: 1\ntheta: 0 1\ntheta_star: 0 1\nvarphi: 1\n")
    with pytest.raises(DocumentError):
        parse_document("d: 2\ntheta: 0 1\ntheta_star: 0 1\nvarphi: 1\nphi: 2\n")
    with pytest.raises(DocumentError):
        parse_document('{"d": 1, "theta": [0, 1], "extra": 1}')


def test_map_text():
    m = AffineMap(2, 1, 1, 0)
    assert format_map(m, QQ) == "[2, 1, 1, 0]"
    assert parse_map("[2, 1, 1, 0]", QQ) == m
    with pytest.raises(DocumentError):
        parse_map("2 1 1 0", QQ)


def test_typedata_record(pa_b):
    rec = typedata_to_json(fit(pa_b))
    assert rec["type"] == "II" and rec["scalars"]["h_star"] == "-1/5"
