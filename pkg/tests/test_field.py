from __future__ import annotations

from fractions import Fraction as Fr

import pytest
from hypothesis import given, settings, strategies as st

from leonard.errors import ExtensionRequired, FieldMismatch
from leonard.field import (QQ, BinaryField, Mod, PrimeField, QuadraticExtension, field_of, parse_field,
                           solve_quadratic)
from oracles import egcd_inverse

GF7 = PrimeField(7)
GF11 = PrimeField(11)
GF8 = BinaryField(3)
QR2 = QuadraticExtension(QQ, 2)
GF7R3 = QuadraticExtension(GF7, 3)

small = st.integers(-50, 50)
rationals = st.builds(Fr, small, st.integers(1, 12))


def elements(F):
    if F is QQ:
        return rationals
    if isinstance(F, PrimeField):
        return st.integers(0, F.p - 1).map(F)
    if isinstance(F, BinaryField):
        return st.integers(0, F.order - 1).map(F.from_code)
    return st.tuples(elements(F.base), elements(F.base)).map(lambda ab: F.element(*ab))


FIELDS = [QQ, GF7, PrimeField(101), GF8, BinaryField(4), QR2, GF7R3]


def test_rational_addition():
    assert QQ(Fr(1, 2)) + Fr(1, 3) == Fr(5, 6)


def test_gf7_division_matches_egcd():
    assert egcd_inverse(2, 7) == 4
    assert GF7(3) / GF7(2) == GF7(3 * egcd_inverse(2, 7))
    assert (GF7(3) / GF7(2)).value == 5


def test_quadratic_norm_identity():
    w = QR2.generator
    assert (1 + w) * (1 - w) == -1


def test_gf_inverse_against_egcd_for_all_residues():
    F = PrimeField(101)
    for a in range(1, 101):
        assert (1 / F(a)).value == egcd_inverse(a, 101)


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: F.name)
def test_field_axioms(F):
    @settings(max_examples=60, deadline=None)
    @given(elements(F), elements(F), elements(F))
    def check(a, b, c):
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a + b == b + a and a * b == b * a
        assert a * (b + c) == a * b + a * c
        assert a - a == 0 and a + F.zero == a and a * F.one == a
        if a != 0:
            assert a * (1 / a) == 1
            assert (b / a) * a == b

    check()


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: F.name)
def test_format_parse_roundtrip(F):
    @settings(max_examples=60, deadline=None)
    @given(elements(F))
    def check(a):
        text = F.format(a)
        assert F.parse(text) == a
        assert F.format(F.parse(text)) == text

    check()


def test_canonical_forms():
    assert Mod(-1, GF7).value == 6
    assert QQ.format(Fr(6, -4)) == "-3/2"
    x = QR2.element(Fr(3, 2), 0)
    assert x == Fr(3, 2) and hash(x) == hash(Fr(3, 2))
    assert QR2.format(QR2.element(1, -2)) == "1-2*sqrt(2)"
    assert QR2.parse("-sqrt(2)") == -QR2.generator
    assert GF7R3.parse("2+5*sqrt(3)") == GF7R3.element(2, 5)


def test_mixing_fields_is_rejected():
    with pytest.raises(FieldMismatch):
        GF7(1) + GF11(1)
    with pytest.raises(FieldMismatch):
        GF7(1) + Fr(1, 2)
    with pytest.raises(FieldMismatch):
        GF8(1) * GF7(1)
    with pytest.raises(FieldMismatch):
        QQ(GF7(3))


def test_division_by_zero():
    for F in FIELDS:
        with pytest.raises(ZeroDivisionError):
            F.one / F.zero


def test_prime_field_needs_prime():
    with pytest.raises(ValueError):
        PrimeField(9)


def test_extension_needs_nonsquare():
    with pytest.raises(ValueError):
        QuadraticExtension(QQ, 4)
    with pytest.raises(ValueError):
        QuadraticExtension(GF7, 2)  # 3^2 = 2


def test_solve_quadratic_examples():
    assert solve_quadratic(Fr(-2), Fr(1)).roots == (1,)
    assert solve_quadratic(Fr(2), Fr(1)).roots == (-1,)
    res = solve_quadratic(Fr(-3), Fr(1))
    assert res.requires_extension and res.discriminant == 5 and res.roots == ()


@pytest.mark.parametrize("F", [QQ, GF7, PrimeField(13), GF8, BinaryField(4)], ids=lambda F: F.name)
def test_solve_quadratic_roots_satisfy_equation(F):
    @settings(max_examples=80, deadline=None)
    @given(elements(F), elements(F))
    def check(b, c):
        res = solve_quadratic(b, c, F)
        for r in res.roots:
            assert r * r + b * r + c == 0
        if res.requires_extension and F.characteristic != 2:
            K, w = F.quadratic_extension(res.discriminant)
            for r in ((-K(b) + w) / 2, (-K(b) - w) / 2):
                assert r * r + b * r + c == 0
        if F.characteristic == 2 and isinstance(F, BinaryField):
            brute = [x for x in F.elements() if x * x + b * x + c == 0]
            assert set(res.roots) == set(brute)

    check()


def test_quadratic_extension_for_rational_discriminant():
    K, w = QQ.quadratic_extension(Fr(20, 9))
    assert K.D == 5 and w * w == Fr(20, 9)
    K, w = QQ.quadratic_extension(-12)
    assert K.D == -3 and w * w == -12


def test_extension_over_binary_field_is_unavailable():
    with pytest.raises(ExtensionRequired):
        GF8.quadratic_extension(GF8.from_code(3))


def test_binary_field_sqrt_inverts_frobenius():
    F = BinaryField(5)
    for x in F.elements():
        assert F.sqrt(x * x) == x


def test_extension_sqrt():
    for a in range(7):
        for b in range(7):
            x = GF7R3.element(a, b)
            r = GF7R3.sqrt(x * x)
            assert r is not None and r * r == x * x


@pytest.mark.parametrize("text,name", [
    ("Q", "Q"), ("q", "Q"), ("GF(7)", "GF(7)"), ("gf7", "GF(7)"), ("GF(8)", "GF(2^3)"),
    ("GF(2^4)", "GF(2^4)"), ("Q(sqrt(5))", "Q(sqrt(5))"), ("GF(7)(sqrt(3))", "GF(7)(sqrt(3))"),
])
def test_parse_field(text, name):
    assert parse_field(text).name == name


def test_parse_field_rejects_nonsense():
    for bad in ("GF(9)", "R", "GF(3^2)", "Q(sqrt(4))"):
        with pytest.raises(ValueError):
            parse_field(bad)


def test_field_of():
    assert field_of(Fr(1, 2)) is QQ and field_of(3) is QQ
    assert field_of(GF7(3)) == GF7


def test_malformed_rational_rejected():
    for bad in ("3//2", "1/", "/2", "1.5", "a"):
        with pytest.raises(ValueError):
            QQ.parse(bad)
