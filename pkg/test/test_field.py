r""" Tests for GF(2^n) arithmetic, checked against galois where an oracle helps """

import galois
import numpy as np
import pytest

from suzuki_mst3.errors import ConfigurationError, DomainError, ParseError, UsageError
from suzuki_mst3.field import (DEFAULT_MODULI, FieldElement, FieldSpec, clmul_mod, discrete_log, ff_add,
                               ff_inv, ff_mul, ff_pow, ff_sqr, frobenius_pow, is_irreducible, parse_element,
                               parse_field_spec, power_form, random_element)

GF8 = FieldSpec(3, 0xB)


def test_worked_products_gf8():
    x, one = GF8.element(0b010), GF8.one()
    assert ff_mul(x + one, GF8.element(0b101)) == GF8.element(0b100)
    assert ff_inv(x) == GF8.element(0b101)
    assert ff_pow(x, 4) == GF8.element(0b110)
    assert ff_add(x, x) == GF8.zero()


def test_products_match_galois():
    rng = np.random.default_rng(2024)
    for n in (4, 7, 10, 13):
        spec = FieldSpec.default(n)
        GF = galois.GF(2 ** n, irreducible_poly=galois.Poly.Int(spec.modulus))
        a = rng.integers(0, spec.order, size=500)
        b = rng.integers(0, spec.order, size=500)
        expected = GF(a) * GF(b)
        for ai, bi, ci in zip(a, b, expected):
            assert spec.mul(int(ai), int(bi)) == int(ci)
            assert clmul_mod(int(ai), int(bi), n, spec.modulus) == int(ci)


def test_irreducibility_matches_galois():
    for modulus in range(2, 1 << 9):
        assert is_irreducible(modulus) == galois.Poly.Int(modulus).is_irreducible(), hex(modulus)


def test_default_moduli_are_primitive():
    for n, modulus in DEFAULT_MODULI.items():
        spec = FieldSpec(n, modulus)
        assert spec.generator == 0b10
        assert discrete_log(spec.element(0b10)) == 1


def test_inverse_and_frobenius():
    rng = np.random.default_rng(7)
    spec = FieldSpec.default(10)
    for _ in range(300):
        a = random_element(rng, spec, nonzero=True)
        b = random_element(rng, spec)
        assert a * ff_inv(a) == spec.one()
        assert frobenius_pow(a, 1) == ff_sqr(a)
        assert frobenius_pow(a + b, 3) == frobenius_pow(a, 3) + frobenius_pow(b, 3)
        assert frobenius_pow(a, spec.n) == a
        assert frobenius_pow(a, 0) == a
        assert ff_pow(a, -1) == ff_inv(a)


def test_zero_has_no_inverse():
    with pytest.raises(DomainError):
        ff_inv(GF8.zero())
    with pytest.raises(DomainError):
        discrete_log(GF8.zero())
    with pytest.raises(DomainError):
        frobenius_pow(GF8.one(), -1)


def test_mixed_fields_refused():
    with pytest.raises(UsageError):
        ff_mul(GF8.one(), FieldSpec.default(4).one())


def test_bad_field_specs():
    with pytest.raises(ConfigurationError):
        FieldSpec(4, 0x15)  # (x^2 + x + 1)^2
    with pytest.raises(ConfigurationError):
        FieldSpec(1, 0x3)
    with pytest.raises(ConfigurationError):
        FieldSpec(5, 0x13)
    with pytest.raises(ConfigurationError):
        FieldSpec.default(17)


def test_text_forms():
    spec = FieldSpec.default(7)
    v = FieldElement.from_bitstring("0001100", spec)
    assert v.bits == 0b0011000
    assert v.to_bitstring() == "0001100"
    assert str(v) == "18"
    assert parse_element("18", spec) == v
    assert parse_field_spec(str(spec)) == spec
    assert power_form(spec.zero()) == "0"
    assert power_form(ff_pow(spec.element(0b10), 34)) == "α^34"


def test_parse_element_is_strict():
    spec = FieldSpec.default(7)
    for bad in ("+1", "1", "123", "80", "g0"):
        with pytest.raises(ParseError):
            parse_element(bad, spec, line=5)
    with pytest.raises(ParseError, match="line 5"):
        parse_element("zz", spec, line=5)
    with pytest.raises(ParseError):
        parse_field_spec("degree seven")
    with pytest.raises(ParseError):
        FieldElement.from_bitstring("0012000", spec)
