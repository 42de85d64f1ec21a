import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rankmetric.errors import DivisionByZero, InvalidModulus, NotPrime, ReducibleModulus, SpecMismatch, UnsupportedSize
from rankmetric.gf import GF, FieldElement, add, default_modulus, field_new, inv, is_irreducible, mul


def clmul_mod(a, b, mod):
    """Carry-less product of bit-encoded F_2 polynomials, reduced mod ``mod``."""
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
    deg = mod.bit_length() - 1
    while r.bit_length() - 1 >= deg:
        r ^= mod << (r.bit_length() - 1 - deg)
    return r


SMALL_ORDERS = [2, 3, 4, 5, 7, 8, 9, 11, 13, 16]


def test_prime_field_default():
    F = field_new(2, 1)
    assert F.q == 2
    assert F.modulus == (0, 1)  # x
    assert F.header() == "GF 2 1 2"


def test_example_field():
    F = field_new(2, 3, (1, 1, 0, 1))
    assert F.q == 8
    assert F.modulus_int == 11
    assert field_new(2, 3) == F  # x^3 + x + 1 is also the default
    assert field_new(2, 3, 11) is F


def test_reducible_modulus():
    with pytest.raises(ReducibleModulus):
        field_new(2, 2, (0, 1, 1))  # x^2 + x


@pytest.mark.parametrize("args,exc", [
    ((4, 1), NotPrime),
    ((1, 1), NotPrime),
    ((2, 17), UnsupportedSize),
    ((257, 2), UnsupportedSize),
    ((2, 0), UnsupportedSize),
])
def test_field_errors(args, exc):
    with pytest.raises(exc):
        field_new(*args)


def test_invalid_moduli():
    with pytest.raises(InvalidModulus):
        field_new(2, 2, (1, 1))  # wrong degree
    with pytest.raises(InvalidModulus):
        field_new(3, 2, (1, 0, 2))  # not monic
    with pytest.raises(ReducibleModulus):
        field_new(3, 2, (2, 0, 1))  # x^2 - 1


def test_default_modulus_is_smallest_irreducible():
    for p, e in [(2, 2), (2, 4), (3, 2), (5, 2), (2, 8)]:
        mod = default_modulus(p, e)
        code = sum(c * p ** k for k, c in enumerate(mod))
        for smaller in range(p ** e, code):
            digits = [(smaller // p ** k) % p for k in range(e + 1)]
            assert not is_irreducible(digits, p)


def test_irreducible_against_root_search():
    # degree 2 and 3 polynomials are irreducible iff they have no root
    for p in (2, 3, 5):
        for e in (2, 3):
            for low in range(p ** e):
                digits = [(low // p ** k) % p for k in range(e)] + [1]
                has_root = any(sum(c * x ** k for k, c in enumerate(digits)) % p == 0 for x in range(p))
                assert is_irreducible(digits, p) == (not has_root)


def test_characteristic_two():
    F = field_new(2, 1)
    assert add(F(1), F(1)) == F(0)


def test_alpha_products(F8):
    a = F8.alpha
    assert a.value == 2
    assert mul(a, a ** 2).value == 0b011  # alpha^3 = alpha + 1


def test_inverse_of_alpha(F8):
    # oracle: scan the carry-less multiplication table for the element with product 1
    expected = [b for b in range(1, 8) if clmul_mod(2, b, 0b1011) == 1]
    assert expected == [0b101]  # alpha^2 + 1
    assert inv(F8.alpha).value == 0b101


def test_f8_multiplication_matches_clmul(F8):
    for a in range(8):
        for b in range(8):
            assert F8.mul(a, b) == clmul_mod(a, b, 0b1011)


def test_gf256_matches_clmul():
    F = field_new(2, 8, 0x11B)
    rng = random.Random(1)
    for _ in range(2000):
        a, b = rng.randrange(256), rng.randrange(256)
        assert F.mul(a, b) == clmul_mod(a, b, 0x11B)


def test_non_primitive_modulus():
    # x^4+x^3+x^2+x+1 is irreducible but its root has order 5
    F = field_new(2, 4, 0b11111)
    for a in range(16):
        for b in range(16):
            assert F.mul(a, b) == clmul_mod(a, b, 0b11111)


def test_prime_field_arithmetic():
    F = field_new(7, 1)
    for a in range(7):
        for b in range(7):
            assert F.add(a, b) == (a + b) % 7
            assert F.mul(a, b) == (a * b) % 7


def test_spec_mismatch(F8):
    F2 = field_new(2, 1)
    with pytest.raises(SpecMismatch):
        F8(1) + F2(1)


def test_division_by_zero(F8):
    with pytest.raises(DivisionByZero):
        inv(F8(0))
    with pytest.raises(ZeroDivisionError):
        F8(3) / F8(0)


def test_element_range(F8):
    with pytest.raises(ValueError):
        FieldElement(F8, 8)


@pytest.mark.parametrize("q", SMALL_ORDERS)
def test_field_axioms_exhaustive(q):
    F = GF(q)
    els = range(q)
    for a, b in itertools.product(els, repeat=2):
        assert F.add(a, b) == F.add(b, a)
        assert F.mul(a, b) == F.mul(b, a)
        assert F.add(a, F.neg(a)) == 0
    for a, b, c in itertools.product(els, repeat=3):
        assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


@pytest.mark.parametrize("q", [2, 4, 8, 9, 16, 25, 27, 49, 64, 81, 121, 128, 243, 256])
def test_inverses_exhaustive(q):
    F = GF(q)
    for a in range(1, q):
        assert F.mul(a, F.inv(a)) == 1


@pytest.mark.parametrize("q", [2, 4, 8, 9, 16, 27, 125, 256, 1024, 3125])
def test_frobenius_order(q):
    F = GF(q)
    for a in range(min(q, 300)):
        assert F.pow(a, q) == a


fields = st.sampled_from([GF(q) for q in (32, 49, 125, 243, 256, 625, 729, 1024, 4096)])


@settings(max_examples=200, deadline=None)
@given(fields, st.data())
def test_field_axioms_random(F, data):
    a, b, c = (data.draw(st.integers(0, F.q - 1)) for _ in range(3))
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
    assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
    assert F.sub(F.add(a, b), b) == a


def test_largest_field_builds():
    F = field_new(2, 16)
    assert F.mul(F.inv(12345), 12345) == 1
