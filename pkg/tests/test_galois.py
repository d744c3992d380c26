import itertools
import random

import pytest
from hypothesis import given, strategies as st

from foldecode import FieldElement, embed, field_new, primitive_element
from foldecode.errors import DivisionByZero, FieldMismatch, IncompatibleFields, NotPrime, ReducibleModulus

SMALL = [(2, 1), (3, 1), (2, 2), (5, 1), (7, 1), (2, 3), (3, 2), (11, 1), (13, 1), (2, 4)]


def naive_divides(f, g, p):
    """Does g divide f over GF(p)?  Plain long division, no shared code."""
    f = list(f)
    while len(f) >= len(g) and any(f):
        while f and f[-1] == 0:
            f.pop()
        if len(f) < len(g):
            break
        c = f[-1] * pow(g[-1], p - 2, p) % p
        shift = len(f) - len(g)
        for i, gi in enumerate(g):
            f[shift + i] = (f[shift + i] - c * gi) % p
    return not any(f)


def naive_irreducible(f, p):
    k = len(f) - 1
    for d in range(1, k // 2 + 1):
        for lower in itertools.product(range(p), repeat=d):
            if naive_divides(f, list(lower) + [1], p):
                return False
    return True


def lex_first_irreducible(p, k):
    for code in range(p**k):
        lower = [(code // p**i) % p for i in range(k)]
        if naive_irreducible(lower + [1], p):
            return lower + [1]


@pytest.mark.parametrize("p,k", [(2, 1), (2, 2), (2, 3), (2, 4), (3, 2), (5, 2), (2, 8), (3, 3)])
def test_canonical_modulus_is_lex_smallest(p, k):
    assert list(field_new(p, k).modulus) == lex_first_irreducible(p, k)


def test_named_fields():
    assert list(field_new(2, 4).modulus) == [1, 1, 0, 0, 1]
    assert field_new(2, 1).q == 2
    assert field_new(2, 2, [1, 1, 1]).q == 4


def test_bad_inputs():
    with pytest.raises(NotPrime):
        field_new(4, 1)
    with pytest.raises(ReducibleModulus):
        field_new(2, 2, [1, 0, 1])


def test_gf4_omega_squared():
    F = field_new(2, 2)
    w = F.element(2)
    assert (w * w).value == 3  # omega + 1


@pytest.mark.parametrize("p,k", SMALL)
def test_axioms_exhaustive(p, k):
    F = field_new(p, k)
    els = list(F.elements())
    for a in els:
        assert F.add(a, 0) == a and F.mul(a, 1) == a
        assert F.add(a, F.neg(a)) == 0
        if a:
            assert F.mul(a, F.inv(a)) == 1
            assert F.pow(a, F.q - 1) == 1
        for b in els:
            assert F.add(a, b) == F.add(b, a)
            assert F.mul(a, b) == F.mul(b, a) == F.mul_poly(a, b)
            for c in els:
                assert F.add(F.add(a, b), c) == F.add(a, F.add(b, c))
                assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
                assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


@pytest.mark.parametrize("p,k", [(2, 8), (3, 5), (5, 3), (2, 10)])
def test_axioms_random(p, k):
    F = field_new(p, k)
    rng = random.Random(p * 100 + k)
    for _ in range(10_000):
        a, b, c = (rng.randrange(F.q) for _ in range(3))
        assert F.mul(a, b) == F.mul_poly(a, b)
        assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))
        assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))


@pytest.mark.parametrize("p,k", [(2, 2), (2, 4), (3, 2), (5, 2), (2, 8), (3, 5)])
def test_frobenius_additive(p, k):
    F = field_new(p, k)
    for a in F.elements():
        for b in F.elements():
            assert F.pow(F.add(a, b), p) == F.add(F.pow(a, p), F.pow(b, p))
        assert F.frobenius(a) == F.pow(a, p)


def test_gf16_all_units_order_divides_15():
    F = field_new(2, 4)
    assert all(F.pow(a, 15) == 1 for a in range(1, 16))


@pytest.mark.parametrize("p,k,expected", [(2, 1, 1), (2, 2, 2), (2, 4, 2)])
def test_primitive_element(p, k, expected):
    F = field_new(p, k)
    g = primitive_element(F)
    assert g.value == expected
    n = F.q - 1
    assert F.pow(g.value, n) == 1
    for r in range(1, n):
        if n % r == 0:
            assert F.pow(g.value, r) != 1


@pytest.mark.parametrize("p,k", [(3, 2), (5, 2), (2, 8), (7, 2)])
def test_primitive_element_order(p, k):
    F = field_new(p, k)
    g = F.primitive_element_int
    seen = {F.pow(g, i) for i in range(F.q - 1)}
    assert len(seen) == F.q - 1


def test_embed_gf4_gf16():
    sub, sup = field_new(2, 2), field_new(2, 4)
    assert embed(sub, sup, 1).value == 1
    w = embed(sub, sup, 2)
    gamma = sup.primitive_element_int
    assert w.value == sup.pow(gamma, 5) == 0x6
    for a in sub.elements():
        for b in sub.elements():
            assert embed(sub, sup, sub.mul(a, b)).value == sup.mul(embed(sub, sup, a).value, embed(sub, sup, b).value)
            assert embed(sub, sup, sub.add(a, b)).value == sup.add(embed(sub, sup, a).value, embed(sub, sup, b).value)


def test_embed_gf2_gf4_and_mismatch():
    assert embed(field_new(2), field_new(2, 2), 1).value == 1
    with pytest.raises(IncompatibleFields):
        embed(field_new(2), field_new(2, 4), 1)


def test_cross_field_is_error():
    a = field_new(2, 2).element(1)
    b = field_new(3, 1).element(1)
    with pytest.raises(FieldMismatch):
        a + b


def test_inverse_of_zero():
    F = field_new(2, 4)
    with pytest.raises(DivisionByZero):
        F.inv(0)
    with pytest.raises(ZeroDivisionError):
        F.element(3) / 0


@given(st.integers(0, 255), st.integers(0, 255), st.integers(-300, 300))
def test_element_ops_match_int_ops(a, b, e):
    F = field_new(2, 8)
    x, y = FieldElement(F, a), FieldElement(F, b)
    assert (x * y).value == F.mul(a, b)
    assert (x - y + y).value == a
    if a:
        assert (x**e).value == F.pow(a, e)
        assert (x * x.inv()).value == 1


def test_vector_roundtrip():
    F = field_new(3, 2)
    for a in F.elements():
        assert F.from_vector(F.to_vector(a)) == a
    assert field_new(2, 4).element(0x9).to_hex() == "0x9"
