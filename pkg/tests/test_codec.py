import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from foldecode import codec, field_new
from foldecode.errors import DegreeTooLarge, IndexOutOfRange, InsufficientPlaces, LengthMismatch, ShapeMismatch
from foldecode.function_field import HermitianBackend, RationalBackend

F4 = field_new(2, 2)
F16 = field_new(2, 4)


@pytest.fixture(scope="module")
def code16():
    return codec.make_params(RationalBackend(F16), 4, 3, 2)


def test_rate_and_distance_bounds(code16):
    assert code16.rate == Fraction(1, 4) == code16.rate_bound
    assert code16.distance_bound == Fraction(5, 2)
    assert code16.distance_bound_int == 3


def test_boundary_and_errors():
    B = RationalBackend(F4)
    assert codec.make_params(B, 3, 1, 2).k == 3
    with pytest.raises(DegreeTooLarge):
        codec.make_params(B, 3, 1, 3)
    with pytest.raises(InsufficientPlaces):
        codec.make_params(B, 3, 2, 1)


def test_small_encoding():
    P = codec.make_params(RationalBackend(F4), 1, 3, 1)
    assert codec.encode(P, [0, 1]) == ((1,), (2,), (3,))
    assert codec.encode(P, [0, 0]) == ((0,), (0,), (0,))
    with pytest.raises(LengthMismatch):
        codec.encode(P, [1])


def test_windows_follow_sigma(code16):
    B = code16.backend
    for w in code16.windows:
        for a, b in zip(w, w[1:]):
            assert B.sigma_act_place(a) == b
    assert len(set(code16.places)) == 12


def test_window_shift_permutes_rows(code16):
    """Evaluating f^(sigma^-1) on the windows equals f shifted by one row."""
    B = code16.backend
    rng = random.Random(0)
    msg = codec.random_message(code16, rng)
    f = B.function_from_coeffs(code16.basis, msg)
    g = B.sigma_act_fn(f, -1)
    word = codec.encode(code16, msg)
    for i, w in enumerate(code16.windows):
        shifted = [B.evaluate(g, P) for P in w]
        assert shifted[:-1] == list(word[i][1:])


@settings(max_examples=30)
@given(st.integers(0, 15), st.lists(st.integers(0, 15), min_size=3, max_size=3),
       st.lists(st.integers(0, 15), min_size=3, max_size=3))
def test_linearity(a, u, v):
    P = codec.make_params(RationalBackend(F16), 4, 3, 2)
    combo = [F16.add(F16.mul(a, x), y) for x, y in zip(u, v)]
    cu, cv = codec.encode(P, u), codec.encode(P, v)
    expect = tuple(tuple(F16.add(F16.mul(a, x), y) for x, y in zip(c1, c2)) for c1, c2 in zip(cu, cv))
    assert codec.encode(P, combo) == expect


def test_corrupt_behaviour(code16):
    w = codec.encode(code16, [1, 2, 3])
    assert codec.corrupt(w, [], seed=3, q=16) == w
    full = codec.corrupt(w, range(3), seed=3, q=16)
    assert codec.column_distance(full, w) == 3
    assert codec.corrupt(w, [1], seed=9, q=16) == codec.corrupt(w, [1], seed=9, q=16)
    assert codec.corrupt_random(w, 2, seed=4, q=16) == codec.corrupt_random(w, 2, seed=4, q=16)
    with pytest.raises(IndexOutOfRange):
        codec.corrupt(w, [3], q=16)


def test_column_distance():
    a = ((1, 2), (3, 4))
    assert codec.column_distance(a, a) == 0
    assert codec.column_distance(a, ((1, 2), (3, 5))) == 1
    with pytest.raises(ShapeMismatch):
        codec.column_distance(a, ((1, 2),))


@pytest.mark.parametrize("make,m,N,l", [
    (lambda: RationalBackend(F4, "translate"), 2, 2, 1),
    (lambda: RationalBackend(F4), 3, 1, 2),
    (lambda: RationalBackend(field_new(5)), 2, 2, 2),
    (lambda: HermitianBackend(2), 3, 2, 3),
])
def test_injective_and_weight_bound(make, m, N, l):
    P = codec.make_params(make(), m, N, l)
    words = {codec.encode(P, msg) for msg in codec.all_messages(P)}
    assert len(words) == P.q**P.k
    assert codec.minimum_distance(P) >= P.distance_bound_int


def test_json_roundtrip(code16):
    w = codec.encode(code16, [1, 0, 7])
    assert codec.word_from_json(codec.word_to_json(w), 16) == w
    assert codec.message_from_text("0x1, 0x0 0x7", 16) == [1, 0, 7]
