import random

import pytest
from hypothesis import given, settings, strategies as st

from foldecode import field_new, linalg, poly
from foldecode.errors import BadParameter, PoleAtPlace, PreconditionError
from foldecode.function_field import (
    HermitianBackend,
    RationalBackend,
    RationalFunction,
    backend_from_descriptor,
)

F4 = field_new(2, 2)
F16 = field_new(2, 4)

BACKENDS = {
    "rat16": lambda: RationalBackend(F16),
    "rat9": lambda: RationalBackend(field_new(3, 2)),
    "rat4t": lambda: RationalBackend(F4, "translate"),
    "rat9t": lambda: RationalBackend(field_new(3, 2), "translate"),
    "herm2": lambda: HermitianBackend(2),
    "herm3": lambda: HermitianBackend(3),
}


@pytest.fixture(params=sorted(BACKENDS))
def backend(request):
    return BACKENDS[request.param]()


def all_places(B):
    return [P for o in B.rational_places() for P in o.places]


def test_orbits_gf4():
    B = RationalBackend(F4)
    orbits = B.rational_places()
    assert [o.length for o in orbits] == [3, 1]
    assert [P.coords[0] for P in orbits[0].places] == [1, 2, 3]
    assert orbits[1].places[0].coords == (0,)


def test_orbit_of_one_gf16():
    orbits = RationalBackend(F16).rational_places()
    assert orbits[0].representative.coords == (1,)
    assert orbits[0].length == 15


def test_hermitian_points():
    B = HermitianBackend(2)
    pts = B.affine_points()
    assert len(pts) == 8
    assert all(F4.add(F4.pow(b, 2), b) == F4.pow(a, 3) for a, b in pts)
    assert B.genus == 1
    assert sum(o.length for o in B.rational_places()) == 8


def test_rr_bases():
    R = RationalBackend(F16)
    assert R.rr_basis(2).labels == ("1", "X", "X^2")
    assert R.rr_basis(0).dim == 1
    H = HermitianBackend(2)
    b = H.rr_basis(4)
    assert sorted(b.labels) == sorted(["x^0*y^0", "x^1*y^0", "x^2*y^0", "x^0*y^1"])
    assert b.dim == 4 - H.genus + 1


def test_evaluate_examples():
    R = RationalBackend(F4)
    assert R.evaluate(RationalFunction.monomial(2), R.place(2)) == 3
    with pytest.raises(PoleAtPlace):
        R.evaluate(RationalFunction.make(F4, [1], [0, 1]), R.place(0))
    H = HermitianBackend(2)
    f = H.function_from_coeffs(H.rr_basis(4), [0, 0, 1, 1])  # y + x^2
    assert H.evaluate(f, H.place(1, 2)) == 3


def test_sigma_on_places():
    R = RationalBackend(F4)
    assert R.sigma_act_place(R.place(1)).coords == (2,)
    H = HermitianBackend(2)
    img = H.sigma_act_place(H.place(1, 2))
    assert img.coords == (2, 2)
    assert H.on_curve(*img.coords)


def test_sigma_inverse_of_x():
    R = RationalBackend(F4)
    X = RationalFunction.monomial(1)
    g = R.sigma_act_fn(X, -1)
    P = R.place(1)
    assert R.evaluate(g, P) == R.evaluate(X, R.sigma_act_place(P)) == 2


def test_compatibility_law(backend):
    """f(P^sigma^k) == f^(sigma^-k)(P) for every basis function and place."""
    B = backend
    l = 4
    for z in B.rr_basis(l).functions:
        for k in (1, 2, -1):
            g = B.sigma_act_fn(z, -k)
            for P in all_places(B):
                assert B.evaluate(z, B.sigma_act_place(P, k)) == B.evaluate(g, P)


def test_sigma_permutes_places(backend):
    places = set(all_places(backend))
    assert {backend.sigma_act_place(P) for P in places} == places
    assert backend.sigma_act_place(backend.infinity) == backend.infinity


@pytest.mark.parametrize("l", [2, 3, 5])
def test_conjugate_expansion(backend, l):
    """Expansion of f at P^sigma equals expansion of f^(sigma^-1) at P."""
    B = backend
    prec = l * B.e + 1
    for o in B.rational_places():
        for P in o.places:
            if not B.anchor_parameter_ok(P):
                continue
            Ps = B.sigma_act_place(P)
            for z in B.rr_basis(l).functions:
                a = B.local_expand(z, Ps, prec=prec).dense(prec)
                b = B.local_expand(B.sigma_act_fn(z, -1), P, prec=prec).dense(prec)
                assert a == b


def test_expansion_matrix_matches_local_expand(backend):
    B = backend
    basis = B.rr_basis(4)
    P = next(P for P in all_places(B) if B.anchor_parameter_ok(P))
    M = B.expansion_matrix(basis, P, 6)
    for row, z in zip(M, basis.functions):
        assert list(row) == B.local_expand(z, P, prec=6).dense(6)


def test_riemann_roch_dimension_by_rank(backend):
    B = backend
    places = all_places(B)
    for l in range(0, 7):
        basis = B.rr_basis(l)
        if basis.dim > len(places):
            break
        A = B.evaluation_matrix(basis, places)
        assert linalg.rank(B.F, A) == basis.dim
        if l * B.e > 2 * B.genus - 2:
            assert basis.dim == l * B.e - B.genus + 1


@pytest.mark.parametrize("name", ["rat16", "rat9t", "herm2", "herm3"])
def test_truncation(name):
    """Nonzero f in L(lD) has a nonzero expansion coefficient at order <= le."""
    B = BACKENDS[name]()
    rng = random.Random(1)
    P = next(P for P in all_places(B) if B.anchor_parameter_ok(P))
    for l in (1, 2, 4):
        basis = B.rr_basis(l)
        M = B.expansion_matrix(basis, P, l * B.e)
        assert linalg.rank(B.F, M) == basis.dim  # no nonzero combination is O(t^(le+1))
        for _ in range(20):
            c = [rng.randrange(B.q) for _ in range(basis.dim)]
            if not any(c):
                continue
            series = linalg.matvec(B.F, list(zip(*M)), c)
            assert any(series)


def test_local_expansion_oracle_rational():
    B = RationalBackend(F16)
    rng = random.Random(3)
    for _ in range(15):
        num = poly.trim([rng.randrange(16) for _ in range(4)]) or [1]
        den = poly.trim([rng.randrange(16) for _ in range(3)]) or [1]
        f = RationalFunction.make(F16, num, den)
        a = rng.randrange(1, 16)
        P = B.place(a)
        try:
            fast = B.local_expand(f, P, prec=6)
        except Exception:
            with pytest.raises(Exception):
                B.local_expand_iterative(f, P, prec=6)
            continue
        slow = B.local_expand_iterative(f, P, prec=6)
        assert (fast.valuation, fast.coeffs) == (slow.valuation, slow.coeffs)


def test_expansion_of_parameter_powers():
    B = RationalBackend(F16)
    P = B.place(1)
    t = RationalFunction.make(F16, [1] + [0] * 14 + [1])  # X^15 - 1
    t3 = RationalFunction.make(F16, poly.power(F16, list(t.num), 3))
    e = B.local_expand(t3, P, prec=5)
    assert e.valuation == 3 and e.coeffs == (1, 0, 0, 0, 0, 0)
    one_minus_t = poly.sub(F16, [1], list(t.num))
    e = B.local_expand(RationalFunction.make(F16, [1], one_minus_t), P, prec=6)
    assert e.valuation == 0 and e.coeffs == (1,) * 7


def test_x_expansion_linear_term():
    """X at a: a + a/((q-1) c) t + ... where c = a^(q-1) = 1."""
    B = RationalBackend(F16)
    for a in range(1, 16):
        e = B.local_expand(RationalFunction.monomial(1), B.place(a), prec=3)
        assert e.coeffs[0] == a
        assert e.coeffs[1] == F16.div(a, 15 % 2)


def test_anchor_excludes_fixed_point():
    B = RationalBackend(F16)
    assert not B.anchor_parameter_ok(B.place(0))
    with pytest.raises(BadParameter):
        B.x_series(B.place(0), 3)


@pytest.mark.parametrize("sigma,q", [("multiply", (2, 4)), ("multiply", (3, 2)), ("translate", (2, 2)), ("translate", (3, 2))])
def test_p2_witness_identity(sigma, q):
    """At every place of T, f^(sigma^-1) = f^(q^u) for f in L(lD)."""
    F = field_new(*q)
    B = RationalBackend(F, sigma)
    l = 2
    W = B.p2_witness(l)
    assert W is not None and W.total_degree > l * B.e
    rng = random.Random(5)
    basis = B.rr_basis(l)
    for _ in range(10):
        f = B.function_from_coeffs(basis, [rng.randrange(F.q) for _ in range(basis.dim)])
        g = B.sigma_act_fn(f, -1)
        for R in W.places:
            m = list(R.coords[1:])
            lhs = B.residue(g, R)
            rhs = poly.powmod(F, B.residue(f, R), F.q**W.u, m)
            assert lhs == rhs


def test_descriptor_roundtrip_and_rejection():
    for make in BACKENDS.values():
        B = make()
        B2 = backend_from_descriptor(B.descriptor())
        assert B2.descriptor() == B.descriptor()
    with pytest.raises(PreconditionError):
        backend_from_descriptor({"kind": "rational", "p": 2, "k": 4, "colour": 1})


@settings(max_examples=40)
@given(st.lists(st.integers(0, 15), min_size=1, max_size=5), st.integers(1, 15), st.integers(-3, 3))
def test_sigma_action_is_a_group_action(coeffs, a, k):
    B = RationalBackend(F16)
    f = RationalFunction.make(F16, poly.trim(coeffs) or [0])
    once = B.sigma_act_fn(B.sigma_act_fn(f, k), 1)
    assert once == B.sigma_act_fn(f, k + 1)
    assert B.sigma_act_fn(f, B.sigma_order) == f
