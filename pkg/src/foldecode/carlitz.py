"""Carlitz module over A = GF(q)[T], its torsion, and class-field parameter
calculators.

Elements of A are coefficient lists (constant term first) as in
:mod:`foldecode.poly`.  A twisted polynomial ``sum b_i pi^i`` is stored as
the list ``[b_0, b_1, ...]`` with each ``b_i`` in A; ``pi`` is the
``p``-Frobenius, so ``pi * u = u^p * pi``.

Torsion is computed exactly.  With ``Psi_Q`` the Carlitz cyclotomic
polynomial (a monic polynomial in ``x`` over A), ``R = A[x]/(Psi_Q)``
contains a primitive ``Q``-torsion point ``x``, and the whole torsion module
is ``{phi_a(x) : a mod Q}``.  No specialisation of ``T`` is involved.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import poly
from .errors import (
    NonIntegerGenus,
    PreconditionError,
    SplittingFieldTooLarge,
)
from .galois import FieldSpec

MAX_TORSION_DEGREE = 4


# -- twisted polynomials -----------------------------------------------------

def frobenius_poly(F: FieldSpec, u, times: int = 1):
    """``u^(p^times)`` for ``u`` in GF(q)[T]."""
    out = list(u)
    p = F.p
    for _ in range(times):
        nxt = [0] * ((len(out) - 1) * p + 1) if out else []
        for i, c in enumerate(out):
            nxt[i * p] = F.frobenius(c)
        out = nxt
    return poly.trim(out)


def tw_trim(a):
    a = [poly.trim(c) for c in a]
    while a and not a[-1]:
        a.pop()
    return a


def tw_add(F: FieldSpec, a, b):
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        x = a[i] if i < len(a) else []
        y = b[i] if i < len(b) else []
        out.append(poly.add(F, x, y))
    return tw_trim(out)


def tw_scale(F: FieldSpec, a, c):
    """Left multiplication by the scalar ``c`` in A."""
    return tw_trim([poly.mul(F, c, x) for x in a])


def twisted_mul(F: FieldSpec, a, b):
    """``(sum a_i pi^i)(sum b_j pi^j) = sum a_i b_j^(p^i) pi^(i+j)``."""
    if not a or not b:
        return []
    out = [[] for _ in range(len(a) + len(b) - 1)]
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j, bj in enumerate(b):
            if bj:
                term = poly.mul(F, ai, frobenius_poly(F, bj, i))
                out[i + j] = poly.add(F, out[i + j], term)
    return tw_trim(out)


def tw_degree(a) -> int:
    return len(tw_trim(a)) - 1


def tw_one():
    return [[1]]


# -- the Carlitz module ------------------------------------------------------

class CarlitzModule:
    """``phi_T = T + pi^lam`` with ``lam = log_p q``; ``phi_T`` acts as
    ``t -> T t + t^q``."""

    def __init__(self, F: FieldSpec):
        self.F = F
        self.lam = F.k
        self._phi_T = [[0, 1]] + [[] for _ in range(self.lam - 1)] + [[1]]

    def __repr__(self):
        return f"CarlitzModule(q={self.F.q})"

    @property
    def phi_T(self):
        return [list(c) for c in self._phi_T]

    def phi(self, a):
        """``phi_a`` by Horner in ``phi_T``."""
        F = self.F
        acc = []
        for c in reversed(poly.trim(list(a))):
            acc = twisted_mul(F, self._phi_T, acc)
            acc = tw_add(F, acc, [[c]])
        return acc

    def action_poly(self, a):
        """``phi_a(t)`` as an ordinary polynomial in ``t`` over A (list of A
        elements indexed by the power of ``t``)."""
        tw = self.phi(a)
        out = [[] for _ in range(self.F.p ** (len(tw) - 1) + 1 if tw else 0)]
        for i, b in enumerate(tw):
            out[self.F.p**i] = b
        return _ap_trim(out)


def phi_of(F: FieldSpec, a):
    return CarlitzModule(F).phi(a)


# -- polynomials in x over A -------------------------------------------------
# Elements are lists of A-polynomials indexed by the power of x.

def _ap_trim(a):
    a = [poly.trim(c) for c in a]
    while a and not a[-1]:
        a.pop()
    return a


def _ap_add(F, a, b):
    n = max(len(a), len(b))
    return _ap_trim([poly.add(F, a[i] if i < len(a) else [], b[i] if i < len(b) else [])
                     for i in range(n)])


def _ap_mul(F, a, b):
    if not a or not b:
        return []
    out = [[] for _ in range(len(a) + len(b) - 1)]
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[i + j] = poly.add(F, out[i + j], poly.mul(F, x, y))
    return _ap_trim(out)


def _ap_divmod_monic(F, a, m):
    """Division by a polynomial ``m`` that is monic in ``x``."""
    a = [list(c) for c in a]
    dm = len(m) - 1
    if len(a) - 1 < dm:
        return [], _ap_trim(a)
    quo = [[] for _ in range(len(a) - dm)]
    for i in range(len(a) - 1, dm - 1, -1):
        c = poly.trim(a[i])
        if not c:
            continue
        quo[i - dm] = c
        for j, mj in enumerate(m):
            if mj:
                a[i - dm + j] = poly.sub(F, a[i - dm + j], poly.mul(F, c, mj))
    return _ap_trim(quo), _ap_trim(a[:dm])


class _Ring:
    """``A[x]/(M)`` for ``M`` monic in ``x``."""

    def __init__(self, F: FieldSpec, M):
        self.F = F
        self.M = M

    def reduce(self, a):
        return _ap_divmod_monic(self.F, a, self.M)[1]

    def mul(self, a, b):
        return self.reduce(_ap_mul(self.F, a, b))

    def add(self, a, b):
        return _ap_add(self.F, a, b)

    def pow_p(self, a, times):
        p = self.F.p
        for _ in range(times):
            r = [[1]]
            for _ in range(p):
                r = self.mul(r, a)
            a = r
        return a

    def act(self, tw, y):
        """``sum b_i y^(p^i)`` for a twisted polynomial ``sum b_i pi^i``."""
        acc = []
        yi = y
        for i, b in enumerate(tw):
            if i:
                yi = self.pow_p(yi, 1)
            if b:
                acc = self.add(acc, _ap_trim([poly.mul(self.F, b, c) for c in yi]))
        return acc


# -- divisors of Q and the cyclotomic polynomial -----------------------------

def factor(F: FieldSpec, a):
    """Monic irreducible factorisation by trial division: list of ``(P, e)``."""
    a = poly.monic(F, poly.trim(list(a)))
    out = []
    d = 1
    while poly.degree(a) > 0:
        if 2 * d > poly.degree(a):
            out.append((a, 1))
            break
        for P in poly.monic_polys(F, d):
            if not poly.is_irreducible(F, P):
                continue
            e = 0
            while True:
                q_, r = poly.divmod_(F, a, P)
                if r:
                    break
                a, e = q_, e + 1
            if e:
                out.append((P, e))
        d += 1
    merged: dict = {}
    for P, e in out:
        merged[tuple(P)] = merged.get(tuple(P), 0) + e
    return [(list(P), e) for P, e in sorted(merged.items(), key=lambda kv: (len(kv[0]), kv[0]))]


def monic_divisors(F: FieldSpec, a):
    """All monic divisors ``D`` paired with ``mu(a / D)``."""
    divs = [([1], 1)]
    for P, e in factor(F, a):
        nxt = []
        for D, mu in divs:
            Pk = [1]
            for k in range(e + 1):
                # cofactor a/D picks up P^(e-k); squarefree only when e-k <= 1
                mu_k = 0 if e - k > 1 else (-mu if e - k == 1 else mu)
                nxt.append((poly.mul(F, D, Pk), mu_k))
                Pk = poly.mul(F, Pk, P)
        divs = nxt
    divs.sort(key=lambda dm: (poly.degree(dm[0]), dm[0]))
    return divs


def moebius(F: FieldSpec, a) -> int:
    fac = factor(F, a)
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


def euler_phi(F: FieldSpec, Q) -> int:
    """``|(A/Q)^*|`` by counting residues coprime to ``Q``."""
    d = poly.degree(Q)
    count = 0
    for a in residues(F, d):
        if a and poly.gcd(F, a, Q) == [1]:
            count += 1
    return count


def residues(F: FieldSpec, d: int):
    """All polynomials of degree ``< d`` (zero first, then by integer code)."""
    q = F.q
    for code in range(q**d):
        yield poly.trim([(code // q**i) % q for i in range(d)])


def cyclotomic(F: FieldSpec, Q):
    """``Psi_Q(x) = prod_{D | Q} phi_D(x)^mu(Q/D)``, monic in ``x`` over A."""
    C = CarlitzModule(F)
    num, den = [[1]], [[1]]
    for D, mu in monic_divisors(F, Q):
        if mu == 1:
            num = _ap_mul(F, num, C.action_poly(D))
        elif mu == -1:
            den = _ap_mul(F, den, C.action_poly(D))
    quo, rem = _ap_divmod_monic(F, num, den)
    if rem:
        raise ArithmeticError("cyclotomic quotient is not exact")
    return quo


# -- torsion ------------------------------------------------------------------

@dataclass(frozen=True)
class TorsionReport:
    q: int
    Q: tuple[int, ...]
    torsion_poly: tuple            # phi_Q as a twisted polynomial
    extension_degree: int          # deg_x Psi_Q = [K(Lambda) : K]
    root_count: int
    expected_count: int
    roots_verified: bool
    distinct: bool
    norm_check: bool
    annihilator_is_Q: bool
    generator_count: int
    phi_Q: int

    @property
    def cardinality_ok(self) -> bool:
        return self.root_count == self.expected_count

    @property
    def cyclic_ok(self) -> bool:
        return self.annihilator_is_Q and self.cardinality_ok

    @property
    def generators_ok(self) -> bool:
        return self.generator_count == self.phi_Q

    @property
    def ok(self) -> bool:
        return (self.cardinality_ok and self.cyclic_ok and self.generators_ok
                and self.roots_verified and self.distinct and self.norm_check)

    def to_dict(self, F: FieldSpec) -> dict:
        return {
            "q": self.q,
            "Q": poly.to_string(F, list(self.Q)),
            "torsion_polynomial": [poly.to_string(F, c) if c else "0" for c in self.torsion_poly],
            "extension_degree": self.extension_degree,
            "root_count": self.root_count,
            "expected_count": self.expected_count,
            "roots_verified": self.roots_verified,
            "distinct": self.distinct,
            "norm_check": self.norm_check,
            "annihilator_is_Q": self.annihilator_is_Q,
            "generator_count": self.generator_count,
            "phi_Q": self.phi_Q,
            "ok": self.ok,
        }


def torsion_polynomial(F: FieldSpec, Q):
    Q = poly.trim(list(Q))
    if poly.degree(Q) < 1 or Q[-1] != 1:
        raise PreconditionError("Q must be monic and nonconstant")
    return CarlitzModule(F).phi(Q)


def torsion_report(F: FieldSpec, Q, max_degree: int = MAX_TORSION_DEGREE) -> TorsionReport:
    Q = poly.trim(list(Q))
    if poly.degree(Q) < 1 or Q[-1] != 1:
        raise PreconditionError("Q must be monic and nonconstant")
    d = poly.degree(Q)
    if d > max_degree:
        raise SplittingFieldTooLarge(f"deg Q = {d} exceeds the cap {max_degree}")
    C = CarlitzModule(F)
    phiQ = C.phi(Q)
    Psi = cyclotomic(F, Q)
    R = _Ring(F, Psi)
    x = R.reduce([[], [1]])

    res = list(residues(F, d))
    lam = {}
    for a in res:
        lam[tuple(a)] = R.act(C.phi(a), x)
    values = [tuple(tuple(c) for c in v) for v in lam.values()]
    distinct = len(set(values)) == len(values)
    roots_ok = all(not R.act(phiQ, v) for v in lam.values())

    # prod of nonzero torsion points is (-1)^(n-1) Q, so each is a unit once
    # T is inverted and the points stay distinct in every residue field
    prod = [[1]]
    for a in res[1:]:
        prod = R.mul(prod, lam[tuple(a)])
    n = len(res)
    target = Q if (n - 1) % 2 == 0 else poly.neg(F, Q)
    norm_ok = prod == [target]

    # annihilator of x: phi_a(x) = 0 exactly for a in (Q)
    annihilator = all(lam[tuple(a)] for a in res[1:]) and not R.act(phiQ, x)

    # generators: torsion points whose A-orbit is all of Lambda
    gens = 0
    for a in res[1:]:
        y = lam[tuple(a)]
        orbit = {tuple(tuple(c) for c in R.act(C.phi(b), y)) for b in res}
        if len(orbit) == n:
            gens += 1

    return TorsionReport(
        q=F.q,
        Q=tuple(Q),
        torsion_poly=tuple(tuple(c) for c in phiQ),
        extension_degree=len(Psi) - 1,
        root_count=len(set(values)),
        expected_count=F.q**d,
        roots_verified=roots_ok,
        distinct=distinct,
        norm_check=norm_ok,
        annihilator_is_Q=annihilator,
        generator_count=gens,
        phi_Q=euler_phi(F, Q),
    )


# -- class groups and genus -------------------------------------------------

def narrow_ray_class_order(q: int, d: int, h: int = 1) -> int:
    """``|Cl_Q^+| = (q^d - 1) h`` for ``Q`` of degree ``d``."""
    if q < 2 or d < 1 or h < 1:
        raise PreconditionError("need q >= 2, d >= 1, h >= 1")
    return (q**d - 1) * h


def ray_class_components(F: FieldSpec, Q) -> dict:
    """Explicit check over A for irreducible ``Q``: the unit group of A/Q has
    ``q^d - 1`` elements and the constants GF(q)^* embed in it, leaving
    ``|Cl_Q| = (q^d - 1)/(q - 1)``."""
    Q = poly.trim(list(Q))
    if not poly.is_irreducible(F, Q):
        raise PreconditionError("Q must be irreducible")
    d = poly.degree(Q)
    units = [a for a in residues(F, d) if a and poly.gcd(F, a, Q) == [1]]
    consts = [a for a in units if poly.degree(a) == 0]
    narrow = narrow_ray_class_order(F.q, d)
    return {
        "narrow": narrow,
        "units": len(units),
        "constants": len(consts),
        "ray": Fraction(narrow, F.q - 1),
        "ok": len(units) == narrow and len(consts) == F.q - 1 and narrow % (F.q - 1) == 0,
    }


def class_field_genus(q: int, d: int, g_F: int = 0, h_F: int = 1) -> int:
    """Genus of the narrow ray class field modulo a place of degree ``d``:
    ``2g - 2 = (2g_F - 2) h (q^d - 1) + (q - 2) h (q^d - 1)/(q - 1) + d (q^d - 2) h``."""
    if q < 2 or d < 1 or g_F < 0 or h_F < 1:
        raise PreconditionError("need q >= 2, d >= 1, g_F >= 0, h_F >= 1")
    n = q**d - 1
    if (q - 2) * h_F * n % (q - 1):
        raise NonIntegerGenus("ramification term is not integral")
    rhs = (2 * g_F - 2) * h_F * n + (q - 2) * h_F * n // (q - 1) + d * (q**d - 2) * h_F
    if rhs % 2:
        raise NonIntegerGenus(f"2g - 2 = {rhs} is odd")
    return (rhs + 2) // 2


def _ceil_div_sqrt_minus_one(n: int, ell: int) -> int:
    """Smallest integer ``c`` with ``c (sqrt(l) - 1) >= n``."""
    r = math.isqrt(ell)
    if r * r == ell:
        return -(-n // (r - 1))
    c = 0
    while c * c * ell < (n + c) ** 2:
        c += 1
    return c


@dataclass(frozen=True)
class P3Parameters:
    ell: int
    r: int
    e: int
    genus_bound: Fraction
    rational_place_bound: int | None
    list_size_exponent: int | None
    tau: Fraction | None

    def to_dict(self) -> dict:
        return {
            "ell": self.ell,
            "r": self.r,
            "e": str(self.e),
            "genus_bound": str(self.genus_bound),
            "rational_place_bound": None if self.rational_place_bound is None else str(self.rational_place_bound),
            "list_size_exponent": self.list_size_exponent,
            "tau": None if self.tau is None else str(self.tau),
        }


def _is_prime_power(n: int) -> bool:
    from .galois import prime_factors
    return n > 1 and len(prime_factors(n)) == 1


def p3_parameters(ell: int, n: int | None = None, g_E: int = 0, r: int | None = None,
                  s: int | None = None, m: int | None = None, R=None) -> P3Parameters:
    """Extension degree, genus and point bounds for the cyclic extension of a
    curve ``E`` over GF(l) with ``n`` rational points.

    ``r`` defaults to ``2 ceil(n/(sqrt(l) - 1)) + 1``.  With ``s`` (and ``m``,
    ``R``) the list-size exponent ``(sqrt(l) - 1) s`` and the radius are added.
    """
    if not _is_prime_power(ell):
        raise PreconditionError(f"l = {ell} is not a prime power")
    if g_E < 0:
        raise PreconditionError("g_E must be nonnegative")
    if r is None:
        if n is None:
            raise PreconditionError("need n or r")
        if n < 0:
            raise PreconditionError("n must be nonnegative")
        if math.isqrt(ell) ** 2 == ell and math.isqrt(ell) == 1:
            raise PreconditionError("sqrt(l) - 1 must be nonzero")
        r = 2 * _ceil_div_sqrt_minus_one(n, ell) + 1
    if r < 1 or r % 2 == 0:
        raise PreconditionError(f"r = {r} must be odd and positive")
    num = ell**r + 1
    assert num % (ell + 1) == 0
    e = num // (ell + 1)
    genus = (g_E - 1) * e + Fraction(r, 2) * (e - 1) + 1
    places = None if n is None else e * n
    exp = tau = None
    rt = math.isqrt(ell)
    if s is not None and rt * rt == ell:
        exp = (rt - 1) * s
        if m is not None and R is not None:
            from .decoder import theorem_radius
            tau = theorem_radius(s, m, R, ell)
    return P3Parameters(ell, r, e, genus, places, exp, tau)
