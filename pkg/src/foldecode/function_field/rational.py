"""Rational function field GF(q)(X).

The automorphism is affine, ``s(a) = alpha*a + beta`` on points:

* ``sigma="multiply"`` (default): ``alpha = gamma`` primitive, ``beta = 0``.
  The orbit of 1 is all of GF(q)^*, the fixed field is GF(q)(X^(q-1)) and
  the degree-(q-1) place of ``X^(q-1) - gamma`` satisfies
  ``f(gamma X) = f(X)^q`` there.  This is the folded Reed-Solomon setting.
* ``sigma="translate"``: ``alpha = 1``, ``beta = 1``; orbits have length
  ``p`` and the fixed field is GF(q)(X^p - X).
"""
from __future__ import annotations

from dataclasses import dataclass

from .. import poly
from .. import series as ser
from ..errors import BadParameter, PoleAtPlace, PreconditionError, UnsupportedDivisor
from ..galois import FieldSpec
from .base import FunctionFieldBackend, LocalExpansion, P2Witness, Place, RRBasis


@dataclass(frozen=True)
class RationalFunction:
    """``num / den`` with ``den`` monic and nonzero."""

    num: tuple[int, ...]
    den: tuple[int, ...] = (1,)

    @classmethod
    def make(cls, F: FieldSpec, num, den=(1,)):
        den = poly.trim(den)
        if not den:
            raise PreconditionError("zero denominator")
        lead = den[-1]
        if lead != 1:
            inv = F.inv(lead)
            num, den = poly.scale(F, num, inv), poly.scale(F, den, inv)
        return cls(tuple(poly.trim(num)), tuple(den))

    @classmethod
    def monomial(cls, i: int):
        return cls(tuple([0] * i + [1]))

    def is_zero(self) -> bool:
        return not self.num


def rf_add(F, f: RationalFunction, g: RationalFunction) -> RationalFunction:
    if f.den == g.den:
        return RationalFunction.make(F, poly.add(F, f.num, g.num), f.den)
    num = poly.add(F, poly.mul(F, f.num, g.den), poly.mul(F, g.num, f.den))
    return RationalFunction.make(F, num, poly.mul(F, f.den, g.den))


def rf_sub(F, f, g):
    return rf_add(F, f, RationalFunction(tuple(poly.neg(F, g.num)), g.den))


def rf_mul(F, f, g):
    return RationalFunction.make(F, poly.mul(F, f.num, g.num), poly.mul(F, f.den, g.den))


def rf_div(F, f, g):
    if g.is_zero():
        raise PreconditionError("division by the zero function")
    return RationalFunction.make(F, poly.mul(F, f.num, g.den), poly.mul(F, f.den, g.num))


def rf_scale(F, f, c: int):
    return RationalFunction.make(F, poly.scale(F, f.num, c), f.den)


def rf_linear_combination(F, coeffs, functions) -> RationalFunction:
    acc = RationalFunction(())
    for c, z in zip(coeffs, functions):
        if c:
            acc = rf_add(F, acc, rf_scale(F, z, c))
    return acc


def _strip_root(F, a_poly, x: int):
    """Split off the multiplicity of the root ``x``: returns ``(k, rest)``."""
    k = 0
    a_poly = list(a_poly)
    lin = [F.neg(x), 1]
    while a_poly and poly.evaluate(F, a_poly, x) == 0:
        a_poly = poly.divmod_(F, a_poly, lin)[0]
        k += 1
    return k, a_poly


def order_at(F, f: RationalFunction, x: int) -> int:
    """Valuation of ``f`` at the rational place ``X = x``."""
    if f.is_zero():
        raise PreconditionError("valuation of the zero function")
    return _strip_root(F, f.num, x)[0] - _strip_root(F, f.den, x)[0]


def value_at(F, f: RationalFunction, x: int) -> int:
    kn, n = _strip_root(F, f.num, x)
    if not f.num:
        return 0
    kd, d = _strip_root(F, f.den, x)
    if kn < kd:
        raise PoleAtPlace(f"pole of order {kd - kn} at X={hex(x)}")
    if kn > kd:
        return 0
    return F.div(poly.evaluate(F, n, x), poly.evaluate(F, d, x))


class RationalBackend(FunctionFieldBackend):
    kind = "rational"
    genus = 0
    e = 1

    def __init__(self, F: FieldSpec, sigma: str = "multiply"):
        self.F = F
        if sigma == "multiply":
            if F.q == 2:
                raise PreconditionError("GF(2) has no multiplicative automorphism of order > 1")
            self.alpha, self.beta = F.primitive_element_int, 0
        elif sigma == "translate":
            self.alpha, self.beta = 1, 1
        else:
            raise PreconditionError(f"unknown automorphism {sigma!r}")
        self.sigma = sigma
        self.gamma = F.primitive_element_int
        # sigma-invariant polynomial g: t = g(X) - g(a) is the common parameter
        # at every point of the orbit of a.
        orbit0 = [0]
        x = self.point_map((0,))[0]
        while x != 0:
            orbit0.append(x)
            x = self.point_map((x,))[0]
        if sigma == "multiply":
            self.sigma_order = F.q - 1
            self.invariant = [0] * (F.q - 1) + [1]
        else:
            self.sigma_order = len(orbit0)
            g = [1]
            for r in orbit0:
                g = poly.mul(F, g, [F.neg(r), 1])
            self.invariant = g

    def __repr__(self):
        return f"RationalBackend(GF({self.q}), sigma={self.sigma!r})"

    def descriptor(self) -> dict:
        return {"kind": "rational", "p": self.F.p, "k": self.F.k,
                "modulus": list(self.F.modulus), "sigma": self.sigma}

    # -- automorphism -----------------------------------------------------
    def point_map(self, coords):
        F = self.F
        return (F.add(F.mul(self.alpha, coords[0]), self.beta),)

    def point_map_inverse(self, coords):
        F = self.F
        return (F.mul(F.inv(self.alpha), F.sub(coords[0], self.beta)),)

    def affine_map_power(self, k: int) -> tuple[int, int]:
        """``(A, B)`` with ``s^k(a) = A a + B``."""
        F = self.F
        A, B = 1, 0
        step = (self.alpha, self.beta)
        if k < 0:
            ia = F.inv(self.alpha)
            step = (ia, F.neg(F.mul(ia, self.beta)))
        for _ in range(abs(k)):
            A, B = F.mul(step[0], A), F.add(F.mul(step[0], B), step[1])
        return A, B

    def affine_points(self):
        # X = 0 is fixed by the multiplicative automorphism; it stays a place
        # but forms a length-1 orbit.
        return [(a,) for a in range(self.q)]

    def sigma_act_fn(self, f: RationalFunction, power: int) -> RationalFunction:
        """``f^(sigma^power) = f o s^(-power)``."""
        A, B = self.affine_map_power(-power)
        F = self.F
        return RationalFunction.make(
            F, poly.substitute_affine(F, f.num, A, B), poly.substitute_affine(F, f.den, A, B)
        )

    # -- Riemann-Roch -----------------------------------------------------
    def rr_basis(self, l: int) -> RRBasis:
        if l < 0:
            raise UnsupportedDivisor("negative multiples of D are not supported")
        funcs = tuple(RationalFunction.monomial(i) for i in range(l + 1))
        labels = tuple("1" if i == 0 else ("X" if i == 1 else f"X^{i}") for i in range(l + 1))
        return RRBasis(self.divisor(l), funcs, labels)

    def function_from_coeffs(self, basis: RRBasis, coeffs) -> RationalFunction:
        return rf_linear_combination(self.F, coeffs, basis.functions)

    # -- evaluation -------------------------------------------------------
    def evaluate(self, f: RationalFunction, P: Place) -> int:
        if P.is_infinite:
            dn, dd = poly.degree(list(f.num)), poly.degree(list(f.den))
            if dn > dd:
                raise PoleAtPlace("pole at infinity")
            return f.num[-1] if (dn == dd and f.num) else 0
        if not P.is_rational:
            raise PreconditionError("evaluation at higher-degree places is residue arithmetic; use residue()")
        return value_at(self.F, f, P.coords[0])

    def residue(self, f: RationalFunction, R: Place):
        """Residue class of ``f`` at a higher-degree place, as a polynomial
        modulo the place's irreducible polynomial."""
        F = self.F
        m = list(R.coords[1:])
        den = poly.mod(F, list(f.den), m)
        if not den:
            raise PoleAtPlace("denominator vanishes at the place")
        # invert den modulo m by extended Euclid
        inv = _inverse_mod(F, den, m)
        return poly.mod(F, poly.mul(F, list(f.num), inv), m)

    # -- local expansions -------------------------------------------------
    def anchor_parameter_ok(self, P: Place) -> bool:
        if not P.is_rational or P.is_infinite:
            return False
        dg = poly.evaluate(self.F, poly.derivative(self.F, self.invariant), P.coords[0])
        return dg != 0

    def _parameter_poly(self, P: Place, t):
        F = self.F
        a = P.coords[0]
        if t is None or t == "invariant":
            g = list(self.invariant)
            g[0] = F.sub(g[0], poly.evaluate(F, g, a))
            tag = "invariant"
            tp = poly.trim(g)
        else:
            tp = poly.trim(t.num if isinstance(t, RationalFunction) else t)
            if isinstance(t, RationalFunction) and t.den != (1,):
                raise BadParameter("only polynomial parameters are supported")
            tag = poly.to_string(F, tp, "X")
        if poly.evaluate(F, tp, a) != 0 or poly.evaluate(F, poly.derivative(F, tp), a) == 0:
            raise BadParameter(f"{tag} does not have valuation 1 at X={hex(a)}")
        return tp, tag

    def x_series(self, P: Place, prec: int, t=None):
        """Series of ``X`` at ``P`` in the parameter ``t``."""
        if P.is_infinite or not P.is_rational:
            raise BadParameter("expansions only at finite rational places")
        tp, _ = self._parameter_poly(P, t)
        return ser.newton_series(self.F, tp, P.coords[0], prec)

    def local_expand(self, f: RationalFunction, P: Place, t=None, prec: int = 8) -> LocalExpansion:
        """Expansion by substituting the series of X into numerator and
        denominator."""
        F = self.F
        tp, tag = self._parameter_poly(P, t)
        a = P.coords[0]
        if f.is_zero():
            return LocalExpansion(P, tag, 0, tuple([0] * (prec + 1)))
        kn, _ = _strip_root(F, f.num, a)
        kd, _ = _strip_root(F, f.den, a)
        work = prec + kn + kd + 1
        xs = ser.newton_series(F, tp, a, work)
        ns = ser.compose_poly(F, list(f.num), xs, work)[kn:]
        ds = ser.compose_poly(F, list(f.den), xs, work)[kd:]
        q = ser.mul(F, ns, ser.inverse(F, ds, prec), prec)
        return LocalExpansion(P, tag, kn - kd, tuple(q))

    def expansion_matrix(self, basis: RRBasis, P: Place, prec: int):
        # basis is 1, X, ..., X^l: powers of one series
        xs = self.x_series(P, prec)
        return ser.powers(self.F, xs, basis.dim, prec)

    def local_expand_iterative(self, f: RationalFunction, P: Place, t=None, prec: int = 8) -> LocalExpansion:
        """Coefficient-by-coefficient construction: with ``a_v..a_m`` known,
        ``a_{m+1} = ((f - sum a_r t^r) / t^(m+1))(P)``.  Slow; used as an
        independent check of :meth:`local_expand`."""
        F = self.F
        tp, tag = self._parameter_poly(P, t)
        a = P.coords[0]
        if f.is_zero():
            return LocalExpansion(P, tag, 0, tuple([0] * (prec + 1)))
        tf = RationalFunction.make(F, tp)
        v = order_at(F, f, a)
        rest = f
        coeffs = []
        for r in range(v, v + prec + 1):
            tr = _rf_power(F, tf, r)
            c = value_at(F, rf_div(F, rest, tr), a)
            coeffs.append(c)
            if c:
                rest = rf_sub(F, rest, rf_scale(F, tr, c))
        return LocalExpansion(P, tag, v, tuple(coeffs))

    # -- Frobenius witness places ------------------------------------------
    def p2_witness(self, l: int) -> P2Witness | None:
        F = self.F
        le = l * self.e
        if self.sigma == "multiply":
            m = [F.neg(self.gamma)] + [0] * (F.q - 2) + [1]
            R = Place(self.kind, ("poly",) + tuple(m), F.q - 1)
            if R.degree <= le:
                return None
            return P2Witness((R,), 1)
        # translate: X^p - X - c is irreducible of degree p when Tr(c) = 1,
        # and there X^q = X + Tr(c) = X + 1 = s(X).
        places = []
        total = 0
        for c in range(F.q):
            if _absolute_trace(F, c) != 1:
                continue
            m = poly.trim([F.neg(c), F.neg(1)] + [0] * (F.p - 2) + [1])
            places.append(Place(self.kind, ("poly",) + tuple(m), F.p))
            total += F.p
            if total > le:
                return P2Witness(tuple(places), 1)
        return None


def _absolute_trace(F: FieldSpec, c: int) -> int:
    acc, x = 0, c
    for _ in range(F.k):
        acc = F.add(acc, x)
        x = F.pow(x, F.p)
    return acc


def _rf_power(F, f: RationalFunction, e: int) -> RationalFunction:
    if e >= 0:
        return RationalFunction.make(F, poly.power(F, list(f.num), e), poly.power(F, list(f.den), e))
    return RationalFunction.make(F, poly.power(F, list(f.den), -e), poly.power(F, list(f.num), -e))


def _inverse_mod(F, a, m):
    r0, r1 = list(m), poly.trim(a)
    s0, s1 = [], [1]
    while r1:
        qt, r = poly.divmod_(F, r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, poly.sub(F, s0, poly.mul(F, qt, s1))
    if poly.degree(r0) != 0:
        raise PoleAtPlace("not invertible modulo the place")
    return poly.scale(F, s0, F.inv(r0[0]))
