"""Hermitian function field ``y^l + y = x^(l+1)`` over GF(l^2).

The automorphism is the diagonal map ``(a, b) -> (gamma a, gamma^(l+1) b)``
on points; it fixes the single place at infinity, has order ``q - 1`` and
``x^(q-1)`` is invariant, so ``x^(q-1) - a^(q-1)`` serves as a common local
parameter along every orbit of points with ``a != 0``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .. import series as ser
from ..errors import BadParameter, PoleAtPlace, PreconditionError, UnsupportedDivisor
from ..galois import FieldSpec, field_new, prime_factors
from .base import FunctionFieldBackend, LocalExpansion, Place, RRBasis


@dataclass(frozen=True)
class CurveFunction:
    """Polynomial in ``x, y`` with ``y``-degree below ``l`` (a regular function
    away from infinity); ``terms`` maps ``(i, j)`` to the coefficient of
    ``x^i y^j``."""

    terms: tuple[tuple[tuple[int, int], int], ...]

    @classmethod
    def monomial(cls, i: int, j: int):
        return cls((((i, j), 1),))

    def as_dict(self) -> dict:
        return dict(self.terms)


class HermitianBackend(FunctionFieldBackend):
    kind = "hermitian"
    e = 1

    def __init__(self, ell: int, F: FieldSpec | None = None):
        ps = prime_factors(ell)
        if len(ps) != 1:
            raise PreconditionError(f"l = {ell} is not a prime power")
        p = ps[0]
        a = 0
        while p**a < ell:
            a += 1
        if F is None:
            F = field_new(p, 2 * a)
        if F.q != ell * ell:
            raise PreconditionError("field order must be l^2")
        self.F = F
        self.ell = ell
        self.genus = ell * (ell - 1) // 2
        self.gamma = F.primitive_element_int
        self.y_scale = F.pow(self.gamma, ell + 1)
        self.sigma_order = F.q - 1

    def __repr__(self):
        return f"HermitianBackend(l={self.ell})"

    def descriptor(self) -> dict:
        return {"kind": "hermitian", "p": self.F.p, "k": self.F.k,
                "modulus": list(self.F.modulus), "ell": self.ell}

    def on_curve(self, a: int, b: int) -> bool:
        F = self.F
        return F.add(F.pow(b, self.ell), b) == F.pow(a, self.ell + 1)

    def affine_points(self):
        F = self.F
        return [(a, b) for a in range(F.q) for b in range(F.q) if self.on_curve(a, b)]

    def point_map(self, coords):
        F = self.F
        return (F.mul(self.gamma, coords[0]), F.mul(self.y_scale, coords[1]))

    def point_map_inverse(self, coords):
        F = self.F
        return (F.div(coords[0], self.gamma), F.div(coords[1], self.y_scale))

    def weight(self, i: int, j: int) -> int:
        return i * self.ell + j * (self.ell + 1)

    def rr_basis(self, l: int) -> RRBasis:
        if l < 0:
            raise UnsupportedDivisor("negative multiples of D are not supported")
        mons = [
            (i, j)
            for j in range(self.ell)
            for i in range(l // self.ell + 1)
            if self.weight(i, j) <= l
        ]
        mons.sort(key=lambda ij: self.weight(*ij))
        funcs = tuple(CurveFunction.monomial(i, j) for i, j in mons)
        labels = tuple(f"x^{i}*y^{j}" for i, j in mons)
        return RRBasis(self.divisor(l), funcs, labels)

    def function_from_coeffs(self, basis: RRBasis, coeffs) -> CurveFunction:
        F = self.F
        acc: dict = {}
        for c, z in zip(coeffs, basis.functions):
            for ij, v in z.terms:
                acc[ij] = F.add(acc.get(ij, 0), F.mul(c, v))
        return CurveFunction(tuple(sorted((k, v) for k, v in acc.items() if v)))

    def evaluate(self, f: CurveFunction, P: Place) -> int:
        if P.is_infinite:
            if any(ij != (0, 0) for ij, _ in f.terms):
                raise PoleAtPlace("nonconstant polynomial function has a pole at infinity")
            return dict(f.terms).get((0, 0), 0)
        F = self.F
        a, b = P.coords
        acc = 0
        for (i, j), c in f.terms:
            acc = F.add(acc, F.mul(c, F.mul(F.pow(a, i), F.pow(b, j))))
        return acc

    def sigma_act_fn(self, f: CurveFunction, power: int) -> CurveFunction:
        """``f^(sigma^power)(x, y) = f(gamma^-power x, gamma^-(power (l+1)) y)``."""
        F = self.F
        gi = F.pow(self.gamma, -power)
        out = []
        for (i, j), c in f.terms:
            out.append(((i, j), F.mul(c, F.pow(gi, i + j * (self.ell + 1)))))
        return CurveFunction(tuple(out))

    def anchor_parameter_ok(self, P: Place) -> bool:
        return P.is_rational and not P.is_infinite and P.coords[0] != 0

    def coordinate_series(self, P: Place, prec: int, t=None):
        """Series of ``x`` and ``y`` at ``P``; ``t`` is ``"invariant"``
        (``x^(q-1) - a^(q-1)``, needs ``a != 0``) or ``"x"`` (``x - a``)."""
        if P.is_infinite:
            raise BadParameter("expansions only at affine points")
        F = self.F
        a, b = P.coords
        if t is None or t == "invariant":
            if a == 0:
                raise BadParameter("x^(q-1) - a^(q-1) is not a parameter where x = 0")
            g = [0] * (F.q - 1) + [1]
            xs = ser.newton_series(F, g, a, prec)
            tag = "invariant"
        elif t == "x":
            xs = ser.fit([a, 1], prec)
            tag = "x"
        else:
            raise BadParameter(f"unsupported parameter {t!r}")
        rhs = ser.powers(F, xs, self.ell + 2, prec)[self.ell + 1]
        ys = ser.fit([b], prec)
        for i in range(1, prec + 1):
            yl = ys
            for _ in range(self.ell - 1):
                yl = ser.mul(F, yl, ys, prec)
            r = ser.sub(F, ser.add(F, yl, ys), rhs)
            ys[i] = F.sub(ys[i], r[i])
        return xs, ys, tag

    def local_expand(self, f: CurveFunction, P: Place, t=None, prec: int = 8) -> LocalExpansion:
        F = self.F
        xs, ys, tag = self.coordinate_series(P, prec, t)
        maxi = max((i for (i, _), _ in f.terms), default=0)
        maxj = max((j for (_, j), _ in f.terms), default=0)
        xp = ser.powers(F, xs, maxi + 1, prec)
        yp = ser.powers(F, ys, maxj + 1, prec)
        acc = [0] * (prec + 1)
        for (i, j), c in f.terms:
            acc = ser.add(F, acc, ser.scale(F, ser.mul(F, xp[i], yp[j], prec), c))
        return LocalExpansion(P, tag, 0, tuple(acc))

    def expansion_matrix(self, basis: RRBasis, P: Place, prec: int):
        F = self.F
        xs, ys, _ = self.coordinate_series(P, prec)
        mons = [f.terms[0][0] for f in basis.functions]
        xp = ser.powers(F, xs, max(i for i, _ in mons) + 1, prec)
        yp = ser.powers(F, ys, max(j for _, j in mons) + 1, prec)
        return [ser.mul(F, xp[i], yp[j], prec) for i, j in mons]
