"""Backend contract for a concrete function field with an automorphism.

Conventions used by every backend:

* ``sigma`` acts on rational points through a point map ``s`` and on
  functions so that ``f(P^sigma) == f^(sigma^-1)(P)``; concretely
  ``f^(sigma^-k) = f o s^k``.
* ``D`` is the (sigma-fixed) place at infinity, so ``L(l D)`` is the space of
  functions with pole order at most ``l`` there and ``e = deg D = 1``.
* Local expansions are taken in a parameter ``t`` with ``t^sigma = t``; the
  same ``t`` is a local parameter at every point of a sigma-orbit, which is
  what lets an expansion at ``P^(sigma^j)`` be reused at ``P``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from ..errors import PreconditionError
from ..galois import FieldSpec


@dataclass(frozen=True)
class Place:
    """A place of the backend's function field.

    ``coords`` is ``(a,)`` / ``(a, b)`` for affine rational points,
    ``("inf",)`` for the place at infinity and ``("poly",) + coefficients``
    for a higher-degree place given by an irreducible polynomial in X.
    """

    backend: str
    coords: tuple
    degree: int = 1

    @property
    def is_infinite(self) -> bool:
        return self.coords == ("inf",)

    @property
    def is_rational(self) -> bool:
        return self.degree == 1

    def __repr__(self):
        if self.is_infinite:
            return "Place(inf)"
        if self.coords and self.coords[0] == "poly":
            return f"Place(poly={list(self.coords[1:])}, deg={self.degree})"
        return "Place(" + ", ".join(hex(c) for c in self.coords) + ")"


@dataclass(frozen=True)
class Orbit:
    representative: Place
    places: tuple[Place, ...]

    @property
    def length(self) -> int:
        return len(self.places)


@dataclass(frozen=True)
class DivisorSpec:
    """``multiplicity * D`` for the backend's sigma-fixed divisor ``D``."""

    support: tuple[tuple[Place, int], ...]
    multiplicity: int

    @property
    def base_degree(self) -> int:
        return sum(p.degree * n for p, n in self.support)

    @property
    def degree(self) -> int:
        return self.multiplicity * self.base_degree


@dataclass(frozen=True)
class RRBasis:
    divisor: DivisorSpec
    functions: tuple
    labels: tuple[str, ...] = ()

    @property
    def dim(self) -> int:
        return len(self.functions)


@dataclass(frozen=True)
class LocalExpansion:
    """``f = sum_{r >= valuation} coeffs[r - valuation] t^r`` up to ``t^(valuation+prec)``."""

    place: Place
    parameter: str
    valuation: int
    coeffs: tuple[int, ...]

    @property
    def prec(self) -> int:
        return len(self.coeffs) - 1

    def dense(self, upto: int) -> list[int]:
        """Coefficients of ``t^0 .. t^upto`` (needs ``valuation >= 0``)."""
        if self.valuation < 0:
            raise PreconditionError("expansion has a pole")
        out = [0] * (upto + 1)
        for i, c in enumerate(self.coeffs):
            r = self.valuation + i
            if r <= upto:
                out[r] = c
        return out


@dataclass(frozen=True)
class P2Witness:
    """Places ``T`` with ``f^(sigma^-1)(R) = f(R)^(q^u)`` for all ``R`` in ``T``."""

    places: tuple[Place, ...]
    u: int

    @property
    def total_degree(self) -> int:
        return sum(p.degree for p in self.places)


class FunctionFieldBackend:
    """Shared machinery; subclasses supply the curve-specific pieces."""

    kind = "abstract"
    F: FieldSpec
    genus: int = 0
    e: int = 1

    # -- to be provided by subclasses ----------------------------------------
    def point_map(self, coords: tuple) -> tuple:
        raise NotImplementedError

    def point_map_inverse(self, coords: tuple) -> tuple:
        raise NotImplementedError

    def affine_points(self) -> list[tuple]:
        raise NotImplementedError

    def rr_basis(self, l: int) -> RRBasis:
        raise NotImplementedError

    def evaluate(self, f, P: Place) -> int:
        raise NotImplementedError

    def sigma_act_fn(self, f, power: int):
        raise NotImplementedError

    def local_expand(self, f, P: Place, t=None, prec: int = 8) -> LocalExpansion:
        raise NotImplementedError

    def anchor_parameter_ok(self, P: Place) -> bool:
        raise NotImplementedError

    def p2_witness(self, l: int) -> P2Witness | None:
        return None

    def descriptor(self) -> dict:
        raise NotImplementedError

    # -- generic ---------------------------------------------------------------
    @property
    def q(self) -> int:
        return self.F.q

    def place(self, *coords) -> Place:
        return Place(self.kind, tuple(coords))

    @property
    def infinity(self) -> Place:
        return Place(self.kind, ("inf",))

    def divisor(self, l: int) -> DivisorSpec:
        return DivisorSpec(((self.infinity, 1),), l)

    def dim_L(self, l: int) -> int:
        return self.rr_basis(l).dim if l >= 0 else 0

    def sigma_act_place(self, P: Place, power: int = 1) -> Place:
        if P.is_infinite or not P.is_rational:
            return P
        c = P.coords
        step = self.point_map if power >= 0 else self.point_map_inverse
        for _ in range(abs(power)):
            c = step(c)
        return Place(self.kind, c)

    @cached_property
    def _orbits(self) -> tuple[Orbit, ...]:
        seen = set()
        out = []
        for c in sorted(self.affine_points()):
            if c in seen:
                continue
            orbit = [c]
            seen.add(c)
            nxt = self.point_map(c)
            while nxt != c:
                orbit.append(nxt)
                seen.add(nxt)
                nxt = self.point_map(nxt)
            places = tuple(Place(self.kind, x) for x in orbit)
            out.append(Orbit(places[0], places))
        out.sort(key=lambda o: (-o.length, o.representative.coords))
        return tuple(out)

    def rational_places(self) -> tuple[Orbit, ...]:
        """sigma-orbits of the rational places outside ``supp(D)``, longest
        first, ties broken by the smallest point (the representative)."""
        return self._orbits

    def evaluation_matrix(self, basis: RRBasis, places) -> list[list[int]]:
        """Row per place, column per basis function."""
        return [[self.evaluate(z, P) for z in basis.functions] for P in places]

    def expansion_matrix(self, basis: RRBasis, P: Place, prec: int) -> list[list[int]]:
        """Row per basis function: coefficients of ``t^0..t^prec`` at ``P``."""
        return [self.local_expand(z, P, prec=prec).dense(prec) for z in basis.functions]
