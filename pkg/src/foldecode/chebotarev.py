"""Frobenius statistics for cyclotomic extensions of GF(q)(T).

The Frobenius of an unramified place ``P`` in the narrow ray class field
modulo ``Q`` is the residue of ``P`` in ``(A/Q)^*``, so equidistribution
reduces to counting monic irreducibles by residue class.  Deviations are
compared with the explicit bound

    B(h) = (2|C|/(e h)) (e + g_F) q^(h/2) + e (2 g_L + 1) q^(h/4) + g_F + d_L e

using integer upper bounds for the fractional powers of ``q``.  The
intermediate field is GF(q)(T) itself (``g_L = 0``, ``d_L = 1``), so the only
places excluded are those dividing ``Q``.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from fractions import Fraction

from . import poly
from .carlitz import class_field_genus, residues
from .errors import CapExceeded, PreconditionError, RamifiedPlace
from .galois import FieldSpec

ENUMERATION_CAP = 1 << 24


def irreducibles_of_degree(F: FieldSpec, h: int, cap: int = ENUMERATION_CAP):
    """Monic irreducible polynomials of degree ``h`` in integer-code order."""
    if h < 1:
        raise PreconditionError("degree must be positive")
    if F.q**h > cap:
        raise CapExceeded(f"q^h = {F.q**h} exceeds the enumeration cap {cap}")
    for f in poly.monic_polys(F, h):
        if poly.is_irreducible(F, f):
            yield f


def count_irreducibles(q: int, h: int) -> int:
    """Moebius count ``(1/h) sum_{d | h} mu(d) q^(h/d)``."""
    total = 0
    for d in range(1, h + 1):
        if h % d == 0:
            total += _mu(d) * q ** (h // d)
    return total // h


def _mu(n: int) -> int:
    out, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            out = -out
        p += 1
    return -out if n > 1 else out


def unit_group(F: FieldSpec, Q):
    """Residues coprime to ``Q`` (canonical least-degree representatives)."""
    return [tuple(a) for a in residues(F, poly.degree(Q)) if a and poly.gcd(F, a, Q) == [1]]


def subgroup_of_index(F: FieldSpec, Q, e: int):
    """The unique subgroup ``H`` of the cyclic group ``(A/Q)^*`` with
    quotient of order ``e`` (the ``e``-th powers)."""
    units = unit_group(F, Q)
    n = len(units)
    if e < 1 or n % e:
        raise PreconditionError(f"quotient order {e} does not divide {n}")
    H = set()
    for a in units:
        H.add(tuple(poly.powmod(F, list(a), e, Q)))
    if len(H) * e != n:
        raise PreconditionError("unit group is not cyclic; quotient is ambiguous")
    return H


def coset_representatives(F: FieldSpec, Q, e: int):
    """Map each unit to the smallest element of its coset modulo the index-``e``
    subgroup."""
    H = subgroup_of_index(F, Q, e)
    units = unit_group(F, Q)
    rep = {}
    for a in units:
        if a in rep:
            continue
        coset = sorted((tuple(poly.mod(F, poly.mul(F, list(a), list(h)), Q)) for h in H),
                       key=lambda c: (len(c), c[::-1]))
        for c in coset:
            rep[c] = coset[0]
    return rep


def frobenius_class(F: FieldSpec, P, Q, rep=None):
    """Residue of ``P`` modulo ``Q`` (or its coset representative under
    ``rep``)."""
    r = tuple(poly.mod(F, list(P), list(Q)))
    if not r or poly.gcd(F, list(r), list(Q)) != [1]:
        raise RamifiedPlace(f"P = {poly.to_string(F, list(P))} shares a factor with Q")
    return rep[r] if rep is not None else r


def _root_ceil(n: int, k: int) -> int:
    """Smallest integer ``r`` with ``r^k >= n``."""
    r = int(round(n ** (1.0 / k)))
    while r**k < n:
        r += 1
    while r > 0 and (r - 1) ** k >= n:
        r -= 1
    return r


def chebotarev_bound(q: int, h: int, e: int, size_C: int, g_F: int, g_L: int = 0, d_L: int = 1) -> Fraction:
    """Upper bound for ``B(h)`` with ``q^(h/2)`` and ``q^(h/4)`` replaced by
    their integer ceilings (exact when they are integers)."""
    qh2 = _root_ceil(q**h, 2)
    qh4 = _root_ceil(q**h, 4)
    return (Fraction(2 * size_C, e * h) * (e + g_F) * qh2
            + e * (2 * g_L + 1) * qh4 + g_F + d_L * e)


@dataclass(frozen=True)
class ClassRow:
    class_repr: tuple
    count: int
    expected: Fraction
    bound: Fraction

    @property
    def deviation(self) -> Fraction:
        return abs(self.count - self.expected)

    @property
    def margin(self) -> Fraction:
        return self.bound - self.deviation

    @property
    def ok(self) -> bool:
        return self.deviation <= self.bound


@dataclass(frozen=True)
class FrobeniusHistogram:
    q: int
    Q: tuple
    h: int
    e: int
    g_F: int
    rows: tuple[ClassRow, ...]
    total: int
    irreducible_count: int
    ramified: int = field(default=0)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.rows)

    @property
    def sum_rule_ok(self) -> bool:
        return sum(r.count for r in self.rows) == self.total == self.irreducible_count - self.ramified

    @property
    def max_ratio(self) -> Fraction:
        return max((r.deviation / r.bound for r in self.rows), default=Fraction(0))

    @property
    def normalized_deviation(self) -> float:
        """Largest deviation divided by ``q^(h/2)`` (descriptive only)."""
        return float(max(r.deviation for r in self.rows)) / self.q ** (self.h / 2)


def chebotarev_check(F: FieldSpec, Q, h: int, e: int | None = None,
                     cap: int = ENUMERATION_CAP) -> FrobeniusHistogram:
    """Histogram of Frobenius classes of degree-``h`` places.

    ``e`` is the order of the cyclic quotient of ``(A/Q)^*`` used (default: the
    whole group).  ``g_F`` is the genus of the full ray class field, an upper
    bound for the genus of every intermediate field.
    """
    Q = poly.trim(list(Q))
    if poly.degree(Q) < 1 or Q[-1] != 1:
        raise PreconditionError("Q must be monic and nonconstant")
    if not poly.is_irreducible(F, Q):
        raise PreconditionError("Q must be irreducible")
    d = poly.degree(Q)
    n_units = F.q**d - 1
    if e is None:
        e = n_units
    rep = coset_representatives(F, Q, e)
    classes = sorted(set(rep.values()), key=lambda c: (len(c), c[::-1]))
    size_C = 1  # abelian group: conjugacy classes are single elements
    g_F = class_field_genus(F.q, d, 0, 1)
    counts = {c: 0 for c in classes}
    total = irr = ramified = 0
    for P in irreducibles_of_degree(F, h, cap):
        irr += 1
        try:
            c = frobenius_class(F, P, Q, rep)
        except RamifiedPlace:
            ramified += 1
            continue
        counts[c] += 1
        total += 1
    expected = Fraction(size_C * F.q**h, e * h)
    bound = chebotarev_bound(F.q, h, e, size_C, g_F)
    rows = tuple(ClassRow(c, counts[c], expected, bound) for c in classes)
    return FrobeniusHistogram(F.q, tuple(Q), h, e, g_F, rows, total, irr, ramified)


CSV_COLUMNS = ("h", "class_repr", "count", "expected", "bound", "margin")


def histograms_to_csv(F: FieldSpec, hists) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_COLUMNS)
    for hist in hists:
        for r in hist.rows:
            w.writerow([hist.h, poly.to_string(F, list(r.class_repr)), r.count,
                        str(r.expected), str(r.bound), str(r.margin)])
    return buf.getvalue()
