"""Exact arithmetic in GF(p^k).

Elements are stored as plain integers in ``range(q)``: the base-p digits of
the integer are the coefficients of the residue polynomial, constant term
first.  For ``p == 2`` this is the usual bit-vector encoding, so the GF(16)
element ``x^3 + 1`` is ``0x9``.

:class:`FieldSpec` does the arithmetic on those integers (the hot paths of
the codec and decoder use it directly); :class:`FieldElement` wraps an
integer together with its field for callers who prefer operators.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property

from .errors import (
    DivisionByZero,
    FieldMismatch,
    IncompatibleFields,
    NotPrime,
    PreconditionError,
    ReducibleModulus,
)

MAX_ORDER = 1 << 16


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    """Distinct prime factors of ``n`` in increasing order."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# --- polynomials over the prime field, lists low-order first -------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _pp_mod(a: list[int], m: list[int], p: int) -> list[int]:
    a = _trim(list(a))
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _trim(a)
    return a


def _pp_mulmod(a: list[int], b: list[int], m: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _pp_mod(out, m, p)


def _pp_gcd(a: list[int], b: list[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _pp_mod(a, b, p)
    return a


def _pp_sub(a: list[int], b: list[int], p: int) -> list[int]:
    n = max(len(a), len(b))
    a = a + [0] * (n - len(a))
    b = b + [0] * (n - len(b))
    return _trim([(x - y) % p for x, y in zip(a, b)])


def is_irreducible_mod_p(f: list[int], p: int) -> bool:
    """Rabin's test for a monic polynomial over GF(p)."""
    f = _trim(list(f))
    n = len(f) - 1
    if n < 1:
        return False
    if n == 1:
        return True
    x = [0, 1]

    def frob_power(e: int) -> list[int]:
        # x^(p^e) mod f
        r = x
        for _ in range(e):
            acc, base, k = [1], r, p
            while k:
                if k & 1:
                    acc = _pp_mulmod(acc, base, f, p)
                base = _pp_mulmod(base, base, f, p)
                k >>= 1
            r = acc
        return r

    if _pp_sub(frob_power(n), x, p):
        return False
    for r in prime_factors(n):
        h = _pp_sub(frob_power(n // r), x, p)
        if len(_pp_gcd(f, h, p)) > 1:
            return False
    return True


def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree ``k`` over GF(p)."""
    for code in range(p**k):
        low = [(code // p**i) % p for i in range(k)]
        cand = low + [1]
        if is_irreducible_mod_p(cand, p):
            return tuple(cand)
    raise AssertionError("unreachable: irreducibles exist in every degree")


@dataclass(frozen=True, eq=False)
class FieldSpec:
    """GF(p^k) with a fixed monic irreducible modulus (low-order first)."""

    p: int
    k: int
    modulus: tuple[int, ...]
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def q(self) -> int:
        return self.p**self.k

    @property
    def order(self) -> int:
        return self.q

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and (self.p, self.k, self.modulus) == (other.p, other.k, other.modulus)
        )

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        return f"GF({self.p}^{self.k}, modulus={list(self.modulus)})"

    # -- encoding ---------------------------------------------------------

    def to_vector(self, a: int) -> tuple[int, ...]:
        p = self.p
        return tuple((a // p**i) % p for i in range(self.k))

    def from_vector(self, v) -> int:
        p = self.p
        out = 0
        for i, c in enumerate(v):
            out += (c % p) * p**i
        return out

    def elements(self) -> range:
        return range(self.q)

    def check(self, a: int) -> int:
        if not 0 <= a < self.q:
            raise PreconditionError(f"{a} is not an element of {self!r}")
        return a

    # -- reference arithmetic (polynomial path) ---------------------------

    def mul_poly(self, a: int, b: int) -> int:
        """Multiply by polynomial product and reduction modulo the modulus."""
        prod = _pp_mulmod(list(self.to_vector(a)), list(self.to_vector(b)),
                          list(self.modulus), self.p)
        return self.from_vector(prod)

    # -- tables -----------------------------------------------------------

    @cached_property
    def _digits(self) -> list[tuple[int, ...]]:
        return [self.to_vector(a) for a in range(self.q)]

    @cached_property
    def _tables(self) -> tuple[list[int], list[int]]:
        g = self._primitive_by_search()
        q = self.q
        exp = [0] * (2 * q)
        log = [0] * q
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self.mul_poly(x, g)
        for i in range(q - 1, 2 * q):
            exp[i] = exp[i - (q - 1)]
        return exp, log

    def _primitive_by_search(self) -> int:
        q = self.q
        if q == 2:
            return 1
        factors = prime_factors(q - 1)
        for a in range(2, q):
            if all(self._pow_poly(a, (q - 1) // r) != 1 for r in factors):
                return a
        raise AssertionError("multiplicative group of a finite field is cyclic")

    def _pow_poly(self, a: int, e: int) -> int:
        acc = 1
        while e:
            if e & 1:
                acc = self.mul_poly(acc, a)
            a = self.mul_poly(a, a)
            e >>= 1
        return acc

    # -- field operations on integers -------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        if self.k == 1:
            return (a + b) % self.p
        da, db = self._digits[a], self._digits[b]
        return self.from_vector([x + y for x, y in zip(da, db)])

    def neg(self, a: int) -> int:
        if self.p == 2:
            return a
        if self.k == 1:
            return (-a) % self.p
        return self.from_vector([-x for x in self._digits[a]])

    def sub(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.add(a, self.neg(b))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        exp, log = self._tables
        return exp[log[a] + log[b]]

    def inv(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("inverse of zero")
        exp, log = self._tables
        return exp[(self.q - 1 - log[a]) % (self.q - 1)]

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise DivisionByZero("zero to a negative power")
            return 1 if e == 0 else 0
        exp, log = self._tables
        return exp[(log[a] * e) % (self.q - 1)]

    def log(self, a: int) -> int:
        """Discrete log with respect to :meth:`primitive_element`."""
        if a == 0:
            raise DivisionByZero("log of zero")
        return self._tables[1][a]

    def frobenius(self, a: int, times: int = 1) -> int:
        return self.pow(a, self.p**times)

    def mult_order(self, a: int) -> int:
        if a == 0:
            raise DivisionByZero("zero has no multiplicative order")
        n = self.q - 1
        for r in prime_factors(self.q - 1):
            while n % r == 0 and self.pow(a, n // r) == 1:
                n //= r
        return n

    @cached_property
    def primitive_element_int(self) -> int:
        return self._primitive_by_search()

    def element(self, a: int) -> FieldElement:
        return FieldElement(self, self.check(a))

    def prime_subfield(self) -> FieldSpec:
        return field_new(self.p, 1)


def field_new(p: int, k: int = 1, modulus=None) -> FieldSpec:
    """Build GF(p^k).

    Without a modulus the lexicographically smallest monic irreducible of
    degree ``k`` is used, so ``field_new(2, 4)`` reduces by ``x^4 + x + 1``.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if k < 1:
        raise PreconditionError("extension degree must be >= 1")
    if p**k > MAX_ORDER:
        raise PreconditionError(f"field order {p}^{k} exceeds 2^16")
    if modulus is None:
        mod = smallest_irreducible(p, k)
    else:
        mod = tuple(int(c) % p for c in modulus)
        mod = tuple(_trim(list(mod)))
        if len(mod) - 1 != k:
            raise ReducibleModulus(f"modulus degree {len(mod) - 1} != {k}")
        if mod[-1] != 1:
            raise ReducibleModulus("modulus must be monic")
        if not is_irreducible_mod_p(list(mod), p):
            raise ReducibleModulus(f"{list(mod)} is reducible over GF({p})")
    return FieldSpec(p, k, mod)


def primitive_element(F: FieldSpec) -> FieldElement:
    """Smallest (by integer encoding) generator of the multiplicative group."""
    return FieldElement(F, F.primitive_element_int)


def embedding_image(sub: FieldSpec, sup: FieldSpec) -> int:
    """Image in ``sup`` of the generator ``x`` of ``sub``.

    The canonical root of ``sub.modulus`` in ``sup`` is the one with the
    smallest discrete log relative to ``primitive_element(sup)``.
    """
    if sub.p != sup.p or sub.q**2 != sup.q:
        raise IncompatibleFields(f"{sub!r} does not embed as GF(l) -> GF(l^2) in {sup!r}")
    key = ("embed", sub)
    if key in sup._cache:
        return sup._cache[key]
    if sub.modulus[0] == 0:
        # prime field with modulus X: only the constant coefficient is used
        sup._cache[key] = 0
        return 0
    g = sup.primitive_element_int
    x = 1
    for _ in range(sup.q - 1):
        # evaluate the modulus of ``sub`` at x (coefficients lie in GF(p))
        val = 0
        for c in reversed(sub.modulus):
            val = sup.add(sup.mul(val, x), c)
        if val == 0:
            sup._cache[key] = x
            return x
        x = sup.mul(x, g)
    raise IncompatibleFields("no root of the subfield modulus found")


def embed(sub: FieldSpec, sup: FieldSpec, a) -> FieldElement:
    """Ring embedding GF(l) -> GF(l^2)."""
    if isinstance(a, FieldElement):
        if a.field != sub:
            raise FieldMismatch("element does not belong to the source field")
        a = a.value
    root = embedding_image(sub, sup)
    out, power = 0, 1
    for c in sub.to_vector(a):
        if c:
            out = sup.add(out, sup.mul(c, power))
        power = sup.mul(power, root)
    return FieldElement(sup, out)


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    value: int

    def _other(self, other) -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatch(f"{other.field!r} vs {self.field!r}")
            return other.value
        if isinstance(other, int):
            return self.field.check(other)
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        return FieldElement(self.field, self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return FieldElement(self.field, self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        return FieldElement(self.field, self.field.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        return FieldElement(self.field, self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        return FieldElement(self.field, self.field.div(self.value, o))

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def __pow__(self, e: int):
        return FieldElement(self.field, self.field.pow(self.value, e))

    def inv(self) -> FieldElement:
        return FieldElement(self.field, self.field.inv(self.value))

    def __bool__(self):
        return self.value != 0

    def to_hex(self) -> str:
        return hex(self.value)

    def __repr__(self):
        return f"FieldElement({self.to_hex()} in GF({self.field.q}))"


def to_hex(a: int) -> str:
    return hex(a)


def from_hex(F: FieldSpec, s: str) -> int:
    return F.check(int(s, 16))
