"""Dense univariate polynomials over a :class:`~foldecode.galois.FieldSpec`.

A polynomial is a list of field integers, constant term first, with no
trailing zeros (the zero polynomial is ``[]``).  Functions never mutate
their inputs.
"""
from __future__ import annotations

import re

from .errors import DivisionByZero, PreconditionError
from .galois import FieldSpec, prime_factors


def trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def degree(a) -> int:
    return len(a) - 1 if a else -1


def add(F: FieldSpec, a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] = F.add(out[i], y)
    return trim(out)


def neg(F: FieldSpec, a):
    return [F.neg(x) for x in a]


def sub(F: FieldSpec, a, b):
    return add(F, a, neg(F, b))


def scale(F: FieldSpec, a, c: int):
    if c == 0:
        return []
    return trim([F.mul(x, c) for x in a])


def shift(a, n: int):
    return [0] * n + list(a) if a else []


def mul(F: FieldSpec, a, b):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    fmul, fadd = F.mul, F.add
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = fadd(out[i + j], fmul(x, y))
    return trim(out)


def divmod_(F: FieldSpec, a, b):
    b = trim(b)
    if not b:
        raise DivisionByZero("polynomial division by zero")
    r = trim(a)
    db = len(b) - 1
    inv_lead = F.inv(b[-1])
    qt = [0] * max(len(r) - db, 0)
    while len(r) - 1 >= db and r:
        c = F.mul(r[-1], inv_lead)
        s = len(r) - 1 - db
        qt[s] = c
        for i, bc in enumerate(b):
            r[s + i] = F.sub(r[s + i], F.mul(c, bc))
        r = trim(r)
    return trim(qt), r


def mod(F: FieldSpec, a, b):
    return divmod_(F, a, b)[1]


def monic(F: FieldSpec, a):
    a = trim(a)
    if not a:
        return []
    return scale(F, a, F.inv(a[-1]))


def gcd(F: FieldSpec, a, b):
    a, b = trim(a), trim(b)
    while b:
        a, b = b, mod(F, a, b)
    return monic(F, a)


def evaluate(F: FieldSpec, a, x: int) -> int:
    acc = 0
    for c in reversed(a):
        acc = F.add(F.mul(acc, x), c)
    return acc


def derivative(F: FieldSpec, a):
    out = []
    for i in range(1, len(a)):
        c = a[i]
        # i * c computed by repeated addition in characteristic p
        ci = 0
        for _ in range(i % F.p):
            ci = F.add(ci, c)
        out.append(ci)
    return trim(out)


def mulmod(F: FieldSpec, a, b, m):
    return mod(F, mul(F, a, b), m)


def powmod(F: FieldSpec, a, e: int, m):
    acc = [1]
    a = mod(F, a, m)
    while e:
        if e & 1:
            acc = mulmod(F, acc, a, m)
        a = mulmod(F, a, a, m)
        e >>= 1
    return mod(F, acc, m)


def power(F: FieldSpec, a, e: int):
    acc = [1]
    while e:
        if e & 1:
            acc = mul(F, acc, a)
        a = mul(F, a, a)
        e >>= 1
    return acc


def substitute_affine(F: FieldSpec, a, alpha: int, beta: int):
    """Return ``a(alpha*X + beta)``."""
    lin = trim([beta, alpha])
    acc: list[int] = []
    for c in reversed(a):
        acc = add(F, mul(F, acc, lin), [c] if c else [])
    return acc


def is_irreducible(F: FieldSpec, f) -> bool:
    """Rabin's irreducibility test over GF(q)."""
    f = monic(F, f)
    n = degree(f)
    if n < 1:
        return False
    if n == 1:
        return True
    q = F.q
    x = [0, 1]

    def frob(e):
        r = x
        for _ in range(e):
            r = powmod(F, r, q, f)
        return r

    if sub(F, frob(n), x):
        return False
    for r in prime_factors(n):
        if degree(gcd(F, f, sub(F, frob(n // r), x))) > 0:
            return False
    return True


def monic_polys(F: FieldSpec, d: int):
    """All monic polynomials of degree ``d`` in increasing integer order of the
    lower coefficients (constant term least significant)."""
    q = F.q
    for code in range(q**d):
        low = [(code // q**i) % q for i in range(d)]
        yield low + [1]


def to_int(F: FieldSpec, a) -> int:
    """Pack a polynomial into one integer, base q, constant term lowest."""
    out = 0
    for i, c in enumerate(a):
        out += c * F.q**i
    return out


def to_string(F: FieldSpec, a, var: str = "T") -> str:
    if not a:
        return "0"
    terms = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if not c:
            continue
        coef = "" if (c == 1 and i > 0) else (str(c) if F.k == 1 else hex(c))
        if i == 0:
            mon = ""
        elif i == 1:
            mon = var
        else:
            mon = f"{var}^{i}"
        if coef and mon:
            terms.append(f"{coef}*{mon}")
        else:
            terms.append(coef or mon)
    return "+".join(terms)


_TERM = re.compile(r"^(?:(0x[0-9a-fA-F]+|\d+)\*?)?([A-Za-z])?(?:\^(\d+))?$")


def parse(F: FieldSpec, text: str):
    """Parse strings like ``"T^2+T+1"`` or ``"2*T+0x3"``; subtraction is
    accepted only as ``-`` before a term (read as negation)."""
    text = text.replace(" ", "").replace("**", "^")
    if not text:
        raise PreconditionError("empty polynomial")
    text = text.replace("-", "+-")
    out: list[int] = []
    for term in filter(None, text.split("+")):
        negate = term.startswith("-")
        term = term.lstrip("-")
        m = _TERM.match(term)
        if not m or (m.group(1) is None and m.group(2) is None):
            raise PreconditionError(f"cannot parse term {term!r}")
        coef_txt, var, exp_txt = m.groups()
        if coef_txt is None:
            coef = 1
        elif coef_txt.lower().startswith("0x"):
            coef = F.check(int(coef_txt, 16))
        else:
            coef = int(coef_txt)
            coef = coef % F.p if F.k == 1 else F.check(coef)
        e = 0 if var is None else int(exp_txt or 1)
        if negate:
            coef = F.neg(coef)
        out = add(F, out, shift([coef], e))
    return out
