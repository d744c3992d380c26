"""Truncated power series over GF(q).

A series is a list ``[c0, c1, ..., c_prec]`` standing for
``c0 + c1 t + ... + c_prec t^prec + O(t^(prec+1))``.  Every operation takes
the precision explicitly and returns exactly ``prec + 1`` coefficients.
"""
from __future__ import annotations

from . import poly
from .errors import DivisionByZero, SingularSeed
from .galois import FieldSpec


def fit(a, prec: int):
    a = list(a[: prec + 1])
    return a + [0] * (prec + 1 - len(a))


def add(F: FieldSpec, a, b):
    return [F.add(x, y) for x, y in zip(a, b)]


def sub(F: FieldSpec, a, b):
    return [F.sub(x, y) for x, y in zip(a, b)]


def scale(F: FieldSpec, a, c: int):
    return [F.mul(x, c) for x in a]


def mul(F: FieldSpec, a, b, prec: int | None = None):
    if prec is None:
        prec = len(a) - 1
    out = [0] * (prec + 1)
    fmul, fadd = F.mul, F.add
    for i in range(min(len(a), prec + 1)):
        x = a[i]
        if not x:
            continue
        for j in range(min(len(b), prec + 1 - i)):
            y = b[j]
            if y:
                out[i + j] = fadd(out[i + j], fmul(x, y))
    return out


def valuation(a) -> int | None:
    """Index of the first nonzero coefficient, ``None`` for O(t^(prec+1))."""
    for i, c in enumerate(a):
        if c:
            return i
    return None


def inverse(F: FieldSpec, a, prec: int | None = None):
    """Multiplicative inverse of a unit series (nonzero constant term)."""
    if prec is None:
        prec = len(a) - 1
    if not a or a[0] == 0:
        raise DivisionByZero("series with zero constant term is not a unit")
    inv0 = F.inv(a[0])
    out = [0] * (prec + 1)
    out[0] = inv0
    for n in range(1, prec + 1):
        acc = 0
        for i in range(1, min(n, len(a) - 1) + 1):
            if a[i] and out[n - i]:
                acc = F.add(acc, F.mul(a[i], out[n - i]))
        out[n] = F.neg(F.mul(acc, inv0))
    return out


def powers(F: FieldSpec, a, count: int, prec: int):
    """``[a^0, a^1, ..., a^(count-1)]`` truncated at ``prec``."""
    out = [fit([1], prec)]
    for _ in range(1, count):
        out.append(mul(F, out[-1], a, prec))
    return out


def compose_poly(F: FieldSpec, p, x_series, prec: int):
    """Series of ``p(X(t))`` for a polynomial ``p`` (Horner)."""
    acc = [0] * (prec + 1)
    for c in reversed(p):
        acc = mul(F, acc, x_series, prec)
        acc[0] = F.add(acc[0], c)
    return acc


def newton_series(F: FieldSpec, g, seed: int, prec: int):
    """Power series ``X(t)`` with ``X(0) = seed`` and ``g(X(t)) = g(seed) + t``.

    Coefficients are fixed one order at a time: if the residual
    ``g(X) - g(seed) - t`` has valuation ``i``, adding ``-r_i / g'(seed) t^i``
    raises it to at least ``i + 1``.
    """
    dg = poly.evaluate(F, poly.derivative(F, g), seed)
    if dg == 0:
        raise SingularSeed(f"derivative vanishes at seed {seed}")
    inv_dg = F.inv(dg)
    base = poly.evaluate(F, g, seed)
    X = fit([seed], prec)
    for i in range(1, prec + 1):
        r = compose_poly(F, g, X, prec)
        r[0] = F.sub(r[0], base)
        if prec >= 1:
            r[1] = F.sub(r[1], 1)
        X[i] = F.sub(X[i], F.mul(r[i], inv_dg))
    return X


def hensel_lift_series(F: FieldSpec, c: int, seed: int, prec: int, n: int | None = None):
    """Series solution of ``X^n = c + t`` lifting ``X = seed`` (``n`` defaults
    to ``q - 1``)."""
    if n is None:
        n = F.q - 1
    if F.pow(seed, n) != c:
        raise SingularSeed(f"seed^{n} != c")
    if c == 0 or n % F.p == 0:
        raise SingularSeed("derivative n*X^(n-1) vanishes at the seed")
    g = [0] * n + [1]
    return newton_series(F, g, seed, prec)
