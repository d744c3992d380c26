"""Folded AG codes: parameters, encoding, and the column-error channel.

A codeword is a tuple of ``N`` columns, each a tuple of ``m`` field integers;
column ``i`` row ``j`` holds ``f(P_i^(sigma^j))``.  Received words have the
same shape with no further constraint.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import (
    DegreeTooLarge,
    IndexOutOfRange,
    InsufficientPlaces,
    LengthMismatch,
    PreconditionError,
    ShapeMismatch,
)
from .function_field import FunctionFieldBackend, Place, RRBasis
from .linalg import matvec

Codeword = tuple  # tuple[tuple[int, ...], ...]
ReceivedWord = tuple


@dataclass(frozen=True)
class FoldedCodeParams:
    backend: FunctionFieldBackend
    m: int
    N: int
    l: int
    windows: tuple[tuple[Place, ...], ...]
    basis: RRBasis
    gen: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def e(self) -> int:
        return self.backend.e

    @property
    def g(self) -> int:
        return self.backend.genus

    @property
    def q(self) -> int:
        return self.backend.q

    @property
    def F(self):
        return self.backend.F

    @property
    def k(self) -> int:
        return self.basis.dim

    @property
    def rate(self) -> Fraction:
        return Fraction(self.k, self.N * self.m)

    @property
    def rate_bound(self) -> Fraction:
        return Fraction(self.l * self.e - self.g + 1, self.N * self.m)

    @property
    def distance_bound(self) -> Fraction:
        return self.N - Fraction(self.l * self.e, self.m)

    @property
    def distance_bound_int(self) -> int:
        return math.ceil(self.distance_bound)

    @property
    def places(self) -> tuple[Place, ...]:
        return tuple(P for w in self.windows for P in w)

    def summary(self) -> dict:
        return {
            "backend": self.backend.descriptor(),
            "m": self.m,
            "N": self.N,
            "l": self.l,
            "e": self.e,
            "g": self.g,
            "k": self.k,
            "rate": str(self.rate),
            "rate_bound": str(self.rate_bound),
            "distance_bound": str(self.distance_bound),
        }


def window_labeling(backend: FunctionFieldBackend, m: int, N: int):
    """First ``N`` windows ``(P, P^sigma, ..., P^(sigma^(m-1)))``, consuming
    orbits in enumeration order and never straddling two orbits."""
    windows = []
    for orbit in backend.rational_places():
        for w in range(orbit.length // m):
            windows.append(orbit.places[w * m:(w + 1) * m])
            if len(windows) == N:
                return tuple(windows)
    raise InsufficientPlaces(
        f"only {len(windows)} disjoint sigma-windows of length {m} available, need {N}"
    )


def make_params(backend: FunctionFieldBackend, m: int, N: int, l: int) -> FoldedCodeParams:
    if m < 1 or N < 1 or l < 0:
        raise PreconditionError("need m >= 1, N >= 1, l >= 0")
    if l * backend.e >= m * N:
        raise DegreeTooLarge(f"le = {l * backend.e} must be < mN = {m * N}")
    windows = window_labeling(backend, m, N)
    basis = backend.rr_basis(l)
    places = [P for w in windows for P in w]
    gen = tuple(tuple(r) for r in backend.evaluation_matrix(basis, places))
    return FoldedCodeParams(backend, m, N, l, windows, basis, gen)


def encode(params: FoldedCodeParams, message) -> Codeword:
    """Evaluate ``f = sum message[i] z_i`` on every window."""
    if len(message) != params.k:
        raise LengthMismatch(f"message has {len(message)} symbols, dim L(lD) = {params.k}")
    flat = matvec(params.F, params.gen, message)
    m = params.m
    return tuple(tuple(flat[i * m:(i + 1) * m]) for i in range(params.N))


def corrupt(word, error_columns, seed: int = 0, *, q: int) -> ReceivedWord:
    """Replace each listed column by a uniformly random different column."""
    N = len(word)
    cols = sorted(set(error_columns))
    if any(not 0 <= c < N for c in cols):
        raise IndexOutOfRange(f"column index outside 0..{N - 1}")
    rng = random.Random(seed)
    out = [tuple(c) for c in word]
    for c in cols:
        orig = out[c]
        while True:
            new = tuple(rng.randrange(q) for _ in orig)
            if new != orig:
                break
        out[c] = new
    return tuple(out)


def corrupt_random(word, n_errors: int, seed: int = 0, *, q: int) -> ReceivedWord:
    """Corrupt ``n_errors`` columns chosen by the seeded generator."""
    if not 0 <= n_errors <= len(word):
        raise IndexOutOfRange("error count must lie in 0..N")
    rng = random.Random(seed)
    cols = rng.sample(range(len(word)), n_errors)
    return corrupt(word, cols, seed=rng.randrange(2**63), q=q)


def column_distance(a, b) -> int:
    if len(a) != len(b) or any(len(x) != len(y) for x, y in zip(a, b)):
        raise ShapeMismatch("words have different shapes")
    return sum(1 for x, y in zip(a, b) if tuple(x) != tuple(y))


def random_message(params: FoldedCodeParams, rng: random.Random) -> list[int]:
    return [rng.randrange(params.q) for _ in range(params.k)]


def all_messages(params: FoldedCodeParams, cap: int = 1 << 16):
    q, k = params.q, params.k
    if q**k > cap:
        raise PreconditionError(f"{q}^{k} messages exceed the enumeration cap {cap}")
    for code in range(q**k):
        yield [(code // q**i) % q for i in range(k)]


def minimum_distance(params: FoldedCodeParams, cap: int = 1 << 16) -> int:
    """Exhaustive minimum column weight over nonzero codewords."""
    best = params.N
    zero = tuple(tuple(0 for _ in range(params.m)) for _ in range(params.N))
    for msg in all_messages(params, cap):
        if any(msg):
            best = min(best, column_distance(encode(params, msg), zero))
    return best


# -- text forms ---------------------------------------------------------------

def word_to_json(word) -> list[list[str]]:
    return [[hex(x) for x in col] for col in word]


def word_from_json(data, q: int) -> tuple:
    out = []
    for col in data:
        vals = tuple(int(x, 16) if isinstance(x, str) else int(x) for x in col)
        if any(not 0 <= v < q for v in vals):
            raise PreconditionError("symbol outside the field")
        out.append(vals)
    return tuple(out)


def message_to_hex(message) -> list[str]:
    return [hex(x) for x in message]


def message_from_text(text: str, q: int) -> list[int]:
    """Whitespace- or comma-separated hex symbols."""
    toks = text.replace(",", " ").split()
    vals = [int(t, 16) for t in toks]
    if any(not 0 <= v < q for v in vals):
        raise PreconditionError("symbol outside the field")
    return vals
