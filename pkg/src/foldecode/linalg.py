"""Gaussian elimination over GF(q).

Matrices are lists of rows of field integers.  Elimination is deterministic:
columns are scanned left to right and the pivot is the first row (from the
top of the unreduced block) with a nonzero entry, so the reduced row echelon
form, the nullspace basis and the particular solution are reproducible.
"""
from __future__ import annotations

from dataclasses import dataclass

from .galois import FieldSpec


def rref(F: FieldSpec, rows, ncols: int | None = None):
    """Reduced row echelon form; returns ``(matrix, pivot_columns)``."""
    M = [list(r) for r in rows]
    if not M:
        return M, []
    ncols = len(M[0]) if ncols is None else ncols
    pivots: list[int] = []
    r = 0
    fmul, fsub = F.mul, F.sub
    for c in range(ncols):
        piv = next((i for i in range(r, len(M)) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = F.inv(M[r][c])
        if inv != 1:
            M[r] = [fmul(x, inv) for x in M[r]]
        pr = M[r]
        for i in range(len(M)):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [fsub(x, fmul(f, y)) for x, y in zip(M[i], pr)]
        pivots.append(c)
        r += 1
        if r == len(M):
            break
    return M, pivots


def rank(F: FieldSpec, rows) -> int:
    return len(rref(F, rows)[1])


def nullspace(F: FieldSpec, rows, ncols: int):
    """Basis of ``{x : A x = 0}``, one vector per free column in increasing
    order, with that free coordinate set to 1."""
    if not rows:
        return [[int(i == j) for i in range(ncols)] for j in range(ncols)]
    R, pivots = rref(F, rows, ncols)
    pivset = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivset:
            continue
        v = [0] * ncols
        v[free] = 1
        for row_idx, pc in enumerate(pivots):
            v[pc] = F.neg(R[row_idx][free])
        basis.append(v)
    return basis


@dataclass(frozen=True)
class AffineSpace:
    """Solution set ``particular + span(basis)``; ``particular is None`` when
    the system is inconsistent."""

    particular: list[int] | None
    basis: list[list[int]]
    nvars: int

    @property
    def is_empty(self) -> bool:
        return self.particular is None

    @property
    def dim(self) -> int:
        return -1 if self.particular is None else len(self.basis)

    def cardinality(self, q: int) -> int:
        return 0 if self.particular is None else q ** len(self.basis)

    def elements(self, F: FieldSpec, limit: int | None = None):
        """Enumerate all points (in a fixed order)."""
        if self.particular is None:
            return
        n = len(self.basis)
        total = F.q**n
        if limit is not None and total > limit:
            raise ValueError(f"{total} elements exceed the enumeration limit {limit}")
        for code in range(total):
            v = list(self.particular)
            c = code
            for b in self.basis:
                coef, c = c % F.q, c // F.q
                if coef:
                    v = [F.add(x, F.mul(coef, y)) for x, y in zip(v, b)]
            yield v

    def canonical(self, F: FieldSpec):
        """Canonical form for equality tests: RREF of the direction space and
        the particular solution reduced against it."""
        if self.particular is None:
            return None
        R, piv = rref(F, self.basis, self.nvars) if self.basis else ([], [])
        R = [tuple(r) for r in R[: len(piv)]]
        v = list(self.particular)
        for row, pc in zip(R, piv):
            if v[pc]:
                c = v[pc]
                v = [F.sub(x, F.mul(c, y)) for x, y in zip(v, row)]
        return tuple(R), tuple(v)


def solve_affine(F: FieldSpec, A, b) -> AffineSpace:
    """All solutions of ``A x = b``."""
    n = len(A[0]) if A else 0
    aug = [list(r) + [bi] for r, bi in zip(A, b)]
    if not aug:
        return AffineSpace([0] * n, nullspace(F, [], n), n)
    R, pivots = rref(F, aug, n + 1)
    if n in pivots:
        return AffineSpace(None, [], n)
    x = [0] * n
    for row_idx, pc in enumerate(pivots):
        x[pc] = R[row_idx][n]
    return AffineSpace(x, nullspace(F, [r[:n] for r in R], n), n)


def matvec(F: FieldSpec, A, x):
    out = []
    for row in A:
        acc = 0
        for a, b in zip(row, x):
            if a and b:
                acc = F.add(acc, F.mul(a, b))
        out.append(acc)
    return out
