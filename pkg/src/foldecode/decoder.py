"""Linear-algebraic list decoder for folded AG codes.

Stage 1 finds a nonzero ``Q(Y_1..Y_s) = A_0 + A_1 Y_1 + ... + A_s Y_s`` with
``A_0`` in ``L((kappa+l)D)`` and ``A_i`` in ``L(kappa D)`` vanishing on every
length-``s`` slice of every received column.  Stage 2 solves
``A_0 + A_1 f + A_2 f^(sigma^-1) + ... + A_s f^(sigma^-(s-1)) = 0`` for the
message coefficients by equating local-expansion coefficients at an anchor
place, then enumerates the (affine) solution space and keeps candidates
within the decoding radius.

All parameter arithmetic is exact (``int`` / ``Fraction``).
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from . import poly
from . import series as ser
from .codec import FoldedCodeParams, column_distance, encode
from .errors import (
    CandidateOverflow,
    ListBoundViolated,
    NegativeKappa,
    NoSolution,
    PrecisionTooLow,
    PreconditionError,
)
from .function_field import P2Witness, Place, RationalBackend
from .linalg import AffineSpace, nullspace, solve_affine

DEFAULT_CANDIDATE_LIMIT = 1 << 20


def compute_kappa(params: FoldedCodeParams, s: int) -> int:
    """The displayed degree choice
    ``floor((N(m-s+1) - el + (s+1)(g-1) + 1) / (e(s+1)))``."""
    if not 1 <= s <= params.m:
        raise PreconditionError("need 1 <= s <= m")
    return kappa_formula(params.N, params.m, s, params.e, params.l, params.g)


def kappa_formula(N: int, m: int, s: int, e: int, l: int, g: int) -> int:
    num = N * (m - s + 1) - e * l + (s + 1) * (g - 1) + 1
    if num < 0:
        raise NegativeKappa(f"numerator {num} < 0")
    return num // (e * (s + 1))


def interpolation_unknowns(params: FoldedCodeParams, s: int, kappa: int) -> int:
    B = params.backend
    return s * B.dim_L(kappa) + B.dim_L(kappa + params.l)


def interpolation_degree(params: FoldedCodeParams, s: int) -> int:
    """Smallest ``kappa`` not below :func:`compute_kappa` for which the
    interpolation system has more unknowns than the ``N(m-s+1)`` constraints.

    The floor expression alone can leave the count equal or one short (e.g.
    q=16, m=4, s=2, N=3, l=2 gives 8 unknowns for 9 constraints), in which
    case a nonzero interpolant is not guaranteed.
    """
    kappa = compute_kappa(params, s)
    rows = params.N * (params.m - s + 1)
    while interpolation_unknowns(params, s, kappa) <= rows:
        kappa += 1
    return kappa


def agreement_threshold(kappa: int, l: int, e: int, m: int, s: int) -> int:
    """``t = 1 + floor((kappa + l) e / (m - s + 1))``."""
    return 1 + ((kappa + l) * e) // (m - s + 1)


@dataclass(frozen=True)
class DecoderParams:
    code: FoldedCodeParams
    s: int
    kappa_formula: int
    kappa: int
    t: int
    precision: int
    anchor: Place
    witness: P2Witness | None
    big_basis: object = field(repr=False)
    small_basis: object = field(repr=False)
    eval_big: tuple = field(repr=False)
    eval_small: tuple = field(repr=False)
    exp_big: tuple = field(repr=False)
    exp_msg: tuple = field(repr=False)
    candidate_limit: int = DEFAULT_CANDIDATE_LIMIT

    @property
    def budget(self) -> int:
        """Largest number of erroneous columns covered by the guarantee."""
        return max(self.code.N - self.t, -1)

    @property
    def constraint_count(self) -> int:
        return self.code.N * (self.code.m - self.s + 1)

    @property
    def unknown_count(self) -> int:
        return self.s * self.small_basis.dim + self.big_basis.dim

    @property
    def list_bound_exponent(self) -> int | None:
        """``u (s-1) |T|``: the solution space has at most ``q`` to this many
        elements; ``None`` when the backend registers no witness set."""
        if self.witness is None:
            return None
        return self.witness.u * (self.s - 1) * len(self.witness.places)

    @property
    def list_bound(self) -> int | None:
        e = self.list_bound_exponent
        return None if e is None else self.code.q**e

    def summary(self) -> dict:
        return {
            "s": self.s,
            "kappa": self.kappa,
            "kappa_formula": self.kappa_formula,
            "threshold_t": self.t,
            "error_budget": self.budget,
            "precision": self.precision,
            "constraints": self.constraint_count,
            "unknowns": self.unknown_count,
            "list_bound_exponent": self.list_bound_exponent,
        }


def choose_anchor(params: FoldedCodeParams) -> Place:
    """First rational place (orbit order) admitting the sigma-invariant
    parameter and lying outside the evaluation windows; falls back to the
    first admissible window place."""
    B = params.backend
    used = set(params.places)
    fallback = None
    for orbit in B.rational_places():
        for P in orbit.places:
            if not B.anchor_parameter_ok(P):
                continue
            if P not in used:
                return P
            if fallback is None:
                fallback = P
    if fallback is None:
        raise PreconditionError("backend has no place admitting a common local parameter")
    return fallback


def make_decoder_params(
    params: FoldedCodeParams,
    s: int,
    kappa: int | None = None,
    precision: int | None = None,
    candidate_limit: int = DEFAULT_CANDIDATE_LIMIT,
) -> DecoderParams:
    """Assemble everything a decode needs that does not depend on the
    received word (bases, evaluation tables, expansions at the anchor)."""
    B = params.backend
    kf = compute_kappa(params, s)
    if kappa is None:
        kappa = interpolation_degree(params, s)
    e, l = params.e, params.l
    full = (kappa + l) * e
    if precision is None:
        precision = full
    if precision < l * e:
        raise PrecisionTooLow(f"precision {precision} < le = {l * e}")
    t = agreement_threshold(kappa, l, e, params.m, s)
    big = B.rr_basis(kappa + l)
    small = B.rr_basis(kappa)
    places = params.places
    eval_big = tuple(tuple(r) for r in B.evaluation_matrix(big, places))
    eval_small = tuple(tuple(r) for r in B.evaluation_matrix(small, places))
    anchor = choose_anchor(params)
    exp_big = tuple(tuple(r) for r in B.expansion_matrix(big, anchor, precision))
    exp_msg = tuple(
        tuple(tuple(r) for r in B.expansion_matrix(params.basis, B.sigma_act_place(anchor, j), precision))
        for j in range(s)
    )
    return DecoderParams(
        code=params,
        s=s,
        kappa_formula=kf,
        kappa=kappa,
        t=t,
        precision=precision,
        anchor=anchor,
        witness=B.p2_witness(l),
        big_basis=big,
        small_basis=small,
        eval_big=eval_big,
        eval_small=eval_small,
        exp_big=exp_big,
        exp_msg=exp_msg,
        candidate_limit=candidate_limit,
    )


@dataclass(frozen=True)
class InterpolationPolynomial:
    """Coefficient vectors of ``A_0`` (over the ``L((kappa+l)D)`` basis) and
    ``A_1..A_s`` (over the ``L(kappa D)`` basis)."""

    A0: tuple[int, ...]
    A: tuple[tuple[int, ...], ...]

    def is_zero(self) -> bool:
        return not any(self.A0) and not any(any(a) for a in self.A)


def interpolation_matrix(received, dp: DecoderParams):
    """One row per (column i, shift j): ``A_0(P) + sum_k A_k(P) y_{i,j+k}``
    with ``P = P_i^(sigma^j)``."""
    code = dp.code
    F = code.F
    m, s = code.m, dp.s
    rows = []
    for i in range(code.N):
        col = received[i]
        for j in range(m - s + 1):
            idx = i * m + j
            row = list(dp.eval_big[idx])
            small = dp.eval_small[idx]
            for k in range(1, s + 1):
                y = col[j + k - 1]
                row.extend(F.mul(y, z) for z in small)
            rows.append(row)
    return rows


def interpolate(received, dp: DecoderParams) -> InterpolationPolynomial:
    rows = interpolation_matrix(received, dp)
    n = dp.unknown_count
    basis = nullspace(dp.code.F, rows, n)
    if not basis:
        raise NoSolution(
            f"interpolation system ({len(rows)} x {n}) has only the zero solution"
        )
    v = basis[0]
    nb, ns_ = dp.big_basis.dim, dp.small_basis.dim
    A0 = tuple(v[:nb])
    A = tuple(tuple(v[nb + k * ns_: nb + (k + 1) * ns_]) for k in range(dp.s))
    return InterpolationPolynomial(A0, A)


def check_interpolation(Q: InterpolationPolynomial, received, dp: DecoderParams) -> bool:
    """Re-evaluate every interpolation constraint."""
    F = dp.code.F
    rows = interpolation_matrix(received, dp)
    v = list(Q.A0) + [c for a in Q.A for c in a]
    for row in rows:
        acc = 0
        for x, y in zip(row, v):
            acc = F.add(acc, F.mul(x, y))
        if acc:
            return False
    return True


def _combine_series(F, coeffs, expansions, prec):
    acc = [0] * (prec + 1)
    for c, e in zip(coeffs, expansions):
        if c:
            acc = ser.add(F, acc, ser.scale(F, e, c))
    return acc


def functional_equation_system(Q: InterpolationPolynomial, dp: DecoderParams):
    """Linear system ``M f = rhs`` in the message coefficients.

    Row ``h`` is the coefficient of ``t^h`` in
    ``A_0 + sum_j A_j f^(sigma^-(j-1))`` at the anchor, where the expansion of
    ``z_i^(sigma^-j)`` at the anchor is that of ``z_i`` at
    ``anchor^(sigma^j)``.
    """
    F = dp.code.F
    prec = dp.precision
    k = dp.code.k
    small_exp = dp.exp_big[: dp.small_basis.dim]
    a0 = _combine_series(F, Q.A0, dp.exp_big, prec)
    M = [[0] * k for _ in range(prec + 1)]
    for j in range(1, dp.s + 1):
        aj = _combine_series(F, Q.A[j - 1], small_exp, prec)
        if not any(aj):
            continue
        for i in range(k):
            prod = ser.mul(F, aj, dp.exp_msg[j - 1][i], prec)
            for h in range(prec + 1):
                if prod[h]:
                    M[h][i] = F.add(M[h][i], prod[h])
    rhs = [F.neg(c) for c in a0]
    return M, rhs


@dataclass(frozen=True)
class CandidateSpace:
    space: AffineSpace
    candidates: tuple[tuple[int, ...], ...]

    @property
    def affine_dim(self) -> int:
        return self.space.dim


def solve_and_enumerate(system, dp: DecoderParams, received) -> CandidateSpace:
    M, rhs = system
    code = dp.code
    F = code.F
    space = solve_affine(F, M, rhs)
    if space.is_empty:
        return CandidateSpace(space, ())
    size_exp = space.dim
    bound_exp = dp.list_bound_exponent
    if bound_exp is not None and size_exp > bound_exp:
        raise ListBoundViolated(
            f"solution space has q^{size_exp} elements, bound is q^{bound_exp}"
        )
    if code.q**size_exp > dp.candidate_limit:
        raise CandidateOverflow(f"q^{size_exp} candidates exceed limit {dp.candidate_limit}")
    keep = []
    for cand in space.elements(F):
        if column_distance(received, encode(code, cand)) <= code.N - dp.t:
            keep.append(tuple(cand))
    return CandidateSpace(space, tuple(keep))


@dataclass(frozen=True)
class DecodeResult:
    messages: tuple[tuple[int, ...], ...]
    Q: InterpolationPolynomial
    space: CandidateSpace

    @property
    def affine_dim(self) -> int:
        return self.space.affine_dim


def decode(received, dp: DecoderParams) -> DecodeResult:
    Q = interpolate(received, dp)
    system = functional_equation_system(Q, dp)
    cs = solve_and_enumerate(system, dp, received)
    return DecodeResult(cs.candidates, Q, cs)


# -- certificates and oracles ------------------------------------------------

def equation_residual(Q: InterpolationPolynomial, message, dp: DecoderParams, prec: int | None = None):
    """Expansion at the anchor of ``A_0 + sum_j A_j f^(sigma^-(j-1))``; all
    zero through order ``(kappa+l)e`` certifies the functional equation."""
    M, rhs = functional_equation_system(Q, dp)
    F = dp.code.F
    out = []
    for row, r in zip(M, rhs):
        acc = 0
        for a, x in zip(row, message):
            acc = F.add(acc, F.mul(a, x))
        out.append(F.sub(acc, r))
    return out


def satisfies_functional_equation(Q, message, dp: DecoderParams) -> bool:
    return not any(equation_residual(Q, message, dp))


def polynomial_oracle_system(Q: InterpolationPolynomial, dp: DecoderParams):
    """Rational backend only: equate coefficients of ``X^h`` in
    ``A_0(X) + sum_j A_j(X) f(s^(j-1)(X))`` directly (no expansions)."""
    B = dp.code.backend
    if not isinstance(B, RationalBackend):
        raise PreconditionError("polynomial oracle needs the rational backend")
    F = B.F
    k = dp.code.k
    top = dp.kappa + dp.code.l
    M = [[0] * k for _ in range(top + 1)]
    for j in range(1, dp.s + 1):
        Aj = poly.trim(Q.A[j - 1])
        if not Aj:
            continue
        A, Bc = B.affine_map_power(j - 1)
        lin = poly.trim([Bc, A])
        for i in range(k):
            term = poly.mul(F, Aj, poly.power(F, lin, i))
            for h, c in enumerate(term):
                M[h][i] = F.add(M[h][i], c)
    A0 = list(Q.A0) + [0] * (top + 1 - len(Q.A0))
    rhs = [F.neg(c) for c in A0[: top + 1]]
    return M, rhs


# -- radius ------------------------------------------------------------------

@dataclass(frozen=True)
class Radius:
    tau: Fraction
    budget: int
    approx: Fraction


def radius(dp: DecoderParams) -> Radius:
    """Exact ``tau = 1 - t/N`` and the first-order estimate
    ``s/(s+1) - s/(s+1) * m/(m-s+1) * (k+g)/(mN)``."""
    code = dp.code
    s, m = dp.s, code.m
    tau = 1 - Fraction(dp.t, code.N)
    approx = Fraction(s, s + 1) * (1 - Fraction(m, m - s + 1) * Fraction(code.k + code.g, m * code.N))
    return Radius(tau, code.N - dp.t, approx)


def theorem_radius(s: int, m: int, R, ell: int) -> Fraction:
    """``s/(s+1) * (1 - m/(m-s+1) * (R + 2/(sqrt(l) - 1)))`` for square ``l``."""
    r = math.isqrt(ell)
    if r * r != ell:
        raise PreconditionError(f"l = {ell} is not a perfect square")
    if r == 1:
        raise PreconditionError("sqrt(l) - 1 must be nonzero")
    R = Fraction(R)
    return Fraction(s, s + 1) * (1 - Fraction(m, m - s + 1) * (R + Fraction(2, r - 1)))


def list_size_exponent(ell: int, s: int) -> int:
    """Exponent of ``N`` in the ``O(N^((sqrt(l)-1)s))`` list size."""
    r = math.isqrt(ell)
    if r * r != ell:
        raise PreconditionError(f"l = {ell} is not a perfect square")
    return (r - 1) * s
