"""Acceptance checks, one per criterion.

Each test prints a single ``PASS``/``FAIL`` line (also collected into the
terminal summary by ``conftest.py``).  Run directly with
``python tests/test_acceptance.py`` to get just those lines.
"""
import math
import random
import time
from fractions import Fraction

from foldecode import carlitz, chebotarev, codec, decoder as dec, field_new, poly
from foldecode.errors import Tripwire
from foldecode.function_field import HermitianBackend, RationalBackend
from foldecode.linalg import solve_affine

RESULTS = {}
F16 = field_new(2, 4)


def report(n, ok, detail):
    line = f"{'PASS' if ok else 'FAIL'} criterion {n}: {detail}"
    RESULTS[n] = line
    print(line)
    return ok


def q16_instance():
    code = codec.make_params(RationalBackend(F16), 4, 3, 2)
    return code, dec.make_decoder_params(code, 2)


_TRIALS = {}


def completeness_trials():
    """500 messages x each single column, random replacement column."""
    if "data" not in _TRIALS:
        code, dp = q16_instance()
        rng = random.Random(2024)
        hits = total = max_list = 0
        tripped = None
        t0 = time.perf_counter()
        for _ in range(500):
            msg = tuple(codec.random_message(code, rng))
            word = codec.encode(code, msg)
            for c in range(code.N):
                rw = codec.corrupt(word, [c], seed=rng.randrange(2**32), q=code.q)
                total += 1
                try:
                    res = dec.decode(rw, dp)
                except Tripwire as exc:
                    tripped = tripped or type(exc).__name__
                    continue
                hits += msg in res.messages
                max_list = max(max_list, code.q ** max(res.affine_dim, 0))
        _TRIALS["data"] = (hits, total, max_list, tripped, time.perf_counter() - t0)
    return _TRIALS["data"]


def test_criterion_1_decode_completeness():
    hits, total, _, tripped, secs = completeness_trials()
    ok = hits == total == 1500 and tripped is None and secs < 30
    assert report(1, ok, f"{hits}/{total} transmitted messages recovered in {secs:.1f}s")


def test_criterion_2_list_size_bound():
    _, total, max_list, tripped, _ = completeness_trials()
    ok = max_list <= 16 and tripped is None
    assert report(2, ok, f"largest solution space {max_list} <= 16 over {total} decodes, tripwire {tripped}")


INTERP_SETS = [
    (lambda: RationalBackend(F16), 4, 3, 2, 2),
    (lambda: RationalBackend(F16), 5, 3, 3, 3),
    (lambda: RationalBackend(field_new(3, 2), "translate"), 3, 3, 2, 2),
    (lambda: HermitianBackend(3), 4, 5, 4, 2),
    (lambda: RationalBackend(field_new(7)), 2, 3, 1, 2),
]


def test_criterion_3_interpolation_exists():
    rng = random.Random(3)
    failures = done = 0
    for make, m, N, l, s in INTERP_SETS:
        code = codec.make_params(make(), m, N, l)
        dp = dec.make_decoder_params(code, s)
        for _ in range(200):
            rw = tuple(tuple(rng.randrange(code.q) for _ in range(m)) for _ in range(N))
            done += 1
            try:
                Q = dec.interpolate(rw, dp)
                if Q.is_zero() or not dec.check_interpolation(Q, rw, dp):
                    failures += 1
            except Tripwire:
                failures += 1
    assert report(3, failures == 0 and done == 1000, f"{failures} failures in {done} random words over 5 parameter sets")


def test_criterion_4_distance_bound():
    code = codec.make_params(RationalBackend(field_new(2, 2), "translate"), 2, 2, 1)
    weights = []
    zero = codec.encode(code, [0] * code.k)
    for msg in codec.all_messages(code):
        if any(msg):
            weights.append(codec.column_distance(codec.encode(code, msg), zero))
    bound = code.N - Fraction(code.l * code.e, code.m)
    ok = len(weights) == 15 and code.k == 2 and min(weights) >= math.ceil(bound) == 2
    assert report(4, ok, f"min nonzero column weight {min(weights)} over {len(weights) + 1} codewords, bound {bound}")


def test_criterion_5_oracle_equivalence():
    code, dp = q16_instance()
    rng = random.Random(5)
    same = 0
    for i in range(200):
        msg = codec.random_message(code, rng)
        rw = codec.corrupt_random(codec.encode(code, msg), rng.randrange(code.N + 1), seed=i, q=code.q)
        Q = dec.interpolate(rw, dp)
        a = solve_affine(code.F, *dec.functional_equation_system(Q, dp))
        b = solve_affine(code.F, *dec.polynomial_oracle_system(Q, dp))
        same += a.canonical(code.F) == b.canonical(code.F)
    assert report(5, same == 200, f"{same}/200 identical solution sets")


def test_criterion_6_torsion_facts():
    checked = bad = 0
    for q, dmax in ((2, 3), (3, 2)):
        F = field_new(q)
        for d in range(1, dmax + 1):
            for Q in poly.monic_polys(F, d):
                r = carlitz.torsion_report(F, Q)
                checked += 1
                if not (r.ok and r.root_count == q**d and r.generator_count == carlitz.euler_phi(F, Q)):
                    bad += 1
    assert report(6, bad == 0, f"{checked - bad}/{checked} moduli satisfy |Lambda| = q^d, cyclicity, generator count")


def test_criterion_7_class_numbers_and_genus():
    vals = (carlitz.narrow_ray_class_order(2, 2), carlitz.narrow_ray_class_order(3, 3),
            carlitz.class_field_genus(4, 2, 0, 1))
    tripped = []
    for q in (2, 3, 4):
        for d in range(2, 6):
            try:
                carlitz.class_field_genus(q, d, 0, 1)
            except Tripwire:
                tripped.append((q, d))
    ok = vals == (3, 26, 5) and not tripped
    assert report(7, ok, f"orders {vals[0]}, {vals[1]}, genus {vals[2]}, parity failures {tripped}")


def test_criterion_8_chebotarev_bound():
    F = field_new(2)
    t0 = time.perf_counter()
    hists = [chebotarev.chebotarev_check(F, [1, 1, 1], h) for h in range(4, 9)]
    secs = time.perf_counter() - t0
    ok = all(h.ok and h.e == 3 and h.sum_rule_ok for h in hists) and secs < 10
    worst = max(h.max_ratio for h in hists)
    assert report(8, ok, f"all classes within B(h) for h=4..8, worst deviation/bound {float(worst):.3f}, {secs:.2f}s")


def test_criterion_9_parameter_calculators():
    e = carlitz.p3_parameters(4, r=3).e
    misses = []
    for eps in (Fraction(1, 2), Fraction(1, 4), Fraction(1, 5)):
        s, m = math.ceil(1 / eps), math.ceil(1 / eps**2)
        for R in (Fraction(3, 10), Fraction(1, 2)):
            tau = dec.theorem_radius(s, m, R, m)
            if tau < 1 - R - eps:
                misses.append(f"eps={eps},R={R}: tau={tau}")
    ok = e == 13 and not misses
    detail = f"e={e}; tau >= 1-R-eps fails in {len(misses)}/6 cases" + (f" ({misses[0]}, ...)" if misses else "")
    assert report(9, ok, detail)


def test_criterion_10_conjugate_expansion():
    code, _ = q16_instance()
    B = code.backend
    prec = code.l * B.e + 1
    checked = bad = 0
    for o in B.rational_places():
        for P in o.places:
            if not B.anchor_parameter_ok(P):
                continue
            Ps = B.sigma_act_place(P)
            for f in code.basis.functions:
                a = B.local_expand(f, Ps, prec=prec).dense(prec)
                b = B.local_expand(B.sigma_act_fn(f, -1), P, prec=prec).dense(prec)
                checked += 1
                bad += a != b
    assert report(10, bad == 0 and checked > 0, f"{checked - bad}/{checked} expansions agree through t^{prec}")


if __name__ == "__main__":
    tests = [(int(n.split("_")[2]), fn) for n, fn in globals().items() if n.startswith("test_criterion_")]
    for _, fn in sorted(tests):
        try:
            fn()
        except AssertionError:
            pass
