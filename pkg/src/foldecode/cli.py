"""Command-line entry point: ``foldecode <subcommand> ...``.

Exit codes: 0 success, 1 failed selftest, 2 bad input or precondition,
3 internal tripwire.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import os
import random
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction
from pathlib import Path

from . import carlitz, chebotarev, codec, decoder, poly
from .errors import PreconditionError, Tripwire
from .function_field import backend_from_descriptor
from .galois import field_new, prime_factors

PARAM_KEYS = {"backend", "m", "N", "l"}
DPARAM_KEYS = {"s", "kappa", "precision", "candidate_limit"}
BENCH_COLUMNS = ("m", "s", "R_exact", "radius_exact", "radius_thm2.8", "success_rate",
                 "mean_list_size", "mean_decode_ms", "status")


# -- configuration -------------------------------------------------------------

def _json_arg(text: str):
    """Inline JSON or a path to a JSON file."""
    p = Path(text)
    if not text.lstrip().startswith(("{", "[")) and p.exists():
        text = p.read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise PreconditionError(f"invalid JSON: {exc}") from None


def _check_keys(d: dict, allowed: set, what: str):
    if not isinstance(d, dict):
        raise PreconditionError(f"{what} must be a JSON object")
    unknown = set(d) - allowed
    if unknown:
        raise PreconditionError(f"unknown {what} keys: {sorted(unknown)}")


def load_code(spec) -> codec.FoldedCodeParams:
    """``{"backend": {...descriptor...}, "m": .., "N": .., "l": ..}``."""
    _check_keys(spec, PARAM_KEYS, "params")
    missing = PARAM_KEYS - set(spec)
    if missing:
        raise PreconditionError(f"missing params keys: {sorted(missing)}")
    B = backend_from_descriptor(spec["backend"])
    return codec.make_params(B, int(spec["m"]), int(spec["N"]), int(spec["l"]))


def load_decoder(code, spec) -> decoder.DecoderParams:
    _check_keys(spec, DPARAM_KEYS, "dparams")
    if "s" not in spec:
        raise PreconditionError("dparams needs s")
    kw = {k: int(spec[k]) for k in ("kappa", "precision", "candidate_limit") if k in spec}
    return decoder.make_decoder_params(code, int(spec["s"]), **kw)


def field_of_order(q: int):
    ps = prime_factors(q)
    if len(ps) != 1:
        raise PreconditionError(f"q = {q} is not a prime power")
    k = 0
    while ps[0] ** k < q:
        k += 1
    return field_new(ps[0], k)


def parse_range(text: str) -> list[int]:
    """``"4..8"``, ``"4,6,8"`` or ``"5"``."""
    if ".." in text:
        a, b = text.split("..", 1)
        return list(range(int(a), int(b) + 1))
    return [int(t) for t in text.split(",") if t.strip()]


def threads() -> int:
    try:
        return max(1, int(os.environ.get("FOLDECODE_THREADS", "1")))
    except ValueError:
        return 1


def _emit(text: str, out):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# -- subcommands -----------------------------------------------------------------

def cmd_encode(args):
    code = load_code(_json_arg(args.params))
    if args.message:
        msg = codec.message_from_text(args.message, code.q)
    elif args.inp:
        msg = codec.message_from_text(" ".join(_json_arg(args.inp)), code.q)
    else:
        msg = codec.random_message(code, random.Random(args.seed))
    _emit(_dump(codec.word_to_json(codec.encode(code, msg))), args.out)


def cmd_corrupt(args):
    code = load_code(_json_arg(args.params))
    word = codec.word_from_json(_json_arg(args.inp), code.q)
    if args.columns:
        rw = codec.corrupt(word, parse_range(args.columns), seed=args.seed, q=code.q)
    else:
        rw = codec.corrupt_random(word, args.errors, seed=args.seed, q=code.q)
    _emit(_dump(codec.word_to_json(rw)), args.out)


def cmd_decode(args):
    code = load_code(_json_arg(args.params))
    dp = load_decoder(code, _json_arg(args.dparams))
    rw = codec.word_from_json(_json_arg(args.inp), code.q)
    res = decoder.decode(rw, dp)
    out = {
        "messages": [codec.message_to_hex(m) for m in res.messages],
        "kappa": dp.kappa,
        "threshold_t": dp.t,
        "affine_dim": res.affine_dim,
    }
    _emit(_dump(out), args.out)


_WORKER = {}


def _worker_init(params_spec, dparams_spec):
    code = load_code(params_spec)
    _WORKER["code"] = code
    _WORKER["dp"] = load_decoder(code, dparams_spec)


def _trial(task):
    seed, errors, timing = task
    code, dp = _WORKER["code"], _WORKER["dp"]
    rng = random.Random(seed)
    msg = codec.random_message(code, rng)
    rw = codec.corrupt_random(codec.encode(code, msg), errors, seed=rng.randrange(2**63), q=code.q)
    t0 = time.perf_counter()
    res = decoder.decode(rw, dp)
    dt = time.perf_counter() - t0 if timing else 0.0
    return tuple(msg) in res.messages, len(res.messages), dt


def run_trials(params_spec, dparams_spec, trials, errors, seed, timing=False, workers=1):
    """Per-trial seeds are ``seed + index``; results come back in index order."""
    tasks = [(seed + i, errors, timing) for i in range(trials)]
    if workers > 1 and trials > 1:
        with ProcessPoolExecutor(workers, initializer=_worker_init,
                                 initargs=(params_spec, dparams_spec)) as ex:
            return list(ex.map(_trial, tasks, chunksize=max(1, trials // (4 * workers))))
    _worker_init(params_spec, dparams_spec)
    return [_trial(t) for t in tasks]


def bench_rows(params_spec, grid, trials, errors, seed, timing=False, workers=1):
    rows = []
    for point in grid:
        point = dict(point)
        spec = dict(params_spec)
        if "m" in point:
            spec["m"] = point.pop("m")
        m = spec.get("m")
        s = point.get("s")
        try:
            code = load_code(spec)
            dp = load_decoder(code, point)
            rad = decoder.radius(dp)
            n_err = rad.budget if errors is None else errors
            res = run_trials(spec, point, trials, n_err, seed, timing, workers)
            if res:
                rate = Fraction(sum(r[0] for r in res), len(res))
                mean_list = Fraction(sum(r[1] for r in res), len(res))
                ms = f"{1000 * sum(r[2] for r in res) / len(res):.3f}" if timing else ""
                vals = [str(rate), str(mean_list), ms]
            else:
                vals = ["", "", ""]
            rows.append([m, s, str(code.rate), str(rad.tau), str(rad.approx)] + vals + ["ok"])
        except (PreconditionError, Tripwire) as exc:
            rows.append([m, s, "", "", "", "", "", "", type(exc).__name__])
    return rows


def cmd_bench(args):
    params_spec = _json_arg(args.params)
    grid = _json_arg(args.grid) if args.grid else [_json_arg(args.dparams)]
    rows = bench_rows(params_spec, grid, args.trials, args.errors, args.seed,
                      timing=args.timing, workers=threads())
    if args.format == "json":
        _emit(_dump([dict(zip(BENCH_COLUMNS, r)) for r in rows]), args.out)
        return
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(BENCH_COLUMNS)
    if args.trials > 0:
        w.writerows(rows)
    _emit(buf.getvalue(), args.out)


def cmd_classfield(args):
    if args.what == "torsion":
        F = field_of_order(args.q)
        Q = poly.parse(F, args.Q)
        rep = carlitz.torsion_report(F, Q)
        _emit(_dump(rep.to_dict(F)), args.out)
    else:
        kw = {}
        if args.s is not None:
            kw.update(s=args.s, m=args.m, R=Fraction(args.R) if args.R else None)
        p3 = carlitz.p3_parameters(args.ell, n=args.n, g_E=args.gE, r=args.r, **kw)
        _emit(_dump(p3.to_dict()), args.out)


def cmd_chebotarev(args):
    F = field_of_order(args.q)
    Q = poly.parse(F, args.Q)
    hists = [chebotarev.chebotarev_check(F, Q, h, e=args.e) for h in parse_range(args.h)]
    if args.format == "json":
        data = []
        for hist in hists:
            for r in hist.rows:
                data.append({"h": hist.h, "class_repr": poly.to_string(F, list(r.class_repr)),
                             "count": r.count, "expected": str(r.expected),
                             "bound": str(r.bound), "margin": str(r.margin)})
        _emit(_dump(data), args.out)
    else:
        _emit(chebotarev.histograms_to_csv(F, hists), args.out)


def selftest_suites():
    """``(name, callable)`` pairs; each callable returns True on success."""
    from .galois import field_new as fn

    def field_axioms():
        for p, k in ((2, 2), (3, 1), (2, 3), (3, 2), (2, 4)):
            F = fn(p, k)
            els = range(F.q)
            for a in els:
                if F.add(a, F.neg(a)) or (a and F.mul(a, F.inv(a)) != 1):
                    return False
                for b in els:
                    if F.mul(a, b) != F.mul_poly(a, b) or F.add(a, b) != F.add(b, a):
                        return False
        return True

    def decode_roundtrip():
        spec = {"backend": {"kind": "rational", "p": 2, "k": 4}, "m": 4, "N": 3, "l": 2}
        res = run_trials(spec, {"s": 2}, 50, 1, 0)
        return all(r[0] for r in res)

    def torsion_facts():
        for q, dmax in ((2, 3), (3, 2)):
            F = field_of_order(q)
            for d in range(1, dmax + 1):
                for Q in poly.monic_polys(F, d):
                    if not carlitz.torsion_report(F, Q).ok:
                        return False
        return True

    return [("field axioms", field_axioms), ("decode roundtrip", decode_roundtrip),
            ("torsion facts", torsion_facts)]


def cmd_selftest(args):
    failed = 0
    for name, fn in selftest_suites():
        t0 = time.perf_counter()
        try:
            ok = fn()
        except Exception as exc:  # a crash is a failure, report and carry on
            ok = False
            name += f" ({type(exc).__name__}: {exc})"
        failed += not ok
        print(f"{'PASS' if ok else 'FAIL'}  {name}  [{time.perf_counter() - t0:.2f}s]")
    return 1 if failed else 0


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="foldecode", description="Folded AG codes and their list decoder.")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def common(p, params=True):
        if params:
            p.add_argument("--params", required=True, help="code parameters (JSON or path)")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", help="output path (default stdout)")
        p.add_argument("--format", choices=("json", "csv"), default=None)
        return p

    p = common(sub.add_parser("encode", help="encode a message"))
    p.add_argument("--message", help="hex symbols, space or comma separated")
    p.add_argument("--in", dest="inp", help="JSON list of hex symbols")
    p.set_defaults(func=cmd_encode)

    p = common(sub.add_parser("corrupt", help="replace columns of a codeword"))
    p.add_argument("--in", dest="inp", required=True)
    p.add_argument("--errors", type=int, default=1)
    p.add_argument("--columns", help="explicit column indices, e.g. 0,2")
    p.set_defaults(func=cmd_corrupt)

    p = common(sub.add_parser("decode", help="list-decode a received word"))
    p.add_argument("--dparams", required=True, help='decoder parameters, e.g. {"s": 2}')
    p.add_argument("--in", dest="inp", required=True)
    p.set_defaults(func=cmd_decode)

    p = common(sub.add_parser("bench", help="decoding sweep, CSV out"))
    p.add_argument("--dparams", default='{"s": 1}')
    p.add_argument("--grid", help='list of {"m":..,"s":..} points')
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--errors", type=int, default=None, help="default: the error budget")
    p.add_argument("--timing", action="store_true", help="fill mean_decode_ms (not reproducible)")
    p.set_defaults(func=cmd_bench)

    p = sub.add_parser("classfield", help="Carlitz torsion and class field parameters")
    csub = p.add_subparsers(dest="what", required=True)
    t = common(csub.add_parser("torsion"), params=False)
    t.add_argument("--q", type=int, required=True)
    t.add_argument("--Q", required=True)
    t.set_defaults(func=cmd_classfield)
    t = common(csub.add_parser("params"), params=False)
    t.add_argument("--ell", type=int, required=True)
    t.add_argument("--n", type=int)
    t.add_argument("--gE", type=int, default=0)
    t.add_argument("--r", type=int)
    t.add_argument("--s", type=int)
    t.add_argument("--m", type=int)
    t.add_argument("--R")
    t.set_defaults(func=cmd_classfield)

    p = common(sub.add_parser("chebotarev", help="Frobenius class histogram"), params=False)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--Q", required=True)
    p.add_argument("--h", required=True, help="degrees, e.g. 4..8")
    p.add_argument("--e", type=int, help="order of the cyclic quotient (default: whole group)")
    p.set_defaults(func=cmd_chebotarev)

    p = sub.add_parser("selftest", help="run the invariant suites")
    p.set_defaults(func=cmd_selftest)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        rc = args.func(args)
    except Tripwire as exc:
        print(f"tripwire: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError, KeyError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 2
    return rc or 0


if __name__ == "__main__":
    sys.exit(main())
