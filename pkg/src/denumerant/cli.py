"""Command-line front end.

Subcommands: count3, count2, floorsum, reduce, legendre, frobenius,
sylvester, verify, trace, bench.  Exit codes: 0 success, 1 invalid input,
2 internal cross-check failure (oracle mismatch or broken invariant), so
CI can tell user error apart from bugs.

JSON output (--json) is deterministic: fixed key order and all integers as
decimal strings, since counts routinely exceed 53-bit float mantissas.
The schema is documented in docs/json_schema.md.
"""

import argparse
import json
import random
import statistics
import sys
import time
from math import gcd

from denumerant import counting, floorsum, linear2, residues
from denumerant.report import make_report
from denumerant.errors import (CrossCheckError, InvalidInputError,
                               ResourceLimitError)
from denumerant.reduction import Instance3, normalize_gcd, reduce_pairwise


def _stringify(obj):
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, dict):
        return {k: _stringify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_stringify(v) for v in obj]
    return obj


def render_json(obj):
    """Deterministic JSON: insertion key order, integers as decimal strings."""
    return json.dumps(_stringify(obj), separators=(",", ":"))


def _emit(args, obj, text):
    print(render_json(obj) if args.json else text)


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; we reserve 2 for bugs
    def error(self, message):
        raise InvalidInputError(message)


def _odd_primes_below(limit):
    return [p for p in range(3, limit) if residues.is_prime(p)]


def _trace_steps_json(trace):
    steps = []
    if trace.pre_const:
        steps.append({"pre": trace.pre_const})
    for s in trace.steps:
        key = "K" if s.kind == floorsum.RECIP else "q"
        steps.append({"kind": s.kind, key: s.param, "const": s.const})
    steps.append({"base": trace.value})
    return steps


def _cmd_count3(args):
    res = counting.count3(args.a, args.b, args.c, args.n)
    obj = {"a": args.a, "b": args.b, "c": args.c, "n": args.n,
           "count": res.count}
    if res.witness is not None and res.witness.reduced is not None:
        r = res.witness.reduced
        w = res.witness
        obj["reduced"] = {"a": r.a, "b": r.b, "c": r.c, "n": r.n}
        obj["witness"] = {"g": w.g, "g1": w.g1, "g2": w.g2, "g3": w.g3,
                          "n1": w.n1, "n2": w.n2, "n3": w.n3}
    if res.floor_sums is not None:
        obj["floor_sums"] = list(res.floor_sums)
    _emit(args, obj, f"count = {res.count}")
    if args.oracle:
        oracle = counting.count3_oracle_dp(args.a, args.b, args.c, args.n)
        if oracle != res.count:
            print(f"oracle mismatch: closed={res.count} dp={oracle}",
                  file=sys.stderr)
            return 2
    return 0


def _cmd_count2(args):
    count = linear2.count2(args.a, args.b, args.n)
    _emit(args, {"a": args.a, "b": args.b, "n": args.n, "count": count},
          f"count = {count}")
    if args.oracle:
        brute = sum((args.n - args.a * x) % args.b == 0
                    for x in range(args.n // args.a + 1))
        if brute != count:
            print(f"oracle mismatch: closed={count} enum={brute}",
                  file=sys.stderr)
            return 2
    return 0


def _cmd_floorsum(args):
    value = floorsum.floor_sum_fast(args.b, args.c, args.a)
    _emit(args, {"b": args.b, "c": args.c, "a": args.a, "value": value},
          f"value = {value}")
    if args.oracle:
        naive = floorsum.floor_sum_naive(args.b, args.c, args.a)
        if naive != value:
            print(f"oracle mismatch: fast={value} naive={naive}",
                  file=sys.stderr)
            return 2
    return 0


def _cmd_reduce(args):
    inst = Instance3(args.a, args.b, args.c, args.n)
    norm = normalize_gcd(inst)
    if norm is None:
        _emit(args, {"a": args.a, "b": args.b, "c": args.c, "n": args.n,
                     "solvable": False},
              "no solutions: gcd(a,b,c) does not divide n")
        return 0
    w = reduce_pairwise(norm)
    obj = {"a": args.a, "b": args.b, "c": args.c, "n": args.n,
           "solvable": True,
           "g": inst.a // norm.a,
           "g1": w.g1, "g2": w.g2, "g3": w.g3,
           "n1": w.n1, "n2": w.n2, "n3": w.n3,
           "N_nonneg": w.N_nonneg}
    if w.reduced is not None:
        r = w.reduced
        obj["reduced"] = {"a": r.a, "b": r.b, "c": r.c, "n": r.n}
        text = (f"reduced: {r.a}x + {r.b}y + {r.c}z = {r.n} "
                f"(g1,g2,g3)=({w.g1},{w.g2},{w.g3}) "
                f"(n1,n2,n3)=({w.n1},{w.n2},{w.n3})")
    else:
        text = "reduced right-hand side is negative: count is 0"
    _emit(args, obj, text)
    return 0


def _cmd_legendre(args):
    sym = residues.legendre(args.q, args.p)
    _emit(args, {"q": args.q, "p": args.p, "symbol": sym},
          f"({args.q}/{args.p}) = {sym:+d}")
    if args.oracle:
        euler = residues.legendre_euler(args.q, args.p)
        if euler != sym:
            print(f"oracle mismatch: eisenstein={sym} euler={euler}",
                  file=sys.stderr)
            return 2
    return 0


def _cmd_frobenius(args):
    value = linear2.frobenius2(args.a, args.b)
    _emit(args, {"a": args.a, "b": args.b, "frobenius": value},
          f"frobenius({args.a},{args.b}) = {value}")
    return 0


def _cmd_sylvester(args):
    count = linear2.nonrepresentable_count(args.p, args.q)
    _emit(args, {"p": args.p, "q": args.q, "count": count},
          f"non-representable count = {count}")
    if args.oracle:
        size = len(linear2.nonrepresentable_set(args.p, args.q))
        if size != count:
            print(f"oracle mismatch: formula={count} sieve={size}",
                  file=sys.stderr)
            return 2
    return 0


def _cmd_trace(args):
    trace = floorsum.floor_sum_trace(args.b, args.c, args.a)
    replayed = trace.replay()
    if replayed != trace.value:
        print("trace replay mismatch", file=sys.stderr)
        return 2
    obj = {"b": args.b, "c": args.c, "a": args.a,
           "steps": _trace_steps_json(trace), "value": trace.value}
    _emit(args, obj, trace.render())
    return 0


def _pair_report(rep):
    out = {}
    for key in ("p", "q"):
        if key in rep.context:
            out[key] = rep.context[key]
    out.update({"lhs": rep.lhs, "rhs": rep.rhs, "holds": rep.holds})
    return out


def _verify_pairs(identity, limit):
    """Yield IdentityReports for every valid pair below limit."""
    primes = _odd_primes_below(limit)
    if identity == "gauss":
        for i, p in enumerate(primes):
            for q in primes[i + 1:]:
                yield residues.gauss_identity(p, q)
    elif identity == "equivalence":
        for i, p in enumerate(primes):
            for q in primes[i + 1:]:
                yield residues.sylvester_gauss_equivalence(p, q)
    elif identity == "legendre":
        for p in primes:
            for q in primes:
                if p != q:
                    lhs = residues.legendre(q, p)
                    rhs = residues.legendre_euler(q, p)
                    yield make_report("legendre", lhs, rhs, p=p, q=q)
    elif identity == "sylvester":
        for p in range(2, limit):
            for q in range(p + 1, limit):
                if gcd(p, q) == 1:
                    lhs = len(linear2.nonrepresentable_set(p, q))
                    rhs = linear2.nonrepresentable_count(p, q)
                    yield make_report("sylvester", lhs, rhs, p=p, q=q)
    elif identity == "npq":
        for p in primes:
            for q in primes:
                if q < p:
                    lhs = residues.npq_count(p, q)
                    rhs = residues.lemma8_count(p, q)
                    yield make_report("npq", lhs, rhs, p=p, q=q)
    elif identity == "lemma67":
        for i, p in enumerate(primes):
            for q in primes[i + 1:]:
                lhs = residues.lemma6_count(p, q)
                rhs = residues.lemma7_count(p, q)
                yield make_report("lemma67", lhs, rhs, p=p, q=q)
    elif identity == "byproduct":
        for i, p in enumerate(primes):
            for q in primes[i + 1:]:
                yield residues.byproduct_sum(p, q)
    elif identity == "parity":
        for p in primes:
            for q in primes:
                if p != q:
                    yield residues.parity_theorem(p, q)
    elif identity == "lemma4":
        for a in range(2, limit):
            for c in range(1, a):
                if gcd(a, c) == 1:
                    for b in range(0, a):
                        yield floorsum.lemma4_check(a, b, c)
    else:
        raise InvalidInputError(f"unknown identity {identity!r}")


def _cmd_verify(args):
    pairs = []
    failures = 0
    for rep in _verify_pairs(args.identity, args.limit):
        if not rep.holds:
            failures += 1
        if args.json:
            pairs.append(_pair_report(rep))
        elif not rep.holds:
            print(f"FAIL {rep.name} {rep.context}: {rep.lhs} != {rep.rhs}")
    if args.json:
        print(render_json({"pairs": pairs, "failures": failures}))
    else:
        print(f"{args.identity}: failures = {failures}")
    return 2 if failures else 0


def _random_coprime_triple(rng, bits):
    while True:
        a = rng.getrandbits(bits) | (1 << (bits - 1))
        b = rng.getrandbits(bits) | (1 << (bits - 1))
        c = rng.getrandbits(bits) | (1 << (bits - 1))
        if gcd(a, b) == 1 and gcd(b, c) == 1 and gcd(c, a) == 1:
            return a, b, c


def _cmd_bench(args):
    rng = random.Random(args.seed)
    rounds = args.limit
    times = []
    max_steps = 0
    for _ in range(rounds):
        a, b, c = _random_coprime_triple(rng, 60)
        n = rng.randrange(1 << 70)
        t0 = time.perf_counter()
        res = counting.count3(a, b, c, n)
        times.append(time.perf_counter() - t0)
        if res.floor_sum_steps:
            max_steps = max(max_steps, *res.floor_sum_steps)
    med = statistics.median(times)
    rows = [("count3 60-bit", rounds, f"{med * 1e3:.3f} ms median",
             f"max steps {max_steps}")]
    dp_n = 10 ** 5
    t0 = time.perf_counter()
    counting.count3_oracle_dp(742, 803, 663, dp_n)
    dp_t = time.perf_counter() - t0
    rows.append((f"dp oracle n={dp_n}", 1, f"{dp_t * 1e3:.3f} ms", "linear in n"))
    if args.json:
        print(render_json({"rounds": rounds, "median_us": int(med * 1e6),
                           "max_steps": max_steps,
                           "dp_us": int(dp_t * 1e6), "dp_n": dp_n}))
    else:
        for row in rows:
            print("  ".join(str(x) for x in row))
    return 0


def build_parser():
    parser = _Parser(prog="denum",
                     description="Exact solution counts for ax+by+cz=n and "
                                 "verification of the related identities")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, *positional, oracle=False, **kwargs):
        p = sub.add_parser(name, **kwargs)
        for arg in positional:
            p.add_argument(arg, type=int)
        p.add_argument("--json", action="store_true")
        if oracle:
            p.add_argument("--oracle", action="store_true")
        p.set_defaults(handler=handler)
        return p

    add("count3", _cmd_count3, "a", "b", "c", "n", oracle=True,
        help="count solutions of ax+by+cz=n")
    add("count2", _cmd_count2, "a", "b", "n", oracle=True,
        help="count solutions of ax+by=n")
    add("floorsum", _cmd_floorsum, "b", "c", "a", oracle=True,
        help="sum of floor(i*c/a) for i=1..b")
    add("reduce", _cmd_reduce, "a", "b", "c", "n",
        help="show the pairwise-coprime reduction")
    add("legendre", _cmd_legendre, "q", "p", oracle=True,
        help="Legendre symbol (q/p)")
    add("frobenius", _cmd_frobenius, "a", "b",
        help="largest non-representable integer for {a,b}")
    add("sylvester", _cmd_sylvester, "p", "q", oracle=True,
        help="count of non-representable integers for {p,q}")

    p = sub.add_parser("verify", help="sweep an identity over all valid "
                                      "pairs below a limit")
    p.add_argument("identity",
                   choices=["gauss", "sylvester", "equivalence", "legendre",
                            "npq", "lemma67", "byproduct", "parity", "lemma4"])
    p.add_argument("--limit", type=int, default=50)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_verify)

    p = sub.add_parser("trace", help="render the floor-sum reduction chain")
    tsub = p.add_subparsers(dest="target", required=True)
    tf = tsub.add_parser("floorsum")
    for arg in ("b", "c", "a"):
        tf.add_argument(arg, type=int)
    tf.add_argument("--json", action="store_true")
    tf.set_defaults(handler=_cmd_trace)

    p = sub.add_parser("bench", help="timing of the logarithmic path vs the "
                                     "linear dp oracle")
    p.add_argument("--limit", type=int, default=50,
                   help="number of random instances")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.set_defaults(handler=_cmd_bench)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.handler(args)
    except (InvalidInputError, ResourceLimitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except CrossCheckError as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
