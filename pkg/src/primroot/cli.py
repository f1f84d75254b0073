"""Command-line surface: per-prime reports, range scans, and experiment files.

Output files are written atomically (temp then rename).  Scans are
chunked deterministically, so byte-identical output is produced for any
thread count.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import tempfile

from . import combiner, conditions, poisson, primes, residues
from .divisors import exception_scan, wstar
from .jacobsthal import jacobsthal
from .parallel import chunked_ranges, default_threads, map_chunks

SCAN_HEADER = [
    "p",
    "omega",
    "sum_i",
    "cond_i",
    "r_found",
    "tail_at_r",
    "cond_ii",
    "g",
    "bound",
    "holds",
]


def _fmt(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return f"{v:.12g}"
    if v is None:
        return ""
    return str(v)


def _write_atomic(path: str, data: str) -> None:
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".primroot-")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _emit(path: str | None, data: str) -> None:
    if path:
        _write_atomic(path, data)
    else:
        sys.stdout.write(data)


def _scan_chunk(lo: int, hi: int, delta: float, xi: float) -> list[tuple]:
    rows = []
    for p in primes.primes_in_range(lo, hi):
        if p == 2:
            continue
        record = primes.factorize_shifted(p)
        rep = conditions.condition_report(record, delta, xi)
        g = residues.least_primitive_root(p)
        bound = p ** (0.25 - delta)
        rows.append(
            (
                p,
                record.omega,
                rep.sum_i,
                rep.cond_i,
                rep.r_found,
                rep.tail_at_r,
                rep.cond_ii,
                g,
                bound,
                g <= bound,
            )
        )
    return rows


def _csv_text(header, rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_fmt(v) for v in row])
    return buf.getvalue()


def _cmd_scan(args) -> int:
    lo, hi = args.x_min, args.x_max
    if lo > hi:
        raise ValueError(f"--x-min {lo} exceeds --x-max {hi}")
    chunks = [(a, b, args.delta, args.xi) for a, b in chunked_ranges(max(lo, 2), hi)]
    results = map_chunks(_scan_chunk, chunks, args.threads)
    rows = [row for chunk in results for row in chunk]
    _emit(args.out, _csv_text(SCAN_HEADER, rows))
    return 0


def _cmd_gp(args) -> int:
    profile = residues.residue_profile(args.p)
    print(f"g({args.p}) = {profile.g}")
    print(json.dumps(profile.to_json_dict(), indent=2))
    return 0


def _cmd_chain(args) -> int:
    record = primes.factorize_shifted(args.p)
    r = args.r if args.r is not None else min(1, record.omega)
    plan = combiner.build_chain(record, r)
    doc = json.dumps(plan.to_json_dict(), indent=2)
    if args.out:
        _write_atomic(args.out, doc + "\n")
    else:
        print(doc)
    return 0


def _cmd_jacobsthal(args) -> int:
    value = jacobsthal(args.m)
    print(f"J({args.m}) = {value.J}")
    if value.witness_start is not None:
        lo, hi = value.witness_start + 1, value.witness_start + value.J - 1
        print(f"witness window: [{lo}, {hi}] (no integer coprime to {args.m})")
    return 0


def _cmd_divisor_exceptions(args) -> int:
    res = exception_scan(args.x, args.t, args.c)
    header = ["x", "t", "c", "delta", "exceptions", "fraction", "paper_comparison"]
    row = (res.x, res.t, res.c, res.delta, res.exceptions, res.fraction, res.paper_comparison)
    _emit(args.out, _csv_text(header, [row]))
    return 0


def _cmd_wstar(args) -> int:
    print(wstar(args.b, args.sigma))
    return 0


def _cmd_poisson(args) -> int:
    stats = poisson.empirical_Wj(args.j, args.x)
    header = ["k", "count", "empirical_prob", "poisson_prob"]
    rows = [
        (k, c, c / stats.sample_size, poisson.poisson_pmf(stats.lambda_j, k))
        for k, c in enumerate(stats.histogram)
    ]
    _emit(args.out, _csv_text(header, rows))
    print(
        f"lambda_{args.j} = {stats.lambda_j:.12g}  mean = {stats.mean:.6g}  "
        f"tv = {stats.tv_distance:.6g}",
        file=sys.stderr,
    )
    return 0


def _cmd_lil(args) -> int:
    res = poisson.simulate_lil(args.eta, args.epsilon, args.trials, args.seed)
    doc = json.dumps(res.to_json_dict(), indent=2)
    if args.out:
        _write_atomic(args.out, doc + "\n")
    else:
        print(doc)
    return 0


def _cmd_sum_recip(args) -> int:
    count, fraction = conditions.sum_recip_scan(args.x, args.r_limit, args.xi)
    print(f"count = {count}")
    print(f"fraction = {fraction:.12g}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="primroot",
        description="Primitive-root, power-residue, and shifted-prime anatomy toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_constants(p):
        p.add_argument("--c", dest="c_C", type=float, default=1.0)
        p.add_argument("--c-prime", dest="c_Cp", type=float, default=1.0)
        p.add_argument("--c-double-prime", dest="c_Cpp", type=float, default=1.0)
        p.add_argument("--c-triple-prime", dest="c_Cppp", type=float, default=1.0)

    p = sub.add_parser("scan", help="per-prime condition/bound CSV over a range")
    p.add_argument("--x-min", type=int, required=True)
    p.add_argument("--x-max", type=int, required=True)
    p.add_argument("--delta", type=float, required=True)
    p.add_argument("--xi", type=float, default=1.0)
    p.add_argument("--threads", type=int, default=default_threads())
    p.add_argument("--out", default=None)
    add_constants(p)
    p.set_defaults(fn=_cmd_scan)

    p = sub.add_parser("gp", help="least primitive root and residue profile")
    p.add_argument("p", type=int)
    p.set_defaults(fn=_cmd_gp)

    p = sub.add_parser("chain", help="chain construction of a primitive root")
    p.add_argument("p", type=int)
    p.add_argument("--r", type=int, default=None)
    p.add_argument("--out", default=None)
    add_constants(p)
    p.set_defaults(fn=_cmd_chain)

    p = sub.add_parser("jacobsthal", help="exact Jacobsthal function value")
    p.add_argument("m", type=int)
    p.set_defaults(fn=_cmd_jacobsthal)

    p = sub.add_parser("divisor-exceptions", help="well-spaced divisor chain exception scan")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--c", type=float, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_divisor_exceptions)

    p = sub.add_parser("wstar", help="count near-equal ordered divisor pairs")
    p.add_argument("b", type=int)
    p.add_argument("sigma", type=float)
    p.set_defaults(fn=_cmd_wstar)

    p = sub.add_parser("poisson", help="empirical W_j histogram vs Poisson(lambda_j)")
    p.add_argument("--j", type=int, default=1)
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_poisson)

    p = sub.add_parser("lil", help="Monte-Carlo iterated-logarithm event simulation")
    p.add_argument("--eta", type=float, required=True)
    p.add_argument("--epsilon", type=float, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_lil)

    p = sub.add_parser("sum-recip", help="scan for large reciprocal sums of q_i")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--r-limit", type=float, required=True)
    p.add_argument("--xi", type=float, default=1.0)
    p.set_defaults(fn=_cmd_sum_recip)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
