"""Command-line front end.

Commands: cosets, splittings, quantum, distance, table.  Output formats are
json, csv or text; identical flags produce byte-identical output regardless
of worker count.  Exit codes: 0 success, 2 invalid input, 3 no applicable
construction, 4 internal invariant failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import numpy as np

from . import _kernels, distance as dist, duadic, quantum
from .cyclic import CyclicCode, DefiningSet, all_cosets
from .errors import InputError, InvariantError, NotApplicableError
from .extfield import is_prime

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_NOT_APPLICABLE = 3
EXIT_INVARIANT = 4


def _parse_leaders(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(" ", "").split(",") if x != ""]
    except ValueError as exc:
        raise InputError(f"bad leader list {text!r}: {exc}") from exc


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv", "text"), default="text",
                        help="output format (default text; table always emits csv)")
    common.add_argument("--budget", type=int, default=None,
                        help="max codeword-enumeration steps (default 2^30, or DUADIQ_BUDGET)")
    common.add_argument("--workers", type=int, default=1,
                        help="worker threads for distance shards (result independent of count)")
    common.add_argument("--annotations", type=str, default=None,
                        help="JSON file of literature [[n,k,d]] annotations")
    common.add_argument("--expand", action="store_true",
                        help="print full defining sets, not just coset leaders")

    p = argparse.ArgumentParser(prog="duadiq", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    pc = sub.add_parser("cosets", parents=[common], help="cyclotomic cosets mod n")
    pc.add_argument("-n", type=int, required=True)
    pc.add_argument("-q", type=int, default=4, choices=(2, 4))

    ps = sub.add_parser("splittings", parents=[common], help="splittings of Z_n over GF(4)")
    ps.add_argument("-n", type=int, required=True)
    ps.add_argument("--multiplier", type=int, default=None,
                    help="only splittings given by this multiplier")

    pq = sub.add_parser("quantum", parents=[common], help="construct a quantum code")
    pq.add_argument("-n", type=int, required=True)
    group = pq.add_mutually_exclusive_group(required=True)
    group.add_argument("--leaders", type=str, help="comma-separated coset leaders of the defining set")
    group.add_argument("--qr", action="store_true", help="quadratic-residue route (n prime)")
    group.add_argument("--duadic-index", type=int, default=None,
                       help="use the i-th enumerated splitting (0-based)")
    group.add_argument("--from-annotation", action="store_true",
                       help="derive [[2k,0]] from an annotated dual-containing [n,k,d] code")
    pq.add_argument("--secondary-steps", type=int, default=0,
                    help="also derive [[n-i,k,d-i]] for i=1..steps")

    pd = sub.add_parser("distance", parents=[common], help="minimum-distance bound report")
    pd.add_argument("-n", type=int, required=True)
    pd.add_argument("--leaders", type=str, required=True)
    pd.add_argument("--via-binary", action="store_true",
                    help="compute on the binary shadow (needs ord_n(2) = ord_n(4))")
    pd.add_argument("--fixed-subcode", type=int, action="append", default=[],
                    metavar="A", help="add fixed-subcode bounds for multiplier a (repeatable)")

    pt = sub.add_parser("table", parents=[common], help="reproduce the small-length results table")
    pt.add_argument("--max-n", type=int, required=True)
    pt.add_argument("--slow", action="store_true", help="include the n=29 row")
    return p


def _emit(text: str) -> None:
    sys.stdout.write(text)
    if not text.endswith("\n"):
        sys.stdout.write("\n")


def cmd_cosets(args) -> int:
    part = all_cosets(args.n, args.q)
    rows = [(int(min(c)), len(c), sorted(int(x) for x in c)) for c in part.cosets]
    if args.format == "json":
        _emit(json.dumps({"n": args.n, "q": args.q,
                          "cosets": [r[2] for r in rows]}))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["leader", "size", "members"])
        for leader, size, members in rows:
            w.writerow([leader, size, " ".join(map(str, members))])
        _emit(buf.getvalue())
    else:
        _emit(f"{len(rows)} cosets mod {args.n} (q={args.q})")
        for leader, size, members in rows:
            _emit(f"  leader {leader:3d} size {size:3d}: {{{', '.join(map(str, members))}}}")
    return EXIT_OK


def cmd_splittings(args) -> int:
    splits = duadic.find_splittings(args.n, b=args.multiplier)
    payload = []
    for s in splits:
        entry = s.to_json()
        if args.expand:
            entry["s1"] = sorted(int(x) for x in s.s1.members)
            entry["s2"] = sorted(int(x) for x in s.s2.members)
        payload.append(entry)
    if args.format == "json":
        _emit(json.dumps({"n": args.n, "count": len(payload), "splittings": payload}))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["s1_leaders", "s2_leaders", "multipliers"])
        for e in payload:
            w.writerow([" ".join(map(str, e["s1_leaders"])),
                        " ".join(map(str, e["s2_leaders"])),
                        " ".join(map(str, e["multipliers"]))])
        _emit(buf.getvalue())
    else:
        _emit(f"{len(payload)} splittings of Z_{args.n}")
        for e in payload:
            _emit(f"  S1 leaders {e['s1_leaders']} | S2 leaders {e['s2_leaders']}"
                  f" | multipliers {e['multipliers']}")
            if args.expand:
                _emit(f"    S1 = {e['s1']}")
                _emit(f"    S2 = {e['s2']}")
    return EXIT_OK


def _emit_params(args, params: quantum.QuantumParams, extras: list[quantum.QuantumParams]) -> None:
    if args.format == "json":
        payload = params.to_json()
        if args.expand:
            payload["trace"] = list(params.trace)
        if extras:
            payload["secondary"] = [e.to_json() for e in extras]
        _emit(json.dumps(payload))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["n", "k", "d_lo", "d_hi", "pure"])
        for q in [params] + extras:
            w.writerow([q.n, q.k, q.d.lo, "" if q.d.hi is None else q.d.hi, q.pure])
        _emit(buf.getvalue())
    else:
        _emit(f"{params.params_str()} pure={params.pure}")
        for line in params.trace:
            _emit(f"  {line}")
        for q in extras:
            _emit(f"derived: {q.params_str()}")


def cmd_quantum(args) -> int:
    budget = args.budget
    if args.from_annotation:
        if not args.annotations:
            raise InputError("--from-annotation requires --annotations FILE")
        entries = [a for a in quantum.load_annotations(args.annotations) if a.n == args.n]
        if not entries:
            raise InputError(f"no annotation with n = {args.n}")
        params = quantum.zero_dim_from_classical_annotation(entries[0])
    elif args.qr:
        if not is_prime(args.n):
            raise InputError(f"--qr needs a prime length, got {args.n}")
        if args.n % 8 not in (5, 7):
            raise NotApplicableError(
                f"QR codes of length {args.n} are not Hermitian self-orthogonal "
                f"({args.n} mod 8 = {args.n % 8})",
                failed=["p = -1 or -3 mod 8"],
            )
        split = duadic.qr_splitting(args.n)
        pair = duadic.duadic_from_splitting(split)
        params, _ = quantum.extended_duadic_quantum(pair, budget=budget)
        d_odd = dist.min_distance_exact(pair.odd1, budget=budget if budget is not None else None)
        params = quantum.qr_quantum_refinements(params, args.n, d_odd)
    elif args.duadic_index is not None:
        splits = duadic.find_splittings(args.n)
        if not 0 <= args.duadic_index < len(splits):
            raise InputError(f"duadic index {args.duadic_index} out of range (found {len(splits)})")
        split = splits[args.duadic_index]
        if not split.has_multiplier(-2):
            raise NotApplicableError(
                "selected splitting has no mu_-2 witness",
                failed=["mu_-2 witness"],
            )
        params, _ = quantum.extended_duadic_quantum(duadic.duadic_from_splitting(split), budget=budget)
    else:
        a = DefiningSet.from_leaders(args.n, _parse_leaders(args.leaders))
        from .cyclic import is_dual_containing

        if not is_dual_containing(a):
            witness = next(t for t in sorted(a.members) if (-2 * t) % a.n in a.members)
            raise NotApplicableError(
                "no construction applies to this defining set",
                failed=[f"A cap -2A nonempty (witness {witness} -> {(-2 * witness) % a.n})"],
            )
        params, _ = quantum.cyclic_zero_dim(a, budget=budget)
    extras = quantum.secondary_chain(params, args.secondary_steps) if args.secondary_steps else []
    _emit_params(args, params, extras)
    return EXIT_OK


def cmd_distance(args) -> int:
    a = DefiningSet.from_leaders(args.n, _parse_leaders(args.leaders))
    code = CyclicCode(a)
    if code.dim == 0:
        raise InputError("the zero code has no distance")
    parts = []
    if args.via_binary:
        parts.append(dist.binary_shadow_distance(a, budget=args.budget))
    else:
        parts.append(dist.min_distance_exact(code, budget=args.budget))
    for mult in args.fixed_subcode:
        parts.append(dist.fixed_subcode_lower_bound(code, mult, budget=args.budget))
    bound = dist.compose_bounds(parts)
    payload = bound.to_json()
    if args.expand:
        payload["defining_set"] = sorted(int(x) for x in a.members)
    if args.format == "json":
        _emit(json.dumps(payload))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf)
        w.writerow(["lo", "hi", "lo_src", "hi_src", "work"])
        w.writerow([bound.lo, "" if bound.hi is None else bound.hi,
                    bound.lo_src, bound.hi_src, bound.work])
        _emit(buf.getvalue())
    else:
        hi = "?" if bound.hi is None else str(bound.hi)
        _emit(f"[{args.n},{code.dim}] code, d in [{bound.lo}, {hi}] "
              f"(lo: {bound.lo_src}, hi: {bound.hi_src}, work {bound.work})")
    return EXIT_OK


_TABLE_NS = (5, 7, 13, 17, 23)
_TABLE_SLOW_NS = (29,)


def cmd_table(args) -> int:
    rows = []
    ns = [n for n in _TABLE_NS if n <= args.max_n]
    if args.slow:
        ns += [n for n in _TABLE_SLOW_NS if n <= args.max_n]
    for n in sorted(ns):
        splits = [s for s in duadic.find_splittings(n) if s.has_multiplier(-2)]
        if not splits:
            continue
        split = splits[0]  # canonical: smallest S1 leader tuple
        squares = frozenset(x * x % n for x in range(1, n)) if is_prime(n) else frozenset()
        kind = "QR" if split.s1.members == squares or split.s2.members == squares else "D"
        params, _ = quantum.extended_duadic_quantum(
            duadic.duadic_from_splitting(split), budget=args.budget
        )
        rows.append({
            "n": n,
            "leaders": " ".join(map(str, split.s1.leaders)),
            "type": kind,
            "params": params.params_str(),
            "source": "extended-duadic",
        })
    buf = io.StringIO()
    w = csv.writer(buf)
    w.writerow(["n", "leaders", "type", "params", "source"])
    for r in rows:
        w.writerow([r["n"], r["leaders"], r["type"], r["params"], r["source"]])
    _emit(buf.getvalue())
    return EXIT_OK


_DISPATCH = {
    "cosets": cmd_cosets,
    "splittings": cmd_splittings,
    "quantum": cmd_quantum,
    "distance": cmd_distance,
    "table": cmd_table,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else EXIT_OK
    try:
        if getattr(args, "budget", None) is not None and args.budget < 0:
            raise InputError("--budget must be nonnegative")
        if getattr(args, "workers", 1) != 1:
            _kernels.set_num_threads(args.workers)
        return _DISPATCH[args.command](args)
    except NotApplicableError as exc:
        sys.stderr.write(f"no applicable construction: {exc}\n")
        for item in exc.failed:
            sys.stderr.write(f"  failed precondition: {item}\n")
        return EXIT_NOT_APPLICABLE
    except (InputError, ValueError) as exc:
        sys.stderr.write(f"invalid input: {exc}\n")
        return EXIT_INPUT
    except InvariantError as exc:
        sys.stderr.write(f"internal invariant failure: {exc}\n")
        return EXIT_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
