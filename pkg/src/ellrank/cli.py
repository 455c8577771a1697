"""Command-line front end.

Exit codes: 0 success, 1 certification failure, 2 input error,
3 batch parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from importlib import resources

from . import __version__
from .errors import CertificateFailed, EllrankError, InputError
from .family import make_family, marked_points
from .finite_reduction import count_points, reduce_curve
from .lemmas import builtin_obstructions
from .obstructions import ObstructionSpec, check_obstruction, format_spec, verdict
from .report import Report, TableRow, certificate_to_dict, parse_table, point_to_json
from .torsion import default_primes, torsion_subgroup
from .two_descent import rank2_certificate
from .weierstrass import Curve, discriminant

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_PARSE = 0, 1, 2, 3


def _primes_arg(text):
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad prime list {text!r}")


def _dump(obj):
    return json.dumps(obj, indent=2, sort_keys=True)


def certify_row(row: TableRow, primes=None, timings=True) -> dict:
    out = {
        "line": row.line,
        "m": row.m,
        "p": row.p,
        "q": row.q,
        "pq": row.pq,
        "claimed_rank": row.claimed_rank,
        "count": row.count,
    }
    start = time.perf_counter()
    try:
        fam, _ = make_family(row.m, row.p, row.q)
        out["flags"] = fam.flags
        cert = rank2_certificate(fam, primes)
        out["certificate"] = certificate_to_dict(cert)
        out["status"] = "certified_lb2" if fam.hypotheses_met else "hypotheses_unmet"
    except (CertificateFailed, EllrankError) as e:
        out.setdefault("flags", None)
        out["certificate"] = None
        out["status"] = "failed"
        out["error"] = str(e)
    out["millis"] = round((time.perf_counter() - start) * 1000, 3) if timings else 0
    return out


def cmd_info(args):
    fam, curve = make_family(args.m, args.p, args.q)
    A, B, AB = marked_points(fam)
    info = {
        "m": fam.m, "p": fam.p, "q": fam.q,
        "curve": {"a": curve.a, "b": curve.b},
        "discriminant": discriminant(curve),
        "flags": fam.flags,
        "hypotheses_met": fam.hypotheses_met,
        "marked_points": {"A": point_to_json(A), "B": point_to_json(B), "AB": point_to_json(AB)},
    }
    if args.json:
        print(_dump(info))
    else:
        print(curve)
        print(f"discriminant = {info['discriminant']}")
        for k, v in fam.flags.items():
            print(f"  {k}: {v}")
        print(f"A = {A}  B = {B}  A+B = {AB}")
    return EXIT_OK


def cmd_count(args):
    fc = reduce_curve(Curve(args.a, args.b), args.prime)
    n = count_points(fc).order
    if args.json:
        print(_dump({"a": args.a, "b": args.b, "prime": args.prime, "order": n}))
    else:
        print(n)
    return EXIT_OK


def _curve_from_args(args):
    if args.m is not None:
        fam, curve = make_family(args.m, args.p, args.q)
        return fam, curve
    if args.a is None or args.b is None:
        raise InputError("give --m/--p/--q or --a/--b")
    return None, Curve(args.a, args.b)


def cmd_torsion(args):
    fam, curve = _curve_from_args(args)
    primes = args.primes or default_primes(curve)
    rep = torsion_subgroup(curve, primes)
    out = {
        "curve": {"a": curve.a, "b": curve.b},
        "structure": rep.group_structure,
        "order": rep.order,
        "bound": rep.order_bound,
        "counts": {str(p): n for p, n in sorted(rep.counts.items())},
        "points": [[point_to_json(P), n] for P, n in rep.points],
    }
    if fam is not None:
        out["flags"] = fam.flags
        out["note"] = "" if fam.hypotheses_met else "hypotheses_unmet"
    if args.json:
        print(_dump(out))
    else:
        print(f"{curve}: torsion {rep.group_structure} (order {rep.order}, bound {rep.order_bound})")
        print("  #E(F_p): " + ", ".join(f"{p}:{n}" for p, n in sorted(rep.counts.items())))
        for P, n in rep.points:
            print(f"  {P} has order {n}")
        if out.get("note"):
            print("  note: hypotheses_unmet")
    return EXIT_OK


def cmd_rank_lb(args):
    fam, _ = make_family(args.m, args.p, args.q)
    row = TableRow(0, fam.m, fam.p * fam.q, 0, fam.p, fam.q)
    res = certify_row(row, args.primes, timings=not args.no_timings)
    rep = Report("rank-lb", {"m": fam.m, "p": fam.p, "q": fam.q, "primes": args.primes}, [res])
    if args.json:
        print(_dump(rep.to_dict()))
    else:
        print(f"m={fam.m} p={fam.p} q={fam.q}: {res['status']}")
        cert = res.get("certificate")
        if cert:
            for fact, ok in cert["facts"].items():
                print(f"  {fact}: {ok}")
            print(f"  rank >= {cert['rank_lower_bound']}")
        if res.get("error"):
            print(f"  error: {res['error']}")
    return rep.exit_code


def _bundled_table():
    return resources.files("ellrank").joinpath("data/table1.csv").read_text(encoding="utf-8")


def run_table(text, primes=None, jobs=1, timings=True, source="<bundled>"):
    rows, errors = parse_table(text)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(certify_row, rows, [primes] * len(rows), [timings] * len(rows)))
    else:
        results = [certify_row(r, primes, timings) for r in rows]
    return Report("table", {"source": source, "primes": primes}, results, errors)


def cmd_table(args):
    if args.input:
        with open(args.input, encoding="utf-8") as f:
            text = f.read()
    else:
        text = _bundled_table()
    rep = run_table(text, args.primes, args.jobs, not args.no_timings, args.input or "<bundled>")
    if args.output:
        with open(args.output, "w", encoding="utf-8") as f:
            f.write(_dump(rep.to_dict()) + "\n")
    elif args.json:
        print(_dump(rep.to_dict()))
    for err in rep.errors:
        print(f"line {err['line']}: {err['error']}", file=sys.stderr)
    for r in rep.rows:
        if r["status"] == "failed":
            print(f"line {r['line']}: m={r['m']} pq={r['pq']} failed: {r.get('error')}", file=sys.stderr)
    print(rep.summary())
    return rep.exit_code


def cmd_verify_lemmas(args):
    specs = builtin_obstructions()
    for path in args.extra_spec or ():
        with open(path, encoding="utf-8") as f:
            data = json.load(f)
        for d in data if isinstance(data, list) else [data]:
            specs.append(ObstructionSpec.from_dict(d))
    if args.list:
        for s in specs:
            print(format_spec(s))
        return EXIT_OK
    results = []
    for s in specs:
        sols = check_obstruction(s)
        results.append((s, sols, verdict(s, sols)))
    if args.json:
        print(_dump([
            {"spec": s.to_dict(), "solutions": sols[:20], "solution_count": len(sols), "ok": ok}
            for s, sols, ok in results
        ]))
    else:
        for s, sols, ok in results:
            print(format_spec(s, sols))
        bad = [s.name for s, _, ok in results if not ok]
        print(f"{len(results)} specs, {len(results) - len(bad)} as expected"
              + (f"; mismatches: {', '.join(bad)}" if bad else ""))
    return EXIT_OK if all(ok for *_, ok in results) else EXIT_FAIL


def build_parser():
    ap = argparse.ArgumentParser(prog="ellrank", description=__doc__.splitlines()[0])
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    def family_args(p, required=True):
        p.add_argument("--m", type=int, required=required)
        p.add_argument("--p", type=int, required=required)
        p.add_argument("--q", type=int, required=required)

    p = sub.add_parser("info", help="curve, discriminant, hypothesis flags, marked points")
    family_args(p)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_info)

    p = sub.add_parser("count", help="#E(F_p) for y^2 = x^3 + a x + b")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--prime", type=int, required=True)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("torsion", help="rational torsion subgroup")
    family_args(p, required=False)
    p.add_argument("--a", type=int)
    p.add_argument("--b", type=int)
    p.add_argument("--primes", type=_primes_arg)
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_torsion)

    p = sub.add_parser("rank-lb", help="certify rank >= 2 for one family member")
    family_args(p)
    p.add_argument("--primes", type=_primes_arg)
    p.add_argument("--json", action="store_true")
    p.add_argument("--no-timings", action="store_true", help="zero the millis fields")
    p.set_defaults(func=cmd_rank_lb)

    p = sub.add_parser("table", help="batch-certify a CSV of (m, pq, claimed_rank)")
    p.add_argument("--input", help="CSV path; defaults to the bundled table")
    p.add_argument("--output", help="write the JSON report here")
    p.add_argument("--primes", type=_primes_arg)
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--json", action="store_true")
    p.add_argument("--no-timings", action="store_true", help="zero the millis fields")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify-lemmas", help="run the congruence obstruction corpus")
    p.add_argument("--list", action="store_true")
    p.add_argument("--extra-spec", action="append", metavar="PATH",
                   help="JSON spec (or list of specs) appended to the corpus")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_verify_lemmas)
    return ap


def main(argv=None):
    args = build_parser().parse_args(argv)
    if getattr(args, "primes", None) == []:
        args.primes = None
    try:
        return args.func(args)
    except InputError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT
    except EllrankError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
